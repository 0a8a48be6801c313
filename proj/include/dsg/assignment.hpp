// assignment.hpp — type partitions and agent-to-vertex labelings
#pragma once

#include <cstdint>
#include <vector>

#include "dsg/graph.hpp"

namespace dsg {

// Partition of n agents into t types (labels 1..t).
struct TypePartition {
    int t = 0;
    std::vector<long long> counts; // counts[i] = agents of type i+1
    long long total = 0;
    bool equitable = false;
};

// counts must be positive and t >= 2; computes the equitable flag.
TypePartition partition_from_counts(std::vector<long long> counts);

// The canonical equitable partition: n mod t types of size floor(n/t)+1
// placed first, the rest of size floor(n/t). Requires 2 <= t <= n.
TypePartition equitable_partition(long long n, int t);

// A labeling of every vertex with a type in 1..t. Agents of equal type are
// interchangeable, so this is the whole assignment state.
struct Assignment {
    GraphPtr graph;
    std::vector<int> labels; // labels[v] in 1..t
    TypePartition partition;
};

// Builds an assignment from raw labels, recomputing the partition from the
// realized counts. Throws if sizes or label ranges are off.
Assignment assignment_from_labels(GraphPtr g, std::vector<int> labels, int t);

enum class RandomMode {
    UniformPerVertex, // each label i.i.d. uniform on 1..t
    EquitableShuffle, // an equitable label multiset, uniformly permuted
};

Assignment random_assignment(GraphPtr g, int t, std::uint64_t seed, RandomMode mode);

// counts[i] = neighbors of v with type i+1; sums to degree(v)
std::vector<long long> type_vector(const Assignment& a, int v);

// true iff every neighbor of v shares v's type
bool is_segregated(const Assignment& a, int v);

} // namespace dsg
