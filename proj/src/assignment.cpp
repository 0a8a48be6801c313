#include "dsg/assignment.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace dsg {

TypePartition partition_from_counts(std::vector<long long> counts) {
    if (counts.size() < 2) throw std::invalid_argument("partition needs t >= 2");
    TypePartition p;
    p.t = static_cast<int>(counts.size());
    p.counts = std::move(counts);
    for (long long c : p.counts) {
        // zero counts are tolerated so degenerate labelings can still be measured
        if (c < 0) throw std::invalid_argument("negative type count");
        p.total += c;
    }
    if (p.total < 1) throw std::invalid_argument("partition needs at least one agent");
    long long k = p.total / p.t;
    p.equitable = std::all_of(p.counts.begin(), p.counts.end(),
                              [k](long long c) { return c == k || c == k + 1; });
    return p;
}

TypePartition equitable_partition(long long n, int t) {
    if (t < 2) throw std::invalid_argument("equitable partition needs t >= 2");
    if (t > n) throw std::invalid_argument("equitable partition needs t <= n");
    long long k = n / t;
    long long extra = n % t;
    std::vector<long long> counts(t, k);
    for (long long i = 0; i < extra; ++i) counts[i] = k + 1;
    return partition_from_counts(std::move(counts));
}

Assignment assignment_from_labels(GraphPtr g, std::vector<int> labels, int t) {
    if (!g) throw std::invalid_argument("assignment needs a graph");
    if (static_cast<int>(labels.size()) != g->n())
        throw std::invalid_argument("label vector size does not match vertex count");
    std::vector<long long> counts(t, 0);
    for (int lab : labels) {
        if (lab < 1 || lab > t) throw std::invalid_argument("label out of range 1..t");
        ++counts[lab - 1];
    }
    Assignment a;
    a.graph = std::move(g);
    a.labels = std::move(labels);
    a.partition = partition_from_counts(std::move(counts));
    return a;
}

Assignment random_assignment(GraphPtr g, int t, std::uint64_t seed, RandomMode mode) {
    if (!g) throw std::invalid_argument("random assignment needs a graph");
    if (t < 2) throw std::invalid_argument("random assignment needs t >= 2");
    int n = g->n();
    std::mt19937_64 rng(seed);
    std::vector<int> labels(n);
    if (mode == RandomMode::UniformPerVertex) {
        // truly i.i.d.; the realized counts go into the partition as-is
        std::uniform_int_distribution<int> dist(1, t);
        for (int v = 0; v < n; ++v) labels[v] = dist(rng);
    } else {
        if (t > n) throw std::invalid_argument("equitable shuffle needs t <= n");
        TypePartition p = equitable_partition(n, t);
        labels.clear();
        for (int i = 0; i < t; ++i)
            labels.insert(labels.end(), static_cast<size_t>(p.counts[i]), i + 1);
        std::shuffle(labels.begin(), labels.end(), rng);
    }
    return assignment_from_labels(std::move(g), std::move(labels), t);
}

std::vector<long long> type_vector(const Assignment& a, int v) {
    std::vector<long long> counts(a.partition.t, 0);
    for (int w : a.graph->neighbors(v)) ++counts[a.labels[w] - 1];
    return counts;
}

bool is_segregated(const Assignment& a, int v) {
    for (int w : a.graph->neighbors(v))
        if (a.labels[w] != a.labels[v]) return false;
    return true;
}

} // namespace dsg
