// oracle.hpp — exhaustive enumeration on small instances
#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "dsg/assignment.hpp"
#include "dsg/rational.hpp"
#include "dsg/utility.hpp"

namespace dsg {

// Which measure a brute-force search optimizes or minimizes.
struct MeasureSelector {
    enum Kind { Doi, Ce, Nv, Ev, SwBinary, SwDifference, SwVariety, DoiC, DoiT } kind = Ce;
    int j = 1; // refinement level for DoiC / DoiT
};

MeasureSelector selector_from_name(const std::string& name, int j = 1);
Rat evaluate_selector(const MeasureSelector& sel, const Assignment& a);

// Number of distinct labelings with the partition's type counts
// (multinomial coefficient), saturating at LLONG_MAX.
long long labeling_count(const TypePartition& p);

// Visits every labeling with the given counts in lexicographic order.
// Refuses (std::invalid_argument) when the labeling count exceeds `cap`.
void for_each_labeling(const TypePartition& p, long long cap,
                       const std::function<void(const std::vector<int>&)>& visit);

// All equilibrium labelings under `kind`, in lexicographic order.
std::vector<std::vector<int>> enumerate_equilibria(const GraphPtr& g, const TypePartition& p,
                                                   Utility kind, long long cap = 10'000'000);

// Exact maximum of the measure over all labelings, with the first witness.
std::pair<Rat, std::vector<int>> brute_force_optimum(const GraphPtr& g, const TypePartition& p,
                                                     const MeasureSelector& sel,
                                                     long long cap = 10'000'000);

// Minimum of the measure over all equilibria under `kind`. The equilibrium
// set is never empty for the diversity utilities; hitting an empty set is an
// internal error.
Rat worst_equilibrium_value(const GraphPtr& g, const TypePartition& p, Utility kind,
                            const MeasureSelector& sel, long long cap = 10'000'000);

} // namespace dsg
