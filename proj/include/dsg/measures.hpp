// measures.hpp — global diversity measures over an assignment
#pragma once

#include <optional>
#include <vector>

#include "dsg/assignment.hpp"
#include "dsg/rational.hpp"
#include "dsg/utility.hpp"

namespace dsg {

enum class DoiVariant {
    Colorful, // at least j incident colorful edges
    Types,    // at least j distinct other types in the neighborhood
};

struct MeasureReport {
    Rat doi;                  // fraction of agents with a different-type neighbor
    std::vector<Rat> doic;    // doic[j-1], j = 1..max_degree
    std::vector<Rat> doit;    // doit[j-1], j = 1..min(t-1, max_degree)
    long long ce = 0;         // colorful edges
    Rat nv;                   // average distinct other types per neighborhood
    Rat ev;                   // 1 / sum of squared neighbor-type vectors
    long long sw_binary = 0;
    long long sw_difference = 0;
    long long sw_variety = 0;
    Rat sw_similarity;
    Rat ce_norm;                 // ce / |E|
    std::optional<Rat> ev_norm;  // ev normalized by t/(n*delta^2); regular graphs only
};

Rat degree_of_integration(const Assignment& a);
Rat doi_refined(const Assignment& a, int j, DoiVariant variant);
long long colorful_edges(const Assignment& a);
Rat neighborhood_variety(const Assignment& a);
Rat evenness(const Assignment& a);
MeasureReport measure(const Assignment& a);

// optimal/equilibrium ratio; rejects a zero equilibrium value
Rat poa_ratio(const Rat& optimal_value, const Rat& equilibrium_value);

} // namespace dsg
