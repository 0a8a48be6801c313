// utility.hpp — agent utilities and pairwise swap-improvement tests
#pragma once

#include <string>

#include "dsg/assignment.hpp"
#include "dsg/rational.hpp"

namespace dsg {

enum class Utility {
    Binary,     // 1 if some neighbor has a different type, else 0
    Difference, // number of different-type neighbors
    Variety,    // number of distinct neighbor types other than the agent's own
    Similarity, // fraction of same-type neighbors; used to produce segregated inputs
};

constexpr const char* utility_name(Utility u) {
    switch (u) {
        case Utility::Binary: return "binary";
        case Utility::Difference: return "diff";
        case Utility::Variety: return "variety";
        case Utility::Similarity: return "similarity";
    }
    return "?";
}

Utility utility_from_name(const std::string& name);

bool is_diversity(Utility u);

// Exact utility of the agent at vertex v. Only Similarity is fractional.
Rat utility(Utility kind, const Assignment& a, int v);

// Integer value for the three diversity utilities.
long long utility_int(Utility kind, const Assignment& a, int v);

// true iff both agents strictly gain by exchanging locations, evaluated on
// the post-swap labeling. Same-type pairs are never improving.
bool is_improving_swap(Utility kind, const Assignment& a, int u, int v);

// The closed-form swap test for the variety utility: the pair (u,v) wants to
// swap iff they are not adjacent, their utilities are equal, and each one's
// own type appears in its own neighborhood but not in the other's. Agrees
// with is_improving_swap(Variety, ...) on every input.
bool variety_swap_condition(const Assignment& a, int u, int v);

} // namespace dsg
