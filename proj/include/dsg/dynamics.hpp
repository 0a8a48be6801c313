// dynamics.hpp — improving-response swap dynamics and equilibrium verification
#pragma once

#include <optional>
#include <vector>

#include "dsg/assignment.hpp"
#include "dsg/rational.hpp"
#include "dsg/utility.hpp"

namespace dsg {

// One executed (or candidate) swap with its bookkeeping.
struct SwapMove {
    int u = -1, v = -1;
    Rat pre_u, pre_v, post_u, post_v;
    long long potential_before = 0;
    long long potential_after = 0;
};

struct RunTrace {
    std::vector<int> initial_labels;
    std::vector<SwapMove> moves;
    std::vector<int> final_labels;
    long long swap_count = 0;
    bool at_equilibrium = false;
    bool truncated = false;
};

struct EquilibriumCheck {
    bool is_equilibrium = false;
    int witness_u = -1;
    int witness_v = -1;
};

// The potential: number of monochromatic edges.
long long monochromatic_edges(const Assignment& a);

// Deterministic swap selection: vertices ordered ascending by
// (utility, index); for each candidate in that order, partners are scanned
// in the same order and the first mutually improving pair is returned.
std::optional<SwapMove> find_swap(Utility kind, const Assignment& a);

// Runs find_swap/apply to a fixed point, mutating `a`. max_steps = 0 picks
// ceil(|E|/2) for the diversity utilities and 10*|E| for similarity. An
// explicit max_steps below ceil(|E|/2) is rejected for diversity utilities.
// Every executed diversity swap is checked to drop the potential by at
// least 2; a violation aborts via std::logic_error.
RunTrace run_to_equilibrium(Utility kind, Assignment& a, long long max_steps = 0);

// Exhaustive scan over all cross-type pairs; on failure reports the first
// improving pair in (u, v) index order.
EquilibriumCheck verify_equilibrium(Utility kind, const Assignment& a);

// Replays a trace from its initial labels and checks the recorded moves,
// final labels, and potential ledger. Used by tests.
bool replay_matches(const Assignment& graph_only, const RunTrace& trace);

} // namespace dsg
