#include <doctest.h>

#include <random>

#include "dsg/constructions.hpp"
#include "dsg/dynamics.hpp"

#include "random_graph.hpp"

using namespace dsg;

TEST_CASE("potential counts monochromatic edges") {
    auto alt = assignment_from_labels(build_cycle(4), {1, 2, 1, 2}, 2);
    CHECK(monochromatic_edges(alt) == 0);

    // degenerate single-type labeling: every edge is monochromatic
    auto solid = assignment_from_labels(build_cycle(6), {1, 1, 1, 1, 1, 1}, 2);
    CHECK(monochromatic_edges(solid) == 6);

    // direct scan of 1 1 2 1 1 2 1 1 2 1 1 2 1 1 2 2 2 2 2 2 on the 20-cycle:
    // five mono pairs inside the 112 region, five inside the 2-block
    auto worst = worst_assignment(Family::Cycle, Utility::Binary, Target::Welfare, 20, 2);
    CHECK(monochromatic_edges(worst.assignment) == 10);
}

TEST_CASE("find_swap scan order") {
    auto halves = assignment_from_labels(build_cycle(6), {1, 1, 1, 2, 2, 2}, 2);
    auto move = find_swap(Utility::Binary, halves);
    REQUIRE(move.has_value());
    CHECK(move->u == 1);
    CHECK(move->v == 4);
    CHECK(move->potential_before == 4);
    CHECK(move->potential_after == 0);

    auto alt = assignment_from_labels(build_cycle(4), {1, 2, 1, 2}, 2);
    for (Utility k : {Utility::Binary, Utility::Difference, Utility::Variety})
        CHECK_FALSE(find_swap(k, alt).has_value());

    auto worst = worst_assignment(Family::Cycle, Utility::Binary, Target::Welfare, 20, 2);
    CHECK_FALSE(find_swap(Utility::Binary, worst.assignment).has_value());
}

TEST_CASE("run to equilibrium on the halved six-cycle") {
    auto a = assignment_from_labels(build_cycle(6), {1, 1, 1, 2, 2, 2}, 2);
    RunTrace trace = run_to_equilibrium(Utility::Binary, a);
    CHECK(trace.at_equilibrium);
    CHECK(trace.swap_count == 1);
    CHECK(a.labels == std::vector<int>{1, 2, 1, 2, 1, 2});
    CHECK(replay_matches(a, trace));
}

TEST_CASE("max_steps guard for diversity runs") {
    auto a = assignment_from_labels(build_cycle(6), {1, 1, 1, 2, 2, 2}, 2);
    CHECK_THROWS_AS(run_to_equilibrium(Utility::Binary, a, 2), std::invalid_argument);
}

TEST_CASE("difference dynamics on the big torus respects the swap bound") {
    auto g = build_torus(900);
    auto a = random_assignment(g, 5, 99, RandomMode::UniformPerVertex);
    RunTrace trace = run_to_equilibrium(Utility::Difference, a);
    CHECK(trace.at_equilibrium);
    CHECK(trace.swap_count <= g->edge_count() / 2);
    CHECK(verify_equilibrium(Utility::Difference, a).is_equilibrium);
    for (const auto& m : trace.moves) CHECK(m.potential_after <= m.potential_before - 2);
}

TEST_CASE("binary dynamics uses at most n/2 swaps") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        auto g = build_torus(100);
        auto a = random_assignment(g, 2 + static_cast<int>(rng() % 4), rng(),
                                   RandomMode::EquitableShuffle);
        RunTrace trace = run_to_equilibrium(Utility::Binary, a);
        CHECK(trace.at_equilibrium);
        CHECK(trace.swap_count <= g->n() / 2);
    }
}

TEST_CASE("verify_equilibrium witnesses") {
    auto worst = worst_assignment(Family::Cycle, Utility::Binary, Target::Welfare, 20, 2);
    CHECK(verify_equilibrium(Utility::Binary, worst.assignment).is_equilibrium);

    auto halves = assignment_from_labels(build_cycle(6), {1, 1, 1, 2, 2, 2}, 2);
    auto chk = verify_equilibrium(Utility::Binary, halves);
    CHECK_FALSE(chk.is_equilibrium);
    CHECK(chk.witness_u == 1);
    CHECK(chk.witness_v == 4);

    auto opt = optimal_assignment(Family::Torus, 400, 5);
    for (Utility k : {Utility::Binary, Utility::Difference, Utility::Variety})
        CHECK(verify_equilibrium(k, opt.assignment).is_equilibrium);
}

TEST_CASE("dynamics is deterministic") {
    auto g = build_cylinder(40);
    auto a1 = random_assignment(g, 3, 4242, RandomMode::UniformPerVertex);
    auto a2 = a1;
    auto t1 = run_to_equilibrium(Utility::Variety, a1);
    auto t2 = run_to_equilibrium(Utility::Variety, a2);
    CHECK(a1.labels == a2.labels);
    CHECK(t1.swap_count == t2.swap_count);
    for (size_t i = 0; i < t1.moves.size(); ++i) {
        CHECK(t1.moves[i].u == t2.moves[i].u);
        CHECK(t1.moves[i].v == t2.moves[i].v);
    }
}

TEST_CASE("similarity dynamics terminates and reports truncation honestly") {
    auto g = build_torus(100);
    auto a = random_assignment(g, 2, 17, RandomMode::UniformPerVertex);
    RunTrace trace = run_to_equilibrium(Utility::Similarity, a);
    CHECK((trace.at_equilibrium || trace.truncated));
    if (trace.at_equilibrium) CHECK(verify_equilibrium(Utility::Similarity, a).is_equilibrium);
    // on a regular graph each similarity swap raises the monochromatic count
    for (const auto& m : trace.moves) CHECK(m.potential_after >= m.potential_before + 2);
}

TEST_CASE("every executed move strictly improves both agents") {
    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 15; ++rep) {
        int n = 10 + static_cast<int>(rng() % 40);
        auto g = random_graph(rng, n, static_cast<int>(rng() % (2 * n)));
        int t = 2 + static_cast<int>(rng() % 4);
        auto a = random_assignment(g, t, rng(), RandomMode::EquitableShuffle);
        for (Utility k : {Utility::Binary, Utility::Difference, Utility::Variety}) {
            Assignment copy = a;
            RunTrace trace = run_to_equilibrium(k, copy);
            CHECK(trace.at_equilibrium);
            for (const auto& m : trace.moves) {
                CHECK(m.post_u > m.pre_u);
                CHECK(m.post_v > m.pre_v);
                CHECK(m.potential_after <= m.potential_before - 2);
            }
            CHECK(verify_equilibrium(k, copy).is_equilibrium);
            CHECK(replay_matches(copy, trace));
        }
    }
}
