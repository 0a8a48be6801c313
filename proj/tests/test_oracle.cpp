#include <doctest.h>

#include <algorithm>

#include "dsg/dynamics.hpp"
#include "dsg/measures.hpp"
#include "dsg/oracle.hpp"

using namespace dsg;

TEST_CASE("labeling counts") {
    CHECK(labeling_count(equitable_partition(4, 2)) == 6);
    CHECK(labeling_count(equitable_partition(6, 2)) == 20);
    CHECK(labeling_count(equitable_partition(9, 3)) == 1680);
}

TEST_CASE("cap refusal is loud") {
    auto g = build_cycle(6);
    CHECK_THROWS_WITH_AS(enumerate_equilibria(g, equitable_partition(6, 2), Utility::Binary, 10),
                         doctest::Contains("cap"), std::invalid_argument);
}

TEST_CASE("equilibria of the four-cycle") {
    auto g = build_cycle(4);
    auto p = equitable_partition(4, 2);
    // no labeling with counts (2,2) leaves a segregated agent, so all six
    // are binary equilibria; only the two proper colorings survive the
    // difference utility
    CHECK(enumerate_equilibria(g, p, Utility::Binary).size() == 6);
    CHECK(enumerate_equilibria(g, p, Utility::Difference).size() == 2);
    CHECK(enumerate_equilibria(g, p, Utility::Variety).size() == 6);
}

TEST_CASE("equilibria of the six-cycle") {
    auto g = build_cycle(6);
    auto p = equitable_partition(6, 2);
    // 20 labelings; the 6 rotations of the two-block labeling pair a
    // segregated 1 with a segregated 2 and are the only non-equilibria
    auto eq_b = enumerate_equilibria(g, p, Utility::Binary);
    CHECK(eq_b.size() == 14);
    auto eq_d = enumerate_equilibria(g, p, Utility::Difference);
    auto eq_v = enumerate_equilibria(g, p, Utility::Variety);
    CHECK(eq_v.size() == 14); // two types: same game as binary

    // subset relations against the binary set
    auto contains = [](const std::vector<std::vector<int>>& set, const std::vector<int>& x) {
        return std::find(set.begin(), set.end(), x) != set.end();
    };
    for (const auto& lab : eq_d) CHECK(contains(eq_b, lab));
    for (const auto& lab : eq_v) CHECK(contains(eq_b, lab));
}

TEST_CASE("degenerate partitions") {
    auto g = build_cycle(4);
    // one agent of each type: every labeling maximizes every utility
    TypePartition each = partition_from_counts({1, 1, 1, 1});
    CHECK(enumerate_equilibria(g, each, Utility::Difference).size() == labeling_count(each));

    // all agents of one type: the unique labeling has no cross-type pair
    TypePartition single = partition_from_counts({4, 0});
    auto eqs = enumerate_equilibria(g, single, Utility::Binary);
    CHECK(eqs.size() == 1);
    CHECK(eqs.front() == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("brute force optima") {
    auto c6 = build_cycle(6);
    auto p = equitable_partition(6, 2);
    auto [ce_best, witness] = brute_force_optimum(c6, p, selector_from_name("ce"));
    CHECK(ce_best == Rat(6));
    CHECK(colorful_edges(assignment_from_labels(c6, witness, 2)) == 6);

    auto c5 = build_cycle(5);
    auto [odd_best, w5] = brute_force_optimum(c5, equitable_partition(5, 2), selector_from_name("ce"));
    CHECK(odd_best == Rat(4)); // odd cycle cannot be properly 2-colored
    (void)w5;

    // perfectly even neighborhoods are impossible on an odd half-cycle, so the
    // best reachable split has four (1,1) neighborhoods and two solid ones
    auto [ev_best, wev] = brute_force_optimum(c6, p, selector_from_name("ev"));
    CHECK(ev_best == Rat(1, 16));
    (void)wev;
}

TEST_CASE("worst equilibrium values") {
    auto c6 = build_cycle(6);
    auto p = equitable_partition(6, 2);
    CHECK(worst_equilibrium_value(c6, p, Utility::Binary, selector_from_name("ce")) == Rat(4));
    Rat wdoi = worst_equilibrium_value(c6, p, Utility::Binary, selector_from_name("doi"));
    CHECK(wdoi > Rat(0));
    CHECK(wdoi <= Rat(1));

    // refined worst values: the types variant never beats the colorful one
    for (int j = 1; j <= 2; ++j) {
        Rat wc = worst_equilibrium_value(c6, p, Utility::Binary, selector_from_name("doic", j));
        Rat wt = worst_equilibrium_value(c6, p, Utility::Binary, selector_from_name("doit", j));
        CHECK(wt <= wc);
    }
}

TEST_CASE("dynamics lands inside the enumerated equilibrium set") {
    auto g = build_cylinder(6);
    auto p = equitable_partition(6, 3);
    for (Utility kind : {Utility::Binary, Utility::Difference, Utility::Variety}) {
        auto eqs = enumerate_equilibria(g, p, kind);
        REQUIRE(!eqs.empty());
        for_each_labeling(p, 1'000'000, [&](const std::vector<int>& labels) {
            Assignment a = assignment_from_labels(g, labels, p.t);
            RunTrace trace = run_to_equilibrium(kind, a);
            CHECK(trace.at_equilibrium);
            CHECK(std::find(eqs.begin(), eqs.end(), a.labels) != eqs.end());
        });
    }
}
