#include <doctest.h>

#include <numeric>
#include <sstream>

#include "dsg/assignment.hpp"
#include "dsg/io.hpp"

using namespace dsg;

TEST_CASE("equitable partition") {
    auto p = equitable_partition(20, 2);
    CHECK(p.counts == std::vector<long long>{10, 10});
    CHECK(p.equitable);

    auto p5 = equitable_partition(20, 5);
    CHECK(p5.counts == std::vector<long long>{4, 4, 4, 4, 4});

    auto p3 = equitable_partition(10, 3);
    CHECK(p3.counts == std::vector<long long>{4, 3, 3});

    CHECK_THROWS_AS(equitable_partition(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(equitable_partition(10, 1), std::invalid_argument);
}

TEST_CASE("random assignment modes") {
    auto torus = build_torus(900);
    auto a = random_assignment(torus, 5, 42, RandomMode::UniformPerVertex);
    long long sum = std::accumulate(a.partition.counts.begin(), a.partition.counts.end(), 0LL);
    CHECK(sum == 900);
    for (long long c : a.partition.counts) {
        CHECK(c > 100); // loose two-sided check around the mean of 180
        CHECK(c < 260);
    }

    auto cyc = build_cycle(10);
    auto b1 = random_assignment(cyc, 2, 7, RandomMode::EquitableShuffle);
    auto b2 = random_assignment(cyc, 2, 7, RandomMode::EquitableShuffle);
    CHECK(b1.labels == b2.labels); // same seed, same labeling
    CHECK(b1.partition.equitable);
    CHECK(b1.partition.counts == std::vector<long long>{5, 5});

    auto c9 = build_torus(9);
    auto perm = random_assignment(c9, 9, 3, RandomMode::EquitableShuffle);
    std::vector<int> sorted = perm.labels;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
}

TEST_CASE("equitable shuffles stay equitable across seeds") {
    auto g = build_cycle(23);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto a = random_assignment(g, 4, seed, RandomMode::EquitableShuffle);
        CHECK(a.partition.equitable);
    }
}

TEST_CASE("type vector and segregation") {
    auto c4 = build_cycle(4);
    auto alt = assignment_from_labels(c4, {1, 2, 1, 2}, 2);
    CHECK(type_vector(alt, 0) == std::vector<long long>{0, 2});
    CHECK_FALSE(is_segregated(alt, 0));

    auto c6 = build_cycle(6);
    auto halves = assignment_from_labels(c6, {1, 1, 1, 2, 2, 2}, 2);
    // vertex 0 sees vertex 5 (type 2) and vertex 1 (type 1)
    CHECK(type_vector(halves, 0) == std::vector<long long>{1, 1});
    CHECK(is_segregated(halves, 1));
    CHECK_FALSE(is_segregated(halves, 0));
    CHECK(is_segregated(halves, 4));
}

TEST_CASE("type vector sums to the degree") {
    auto g = build_cylinder(20);
    auto a = random_assignment(g, 3, 5, RandomMode::EquitableShuffle);
    for (int v = 0; v < g->n(); ++v) {
        auto tv = type_vector(a, v);
        CHECK(std::accumulate(tv.begin(), tv.end(), 0LL) == g->degree(v));
    }
}

TEST_CASE("assignment file round trip and validation") {
    auto g = build_cycle(6);
    auto a = assignment_from_labels(g, {1, 2, 3, 1, 2, 3}, 3);
    std::ostringstream out;
    write_assignment(out, a);
    CHECK(out.str() == "1 2 3 1 2 3\n");
    std::istringstream in(out.str());
    auto back = load_assignment(in, g);
    CHECK(back.labels == a.labels);
    CHECK(back.partition.t == 3);

    std::istringstream bad("1 2 3 1 2\n");
    CHECK_THROWS_AS(load_assignment(bad, g), std::invalid_argument);
    std::istringstream bad2("1 2 3 1 2 x\n");
    CHECK_THROWS_AS(load_assignment(bad2, g), std::invalid_argument);
}
