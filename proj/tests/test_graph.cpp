#include <doctest.h>

#include <random>
#include <sstream>

#include "dsg/graph.hpp"
#include "dsg/io.hpp"

using namespace dsg;

namespace {

long long degree_sum(const Graph& g) {
    long long sum = 0;
    for (int v = 0; v < g.n(); ++v) sum += g.degree(v);
    return sum;
}

bool exactly_regular(const Graph& g, int d) { return g.min_degree() == d && g.max_degree() == d; }

} // namespace

TEST_CASE("cycle builder") {
    auto c4 = build_cycle(4);
    CHECK(c4->n() == 4);
    CHECK(c4->edge_count() == 4);
    CHECK(exactly_regular(*c4, 2));
    CHECK(c4->adjacent(0, 1));
    CHECK(c4->adjacent(1, 2));
    CHECK(c4->adjacent(2, 3));
    CHECK(c4->adjacent(3, 0));
    CHECK_FALSE(c4->adjacent(0, 2));

    auto c20 = build_cycle(20);
    CHECK(c20->edge_count() == 20);
    CHECK(exactly_regular(*c20, 2));

    CHECK_THROWS_AS(build_cycle(2), std::invalid_argument);
}

TEST_CASE("cylinder builder") {
    auto p6 = build_cylinder(6);
    CHECK(exactly_regular(*p6, 3));
    CHECK(p6->edge_count() == 9);

    auto p40 = build_cylinder(40);
    CHECK(exactly_regular(*p40, 3));
    CHECK(p40->edge_count() == 60);
    // row-major numbering: vertex = row*(n/2)+col
    CHECK(p40->adjacent(0, 20));  // vertical rung in column 0
    CHECK(p40->adjacent(0, 19));  // column wrap
    CHECK_FALSE(p40->adjacent(0, 21));

    CHECK_THROWS_AS(build_cylinder(7), std::invalid_argument);
    CHECK_THROWS_AS(build_cylinder(4), std::invalid_argument);
}

TEST_CASE("torus builder") {
    auto t9 = build_torus(9);
    CHECK(exactly_regular(*t9, 4));
    CHECK(t9->edge_count() == 18);

    auto t400 = build_torus(400);
    CHECK(exactly_regular(*t400, 4));
    CHECK(t400->edge_count() == 800);
    CHECK(t400->adjacent(0, 1));
    CHECK(t400->adjacent(0, 20));
    CHECK(t400->adjacent(0, 19));   // row wrap
    CHECK(t400->adjacent(0, 380));  // column wrap

    auto t900 = build_torus(900);
    CHECK(t900->n() == 900);
    CHECK(exactly_regular(*t900, 4));

    CHECK_THROWS_AS(build_torus(10), std::invalid_argument);
    CHECK_THROWS_AS(build_torus(4), std::invalid_argument);
}

TEST_CASE("bipartite window builder") {
    auto r103 = build_bipartite_regular(10, 3);
    CHECK(exactly_regular(*r103, 3));
    CHECK(r103->edge_count() == 15);
    // a_0 is connected to b_0, b_1, b_2
    CHECK(r103->adjacent(0, 5));
    CHECK(r103->adjacent(0, 6));
    CHECK(r103->adjacent(0, 7));
    CHECK_FALSE(r103->adjacent(0, 8));

    // delta = 1 is a perfect matching, rejected as disconnected
    CHECK_THROWS_WITH_AS(build_bipartite_regular(6, 1), doctest::Contains("disconnected"),
                         std::invalid_argument);

    // delta = q gives the complete bipartite graph
    auto k44 = build_bipartite_regular(8, 4);
    CHECK(exactly_regular(*k44, 4));
    CHECK(k44->edge_count() == 16);
}

TEST_CASE("gstar builder") {
    GstarLayout lay;
    auto g = build_gstar(3, 4, 12, &lay);
    CHECK(g->n() == 36);
    CHECK(exactly_regular(*g, 4));
    CHECK(lay.q == 6);

    CHECK_THROWS_AS(build_gstar(2, 4, 12, nullptr), std::invalid_argument);

    auto g2 = build_gstar(4, 5, 20, nullptr);
    CHECK(g2->n() == 80);
    CHECK(exactly_regular(*g2, 5)); // degree scan over the whole construction
}

TEST_CASE("builders satisfy handshake and connectivity over sampled sizes") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        long long n = 3 + static_cast<long long>(rng() % 9998);
        auto c = build_cycle(n);
        CHECK(degree_sum(*c) == 2 * c->edge_count());
        CHECK(exactly_regular(*c, 2));

        long long cn = 2 * (3 + static_cast<long long>(rng() % 4999));
        auto p = build_cylinder(cn);
        CHECK(degree_sum(*p) == 2 * p->edge_count());
        CHECK(exactly_regular(*p, 3));

        long long side = 3 + static_cast<long long>(rng() % 97);
        auto t = build_torus(side * side);
        CHECK(degree_sum(*t) == 2 * t->edge_count());
        CHECK(exactly_regular(*t, 4));
    }
}

TEST_CASE("gstar is regular over sampled parameters") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 12; ++rep) {
        int t = 3 + static_cast<int>(rng() % 4);
        int delta = 3 + static_cast<int>(rng() % 6);
        long long k = 2 * (delta + 2 + static_cast<long long>(rng() % 20));
        if (k <= t) k = 2 * (t + 2);
        auto g = build_gstar(t, delta, k, nullptr);
        CHECK(g->n() == k * t);
        CHECK(g->min_degree() == delta);
        CHECK(g->max_degree() == delta);
    }
}

TEST_CASE("edge list loader") {
    {
        std::istringstream in("0 1\n1 2\n2 0\n");
        auto g = load_edge_list(in);
        CHECK(g->n() == 3);
        CHECK(g->edge_count() == 3);
    }
    {
        std::istringstream in("0 1\n2 3\n");
        CHECK_THROWS_WITH_AS(load_edge_list(in), doctest::Contains("disconnected"),
                             std::invalid_argument);
    }
    {
        std::istringstream in("0 0\n");
        CHECK_THROWS_WITH_AS(load_edge_list(in), doctest::Contains("self-loop"),
                             std::invalid_argument);
    }
    {
        std::istringstream in("0 1\n1 0\n");
        CHECK_THROWS_WITH_AS(load_edge_list(in), doctest::Contains("duplicate"),
                             std::invalid_argument);
    }
    {
        std::istringstream in("0 x\n");
        CHECK_THROWS_AS(load_edge_list(in), std::invalid_argument);
    }
}

TEST_CASE("edge list round trip") {
    auto g = build_torus(25);
    std::ostringstream out;
    write_edge_list(out, *g);
    std::istringstream in(out.str());
    auto h = load_edge_list(in);
    CHECK(h->n() == g->n());
    CHECK(h->edge_count() == g->edge_count());
    for (int v = 0; v < g->n(); ++v) CHECK(h->neighbors(v) == g->neighbors(v));
}
