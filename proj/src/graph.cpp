#include "dsg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace dsg {

namespace {

void fail(const std::string& msg) { throw std::invalid_argument(msg); }

} // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 0) fail("graph needs at least one vertex");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of vertex range");
        if (u == v) fail("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& nb = g.adj_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            fail("duplicate edge at vertex " + std::to_string(v));
    }
    g.m_ = static_cast<long long>(edges.size());

    // connectivity: BFS from 0 must reach everything
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != n) {
        int missing = 0;
        while (seen[missing]) ++missing;
        fail("graph is disconnected: vertex " + std::to_string(missing) +
             " unreachable from vertex 0 (" + std::to_string(n - reached) + " vertices cut off)");
    }

    g.delta_min_ = g.degree(0);
    g.delta_max_ = g.degree(0);
    for (int v = 1; v < n; ++v) {
        g.delta_min_ = std::min(g.delta_min_, g.degree(v));
        g.delta_max_ = std::max(g.delta_max_, g.degree(v));
    }
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

GraphPtr build_cycle(long long n) {
    if (n < 3) fail("cycle needs n >= 3, got " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < n; ++i) edges.emplace_back(static_cast<int>(i), static_cast<int>((i + 1) % n));
    return std::make_shared<Graph>(Graph::from_edges(static_cast<int>(n), edges));
}

GraphPtr build_cylinder(long long n) {
    if (n % 2 != 0) fail("cylinder needs even n, got " + std::to_string(n));
    long long m = n / 2;
    if (m < 3) fail("cylinder needs at least 3 columns, got " + std::to_string(m));
    auto id = [m](long long row, long long col) { return static_cast<int>(row * m + col); };
    std::vector<std::pair<int, int>> edges;
    for (long long c = 0; c < m; ++c) {
        long long cn = (c + 1) % m;
        edges.emplace_back(id(0, c), id(0, cn));
        edges.emplace_back(id(1, c), id(1, cn));
        edges.emplace_back(id(0, c), id(1, c));
    }
    return std::make_shared<Graph>(Graph::from_edges(static_cast<int>(n), edges));
}

GraphPtr build_torus(long long n) {
    long long side = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(n))));
    if (side * side != n) fail("torus needs a perfect-square n, got " + std::to_string(n));
    if (side < 3) fail("torus needs side >= 3, got " + std::to_string(side));
    auto id = [side](long long row, long long col) { return static_cast<int>(row * side + col); };
    std::vector<std::pair<int, int>> edges;
    for (long long r = 0; r < side; ++r)
        for (long long c = 0; c < side; ++c) {
            edges.emplace_back(id(r, c), id(r, (c + 1) % side));
            edges.emplace_back(id(r, c), id((r + 1) % side, c));
        }
    return std::make_shared<Graph>(Graph::from_edges(static_cast<int>(n), edges));
}

GraphPtr build_bipartite_regular(long long p, int delta) {
    if (p % 2 != 0) fail("bipartite builder needs even p, got " + std::to_string(p));
    long long q = p / 2;
    if (delta < 1 || delta > q)
        fail("bipartite builder needs 1 <= delta <= p/2, got delta=" + std::to_string(delta));
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < q; ++i)
        for (int l = 0; l < delta; ++l)
            edges.emplace_back(static_cast<int>(i), static_cast<int>(q + (i + l) % q));
    return std::make_shared<Graph>(Graph::from_edges(static_cast<int>(p), edges));
}

GraphPtr build_gstar(int t, int delta, long long k, GstarLayout* layout) {
    if (t < 3) fail("gstar needs t >= 3, got " + std::to_string(t));
    if (k % 2 != 0) fail("gstar needs even k, got " + std::to_string(k));
    if (delta < 3) fail("gstar needs delta >= 3, got " + std::to_string(delta));
    long long q = k / 2;
    if (q < delta) fail("gstar needs k/2 >= delta");
    if (k <= t) fail("gstar needs k > t");
    if (t - 1 > q) fail("gstar needs t-1 <= k/2");

    GstarLayout lay;
    lay.t = t;
    lay.delta = delta;
    lay.k = k;
    lay.q = q;

    std::vector<std::pair<int, int>> edges;
    // copies 0..t-2 are R(k, delta-1); copy t-1 is R(k, delta) minus t-1 edges
    for (int copy = 0; copy < t; ++copy) {
        int width = (copy == t - 1) ? delta : delta - 1;
        for (long long i = 0; i < q; ++i)
            for (int l = 0; l < width; ++l) {
                long long j = (i + l) % q;
                if (copy == t - 1 && l == 0 && i < t - 1) continue; // the removed (a_ti, b_ti) edges
                edges.emplace_back(lay.a(copy, i), lay.b(copy, j));
            }
    }
    // matchings B_i -> A_{i+1} over the first t-1 copies, each missing index 0
    for (int copy = 0; copy < t - 1; ++copy) {
        int next = (copy + 1) % (t - 1);
        for (long long j = 1; j < q; ++j) edges.emplace_back(lay.b(copy, j), lay.a(next, j));
    }
    // cross connections into the last copy
    for (int i = 0; i < t - 1; ++i) {
        edges.emplace_back(lay.b(i, 0), lay.a(t - 1, i));
        edges.emplace_back(lay.a(i, 0), lay.b(t - 1, i));
    }

    auto g = std::make_shared<Graph>(Graph::from_edges(static_cast<int>(k * t), edges));
    if (g->min_degree() != delta || g->max_degree() != delta)
        throw std::logic_error("gstar construction lost regularity (internal error)");
    if (layout) *layout = lay;
    return g;
}

} // namespace dsg
