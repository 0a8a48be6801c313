// graph.hpp — immutable undirected graphs and the topology builders
#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace dsg {

// Validated simple connected undirected graph. Vertices are 0..n-1,
// adjacency lists are sorted. Immutable after construction, so instances
// can be shared freely across threads.
class Graph {
public:
    // Builds from an edge list and validates: vertex range, no self-loops,
    // no duplicate edges, connectivity. Throws std::invalid_argument.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    long long edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int min_degree() const { return delta_min_; }
    int max_degree() const { return delta_max_; }
    bool regular() const { return delta_min_ == delta_max_; }
    bool adjacent(int u, int v) const;

    // All edges as (u,v) with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    long long m_ = 0;
    int delta_min_ = 0;
    int delta_max_ = 0;
    std::vector<std::vector<int>> adj_;
};

using GraphPtr = std::shared_ptr<const Graph>;

// Cycle C_n, 2-regular; n >= 3.
GraphPtr build_cycle(long long n);

// Cylinder on n vertices: 2 rows x n/2 columns, columns wrap cyclically,
// plus the vertical rung in every column; 3-regular. Vertex = row*(n/2)+col.
// Requires n even and n/2 >= 3.
GraphPtr build_cylinder(long long n);

// Torus on n vertices: sqrt(n) x sqrt(n) grid with wraparound in both
// directions; 4-regular. Vertex = row*side+col. Requires sqrt(n) integer >= 3.
GraphPtr build_torus(long long n);

// Bipartite delta-regular graph R(p, delta) on parts {a_0..a_{q-1}},
// {b_0..b_{q-1}}, q = p/2: a_i is adjacent to b_i, b_{i+1}, ..,
// b_{i+delta-1} (indices mod q). a_i = vertex i, b_i = vertex q+i.
// Requires p even and 1 <= delta <= q; the result must be connected.
GraphPtr build_bipartite_regular(long long p, int delta);

// Vertex bookkeeping for the composite gadget graph, so assignment
// generators can address vertices by (copy, side, index).
struct GstarLayout {
    int t = 0;
    int delta = 0;
    long long k = 0;
    long long q = 0; // k/2, part size

    // copy in 0..t-1, j in 0..q-1
    int a(int copy, long long j) const { return static_cast<int>(copy * k + j); }
    int b(int copy, long long j) const { return static_cast<int>(copy * k + q + j); }
};

// Composite delta-regular graph on n = k*t vertices: t-1 copies of
// R(k, delta-1) chained by perfect matchings that each omit their first
// edge, one copy of R(k, delta) with t-1 edges removed, and the cross
// connections that restore regularity. Requires t >= 3, k even,
// delta >= 3, k/2 >= delta, k > t, t-1 <= k/2.
GraphPtr build_gstar(int t, int delta, long long k, GstarLayout* layout = nullptr);

} // namespace dsg
