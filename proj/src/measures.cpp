#include "dsg/measures.hpp"

#include <algorithm>
#include <stdexcept>

namespace dsg {

namespace {

// colorful degree and distinct-other-type count per vertex, one pass
struct VertexStats {
    std::vector<long long> colorful; // different-type neighbors
    std::vector<long long> other_types;
    std::vector<long long> sq_norm; // squared L2 norm of the neighbor type vector
};

VertexStats vertex_stats(const Assignment& a) {
    const Graph& g = *a.graph;
    int t = a.partition.t;
    VertexStats s;
    s.colorful.assign(g.n(), 0);
    s.other_types.assign(g.n(), 0);
    s.sq_norm.assign(g.n(), 0);
    std::vector<long long> counts(t, 0);
    for (int v = 0; v < g.n(); ++v) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int w : g.neighbors(v)) ++counts[a.labels[w] - 1];
        long long own = counts[a.labels[v] - 1];
        s.colorful[v] = g.degree(v) - own;
        for (int c = 0; c < t; ++c) {
            s.sq_norm[v] += counts[c] * counts[c];
            if (counts[c] > 0 && c != a.labels[v] - 1) ++s.other_types[v];
        }
    }
    return s;
}

} // namespace

Rat degree_of_integration(const Assignment& a) { return doi_refined(a, 1, DoiVariant::Colorful); }

Rat doi_refined(const Assignment& a, int j, DoiVariant variant) {
    if (j < 1) throw std::invalid_argument("doi refinement needs j >= 1");
    auto s = vertex_stats(a);
    const auto& values = variant == DoiVariant::Colorful ? s.colorful : s.other_types;
    long long hits = std::count_if(values.begin(), values.end(),
                                   [j](long long x) { return x >= j; });
    return Rat(hits, a.graph->n());
}

long long colorful_edges(const Assignment& a) {
    long long ce = 0;
    const Graph& g = *a.graph;
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u))
            if (u < v && a.labels[u] != a.labels[v]) ++ce;
    return ce;
}

Rat neighborhood_variety(const Assignment& a) {
    auto s = vertex_stats(a);
    long long sum = 0;
    for (long long x : s.other_types) sum += x;
    return Rat(sum, a.graph->n());
}

Rat evenness(const Assignment& a) {
    auto s = vertex_stats(a);
    long long sum = 0;
    for (long long x : s.sq_norm) sum += x;
    return Rat(1, sum);
}

MeasureReport measure(const Assignment& a) {
    const Graph& g = *a.graph;
    int t = a.partition.t;
    auto s = vertex_stats(a);

    MeasureReport r;
    long long n = g.n();
    long long sq_sum = 0, nv_sum = 0;
    long long doi_hits = 0;
    Rat sim_acc(0);
    for (int v = 0; v < n; ++v) {
        sq_sum += s.sq_norm[v];
        nv_sum += s.other_types[v];
        r.sw_difference += s.colorful[v];
        if (s.colorful[v] > 0) {
            ++doi_hits;
            ++r.sw_binary;
        }
        r.sw_variety += s.other_types[v];
        sim_acc = sim_acc + Rat(g.degree(v) - s.colorful[v], g.degree(v));
    }
    r.sw_similarity = sim_acc;
    r.doi = Rat(doi_hits, n);
    r.ce = r.sw_difference / 2;
    r.nv = Rat(nv_sum, n);
    r.ev = Rat(1, sq_sum);
    r.ce_norm = Rat(r.ce, g.edge_count());

    int dmax = g.max_degree();
    r.doic.reserve(dmax);
    for (int j = 1; j <= dmax; ++j) {
        long long hits = std::count_if(s.colorful.begin(), s.colorful.end(),
                                       [j](long long x) { return x >= j; });
        r.doic.emplace_back(hits, n);
    }
    int tmax = std::min<long long>(t - 1, dmax);
    r.doit.reserve(tmax);
    for (int j = 1; j <= tmax; ++j) {
        long long hits = std::count_if(s.other_types.begin(), s.other_types.end(),
                                       [j](long long x) { return x >= j; });
        r.doit.emplace_back(hits, n);
    }

    if (g.regular()) {
        long long delta = g.min_degree();
        // ev / (t / (n*delta^2))
        r.ev_norm = Rat(n * delta * delta, t) * r.ev;
    }
    return r;
}

Rat poa_ratio(const Rat& optimal_value, const Rat& equilibrium_value) {
    if (equilibrium_value.num == 0)
        throw std::invalid_argument("ratio undefined: equilibrium value is zero");
    return optimal_value / equilibrium_value;
}

} // namespace dsg
