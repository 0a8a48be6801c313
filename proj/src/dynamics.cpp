#include "dsg/dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dsg {

long long monochromatic_edges(const Assignment& a) {
    long long mono = 0;
    const Graph& g = *a.graph;
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u))
            if (u < v && a.labels[u] == a.labels[v]) ++mono;
    return mono;
}

namespace {

// Flat per-vertex neighbor-type counts with O(1) swap tests. The swap scan
// dominates the experiment runtime, so everything here avoids allocation.
class SwapEngine {
public:
    SwapEngine(const Graph& g, std::vector<int>& labels, int t)
        : g_(g), lab_(labels), t_(t) {
        int n = g_.n();
        cnt_.assign(static_cast<size_t>(n) * t_, 0);
        same_.assign(n, 0);
        distinct_.assign(n, 0);
        for (int v = 0; v < n; ++v) {
            for (int w : g_.neighbors(v)) ++cnt_[idx(v, lab_[w])];
            refresh_vertex(v);
        }
        mono2_ = 0;
        for (int v = 0; v < n; ++v) mono2_ += same_[v];
    }

    long long monochromatic() const { return mono2_ / 2; }

    // utility as (num, den); den = 1 except for similarity
    std::pair<long long, long long> utility_of(Utility kind, int v) const {
        switch (kind) {
            case Utility::Binary: return {same_[v] < g_.degree(v) ? 1 : 0, 1};
            case Utility::Difference: return {g_.degree(v) - same_[v], 1};
            case Utility::Variety: return {distinct_[v] - (cnt_[idx(v, lab_[v])] > 0 ? 1 : 0), 1};
            case Utility::Similarity: return {same_[v], g_.degree(v)};
        }
        return {0, 1};
    }

    // utility of an agent of type `type` standing at `pos` after the swap
    // (u_vertex, pos); adjacent = whether pos neighbors u_vertex, whose
    // occupant becomes `displaced`.
    std::pair<long long, long long> utility_after(Utility kind, int type, int pos, bool adjacent,
                                                  int moved_type, int displaced) const {
        int own_at_pos = cnt_[idx(pos, type)];
        if (adjacent) {
            if (type == moved_type) --own_at_pos;
            if (type == displaced) ++own_at_pos;
        }
        switch (kind) {
            case Utility::Binary: return {own_at_pos < g_.degree(pos) ? 1 : 0, 1};
            case Utility::Difference: return {g_.degree(pos) - own_at_pos, 1};
            case Utility::Variety: {
                int d = distinct_[pos];
                if (adjacent && moved_type != displaced) {
                    if (cnt_[idx(pos, moved_type)] == 1) --d;
                    if (cnt_[idx(pos, displaced)] == 0) ++d;
                }
                return {d - (own_at_pos > 0 ? 1 : 0), 1};
            }
            case Utility::Similarity: return {own_at_pos, g_.degree(pos)};
        }
        return {0, 1};
    }

    // strict mutual improvement for the cross-type pair (u, v)
    bool improving(Utility kind, int u, int v) const {
        int a = lab_[u], b = lab_[v];
        if (a == b) return false;
        bool adj = g_.adjacent(u, v);
        auto [pu_n, pu_d] = utility_of(kind, u);
        auto [qu_n, qu_d] = utility_after(kind, a, v, adj, a, b);
        if (static_cast<__int128>(qu_n) * pu_d <= static_cast<__int128>(pu_n) * qu_d) return false;
        auto [pv_n, pv_d] = utility_of(kind, v);
        auto [qv_n, qv_d] = utility_after(kind, b, u, adj, a, b);
        return static_cast<__int128>(qv_n) * pv_d > static_cast<__int128>(pv_n) * qv_d;
    }

    void apply(int u, int v) {
        int a = lab_[u], b = lab_[v];
        mono2_ -= same_[u] + same_[v];
        lab_[u] = b;
        lab_[v] = a;
        retag(u, a, b, v);
        retag(v, b, a, u);
        refresh_vertex(u);
        refresh_vertex(v);
        mono2_ += same_[u] + same_[v];
    }

    // vertices ordered ascending by (utility, index)
    std::vector<int> scan_order(Utility kind) const {
        std::vector<int> order(g_.n());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            auto [xn, xd] = utility_of(kind, x);
            auto [yn, yd] = utility_of(kind, y);
            __int128 lhs = static_cast<__int128>(xn) * yd;
            __int128 rhs = static_cast<__int128>(yn) * xd;
            if (lhs != rhs) return lhs < rhs;
            return x < y;
        });
        return order;
    }

private:
    size_t idx(int v, int type) const { return static_cast<size_t>(v) * t_ + (type - 1); }

    void refresh_vertex(int v) {
        int d = 0;
        for (int c = 1; c <= t_; ++c) d += cnt_[idx(v, c)] > 0 ? 1 : 0;
        distinct_[v] = d;
        same_[v] = cnt_[idx(v, lab_[v])];
    }

    // every neighbor w of the retagged vertex sees one a turn into a b;
    // `partner` is refreshed wholesale afterwards, so only its counts move here
    void retag(int vertex, int a, int b, int partner) {
        for (int w : g_.neighbors(vertex)) {
            int& ca = cnt_[idx(w, a)];
            int& cb = cnt_[idx(w, b)];
            --ca;
            ++cb;
            if (ca == 0) --distinct_[w];
            if (cb == 1) ++distinct_[w];
            if (w == partner) continue;
            if (lab_[w] == a) { --same_[w]; --mono2_; }
            if (lab_[w] == b) { ++same_[w]; ++mono2_; }
        }
    }

    const Graph& g_;
    std::vector<int>& lab_;
    int t_;
    std::vector<int> cnt_;
    std::vector<int> same_;
    std::vector<int> distinct_;
    long long mono2_ = 0;
};

Rat to_rat(std::pair<long long, long long> p) { return Rat(p.first, p.second); }

std::optional<SwapMove> find_swap_engine(Utility kind, const SwapEngine& eng,
                                         const std::vector<int>& order) {
    for (int u : order) {
        for (int v : order) {
            if (v == u) continue;
            if (eng.improving(kind, u, v)) {
                SwapMove m;
                m.u = u;
                m.v = v;
                return m;
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<SwapMove> find_swap(Utility kind, const Assignment& a) {
    std::vector<int> labels = a.labels;
    SwapEngine eng(*a.graph, labels, a.partition.t);
    auto move = find_swap_engine(kind, eng, eng.scan_order(kind));
    if (!move) return std::nullopt;
    bool adj = a.graph->adjacent(move->u, move->v);
    int tu = labels[move->u], tv = labels[move->v];
    move->pre_u = to_rat(eng.utility_of(kind, move->u));
    move->pre_v = to_rat(eng.utility_of(kind, move->v));
    move->post_u = to_rat(eng.utility_after(kind, tu, move->v, adj, tu, tv));
    move->post_v = to_rat(eng.utility_after(kind, tv, move->u, adj, tu, tv));
    move->potential_before = eng.monochromatic();
    SwapEngine probe(*a.graph, labels, a.partition.t);
    probe.apply(move->u, move->v);
    move->potential_after = probe.monochromatic();
    return move;
}

RunTrace run_to_equilibrium(Utility kind, Assignment& a, long long max_steps) {
    const long long m = a.graph->edge_count();
    const long long diversity_bound = (m + 1) / 2;
    if (max_steps == 0) max_steps = is_diversity(kind) ? diversity_bound : 10 * m;
    if (is_diversity(kind) && max_steps < diversity_bound)
        throw std::invalid_argument("max_steps below ceil(|E|/2) could truncate a terminating run");

    RunTrace trace;
    trace.initial_labels = a.labels;
    SwapEngine eng(*a.graph, a.labels, a.partition.t);
    for (;;) {
        auto move = find_swap_engine(kind, eng, eng.scan_order(kind));
        if (!move) {
            trace.at_equilibrium = true;
            break;
        }
        if (trace.swap_count >= max_steps) {
            trace.truncated = true;
            break;
        }
        int u = move->u, v = move->v;
        bool adj = a.graph->adjacent(u, v);
        int tu = a.labels[u], tv = a.labels[v];
        move->pre_u = to_rat(eng.utility_of(kind, u));
        move->pre_v = to_rat(eng.utility_of(kind, v));
        move->post_u = to_rat(eng.utility_after(kind, tu, v, adj, tu, tv));
        move->post_v = to_rat(eng.utility_after(kind, tv, u, adj, tu, tv));
        move->potential_before = eng.monochromatic();
        eng.apply(u, v);
        move->potential_after = eng.monochromatic();
        if (is_diversity(kind) && move->potential_after > move->potential_before - 2)
            throw std::logic_error("potential dropped by less than 2 on swap (" + std::to_string(u) +
                                   "," + std::to_string(v) + "): " + std::to_string(move->potential_before) +
                                   " -> " + std::to_string(move->potential_after));
        trace.moves.push_back(*move);
        ++trace.swap_count;
    }
    trace.final_labels = a.labels;
    return trace;
}

EquilibriumCheck verify_equilibrium(Utility kind, const Assignment& a) {
    std::vector<int> labels = a.labels;
    SwapEngine eng(*a.graph, labels, a.partition.t);
    int n = a.graph->n();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (labels[u] == labels[v]) continue;
            if (eng.improving(kind, u, v)) return {false, u, v};
        }
    return {true, -1, -1};
}

bool replay_matches(const Assignment& shell, const RunTrace& trace) {
    std::vector<int> labels = trace.initial_labels;
    SwapEngine eng(*shell.graph, labels, shell.partition.t);
    for (const auto& m : trace.moves) {
        if (eng.monochromatic() != m.potential_before) return false;
        eng.apply(m.u, m.v);
        if (eng.monochromatic() != m.potential_after) return false;
    }
    return labels == trace.final_labels;
}

} // namespace dsg
