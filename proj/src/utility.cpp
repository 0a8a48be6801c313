#include "dsg/utility.hpp"

#include <set>
#include <stdexcept>

namespace dsg {

Utility utility_from_name(const std::string& name) {
    if (name == "binary") return Utility::Binary;
    if (name == "diff") return Utility::Difference;
    if (name == "variety") return Utility::Variety;
    if (name == "similarity") return Utility::Similarity;
    throw std::invalid_argument("unknown utility '" + name + "' (binary|diff|variety|similarity)");
}

bool is_diversity(Utility u) { return u != Utility::Similarity; }

long long utility_int(Utility kind, const Assignment& a, int v) {
    int own = a.labels[v];
    switch (kind) {
        case Utility::Binary: {
            for (int w : a.graph->neighbors(v))
                if (a.labels[w] != own) return 1;
            return 0;
        }
        case Utility::Difference: {
            long long count = 0;
            for (int w : a.graph->neighbors(v))
                if (a.labels[w] != own) ++count;
            return count;
        }
        case Utility::Variety: {
            std::set<int> types;
            for (int w : a.graph->neighbors(v))
                if (a.labels[w] != own) types.insert(a.labels[w]);
            return static_cast<long long>(types.size());
        }
        case Utility::Similarity:
            throw std::invalid_argument("similarity utility is fractional; use utility()");
    }
    return 0;
}

Rat utility(Utility kind, const Assignment& a, int v) {
    if (kind == Utility::Similarity) {
        long long same = 0;
        for (int w : a.graph->neighbors(v))
            if (a.labels[w] == a.labels[v]) ++same;
        return Rat(same, a.graph->degree(v));
    }
    return Rat(utility_int(kind, a, v));
}

namespace {

// utility of an agent of type `type` standing at vertex `pos`, after the
// occupants of `moved_from` and `pos` have exchanged places
Rat utility_as(Utility kind, const Assignment& a, int type, int pos, int moved_from) {
    int from_label_now = a.labels[pos]; // the displaced agent
    auto label_at = [&](int w) { return w == moved_from ? from_label_now : a.labels[w]; };
    switch (kind) {
        case Utility::Binary: {
            for (int w : a.graph->neighbors(pos))
                if (label_at(w) != type) return Rat(1);
            return Rat(0);
        }
        case Utility::Difference: {
            long long count = 0;
            for (int w : a.graph->neighbors(pos))
                if (label_at(w) != type) ++count;
            return Rat(count);
        }
        case Utility::Variety: {
            std::set<int> types;
            for (int w : a.graph->neighbors(pos))
                if (label_at(w) != type) types.insert(label_at(w));
            return Rat(static_cast<long long>(types.size()));
        }
        case Utility::Similarity: {
            long long same = 0;
            for (int w : a.graph->neighbors(pos))
                if (label_at(w) == type) ++same;
            return Rat(same, a.graph->degree(pos));
        }
    }
    return Rat(0);
}

} // namespace

bool is_improving_swap(Utility kind, const Assignment& a, int u, int v) {
    if (u == v) return false;
    int tu = a.labels[u], tv = a.labels[v];
    if (tu == tv) return false;
    Rat pre_u = utility(kind, a, u);
    Rat pre_v = utility(kind, a, v);
    Rat post_u = utility_as(kind, a, tu, v, u);
    Rat post_v = utility_as(kind, a, tv, u, v);
    return post_u > pre_u && post_v > pre_v;
}

bool variety_swap_condition(const Assignment& a, int u, int v) {
    int tu = a.labels[u], tv = a.labels[v];
    if (tu == tv) return false;
    if (a.graph->adjacent(u, v)) return false;
    std::set<int> Tu, Tv;
    for (int w : a.graph->neighbors(u)) Tu.insert(a.labels[w]);
    for (int w : a.graph->neighbors(v)) Tv.insert(a.labels[w]);
    long long uu = static_cast<long long>(Tu.size()) - Tu.count(tu);
    long long uv = static_cast<long long>(Tv.size()) - Tv.count(tv);
    if (uu != uv) return false;
    bool u_own_only_here = Tu.count(tu) && !Tv.count(tu);
    bool v_own_only_here = Tv.count(tv) && !Tu.count(tv);
    return u_own_only_here && v_own_only_here;
}

} // namespace dsg
