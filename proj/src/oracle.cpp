#include "dsg/oracle.hpp"

#include <climits>
#include <stdexcept>

#include "dsg/dynamics.hpp"
#include "dsg/measures.hpp"

namespace dsg {

MeasureSelector selector_from_name(const std::string& name, int j) {
    MeasureSelector s;
    s.j = j;
    if (name == "doi") s.kind = MeasureSelector::Doi;
    else if (name == "ce") s.kind = MeasureSelector::Ce;
    else if (name == "nv") s.kind = MeasureSelector::Nv;
    else if (name == "ev") s.kind = MeasureSelector::Ev;
    else if (name == "sw-binary") s.kind = MeasureSelector::SwBinary;
    else if (name == "sw-diff") s.kind = MeasureSelector::SwDifference;
    else if (name == "sw-variety") s.kind = MeasureSelector::SwVariety;
    else if (name == "doic") s.kind = MeasureSelector::DoiC;
    else if (name == "doit") s.kind = MeasureSelector::DoiT;
    else throw std::invalid_argument("unknown measure '" + name + "'");
    return s;
}

Rat evaluate_selector(const MeasureSelector& sel, const Assignment& a) {
    switch (sel.kind) {
        case MeasureSelector::Doi: return degree_of_integration(a);
        case MeasureSelector::Ce: return Rat(colorful_edges(a));
        case MeasureSelector::Nv: return neighborhood_variety(a);
        case MeasureSelector::Ev: return evenness(a);
        case MeasureSelector::SwBinary: {
            long long sw = 0;
            for (int v = 0; v < a.graph->n(); ++v) sw += utility_int(Utility::Binary, a, v);
            return Rat(sw);
        }
        case MeasureSelector::SwDifference: return Rat(2 * colorful_edges(a));
        case MeasureSelector::SwVariety: {
            long long sw = 0;
            for (int v = 0; v < a.graph->n(); ++v) sw += utility_int(Utility::Variety, a, v);
            return Rat(sw);
        }
        case MeasureSelector::DoiC: return doi_refined(a, sel.j, DoiVariant::Colorful);
        case MeasureSelector::DoiT: return doi_refined(a, sel.j, DoiVariant::Types);
    }
    return Rat(0);
}

long long labeling_count(const TypePartition& p) {
    // multinomial(total; counts), saturating
    long long result = 1;
    long long placed = 0;
    for (long long c : p.counts) {
        for (long long i = 1; i <= c; ++i) {
            ++placed;
            __int128 next = static_cast<__int128>(result) * placed / i; // exact: binomials stay integral
            if (next > LLONG_MAX) return LLONG_MAX;
            result = static_cast<long long>(next);
        }
    }
    return result;
}

void for_each_labeling(const TypePartition& p, long long cap,
                       const std::function<void(const std::vector<int>&)>& visit) {
    long long total = labeling_count(p);
    if (total > cap)
        throw std::invalid_argument("labeling space has " + std::to_string(total) +
                                    " assignments, above the cap of " + std::to_string(cap) +
                                    "; raise the cap to enumerate");
    std::vector<long long> remaining = p.counts;
    std::vector<int> labels(static_cast<size_t>(p.total), 0);
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == labels.size()) {
            visit(labels);
            return;
        }
        for (int c = 0; c < p.t; ++c) {
            if (remaining[c] == 0) continue;
            --remaining[c];
            labels[pos] = c + 1;
            rec(pos + 1);
            ++remaining[c];
        }
    };
    rec(0);
}

std::vector<std::vector<int>> enumerate_equilibria(const GraphPtr& g, const TypePartition& p,
                                                   Utility kind, long long cap) {
    if (g->n() != p.total) throw std::invalid_argument("partition total must match vertex count");
    std::vector<std::vector<int>> out;
    for_each_labeling(p, cap, [&](const std::vector<int>& labels) {
        Assignment a = assignment_from_labels(g, labels, p.t);
        if (verify_equilibrium(kind, a).is_equilibrium) out.push_back(labels);
    });
    return out;
}

std::pair<Rat, std::vector<int>> brute_force_optimum(const GraphPtr& g, const TypePartition& p,
                                                     const MeasureSelector& sel, long long cap) {
    if (g->n() != p.total) throw std::invalid_argument("partition total must match vertex count");
    bool found = false;
    Rat best;
    std::vector<int> witness;
    for_each_labeling(p, cap, [&](const std::vector<int>& labels) {
        Assignment a = assignment_from_labels(g, labels, p.t);
        Rat value = evaluate_selector(sel, a);
        if (!found || value > best) {
            found = true;
            best = value;
            witness = labels;
        }
    });
    if (!found) throw std::logic_error("empty labeling space");
    return {best, witness};
}

Rat worst_equilibrium_value(const GraphPtr& g, const TypePartition& p, Utility kind,
                            const MeasureSelector& sel, long long cap) {
    if (g->n() != p.total) throw std::invalid_argument("partition total must match vertex count");
    bool found = false;
    Rat worst;
    for_each_labeling(p, cap, [&](const std::vector<int>& labels) {
        Assignment a = assignment_from_labels(g, labels, p.t);
        if (!verify_equilibrium(kind, a).is_equilibrium) return;
        Rat value = evaluate_selector(sel, a);
        if (!found || value < worst) {
            found = true;
            worst = value;
        }
    });
    if (!found) {
        if (is_diversity(kind))
            throw std::logic_error("no equilibrium found for a diversity utility (internal error)");
        throw std::invalid_argument("no equilibrium exists in the enumerated space");
    }
    return worst;
}

} // namespace dsg
