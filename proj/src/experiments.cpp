#include "dsg/experiments.hpp"

#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace dsg {

const char* input_kind_name(InputKind k) { return k == InputKind::Random ? "random" : "schelling"; }

InputKind input_kind_from_name(const std::string& name) {
    if (name == "random") return InputKind::Random;
    if (name == "schelling") return InputKind::Schelling;
    throw std::invalid_argument("unknown input kind '" + name + "' (random|schelling)");
}

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

} // namespace

ExperimentConfig config_from_stream(std::istream& in) {
    ExperimentConfig cfg;
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key=value");
            continue;
        }
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key == "side") cfg.side = std::stoi(value);
        else if (key == "t_min") cfg.t_min = std::stoi(value);
        else if (key == "t_max") cfg.t_max = std::stoi(value);
        else if (key == "runs") cfg.runs = std::stoi(value);
        else if (key == "seed") cfg.seed = std::stoull(value);
        else if (key == "threads") cfg.threads = std::stoi(value);
        else if (key == "mode")
            cfg.mode = value == "equitable-shuffle" ? RandomMode::EquitableShuffle
                                                    : RandomMode::UniformPerVertex;
        else if (key == "inputs") {
            cfg.inputs.clear();
            for (const auto& item : split_list(value)) cfg.inputs.push_back(input_kind_from_name(item));
        } else if (key == "utilities") {
            cfg.utilities.clear();
            for (const auto& item : split_list(value)) cfg.utilities.push_back(utility_from_name(item));
        } else {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

ExperimentConfig config_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return config_from_stream(in);
}

std::uint64_t cell_seed(std::uint64_t master, InputKind kind, int t, int run) {
    // splitmix64 over a packed cell id; every cell is reproducible alone
    std::uint64_t x = master ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(t) << 20 |
                                                         static_cast<std::uint64_t>(run) << 2 |
                                                         static_cast<std::uint64_t>(kind)));
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Assignment make_schelling_input(GraphPtr g, int t, std::uint64_t seed, RandomMode mode, bool* capped) {
    Assignment a = random_assignment(std::move(g), t, seed, mode);
    RunTrace trace = run_to_equilibrium(Utility::Similarity, a);
    if (capped) *capped = trace.truncated;
    return a;
}

MeasureSnapshot snapshot(const MeasureReport& r) {
    MeasureSnapshot s;
    s.doi = r.doi.to_double();
    s.ce_norm = r.ce_norm.to_double();
    s.nv = r.nv.to_double();
    s.ev_norm = r.ev_norm ? r.ev_norm->to_double() : 0.0;
    for (int j = 0; j < 4; ++j) {
        s.doic[j] = j < static_cast<int>(r.doic.size()) ? r.doic[j].to_double() : 0.0;
        s.doit[j] = j < static_cast<int>(r.doit.size()) ? r.doit[j].to_double() : 0.0;
    }
    return s;
}

namespace {

struct Cell {
    InputKind input;
    int t;
    int run;
};

} // namespace

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg) {
    if (cfg.runs < 1) throw std::invalid_argument("experiment needs runs >= 1");
    if (cfg.t_min < 2 || cfg.t_max < cfg.t_min) throw std::invalid_argument("bad t range");
    if (cfg.utilities.empty()) throw std::invalid_argument("experiment needs a non-empty utility set");
    if (cfg.inputs.empty()) throw std::invalid_argument("experiment needs a non-empty input set");

    GraphPtr g = build_torus(static_cast<long long>(cfg.side) * cfg.side);

    std::vector<Cell> cells;
    for (InputKind kind : cfg.inputs)
        for (int t = cfg.t_min; t <= cfg.t_max; ++t)
            for (int run = 0; run < cfg.runs; ++run) cells.push_back({kind, t, run});

    size_t per_cell = cfg.utilities.size();
    std::vector<ExperimentRow> rows(cells.size() * per_cell);

    auto work = [&](size_t ci) {
        const Cell& cell = cells[ci];
        std::uint64_t seed = cell_seed(cfg.seed, cell.input, cell.t, cell.run);
        bool capped = false;
        Assignment input = cell.input == InputKind::Random
                               ? random_assignment(g, cell.t, seed, cfg.mode)
                               : make_schelling_input(g, cell.t, seed, cfg.mode, &capped);
        MeasureSnapshot input_snap = snapshot(measure(input));
        for (size_t ui = 0; ui < per_cell; ++ui) {
            Utility kind = cfg.utilities[ui];
            Assignment state = input;
            RunTrace trace = run_to_equilibrium(kind, state);
            ExperimentRow& row = rows[ci * per_cell + ui];
            row.input = cell.input;
            row.utility = kind;
            row.t = cell.t;
            row.n = g->n();
            row.run = cell.run;
            row.seed = seed;
            row.swaps = trace.swap_count;
            row.schelling_capped = capped;
            row.eq = snapshot(measure(state));
            row.input_side = input_snap;
        }
    };

    int threads = cfg.threads > 0 ? cfg.threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 1 || cells.size() < 2) {
        for (size_t ci = 0; ci < cells.size(); ++ci) work(ci);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i)
            pool.emplace_back([&] {
                for (;;) {
                    size_t ci = next.fetch_add(1);
                    if (ci >= cells.size()) return;
                    work(ci);
                }
            });
        for (auto& th : pool) th.join();
    }
    return rows;
}

namespace {

void print_snapshot(std::ostream& out, const MeasureSnapshot& s) {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f",
                  s.doi, s.ce_norm, s.nv, s.ev_norm, s.doic[0], s.doic[1], s.doic[2], s.doic[3],
                  s.doit[0], s.doit[1], s.doit[2], s.doit[3]);
    out << buf;
}

} // namespace

void write_rows_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
    out << "# swap-diversity experiment rows v1\n";
    out << "input,utility,t,n,run,seed,swaps,schelling_capped,"
           "doi,ce_norm,nv,ev_norm,doic1,doic2,doic3,doic4,doit1,doit2,doit3,doit4,"
           "in_doi,in_ce_norm,in_nv,in_ev_norm,in_doic1,in_doic2,in_doic3,in_doic4,"
           "in_doit1,in_doit2,in_doit3,in_doit4\n";
    for (const auto& r : rows) {
        out << input_kind_name(r.input) << ',' << utility_name(r.utility) << ',' << r.t << ','
            << r.n << ',' << r.run << ',' << r.seed << ',' << r.swaps << ','
            << (r.schelling_capped ? 1 : 0) << ',';
        print_snapshot(out, r.eq);
        out << ',';
        print_snapshot(out, r.input_side);
        out << '\n';
    }
}

void write_aggregate_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
    struct Acc {
        long long count = 0;
        MeasureSnapshot eq{}, in{};
        double swaps = 0;
    };
    std::map<std::tuple<int, int, int>, Acc> cells; // (input, utility, t)
    for (const auto& r : rows) {
        Acc& acc = cells[{static_cast<int>(r.input), static_cast<int>(r.utility), r.t}];
        ++acc.count;
        acc.swaps += static_cast<double>(r.swaps);
        acc.eq.doi += r.eq.doi;
        acc.eq.ce_norm += r.eq.ce_norm;
        acc.eq.nv += r.eq.nv;
        acc.eq.ev_norm += r.eq.ev_norm;
        acc.in.doi += r.input_side.doi;
        acc.in.ce_norm += r.input_side.ce_norm;
        acc.in.nv += r.input_side.nv;
        acc.in.ev_norm += r.input_side.ev_norm;
        for (int j = 0; j < 4; ++j) {
            acc.eq.doic[j] += r.eq.doic[j];
            acc.eq.doit[j] += r.eq.doit[j];
            acc.in.doic[j] += r.input_side.doic[j];
            acc.in.doit[j] += r.input_side.doit[j];
        }
    }
    out << "# swap-diversity experiment aggregate v1 (means per input,utility,t)\n";
    out << "input,utility,t,runs,mean_swaps,doi,ce_norm,nv,ev_norm,doic1,doic2,doic3,doic4,"
           "doit1,doit2,doit3,doit4,in_doi,in_ce_norm,in_nv,in_ev_norm\n";
    for (auto& [key, acc] : cells) {
        auto [input, utility, t] = key;
        double c = static_cast<double>(acc.count);
        char buf[768];
        std::snprintf(buf, sizeof(buf),
                      "%s,%s,%d,%lld,%.2f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,"
                      "%.6f,%.6f,%.6f,%.6f",
                      input_kind_name(static_cast<InputKind>(input)),
                      utility_name(static_cast<Utility>(utility)), t, acc.count, acc.swaps / c,
                      acc.eq.doi / c, acc.eq.ce_norm / c, acc.eq.nv / c, acc.eq.ev_norm / c,
                      acc.eq.doic[0] / c, acc.eq.doic[1] / c, acc.eq.doic[2] / c, acc.eq.doic[3] / c,
                      acc.eq.doit[0] / c, acc.eq.doit[1] / c, acc.eq.doit[2] / c, acc.eq.doit[3] / c,
                      acc.in.doi / c, acc.in.ce_norm / c, acc.in.nv / c, acc.in.ev_norm / c);
        out << buf << '\n';
    }
}

} // namespace dsg
