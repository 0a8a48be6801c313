// dsg_main.cpp — command line front end: construct, measure, simulate,
// verify, oracle, experiment
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "dsg/constructions.hpp"
#include "dsg/dynamics.hpp"
#include "dsg/experiments.hpp"
#include "dsg/io.hpp"
#include "dsg/measures.hpp"
#include "dsg/oracle.hpp"

namespace {

using namespace dsg;

void print_report(std::ostream& out, const MeasureReport& r) {
    out << "doi=" << r.doi.str6() << '\n';
    out << "ce=" << r.ce << '\n';
    out << "ce_norm=" << r.ce_norm.str6() << '\n';
    out << "nv=" << r.nv.str6() << '\n';
    out << "ev=" << r.ev.num << '/' << r.ev.den << '\n';
    if (r.ev_norm) out << "ev_norm=" << r.ev_norm->str6() << '\n';
    out << "sw_binary=" << r.sw_binary << '\n';
    out << "sw_diff=" << r.sw_difference << '\n';
    out << "sw_variety=" << r.sw_variety << '\n';
    out << "sw_similarity=" << r.sw_similarity.str6() << '\n';
    for (size_t j = 0; j < r.doic.size(); ++j)
        out << "doic" << j + 1 << '=' << r.doic[j].str6() << '\n';
    for (size_t j = 0; j < r.doit.size(); ++j)
        out << "doit" << j + 1 << '=' << r.doit[j].str6() << '\n';
}

void print_report_csv(std::ostream& out, const MeasureReport& r) {
    out << "doi,ce,ce_norm,nv,ev_norm\n"
        << r.doi.str6() << ',' << r.ce << ',' << r.ce_norm.str6() << ',' << r.nv.str6() << ','
        << (r.ev_norm ? r.ev_norm->str6() : std::string("")) << '\n';
}

int run(int argc, char** argv) {
    CLI::App app{"diversity-seeking swap game simulator"};
    app.require_subcommand(1);

    // construct ------------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "build a graph and a benchmark assignment");
    std::string c_family, c_kind = "optimal", c_utility = "variety", c_measure = "sw";
    long long c_n = 0, c_k = 0;
    int c_t = 2, c_delta = 0;
    std::string c_graph_out, c_assign_out;
    bool c_no_verify = false;
    construct->add_option("--family", c_family, "cycle|cylinder|torus|gstar")->required();
    construct->add_option("--kind", c_kind, "optimal|worst (default optimal)");
    construct->add_option("--utility", c_utility, "binary|diff|variety (worst only)");
    construct->add_option("--measure", c_measure, "sw|ce target for worst patterns");
    construct->add_option("-n", c_n, "vertex count (cycle/cylinder/torus)");
    construct->add_option("-t", c_t, "number of types")->required();
    construct->add_option("--delta", c_delta, "degree (gstar)");
    construct->add_option("-k", c_k, "vertices per type (gstar)");
    construct->add_option("--graph-out", c_graph_out, "edge list output path");
    construct->add_option("--assignment-out", c_assign_out, "assignment output path");
    construct->add_flag("--no-verify", c_no_verify, "skip the equilibrium scans");

    // measure ----------------------------------------------------------------
    auto* measure_cmd = app.add_subcommand("measure", "report diversity measures for an assignment");
    std::string m_graph, m_assign;
    bool m_csv = false;
    measure_cmd->add_option("graph", m_graph, "edge list file")->required();
    measure_cmd->add_option("assignment", m_assign, "assignment file")->required();
    measure_cmd->add_flag("--csv", m_csv, "emit one CSV row instead of key=value lines");

    // simulate ---------------------------------------------------------------
    auto* simulate = app.add_subcommand("simulate", "run swap dynamics to equilibrium");
    std::string s_graph, s_assign, s_utility = "binary", s_trace, s_final;
    long long s_max_steps = 0;
    int s_random_t = 0;
    std::uint64_t s_seed = 1;
    std::string s_mode = "uniform-per-vertex";
    simulate->add_option("graph", s_graph, "edge list file")->required();
    simulate->add_option("--assignment", s_assign, "starting assignment file");
    simulate->add_option("--random-t", s_random_t, "draw a random start with this many types");
    simulate->add_option("--seed", s_seed, "seed for --random-t");
    simulate->add_option("--mode", s_mode, "uniform-per-vertex|equitable-shuffle");
    simulate->add_option("--utility", s_utility, "binary|diff|variety|similarity");
    simulate->add_option("--max-steps", s_max_steps, "step cap (0 = automatic)");
    simulate->add_option("--trace-csv", s_trace, "write step,u,v,potential rows here");
    simulate->add_option("--final-out", s_final, "write the final assignment here");

    // verify -----------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "exhaustively check an assignment for improving swaps");
    std::string v_graph, v_assign, v_utility = "binary";
    verify->add_option("graph", v_graph, "edge list file")->required();
    verify->add_option("assignment", v_assign, "assignment file")->required();
    verify->add_option("--utility", v_utility, "binary|diff|variety|similarity");

    // oracle -----------------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle", "brute-force enumeration on small instances");
    std::string o_graph, o_mode = "equilibria", o_utility = "binary", o_measure = "ce", o_witness;
    int o_t = 2, o_j = 1;
    long long o_cap = 10'000'000;
    oracle->add_option("graph", o_graph, "edge list file")->required();
    oracle->add_option("-t", o_t, "number of types (equitable partition)")->required();
    oracle->add_option("--mode", o_mode, "equilibria|optimum|worst");
    oracle->add_option("--utility", o_utility, "utility for equilibria/worst");
    oracle->add_option("--measure", o_measure, "doi|ce|nv|ev|sw-binary|sw-diff|sw-variety|doic|doit");
    oracle->add_option("-j", o_j, "refinement level for doic/doit");
    oracle->add_option("--cap", o_cap, "labeling-count cap");
    oracle->add_option("--witness-out", o_witness, "write the witness assignment here");

    // experiment ---------------------------------------------------------------
    auto* experiment = app.add_subcommand("experiment", "batch simulations with CSV output");
    std::string e_config, e_rows = "rows.csv", e_aggregate = "aggregate.csv";
    ExperimentConfig e_cfg;
    std::string e_inputs, e_utilities, e_mode;
    experiment->add_option("--config", e_config, "key=value config file");
    experiment->add_option("--side", e_cfg.side, "torus side");
    experiment->add_option("--t-min", e_cfg.t_min, "smallest t");
    experiment->add_option("--t-max", e_cfg.t_max, "largest t");
    experiment->add_option("--runs", e_cfg.runs, "runs per cell");
    experiment->add_option("--seed", e_cfg.seed, "master seed");
    experiment->add_option("--threads", e_cfg.threads, "worker threads (0 = auto)");
    experiment->add_option("--inputs", e_inputs, "comma list: random,schelling");
    experiment->add_option("--utilities", e_utilities, "comma list: binary,diff,variety");
    experiment->add_option("--mode", e_mode, "uniform-per-vertex|equitable-shuffle");
    experiment->add_option("--out", e_rows, "per-run rows CSV path");
    experiment->add_option("--aggregate", e_aggregate, "aggregate CSV path");

    CLI11_PARSE(app, argc, argv);

    if (construct->parsed()) {
        Construction c = [&] {
            if (c_family == "gstar") {
                if (c_delta <= 0 || c_k <= 0)
                    throw std::invalid_argument("gstar needs --delta and -k");
                return gstar_assignment(c_t, c_delta, c_k, c_kind == "optimal");
            }
            Family fam = family_from_name(c_family);
            if (c_n <= 0) throw std::invalid_argument("-n is required for this family");
            if (c_kind == "optimal") return optimal_assignment(fam, c_n, c_t);
            if (c_kind != "worst") throw std::invalid_argument("--kind must be optimal or worst");
            Target target = c_measure == "ce" ? Target::Colorful : Target::Welfare;
            return worst_assignment(fam, utility_from_name(c_utility), target, c_n, c_t);
        }();
        std::cout << "name=" << c.name << '\n';
        if (!c.note.empty()) std::cout << "note=" << c.note << '\n';
        std::cout << "n=" << c.assignment.graph->n() << " edges=" << c.assignment.graph->edge_count()
                  << " t=" << c.assignment.partition.t << '\n';
        print_report(std::cout, dsg::measure(c.assignment));
        if (!c_no_verify) {
            for (Utility u : {Utility::Binary, Utility::Difference, Utility::Variety}) {
                auto chk = verify_equilibrium(u, c.assignment);
                std::cout << "equilibrium_" << utility_name(u) << '='
                          << (chk.is_equilibrium ? "true" : "false");
                if (!chk.is_equilibrium)
                    std::cout << " witness=(" << chk.witness_u << ',' << chk.witness_v << ')';
                std::cout << '\n';
            }
        }
        if (!c_graph_out.empty()) write_edge_list_file(c_graph_out, *c.assignment.graph);
        if (!c_assign_out.empty()) write_assignment_file(c_assign_out, c.assignment);
        return 0;
    }

    if (measure_cmd->parsed()) {
        auto g = load_edge_list_file(m_graph);
        Assignment a = load_assignment_file(m_assign, g);
        MeasureReport r = dsg::measure(a);
        if (m_csv) print_report_csv(std::cout, r);
        else print_report(std::cout, r);
        return 0;
    }

    if (simulate->parsed()) {
        auto g = load_edge_list_file(s_graph);
        Assignment a = [&] {
            if (!s_assign.empty()) return load_assignment_file(s_assign, g);
            if (s_random_t < 2)
                throw std::invalid_argument("need --assignment or --random-t");
            RandomMode mode = s_mode == "equitable-shuffle" ? RandomMode::EquitableShuffle
                                                            : RandomMode::UniformPerVertex;
            return random_assignment(g, s_random_t, s_seed, mode);
        }();
        Utility kind = utility_from_name(s_utility);
        long long initial_potential = monochromatic_edges(a);
        RunTrace trace = run_to_equilibrium(kind, a, s_max_steps);
        std::cout << "swaps=" << trace.swap_count << '\n'
                  << "at_equilibrium=" << (trace.at_equilibrium ? "true" : "false") << '\n'
                  << "truncated=" << (trace.truncated ? "true" : "false") << '\n'
                  << "potential_initial=" << initial_potential << '\n'
                  << "potential_final=" << monochromatic_edges(a) << '\n';
        if (!s_trace.empty()) {
            std::ofstream out(s_trace);
            if (!out) throw std::invalid_argument("cannot write " + s_trace);
            out << "step,u,v,potential\n";
            for (size_t i = 0; i < trace.moves.size(); ++i)
                out << i << ',' << trace.moves[i].u << ',' << trace.moves[i].v << ','
                    << trace.moves[i].potential_after << '\n';
        }
        if (!s_final.empty()) write_assignment_file(s_final, a);
        return 0;
    }

    if (verify->parsed()) {
        auto g = load_edge_list_file(v_graph);
        Assignment a = load_assignment_file(v_assign, g);
        auto chk = verify_equilibrium(utility_from_name(v_utility), a);
        std::cout << "equilibrium=" << (chk.is_equilibrium ? "true" : "false") << '\n';
        if (!chk.is_equilibrium)
            std::cout << "witness=(" << chk.witness_u << ',' << chk.witness_v << ")\n";
        return 0;
    }

    if (oracle->parsed()) {
        auto g = load_edge_list_file(o_graph);
        TypePartition p = equitable_partition(g->n(), o_t);
        Utility kind = utility_from_name(o_utility);
        if (o_mode == "equilibria") {
            auto eqs = enumerate_equilibria(g, p, kind, o_cap);
            std::cout << "labelings=" << labeling_count(p) << '\n'
                      << "equilibria=" << eqs.size() << '\n';
            if (!o_witness.empty() && !eqs.empty())
                write_assignment_file(o_witness, assignment_from_labels(g, eqs.front(), p.t));
        } else if (o_mode == "optimum") {
            auto [value, witness] = brute_force_optimum(g, p, selector_from_name(o_measure, o_j), o_cap);
            std::cout << "optimum=" << value.num << '/' << value.den << " (" << value.str6() << ")\n";
            if (!o_witness.empty())
                write_assignment_file(o_witness, assignment_from_labels(g, witness, p.t));
        } else if (o_mode == "worst") {
            Rat value = worst_equilibrium_value(g, p, kind, selector_from_name(o_measure, o_j), o_cap);
            std::cout << "worst_equilibrium=" << value.num << '/' << value.den << " (" << value.str6()
                      << ")\n";
        } else {
            throw std::invalid_argument("--mode must be equilibria, optimum, or worst");
        }
        return 0;
    }

    if (experiment->parsed()) {
        ExperimentConfig cfg = e_config.empty() ? e_cfg : config_from_file(e_config);
        if (!e_config.empty()) {
            // flags given alongside --config override the file
            if (experiment->count("--side")) cfg.side = e_cfg.side;
            if (experiment->count("--t-min")) cfg.t_min = e_cfg.t_min;
            if (experiment->count("--t-max")) cfg.t_max = e_cfg.t_max;
            if (experiment->count("--runs")) cfg.runs = e_cfg.runs;
            if (experiment->count("--seed")) cfg.seed = e_cfg.seed;
            if (experiment->count("--threads")) cfg.threads = e_cfg.threads;
        }
        if (!e_inputs.empty()) {
            cfg.inputs.clear();
            std::istringstream in(e_inputs);
            std::string item;
            while (std::getline(in, item, ',')) cfg.inputs.push_back(input_kind_from_name(item));
        }
        if (!e_utilities.empty()) {
            cfg.utilities.clear();
            std::istringstream in(e_utilities);
            std::string item;
            while (std::getline(in, item, ',')) cfg.utilities.push_back(utility_from_name(item));
        }
        if (!e_mode.empty())
            cfg.mode = e_mode == "equitable-shuffle" ? RandomMode::EquitableShuffle
                                                     : RandomMode::UniformPerVertex;
        auto rows = run_experiment(cfg);
        {
            std::ofstream out(e_rows);
            if (!out) throw std::invalid_argument("cannot write " + e_rows);
            write_rows_csv(out, rows);
        }
        {
            std::ofstream out(e_aggregate);
            if (!out) throw std::invalid_argument("cannot write " + e_aggregate);
            write_aggregate_csv(out, rows);
        }
        std::cout << "rows=" << rows.size() << " -> " << e_rows << ", " << e_aggregate << '\n';
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
