// experiments.hpp — seeded batch simulations on the torus with CSV output
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dsg/assignment.hpp"
#include "dsg/dynamics.hpp"
#include "dsg/measures.hpp"
#include "dsg/utility.hpp"

namespace dsg {

enum class InputKind { Random, Schelling };

const char* input_kind_name(InputKind k);
InputKind input_kind_from_name(const std::string& name);

struct ExperimentConfig {
    int side = 30;            // torus side; n = side*side
    int t_min = 2;
    int t_max = 9;
    int runs = 50;
    std::uint64_t seed = 1;
    std::vector<InputKind> inputs = {InputKind::Random, InputKind::Schelling};
    std::vector<Utility> utilities = {Utility::Binary, Utility::Difference, Utility::Variety};
    RandomMode mode = RandomMode::UniformPerVertex;
    int threads = 0; // 0 = hardware concurrency
};

// Parses key=value lines (side, t_min, t_max, runs, seed, inputs, utilities,
// mode, threads). '#' starts a comment.
ExperimentConfig config_from_stream(std::istream& in);
ExperimentConfig config_from_file(const std::string& path);

struct MeasureSnapshot {
    double doi = 0, ce_norm = 0, nv = 0, ev_norm = 0;
    double doic[4] = {0, 0, 0, 0};
    double doit[4] = {0, 0, 0, 0};
};

struct ExperimentRow {
    InputKind input = InputKind::Random;
    Utility utility = Utility::Binary;
    int t = 0;
    long long n = 0;
    int run = 0;
    std::uint64_t seed = 0;
    long long swaps = 0;
    bool schelling_capped = false;
    MeasureSnapshot eq;    // at the reached equilibrium
    MeasureSnapshot input_side;
};

// Deterministic per-cell seed derived from the master seed.
std::uint64_t cell_seed(std::uint64_t master, InputKind kind, int t, int run);

// Random assignment evolved to a similarity-seeking equilibrium (or the
// 10*|E| cap, reported through *capped).
Assignment make_schelling_input(GraphPtr g, int t, std::uint64_t seed, RandomMode mode,
                                bool* capped = nullptr);

// Runs every (input kind, t, run, utility) cell; rows come back in
// deterministic order regardless of thread scheduling.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg);

void write_rows_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
void write_aggregate_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

MeasureSnapshot snapshot(const MeasureReport& r);

} // namespace dsg
