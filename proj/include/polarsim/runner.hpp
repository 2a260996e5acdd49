#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polarsim/baseline.hpp"
#include "polarsim/dynamics.hpp"
#include "polarsim/graph.hpp"
#include "polarsim/hawkes.hpp"
#include "polarsim/metrics.hpp"

namespace polarsim {

enum class ResampleMode {
    opinions_only,  // graph + Hawkes fixed per cell; only initial opinions vary
    full            // graph + Hawkes + events redrawn for every run
};

// Region classifier thresholds; checked in order consensus, polarized, frozen.
struct RegionThresholds {
    double consensus_index = 0.05;
    double consensus_spread = 0.1;
    double polarized_index = 0.3;
    double frozen_change = 0.05;
};

struct ExperimentConfig {
    int n_nodes = 10;
    int ba_m = 2;
    double window_length = 2.0;
    std::vector<double> p_grid = default_p_grid();
    std::vector<double> k_grid = default_k_grid();
    double c = 0.05;
    int runs_per_cell = 10;
    int n_classes = 10;
    double theta = 0.5;
    std::uint64_t seed = 0;
    ResampleMode resample = ResampleMode::opinions_only;
    int threads = 0;  // 0 = hardware concurrency
    RegionThresholds regions;

    static std::vector<double> default_p_grid();  // 0, 0.1, ..., 1
    static std::vector<double> default_k_grid();  // 1, 2, ..., 10

    void validate() const;  // grids nonempty, c*k <= 1 across the k grid
};

struct RunRecord {
    double index;            // final-state ER index
    double final_spread;     // max - min of the final opinions
    double mean_abs_change;  // mean_i |o_final - o_initial|
};

struct CellResult {
    int p_index = 0;
    int k_index = 0;
    double p = 0;
    double k = 0;
    std::vector<RunRecord> runs;
    double mean_index = 0;
    double std_index = 0;  // population standard deviation
    std::string region;
};

struct SweepResult {
    ExperimentConfig config;
    std::vector<CellResult> cells;  // ascending p, then k
};

std::string classify_region(double mean_index, double mean_spread, double mean_change,
                            const RegionThresholds& t);

CellResult run_cell(const ExperimentConfig& config, int p_index, int k_index);

// Evaluates every (p, k) cell; cells run concurrently but the result order
// and all derived seeds depend only on (config, seed), not worker count.
SweepResult run_sweep(const ExperimentConfig& config);

// Contrast run: baseline and proposed model share one
// all-positive U[0,1] initial state on the same graph.
struct CompareResult {
    SocialGraph graph;
    std::vector<double> initial;
    std::vector<BaselineState> baseline_states;
    Trajectory proposed;
    BaselineParams baseline_params;  // effective values, eta resolved
    double baseline_index = 0;
    double proposed_index = 0;
    std::string baseline_label;
    std::string proposed_label;
    EventSequence events;
};

CompareResult run_compare(const ExperimentConfig& config, double p, double k,
                          const BaselineParams& baseline_params);

// Flat "key = value" config file; '#' starts a comment. Unknown keys throw.
ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base = {});

}  // namespace polarsim
