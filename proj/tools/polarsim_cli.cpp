#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polarsim/io.hpp"
#include "polarsim/rng.hpp"
#include "polarsim/runner.hpp"

namespace fs = std::filesystem;
using namespace polarsim;

namespace {

void write_file(const fs::path& dir, const std::string& name, const std::string& text) {
    fs::create_directories(dir);
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    out << text;
    std::cerr << "wrote " << (dir / name).string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polarsim: empathy/repulsion opinion dynamics on Hawkes-driven post streams"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::string config_path;
    std::string out_dir = ".";
    app.add_option("--seed", seed, "master seed")->capture_default_str();
    app.add_option("--config", config_path, "config file (key = value lines)");
    app.add_option("--out", out_dir, "output directory")->capture_default_str();

    // shared overrides
    double p = 0.5, k = 2.0;
    int iterations = 100;
    double eta = 0.0, backfire_gain = 1.0;

    auto* cmd_graph = app.add_subcommand("graph", "emit the BA graph as an edge list");
    auto* cmd_events = app.add_subcommand("events", "emit the generated post stream as CSV");
    auto* cmd_sim = app.add_subcommand("simulate", "run one replay and write trajectory.csv");
    auto* cmd_sweep = app.add_subcommand("sweep", "run the (p,k) grid sweep");
    auto* cmd_compare =
        app.add_subcommand("compare", "contrast baseline vs proposed from a same-sign start");

    cmd_sim->add_option("--p", p, "empathy probability")->capture_default_str();
    cmd_sim->add_option("--k", k, "decay constant")->capture_default_str();
    cmd_compare->add_option("--p", p, "empathy probability for the proposed model")
        ->default_val(0.1);
    cmd_compare->add_option("--k", k, "decay constant for the proposed model")->default_val(2.0);
    cmd_compare->add_option("--iterations", iterations, "baseline iterations")
        ->capture_default_str();
    cmd_compare->add_option("--eta", eta, "baseline step size (0 = 0.1/max_degree)");
    cmd_compare->add_option("--backfire-gain", backfire_gain, "baseline backfire gain")
        ->capture_default_str();

    // config-field overrides available to every subcommand
    ExperimentConfig defaults;
    int n_nodes = defaults.n_nodes, ba_m = defaults.ba_m;
    double window = defaults.window_length, c = defaults.c, theta = defaults.theta;
    int classes = defaults.n_classes, runs = defaults.runs_per_cell, threads = 0;
    for (auto* cmd : {cmd_graph, cmd_events, cmd_sim, cmd_sweep, cmd_compare}) {
        cmd->fallthrough();  // lets --seed/--config/--out follow the subcommand
        cmd->add_option("--nodes", n_nodes, "number of users")->capture_default_str();
        cmd->add_option("--m", ba_m, "BA attachment parameter")->capture_default_str();
    }
    for (auto* cmd : {cmd_events, cmd_sim, cmd_sweep, cmd_compare})
        cmd->add_option("--window", window, "observation window length")->capture_default_str();
    for (auto* cmd : {cmd_sim, cmd_sweep, cmd_compare}) {
        cmd->add_option("--c", c, "step scale")->capture_default_str();
        cmd->add_option("--classes", classes, "histogram classes")->capture_default_str();
        cmd->add_option("--theta", theta, "polarization sensitivity")->capture_default_str();
    }
    cmd_sweep->add_option("--runs", runs, "runs per grid cell")->capture_default_str();
    cmd_sweep->add_option("--threads", threads, "worker threads (0 = auto)");

    CLI11_PARSE(app, argc, argv);

    try {
        ExperimentConfig cfg;
        if (!config_path.empty()) cfg = load_config_file(config_path);
        // CLI flags override file values
        if (!app.get_option("--seed")->empty()) cfg.seed = seed;
        else seed = cfg.seed;
        auto applied = [&](const CLI::App* cmd, const std::string& name) {
            return cmd->count(name) > 0;
        };
        const CLI::App* sub = app.get_subcommands().front();
        if (applied(sub, "--nodes")) cfg.n_nodes = n_nodes;
        if (applied(sub, "--m")) cfg.ba_m = ba_m;
        if (sub->get_option_no_throw("--window") && applied(sub, "--window"))
            cfg.window_length = window;
        if (sub->get_option_no_throw("--c") && applied(sub, "--c")) cfg.c = c;
        if (sub->get_option_no_throw("--classes") && applied(sub, "--classes"))
            cfg.n_classes = classes;
        if (sub->get_option_no_throw("--theta") && applied(sub, "--theta")) cfg.theta = theta;
        if (applied(cmd_sweep, "--runs")) cfg.runs_per_cell = runs;
        if (applied(cmd_sweep, "--threads")) cfg.threads = threads;

        if (cmd_graph->parsed()) {
            auto rng = substream(cfg.seed, {stream_tag::graph});
            SocialGraph g = generate_ba(cfg.n_nodes, cfg.ba_m, rng);
            std::cout << g.to_edge_list_text();
        } else if (cmd_events->parsed()) {
            auto g_rng = substream(cfg.seed, {stream_tag::graph});
            SocialGraph g = generate_ba(cfg.n_nodes, cfg.ba_m, g_rng);
            auto h_rng = substream(cfg.seed, {stream_tag::hawkes_params});
            HawkesParams hp = sample_params(g, h_rng);
            auto e_rng = substream(cfg.seed, {stream_tag::events});
            EventSequence seq = generate_events(hp, g, cfg.window_length, e_rng);
            std::cout << events_csv(seq);
        } else if (cmd_sim->parsed()) {
            auto g_rng = substream(cfg.seed, {stream_tag::graph});
            SocialGraph g = generate_ba(cfg.n_nodes, cfg.ba_m, g_rng);
            auto h_rng = substream(cfg.seed, {stream_tag::hawkes_params});
            HawkesParams hp = sample_params(g, h_rng);
            auto e_rng = substream(cfg.seed, {stream_tag::events});
            EventSequence seq = generate_events(hp, g, cfg.window_length, e_rng);

            auto init_rng = substream(cfg.seed, {stream_tag::initial_opinions});
            std::uniform_real_distribution<double> unif(-1.0, 1.0);
            OpinionState init;
            init.o.resize(static_cast<std::size_t>(cfg.n_nodes));
            for (auto& o : init.o) o = unif(init_rng);

            DynamicsParams dyn{p, k, cfg.c, {}};
            auto r_rng = substream(cfg.seed, {stream_tag::replay});
            Trajectory traj = run_replay(g, seq, std::move(init), dyn, r_rng);
            write_file(out_dir, "trajectory.csv", trajectory_csv(traj));

            OpinionState fin{traj.snapshots.back()};
            const double idx = er_index(bin_opinions(fin, cfg.n_classes), {cfg.theta});
            std::printf("final ER index: %.6f\n", idx);
        } else if (cmd_sweep->parsed()) {
            SweepResult res = run_sweep(cfg);
            write_file(out_dir, "sweep.csv", sweep_csv(res));
            write_file(out_dir, "sweep.json", sweep_json(res).dump(2) + "\n");
        } else if (cmd_compare->parsed()) {
            BaselineParams bp{eta, backfire_gain, iterations};
            CompareResult res = run_compare(cfg, p, k, bp);
            write_file(out_dir, "baseline_trajectory.csv", baseline_csv(res.baseline_states));
            write_file(out_dir, "proposed_trajectory.csv", trajectory_csv(res.proposed));
            write_file(out_dir, "compare.json", compare_json(res, p, k).dump(2) + "\n");
            std::printf("baseline final index: %.6f (%s)\n", res.baseline_index,
                        res.baseline_label.c_str());
            std::printf("proposed final index: %.6f (%s)\n", res.proposed_index,
                        res.proposed_label.c_str());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
