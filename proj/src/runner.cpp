#include "polarsim/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "polarsim/rng.hpp"

namespace polarsim {

namespace {

constexpr std::uint64_t kCompareCell = 0x636d70ULL;

double spread(const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo;
}

}  // namespace

std::vector<double> ExperimentConfig::default_p_grid() {
    std::vector<double> g;
    for (int i = 0; i <= 10; ++i) g.push_back(i / 10.0);
    return g;
}

std::vector<double> ExperimentConfig::default_k_grid() {
    std::vector<double> g;
    for (int i = 1; i <= 10; ++i) g.push_back(static_cast<double>(i));
    return g;
}

void ExperimentConfig::validate() const {
    if (p_grid.empty() || k_grid.empty()) throw std::invalid_argument("empty parameter grid");
    if (runs_per_cell < 1) throw std::invalid_argument("runs_per_cell must be >= 1");
    if (n_nodes <= ba_m) throw std::invalid_argument("n_nodes must exceed ba_m");
    for (double k : k_grid)
        if (!(c * k <= 1.0))
            throw std::invalid_argument("c*k must be <= 1 for every k in the grid");
    for (double p : p_grid)
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p out of [0,1]");
}

std::string classify_region(double mean_index, double mean_spread, double mean_change,
                            const RegionThresholds& t) {
    if (mean_index < t.consensus_index && mean_spread < t.consensus_spread) return "consensus";
    if (mean_index > t.polarized_index) return "polarized";
    if (mean_change < t.frozen_change) return "frozen";
    return "mixed";
}

CellResult run_cell(const ExperimentConfig& config, int p_index, int k_index) {
    config.validate();
    const auto pi = static_cast<std::uint64_t>(p_index);
    const auto ki = static_cast<std::uint64_t>(k_index);

    CellResult cell;
    cell.p_index = p_index;
    cell.k_index = k_index;
    cell.p = config.p_grid.at(static_cast<std::size_t>(p_index));
    cell.k = config.k_grid.at(static_cast<std::size_t>(k_index));

    SocialGraph graph;
    HawkesParams hparams;
    EventSequence events;
    if (config.resample == ResampleMode::opinions_only) {
        auto g_rng = substream(config.seed, {pi, ki, stream_tag::graph});
        graph = generate_ba(config.n_nodes, config.ba_m, g_rng);
        auto h_rng = substream(config.seed, {pi, ki, stream_tag::hawkes_params});
        hparams = sample_params(graph, h_rng);
        auto e_rng = substream(config.seed, {pi, ki, stream_tag::events});
        events = generate_events(hparams, graph, config.window_length, e_rng);
    }

    DynamicsParams dyn;
    dyn.p = cell.p;
    dyn.k = cell.k;
    dyn.c = config.c;

    for (int run = 0; run < config.runs_per_cell; ++run) {
        const auto ri = static_cast<std::uint64_t>(run);
        if (config.resample == ResampleMode::full) {
            auto g_rng = substream(config.seed, {pi, ki, ri, stream_tag::graph});
            graph = generate_ba(config.n_nodes, config.ba_m, g_rng);
            auto h_rng = substream(config.seed, {pi, ki, ri, stream_tag::hawkes_params});
            hparams = sample_params(graph, h_rng);
            auto e_rng = substream(config.seed, {pi, ki, ri, stream_tag::events});
            events = generate_events(hparams, graph, config.window_length, e_rng);
        }

        auto init_rng = substream(config.seed, {pi, ki, ri, stream_tag::initial_opinions});
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        OpinionState initial;
        initial.o.resize(static_cast<std::size_t>(config.n_nodes));
        for (auto& o : initial.o) o = unif(init_rng);
        const std::vector<double> initial_copy = initial.o;

        auto replay_rng = substream(config.seed, {pi, ki, ri, stream_tag::replay});
        Trajectory traj = run_replay(graph, events, std::move(initial), dyn, replay_rng);

        const std::vector<double>& final_o = traj.snapshots.back();
        OpinionState final_state{final_o};
        const double index =
            er_index(bin_opinions(final_state, config.n_classes), {config.theta});
        double change = 0;
        for (std::size_t i = 0; i < final_o.size(); ++i)
            change += std::fabs(final_o[i] - initial_copy[i]);
        change /= static_cast<double>(final_o.size());
        cell.runs.push_back({index, spread(final_o), change});
    }

    double mean = 0, mean_spread = 0, mean_change = 0;
    for (const auto& r : cell.runs) {
        mean += r.index;
        mean_spread += r.final_spread;
        mean_change += r.mean_abs_change;
    }
    const double n_runs = static_cast<double>(cell.runs.size());
    mean /= n_runs;
    mean_spread /= n_runs;
    mean_change /= n_runs;
    double var = 0;
    for (const auto& r : cell.runs) var += (r.index - mean) * (r.index - mean);
    cell.mean_index = mean;
    cell.std_index = std::sqrt(var / n_runs);
    cell.region = classify_region(mean, mean_spread, mean_change, config.regions);
    return cell;
}

SweepResult run_sweep(const ExperimentConfig& config) {
    config.validate();
    const int np = static_cast<int>(config.p_grid.size());
    const int nk = static_cast<int>(config.k_grid.size());
    const int n_cells = np * nk;

    SweepResult result;
    result.config = config;
    result.cells.resize(static_cast<std::size_t>(n_cells));

    int n_threads = config.threads > 0
                        ? config.threads
                        : static_cast<int>(std::thread::hardware_concurrency());
    n_threads = std::clamp(n_threads, 1, n_cells);

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int idx = next.fetch_add(1);
            if (idx >= n_cells) return;
            const int p_index = idx / nk;
            const int k_index = idx % nk;
            result.cells[static_cast<std::size_t>(idx)] = run_cell(config, p_index, k_index);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return result;
}

CompareResult run_compare(const ExperimentConfig& config, double p, double k,
                          const BaselineParams& baseline_params) {
    CompareResult res;
    auto g_rng = substream(config.seed, {kCompareCell, stream_tag::graph});
    res.graph = generate_ba(config.n_nodes, config.ba_m, g_rng);
    auto h_rng = substream(config.seed, {kCompareCell, stream_tag::hawkes_params});
    HawkesParams hparams = sample_params(res.graph, h_rng);
    auto e_rng = substream(config.seed, {kCompareCell, stream_tag::events});
    res.events = generate_events(hparams, res.graph, config.window_length, e_rng);

    // shared all-positive initial state
    auto init_rng = substream(config.seed, {kCompareCell, stream_tag::initial_opinions});
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    res.initial.resize(static_cast<std::size_t>(config.n_nodes));
    for (auto& o : res.initial) o = unif(init_rng);

    BaselineParams bp = baseline_params;
    if (!(bp.eta > 0)) bp.eta = default_eta(res.graph);
    res.baseline_params = bp;
    res.baseline_states = run_baseline(res.graph, BaselineState{res.initial}, bp);

    DynamicsParams dyn;
    dyn.p = p;
    dyn.k = k;
    dyn.c = config.c;
    auto replay_rng = substream(config.seed, {kCompareCell, stream_tag::replay});
    res.proposed = run_replay(res.graph, res.events, OpinionState{res.initial}, dyn, replay_rng);

    const PolarizationConfig pc{config.theta};
    const auto& by = res.baseline_states.back().y;
    const auto& po = res.proposed.snapshots.back();
    res.baseline_index = er_index(bin_opinions(OpinionState{by}, config.n_classes), pc);
    res.proposed_index = er_index(bin_opinions(OpinionState{po}, config.n_classes), pc);

    auto label = [&](const std::vector<double>& fin) {
        double change = 0;
        for (std::size_t i = 0; i < fin.size(); ++i)
            change += std::fabs(fin[i] - res.initial[i]);
        change /= static_cast<double>(fin.size());
        const double idx = er_index(bin_opinions(OpinionState{fin}, config.n_classes), pc);
        return classify_region(idx, spread(fin), change, config.regions);
    };
    res.baseline_label = label(by);
    res.proposed_label = label(po);
    return res;
}

namespace {

std::vector<double> parse_grid(const std::string& value) {
    std::vector<double> grid;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        grid.push_back(std::stod(item));
    }
    return grid;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "n_nodes") base.n_nodes = std::stoi(value);
        else if (key == "ba_m") base.ba_m = std::stoi(value);
        else if (key == "window_length") base.window_length = std::stod(value);
        else if (key == "p_grid") base.p_grid = parse_grid(value);
        else if (key == "k_grid") base.k_grid = parse_grid(value);
        else if (key == "c") base.c = std::stod(value);
        else if (key == "runs_per_cell") base.runs_per_cell = std::stoi(value);
        else if (key == "n_classes") base.n_classes = std::stoi(value);
        else if (key == "theta") base.theta = std::stod(value);
        else if (key == "seed") base.seed = std::stoull(value);
        else if (key == "threads") base.threads = std::stoi(value);
        else if (key == "resample") {
            if (value == "opinions") base.resample = ResampleMode::opinions_only;
            else if (value == "full") base.resample = ResampleMode::full;
            else throw std::runtime_error("resample must be 'opinions' or 'full'");
        }
        else if (key == "consensus_index") base.regions.consensus_index = std::stod(value);
        else if (key == "consensus_spread") base.regions.consensus_spread = std::stod(value);
        else if (key == "polarized_index") base.regions.polarized_index = std::stod(value);
        else if (key == "frozen_change") base.regions.frozen_change = std::stod(value);
        else throw std::runtime_error("unknown config key: " + key);
    }
    return base;
}

}  // namespace polarsim
