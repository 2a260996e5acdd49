#include "polarsim/io.hpp"

#include <cstdio>
#include <sstream>

namespace polarsim {

namespace {

std::string fmt(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

}  // namespace

std::string events_csv(const EventSequence& seq) {
    std::ostringstream out;
    out << "time,author\n";
    for (const auto& ev : seq.events)
        out << fmt(ev.time, 9) << ',' << ev.author << '\n';
    return out.str();
}

std::string trajectory_csv(const Trajectory& traj) {
    std::ostringstream out;
    out << "time,user,opinion\n";
    for (std::size_t s = 0; s < traj.snapshots.size(); ++s)
        for (std::size_t u = 0; u < traj.snapshots[s].size(); ++u)
            out << fmt(traj.times[s], 6) << ',' << u << ','
                << fmt(traj.snapshots[s][u], 6) << '\n';
    return out.str();
}

std::string baseline_csv(const std::vector<BaselineState>& states) {
    std::ostringstream out;
    out << "time,user,opinion\n";
    for (std::size_t s = 0; s < states.size(); ++s)
        for (std::size_t u = 0; u < states[s].y.size(); ++u)
            out << s << ',' << u << ',' << fmt(states[s].y[u], 6) << '\n';
    return out.str();
}

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "p,k,mean_index,std_index,region\n";
    for (const auto& cell : result.cells)
        out << fmt(cell.p, 6) << ',' << fmt(cell.k, 6) << ','
            << fmt(cell.mean_index, 6) << ',' << fmt(cell.std_index, 6) << ','
            << cell.region << '\n';
    return out.str();
}

nlohmann::json sweep_json(const SweepResult& result) {
    const auto& cfg = result.config;
    nlohmann::json j;
    j["config"] = {
        {"n_nodes", cfg.n_nodes},
        {"ba_m", cfg.ba_m},
        {"window_length", cfg.window_length},
        {"p_grid", cfg.p_grid},
        {"k_grid", cfg.k_grid},
        {"c", cfg.c},
        {"runs_per_cell", cfg.runs_per_cell},
        {"n_classes", cfg.n_classes},
        {"theta", cfg.theta},
        {"seed", cfg.seed},
        {"resample", cfg.resample == ResampleMode::opinions_only ? "opinions" : "full"},
        {"regions",
         {{"consensus_index", cfg.regions.consensus_index},
          {"consensus_spread", cfg.regions.consensus_spread},
          {"polarized_index", cfg.regions.polarized_index},
          {"frozen_change", cfg.regions.frozen_change}}},
    };
    j["cells"] = nlohmann::json::array();
    for (const auto& cell : result.cells) {
        nlohmann::json runs = nlohmann::json::array();
        for (const auto& r : cell.runs)
            runs.push_back({{"index", r.index},
                            {"final_spread", r.final_spread},
                            {"mean_abs_change", r.mean_abs_change}});
        j["cells"].push_back({{"p", cell.p},
                              {"k", cell.k},
                              {"mean_index", cell.mean_index},
                              {"std_index", cell.std_index},
                              {"region", cell.region},
                              {"runs", std::move(runs)}});
    }
    return j;
}

nlohmann::json compare_json(const CompareResult& result, double p, double k) {
    const BaselineParams& baseline_params = result.baseline_params;
    nlohmann::json j;
    j["proposed"] = {{"p", p},
                     {"k", k},
                     {"final_index", result.proposed_index},
                     {"label", result.proposed_label}};
    j["baseline"] = {{"model", "sign-conditioned baseline"},
                     {"eta", baseline_params.eta},
                     {"backfire_gain", baseline_params.backfire_gain},
                     {"iterations", baseline_params.iterations},
                     {"final_index", result.baseline_index},
                     {"label", result.baseline_label}};
    j["initial_opinions"] = result.initial;
    j["n_events"] = result.events.events.size();
    return j;
}

}  // namespace polarsim
