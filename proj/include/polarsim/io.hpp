#pragma once

#include <string>

#include <json.hpp>

#include "polarsim/runner.hpp"

namespace polarsim {

// CSV text, header "time,author", times with 9 decimal digits.
std::string events_csv(const EventSequence& seq);

// CSV text, header "time,user,opinion", one row per (snapshot, user);
// the initial rows carry the window start time. 6 decimal digits.
std::string trajectory_csv(const Trajectory& traj);

// Same layout for the iteration-indexed baseline ("time" = iteration).
std::string baseline_csv(const std::vector<BaselineState>& states);

// CSV text, header "p,k,mean_index,std_index,region", ascending p then k.
std::string sweep_csv(const SweepResult& result);

// Full per-run detail plus a config echo and the master seed.
nlohmann::json sweep_json(const SweepResult& result);

nlohmann::json compare_json(const CompareResult& result, double p, double k);

}  // namespace polarsim
