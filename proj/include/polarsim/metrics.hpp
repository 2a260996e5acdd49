#pragma once

#include <vector>

#include "polarsim/dynamics.hpp"

namespace polarsim {

// Opinion distribution over n_classes equal-width bins of [-1,1].
// class_values are the bin midpoints y_i = -1 + (2i-1)/n, i = 1..n.
struct OpinionHistogram {
    int n_classes = 0;
    std::vector<long> counts;
    std::vector<double> class_values;

    long total() const;
};

struct PolarizationConfig {
    double theta = 0.5;  // polarization sensitivity, in (0, ~1.6)
};

// Bins are half-open [lo, hi) except the top bin, which includes +1.
OpinionHistogram bin_opinions(const OpinionState& state, int n_classes);

// Esteban-Ray index K * sum_ij pi_i^(1+theta) pi_j |y_i - y_j| with
// K = (sum pi)^-(2+theta). Zero iff all mass sits in one class.
double er_index(const OpinionHistogram& hist, const PolarizationConfig& config);

}  // namespace polarsim
