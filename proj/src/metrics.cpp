#include "polarsim/metrics.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace polarsim {

long OpinionHistogram::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0L);
}

OpinionHistogram bin_opinions(const OpinionState& state, int n_classes) {
    if (n_classes < 2) throw std::invalid_argument("n_classes must be >= 2");

    OpinionHistogram hist;
    hist.n_classes = n_classes;
    hist.counts.assign(static_cast<std::size_t>(n_classes), 0L);
    hist.class_values.resize(static_cast<std::size_t>(n_classes));
    for (int i = 1; i <= n_classes; ++i)
        hist.class_values[static_cast<std::size_t>(i - 1)] =
            -1.0 + static_cast<double>(2 * i - 1) / n_classes;

    for (double o : state.o) {
        if (!(o >= -1.0 && o <= 1.0)) throw std::invalid_argument("opinion out of [-1,1]");
        int idx = static_cast<int>(std::floor((o + 1.0) / 2.0 * n_classes));
        if (idx >= n_classes) idx = n_classes - 1;  // o = +1 belongs to the top bin
        if (idx < 0) idx = 0;
        hist.counts[static_cast<std::size_t>(idx)]++;
    }
    return hist;
}

double er_index(const OpinionHistogram& hist, const PolarizationConfig& config) {
    const long total = hist.total();
    if (total <= 0) throw std::invalid_argument("empty histogram");

    const double k_norm = std::pow(static_cast<double>(total), -(2.0 + config.theta));
    double sum = 0.0;
    const std::size_t n = hist.counts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double pi = static_cast<double>(hist.counts[i]);
        if (pi == 0.0) continue;
        const double pi_pow = std::pow(pi, 1.0 + config.theta);
        for (std::size_t j = 0; j < n; ++j) {
            const double pj = static_cast<double>(hist.counts[j]);
            if (pj == 0.0) continue;
            sum += pi_pow * pj * std::fabs(hist.class_values[i] - hist.class_values[j]);
        }
    }
    return k_norm * sum;
}

}  // namespace polarsim
