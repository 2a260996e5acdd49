#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "polarsim/metrics.hpp"

using namespace polarsim;

namespace {

// Independent reference: literal double sum over the definition.
double er_reference(const std::vector<long>& counts, double theta) {
    const int n = static_cast<int>(counts.size());
    long total = 0;
    for (long c : counts) total += c;
    double sum = 0;
    for (int i = 1; i <= n; ++i) {
        const double yi = -1.0 + static_cast<double>(2 * i - 1) / n;
        for (int j = 1; j <= n; ++j) {
            const double yj = -1.0 + static_cast<double>(2 * j - 1) / n;
            sum += std::pow(static_cast<double>(counts[static_cast<std::size_t>(i - 1)]),
                            1.0 + theta) *
                   static_cast<double>(counts[static_cast<std::size_t>(j - 1)]) *
                   std::fabs(yi - yj);
        }
    }
    return std::pow(static_cast<double>(total), -(2.0 + theta)) * sum;
}

OpinionHistogram hist_from(const std::vector<long>& counts) {
    OpinionHistogram h;
    h.n_classes = static_cast<int>(counts.size());
    h.counts = counts;
    h.class_values.resize(counts.size());
    for (int i = 1; i <= h.n_classes; ++i)
        h.class_values[static_cast<std::size_t>(i - 1)] =
            -1.0 + static_cast<double>(2 * i - 1) / h.n_classes;
    return h;
}

}  // namespace

TEST_CASE("bin boundaries: -1 bottom, +1 top, 0 into class 6 of 10") {
    OpinionState s{{-1.0, 1.0, 0.0}};
    OpinionHistogram h = bin_opinions(s, 10);
    CHECK(h.counts[0] == 1);
    CHECK(h.counts[9] == 1);
    CHECK(h.counts[5] == 1);  // [0, 0.2)
    CHECK(h.total() == 3);
}

TEST_CASE("class values are the strictly increasing midpoints") {
    OpinionHistogram h = bin_opinions(OpinionState{{0.0}}, 10);
    CHECK(h.class_values.front() == doctest::Approx(-0.9));
    CHECK(h.class_values.back() == doctest::Approx(0.9));
    for (std::size_t i = 1; i < h.class_values.size(); ++i)
        CHECK(h.class_values[i] > h.class_values[i - 1]);
}

TEST_CASE("fewer than two classes is rejected") {
    CHECK_THROWS_AS(bin_opinions(OpinionState{{0.0}}, 1), std::invalid_argument);
}

TEST_CASE("single occupied class has zero polarization") {
    std::vector<long> counts(10, 0);
    counts[3] = 10;
    CHECK(er_index(hist_from(counts), {0.5}) == doctest::Approx(0.0));
}

TEST_CASE("five/five extreme split matches the hand-evaluated sum") {
    std::vector<long> counts(10, 0);
    counts[0] = 5;
    counts[9] = 5;
    const double expected = 2.0 * std::pow(10.0, -2.5) * std::pow(5.0, 1.5) * 5.0 * 1.8;
    CHECK(er_index(hist_from(counts), {0.5}) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(er_index(hist_from(counts), {0.5}) ==
          doctest::Approx(er_reference(counts, 0.5)).epsilon(1e-12));
}

TEST_CASE("empty histogram is rejected") {
    std::vector<long> counts(10, 0);
    CHECK_THROWS_AS(er_index(hist_from(counts), {0.5}), std::invalid_argument);
}

TEST_CASE("reflection invariance") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> uc(0, 7);
    for (int it = 0; it < 200; ++it) {
        std::vector<long> counts(10);
        for (auto& c : counts) c = uc(rng);
        long total = 0;
        for (long c : counts) total += c;
        if (total == 0) continue;
        std::vector<long> rev(counts.rbegin(), counts.rend());
        CHECK(er_index(hist_from(counts), {0.5}) ==
              doctest::Approx(er_index(hist_from(rev), {0.5})).epsilon(1e-12));
    }
}

TEST_CASE("zero index iff exactly one occupied class") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> uc(0, 5);
    for (int it = 0; it < 500; ++it) {
        std::vector<long> counts(10);
        for (auto& c : counts) c = uc(rng);
        int occupied = 0;
        long total = 0;
        for (long c : counts) {
            if (c > 0) ++occupied;
            total += c;
        }
        if (total == 0) continue;
        const double p = er_index(hist_from(counts), {0.5});
        if (occupied == 1) CHECK(p == 0.0);
        else CHECK(p > 0.0);
    }
}

TEST_CASE("matches the naive reference on random histograms") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> uc(0, 20);
    std::uniform_int_distribution<int> un(2, 16);
    std::uniform_real_distribution<double> ut(0.05, 1.55);
    int checked = 0;
    while (checked < 1000) {
        std::vector<long> counts(static_cast<std::size_t>(un(rng)));
        for (auto& c : counts) c = uc(rng);
        long total = 0;
        for (long c : counts) total += c;
        if (total == 0) continue;
        const double theta = ut(rng);
        const double mine = er_index(hist_from(counts), {theta});
        const double ref = er_reference(counts, theta);
        REQUIRE(std::fabs(mine - ref) <= 1e-12 * std::max(1.0, std::fabs(ref)));
        ++checked;
    }
}

TEST_CASE("exhaustive maximum over ten users in ten classes is the extreme split") {
    // all compositions of 10 into 10 parts, C(19,9) = 92378 cases
    std::vector<long> counts(10, 0);
    double best = -1;
    std::vector<std::vector<long>> argmax;
    long n_cases = 0;
    auto recurse = [&](auto&& self, std::size_t cls, long remaining) -> void {
        if (cls == 9) {
            counts[9] = remaining;
            ++n_cases;
            const double p = er_index(hist_from(counts), {0.5});
            if (p > best + 1e-12) {
                best = p;
                argmax.assign(1, counts);
            } else if (p > best - 1e-12) {
                argmax.push_back(counts);
            }
            return;
        }
        for (long c = 0; c <= remaining; ++c) {
            counts[cls] = c;
            self(self, cls + 1, remaining - c);
        }
    };
    recurse(recurse, 0, 10);
    CHECK(n_cases == 92378);
    std::vector<long> extreme(10, 0);
    extreme[0] = 5;
    extreme[9] = 5;
    REQUIRE(argmax.size() == 1);
    CHECK(argmax[0] == extreme);
    CHECK(best == doctest::Approx(er_reference(extreme, 0.5)).epsilon(1e-12));
}
