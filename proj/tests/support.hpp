#pragma once

// Test-only statistics helpers.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace awggn::testing {

/// Kolmogorov–Smirnov statistic sup |F_n − F| of a sample against a CDF.
inline double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    return d;
}

/// Asymptotic 1% critical value of the one-sample KS statistic.
inline double ks_critical_1pct(std::size_t n) { return 1.6276 / std::sqrt(static_cast<double>(n)); }

struct Moments {
    double mean;
    double std_error;
};

inline Moments mean_with_error(const std::vector<double>& xs) {
    const double n = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= n;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

inline double relative_error(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace awggn::testing
