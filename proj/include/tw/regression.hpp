#pragma once

#include <utility>
#include <vector>

namespace tw {

/// Fit of t ~ alpha * n^beta, i.e. OLS on (ln n, ln t). The p-value is a
/// two-sided t-test on the slope with n-2 degrees of freedom.
struct PowerLawFit {
    double log_alpha = 0.0;  // natural log
    double beta = 0.0;
    double r_squared = 0.0;
    double p_value = 1.0;
};

/// Requires at least 3 points with positive coordinates.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points);

}  // namespace tw
