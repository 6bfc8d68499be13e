#include "tw/regression.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <cmath>
#include <stdexcept>

namespace tw {

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points) {
    const size_t n = points.size();
    if (n < 3) throw std::invalid_argument("fit_power_law: need at least 3 points");

    std::vector<double> x, y;
    x.reserve(n);
    y.reserve(n);
    for (auto [px, py] : points) {
        if (!(px > 0.0) || !(py > 0.0))
            throw std::invalid_argument("fit_power_law: points must be positive");
        x.push_back(std::log(px));
        y.push_back(std::log(py));
    }

    double mx = 0, my = 0;
    for (size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_power_law: degenerate x values");

    PowerLawFit fit;
    fit.beta = sxy / sxx;
    fit.log_alpha = my - fit.beta * mx;
    double ss_res = 0;
    for (size_t i = 0; i < n; ++i) {
        double r = y[i] - (fit.log_alpha + fit.beta * x[i]);
        ss_res += r * r;
    }
    fit.r_squared = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;

    if (ss_res <= 0.0) {
        fit.p_value = 0.0;  // exact fit
        return fit;
    }
    double se = std::sqrt(ss_res / static_cast<double>(n - 2) / sxx);
    double t = fit.beta / se;
    boost::math::students_t dist(static_cast<double>(n - 2));
    fit.p_value = 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
    return fit;
}

}  // namespace tw
