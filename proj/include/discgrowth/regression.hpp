#ifndef DISCGROWTH_REGRESSION_HPP
#define DISCGROWTH_REGRESSION_HPP

#include <cmath>
#include <cstddef>
#include <span>

#include "discgrowth/errors.hpp"
#include "discgrowth/summation.hpp"

namespace discgrowth {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;
    std::size_t n = 0;
};

// Ordinary least squares y = slope*x + intercept with the largest absolute
// residual reported (never hidden).
inline LinearFit linear_fit(std::span<const double> x, std::span<const double> y,
                            std::size_t min_points = 2) {
    const std::size_t n = x.size();
    if (n != y.size()) throw FitError("linear_fit: x/y length mismatch");
    if (n < min_points || n < 2) throw FitError("linear_fit: too few samples");

    CompensatedSum sx, sy, sxx, sxy;
    for (std::size_t i = 0; i < n; ++i) {
        sx.add(x[i]);
        sy.add(y[i]);
        sxx.add(x[i] * x[i]);
        sxy.add(x[i] * y[i]);
    }
    const double nn = static_cast<double>(n);
    const double det = nn * sxx.value() - sx.value() * sx.value();
    if (det == 0.0 || !std::isfinite(det)) throw FitError("linear_fit: degenerate abscissae");

    LinearFit fit;
    fit.n = n;
    fit.slope = (nn * sxy.value() - sx.value() * sy.value()) / det;
    fit.intercept = (sy.value() - fit.slope * sx.value()) / nn;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = std::fabs(y[i] - (fit.slope * x[i] + fit.intercept));
        if (r > fit.max_residual) fit.max_residual = r;
    }
    return fit;
}

} // namespace discgrowth

#endif
