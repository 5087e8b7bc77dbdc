#ifndef DISCGROWTH_CONVERGENCE_HPP
#define DISCGROWTH_CONVERGENCE_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "discgrowth/errors.hpp"
#include "discgrowth/summation.hpp"
#include "discgrowth/zero_sequence.hpp"

namespace discgrowth {

// Numerical bracket for the exponent of convergence
// mu[Z] = inf{mu >= 0: sum (1-|z_n|)^{mu+1} < inf}.
struct ConvergenceExponent {
    double estimate = 0.0;  // interpolated mu where the dyadic block ratio crosses 1
    double lower = 0.0;     // bracket: declared divergent at and below
    double upper = 0.0;     // bracket: declared convergent here (ratio < threshold)
    struct Sample {
        double mu = 0.0;
        double ratio = 0.0;  // (S_4N - S_2N) / (S_2N - S_N)
    };
    std::vector<Sample> samples;
};

// Ratio test on tail increments: the realization is extended to 2N and 4N
// points, and for each grid mu the ratio of consecutive dyadic block sums of
// (1-|z_k|)^{mu+1} is measured.  A ratio below 0.95 declares convergence
// (the bracket edge); the point estimate interpolates the ratio-1 crossing,
// which is where the blocks stop growing.  Inf-type quantities are only
// bracketable numerically, so both are reported.
inline ConvergenceExponent convergence_exponent(const ZeroSequence& z,
                                                const std::vector<double>& mu_grid) {
    constexpr double divergence_threshold = 0.95;
    if (z.complete())
        throw DomainError(
            "convergence_exponent: explicit finite list has no generator; "
            "finite sums always converge, estimate refused");
    if (mu_grid.size() < 2) throw FitError("convergence_exponent: need at least 2 grid values");
    for (std::size_t i = 0; i < mu_grid.size(); ++i) {
        if (!(mu_grid[i] >= 0.0)) throw DomainError("convergence_exponent: mu must be >= 0");
        if (i > 0 && !(mu_grid[i] > mu_grid[i - 1]))
            throw DomainError("convergence_exponent: mu grid must be ascending");
    }

    const std::size_t n = z.size();
    const ZeroSequence z4 = extend_sequence(z, 4 * n);
    const auto& mod = z4.moduli();
    const std::size_t n2 = std::min<std::size_t>(2 * n, mod.size());
    const std::size_t n4 = mod.size();

    ConvergenceExponent out;
    out.samples.reserve(mu_grid.size());
    for (double mu : mu_grid) {
        CompensatedSum block1, block2;
        for (std::size_t k = n; k < n2; ++k) block1.add(std::pow(1.0 - mod[k], mu + 1.0));
        for (std::size_t k = n2; k < n4; ++k) block2.add(std::pow(1.0 - mod[k], mu + 1.0));
        const double b1 = block1.value();
        const double ratio = b1 > 0.0 ? block2.value() / b1 : 0.0;
        out.samples.push_back({mu, ratio});
    }

    std::size_t first_conv = out.samples.size();
    for (std::size_t i = 0; i < out.samples.size(); ++i) {
        if (out.samples[i].ratio < divergence_threshold) {
            first_conv = i;
            break;
        }
    }
    if (first_conv == out.samples.size())
        throw FitError("convergence_exponent: no grid mu passed the convergence test; extend the grid");

    if (first_conv == 0) {
        out.lower = mu_grid.front();
        out.upper = mu_grid.size() > 1 ? mu_grid[1] : mu_grid.front();
    } else {
        out.lower = mu_grid[first_conv - 1];
        out.upper = mu_grid[first_conv];
    }

    // ratio-1 crossing by log-linear interpolation (ratios are monotone in
    // mu because the deeper block's gaps are no larger).
    double est = mu_grid.front();
    if (out.samples.front().ratio >= 1.0) {
        est = mu_grid.back();
        for (std::size_t i = 0; i + 1 < out.samples.size(); ++i) {
            const double ra = out.samples[i].ratio, rb = out.samples[i + 1].ratio;
            if (ra >= 1.0 && rb < 1.0) {
                const double la = std::log(ra), lb = std::log(rb);
                est = mu_grid[i] + (mu_grid[i + 1] - mu_grid[i]) * la / (la - lb);
                break;
            }
        }
    }
    out.estimate = std::min(std::max(est, mu_grid.front()), mu_grid.back());
    return out;
}

} // namespace discgrowth

#endif
