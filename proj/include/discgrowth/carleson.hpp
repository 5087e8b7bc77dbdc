#ifndef DISCGROWTH_CARLESON_HPP
#define DISCGROWTH_CARLESON_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <vector>

#include "discgrowth/errors.hpp"
#include "discgrowth/point.hpp"
#include "discgrowth/regression.hpp"
#include "discgrowth/summation.hpp"
#include "discgrowth/zero_sequence.hpp"

namespace discgrowth {

// Carleson square S(phi, delta) = {rho e^{i theta}: rho >= 1-delta,
// -pi delta < theta - phi <= pi delta}.  The half-open angular condition is
// kept verbatim so the square mass is right-continuous in phi.
class CarlesonSquare {
public:
    CarlesonSquare(double phi, double delta) : phi_(normalize_angle(phi)), delta_(delta) {
        if (!(delta > 0.0 && delta <= 1.0))
            throw DomainError("CarlesonSquare: delta must lie in (0,1]");
    }

    double phi() const { return phi_; }
    double delta() const { return delta_; }

    bool contains(const DiscPoint& p) const {
        if (p.modulus() < 1.0 - delta_) return false;
        const double d = reduce_angle(p.angle() - phi_);
        const double w = std::numbers::pi * delta_;
        return d > -w && d <= w;
    }

private:
    double phi_;
    double delta_;
};

// sum over Z cap S(phi,delta) of (1-|z_k|)^{s+1}, compensated, in canonical
// storage order.
inline double carleson_sum(const ZeroSequence& z, const CarlesonSquare& square, int s) {
    if (s < 0) throw DomainError("carleson_sum: genus must be nonnegative");
    CompensatedSum acc;
    for (const DiscPoint& p : z.points())
        if (square.contains(p))
            acc.add(std::pow(1.0 - p.modulus(), static_cast<double>(s) + 1.0));
    return acc.value();
}

namespace detail {

// Exact sup over phi of the square mass at fixed delta.  The mass as a
// function of phi is piecewise constant and right-continuous, jumping only
// when an edge crosses a zero's angle, so it attains its maximum at some
// phi = theta_k - pi*delta.  Extra phi candidates may be supplied.
struct SupSquareResult {
    double sum = 0.0;
    double phi = 0.0;
};

inline SupSquareResult sup_square_mass(const ZeroSequence& z, double delta, double mass_exponent,
                                       const std::vector<double>& extra_phis = {}) {
    struct Entry {
        double angle, mass;
    };
    std::vector<Entry> in;
    const double cutoff = 1.0 - delta;
    for (const DiscPoint& p : z.points()) {
        const double rho = p.modulus();
        if (rho >= cutoff) in.push_back({p.angle(), std::pow(1.0 - rho, mass_exponent)});
    }
    SupSquareResult res;
    if (in.empty()) return res;

    std::sort(in.begin(), in.end(), [](const Entry& a, const Entry& b) {
        return a.angle < b.angle;
    });
    const std::size_t m = in.size();
    const double width = std::numbers::pi * delta;

    if (2.0 * width >= two_pi) {
        CompensatedSum total;
        for (const Entry& e : in) total.add(e.mass);
        res.sum = total.value();
        res.phi = 0.0;
        return res;
    }

    // Doubled angle/prefix arrays for circular windows.
    std::vector<double> ang(2 * m), prefix(2 * m + 1, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        ang[i] = in[i].angle;
        ang[i + m] = in[i].angle + two_pi;
    }
    for (std::size_t i = 0; i < 2 * m; ++i) prefix[i + 1] = prefix[i] + in[i % m].mass;

    auto window_sum = [&](double lo, double hi, double& phi_out, double phi_val) {
        // zeros with angle in (lo, hi]
        const auto lo_it = std::upper_bound(ang.begin(), ang.end(), lo);
        const auto hi_it = std::upper_bound(ang.begin(), ang.end(), hi);
        const std::size_t L = static_cast<std::size_t>(lo_it - ang.begin());
        const std::size_t H = static_cast<std::size_t>(hi_it - ang.begin());
        const double s = prefix[H] - prefix[L];
        if (s > res.sum) {
            res.sum = s;
            phi_out = phi_val;
        }
    };

    for (std::size_t k = m; k < 2 * m; ++k) {
        // window with zero k at the closed right edge: phi = theta_k - width
        const double hi = ang[k];
        window_sum(hi - 2.0 * width, hi, res.phi, normalize_angle(hi - width));
    }
    for (double phi : extra_phis) {
        const double c = normalize_angle(phi) + two_pi;
        window_sum(c - width, c + width, res.phi, normalize_angle(phi));
    }
    return res;
}

} // namespace detail

struct CarlesonSample {
    double delta = 0.0;
    double phi = 0.0;  // angle attaining the sup
    double sum = 0.0;
    bool in_fit_window = false;
};

// Empirical fit of the Carleson condition sum <= C1 * delta^gamma.
struct CarlesonReport {
    int s = 0;
    double gamma_fit = 0.0;
    double C1_fit = 0.0;
    double max_residual = 0.0;
    std::vector<CarlesonSample> samples;
    // Fit window: deltas below 1-|z_last| are recorded but excluded, since
    // there the finite realization stops being a faithful sample of Z.
    double fit_delta_min = 0.0;
    std::size_t clipped = 0;
    // Optional verdict against a target exponent.
    std::optional<double> target_gamma;
    std::optional<double> target_C1;
    std::optional<bool> holds;
};

inline CarlesonReport carleson_exponent(const ZeroSequence& z, int s,
                                        const std::vector<double>& delta_grid,
                                        std::size_t phi_resolution,
                                        std::optional<double> target_gamma = std::nullopt) {
    if (s < 0) throw DomainError("carleson_exponent: genus must be nonnegative");
    if (delta_grid.size() < 3) throw FitError("carleson_exponent: need at least 3 grid deltas");
    for (std::size_t i = 0; i < delta_grid.size(); ++i) {
        if (!(delta_grid[i] > 0.0 && delta_grid[i] <= 1.0))
            throw DomainError("carleson_exponent: deltas must lie in (0,1]");
        if (i > 0 && !(delta_grid[i] < delta_grid[i - 1]))
            throw DomainError("carleson_exponent: delta grid must be descending");
    }
    if (phi_resolution < z.size())
        throw DomainError("carleson_exponent: phi_resolution must be >= number of zeros");

    std::vector<double> grid_phis(phi_resolution);
    for (std::size_t i = 0; i < phi_resolution; ++i)
        grid_phis[i] = two_pi * static_cast<double>(i) / static_cast<double>(phi_resolution);

    CarlesonReport rep;
    rep.s = s;
    rep.fit_delta_min = z.empty() ? 0.0 : 1.0 - z.max_modulus();
    const double exponent = static_cast<double>(s) + 1.0;

    std::vector<double> xs, ys;
    for (double d : delta_grid) {
        auto sup = detail::sup_square_mass(z, d, exponent, grid_phis);
        CarlesonSample sample{d, sup.phi, sup.sum, false};
        if (d >= rep.fit_delta_min && sup.sum > 0.0) {
            sample.in_fit_window = true;
            xs.push_back(std::log(d));
            ys.push_back(std::log(sup.sum));
        } else {
            ++rep.clipped;
        }
        rep.samples.push_back(sample);
    }
    if (xs.size() < 3)
        throw FitError("carleson_exponent: fewer than 3 usable deltas in the fit window");

    const LinearFit fit = linear_fit(xs, ys);
    rep.gamma_fit = fit.slope;
    rep.max_residual = fit.max_residual;
    double c1 = 0.0;
    for (const CarlesonSample& s0 : rep.samples)
        if (s0.in_fit_window) c1 = std::max(c1, s0.sum / std::pow(s0.delta, rep.gamma_fit));
    rep.C1_fit = c1;

    if (target_gamma) {
        rep.target_gamma = *target_gamma;
        double ct = 0.0;
        for (const CarlesonSample& s0 : rep.samples)
            if (s0.in_fit_window) ct = std::max(ct, s0.sum / std::pow(s0.delta, *target_gamma));
        rep.target_C1 = ct;
        bool ok = true;
        for (const CarlesonSample& s0 : rep.samples)
            if (s0.in_fit_window && s0.sum > ct * std::pow(s0.delta, *target_gamma) * (1.0 + 1e-12))
                ok = false;
        rep.holds = ok;
    }
    return rep;
}

// lambda(phi, r) = sum over S(phi, (1-r)/2) of (1-|z_k|); the worst-case
// square mass whose decay exponent is t[B].
inline double lambda_max(const ZeroSequence& z, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("lambda_max: r must lie in [0,1)");
    return detail::sup_square_mass(z, 0.5 * (1.0 - r), 1.0).sum;
}

struct LambdaProfile {
    struct Sample {
        double r = 0.0;
        double max_lambda = 0.0;
        double phi = 0.0;
        bool in_fit_window = false;
    };
    std::vector<Sample> samples;
    double t_estimate = 0.0;     // slope of log(max lambda) against log(1-r)
    double max_residual = 0.0;
    std::size_t clipped = 0;
};

inline LambdaProfile lambda_profile(const ZeroSequence& z, const std::vector<double>& r_grid) {
    if (r_grid.size() < 3) throw FitError("lambda_profile: need at least 3 radii");
    LambdaProfile prof;
    const double gap = z.empty() ? 0.0 : 1.0 - z.max_modulus();
    std::vector<double> xs, ys;
    for (double r : r_grid) {
        if (!(r >= 0.0 && r < 1.0)) throw DomainError("lambda_profile: r must lie in [0,1)");
        auto sup = detail::sup_square_mass(z, 0.5 * (1.0 - r), 1.0);
        LambdaProfile::Sample s{r, sup.sum, sup.phi, false};
        if (0.5 * (1.0 - r) >= gap && sup.sum > 0.0) {
            s.in_fit_window = true;
            xs.push_back(std::log(1.0 - r));
            ys.push_back(std::log(sup.sum));
        } else {
            ++prof.clipped;
        }
        prof.samples.push_back(s);
    }
    if (xs.size() < 3) throw FitError("lambda_profile: fewer than 3 usable radii in the fit window");
    const LinearFit fit = linear_fit(xs, ys);
    prof.t_estimate = fit.slope;
    prof.max_residual = fit.max_residual;
    return prof;
}

} // namespace discgrowth

#endif
