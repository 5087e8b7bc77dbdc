#ifndef DISCGROWTH_COUNTING_HPP
#define DISCGROWTH_COUNTING_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "discgrowth/errors.hpp"
#include "discgrowth/point.hpp"
#include "discgrowth/summation.hpp"
#include "discgrowth/zero_sequence.hpp"

namespace discgrowth {

// n(r, Z): number of zeros with |z_k| <= r.
inline std::size_t counting_n(const ZeroSequence& z, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("counting_n: r must lie in [0,1)");
    z.require_realized(r, "counting_n");
    const auto& mod = z.moduli();
    return static_cast<std::size_t>(std::upper_bound(mod.begin(), mod.end(), r) - mod.begin());
}

// N(r, Z) = int_0^r n(t)/t dt = sum_{|z_k| <= r} ln(r/|z_k|), exact for the
// stored points.  Requires 0 not in Z.
inline double counting_N(const ZeroSequence& z, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("counting_N: r must lie in [0,1)");
    if (!z.origin_excluded())
        throw DomainError("counting_N: sequence contains a zero at the origin");
    z.require_realized(r, "counting_N");
    const auto& mod = z.moduli();
    CompensatedSum s;
    for (double m : mod) {
        if (m > r) break;
        s.add(std::log(r / m));
    }
    return s.value();
}

// Membership in the box {rho e^{i theta}: r <= rho <= (1+r)/2,
// |theta - phi| <= pi(1-r)/2}.
inline bool box_contains(double r, double phi, const DiscPoint& p) {
    const double rho = p.modulus();
    if (rho < r || rho > 0.5 * (1.0 + r)) return false;
    return std::fabs(reduce_angle(p.angle() - phi)) <= 0.5 * std::numbers::pi * (1.0 - r);
}

namespace detail {

inline void require_box_realized(const ZeroSequence& z, double r, const char* what) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError(std::string(what) + ": r must lie in [0,1)");
    z.require_realized(0.5 * (1.0 + r), what); // the box's closed upper radial edge
}

} // namespace detail

// nu(r e^{i phi}): zeros of Z in the closed box based at r e^{i phi}.
inline std::size_t box_count_nu(const ZeroSequence& z, double r, double phi) {
    detail::require_box_realized(z, r, "box_count_nu");
    std::size_t n = 0;
    for (const DiscPoint& p : z.points())
        if (box_contains(r, phi, p)) ++n;
    return n;
}

// nu_1(r) = max_phi nu(r e^{i phi}).  The count over a sliding closed arc
// changes only when an edge crosses a zero's angle, so the maximum is
// attained with some zero at the left edge of the angular window; sweeping
// those event angles is exact.
inline std::size_t nu_max(const ZeroSequence& z, double r) {
    detail::require_box_realized(z, r, "nu_max");
    const double lo = r, hi = 0.5 * (1.0 + r);
    const double w = 0.5 * std::numbers::pi * (1.0 - r); // angular half-width

    std::vector<double> angles;
    for (const DiscPoint& p : z.points()) {
        const double rho = p.modulus();
        if (rho >= lo && rho <= hi) angles.push_back(p.angle());
    }
    if (angles.empty()) return 0;
    if (2.0 * w >= two_pi) return angles.size();

    std::sort(angles.begin(), angles.end());
    const std::size_t m = angles.size();
    std::size_t best = 0;
    // Window [a, a + 2w] with left edge at each zero; wraparound handled by
    // a doubled angle array.
    std::size_t hi_idx = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double right = angles[i] + 2.0 * w;
        if (hi_idx < i) hi_idx = i;
        while (hi_idx + 1 < i + m) {
            const std::size_t nxt = hi_idx + 1;
            const double a = nxt < m ? angles[nxt] : angles[nxt - m] + two_pi;
            if (a <= right)
                hi_idx = nxt;
            else
                break;
        }
        best = std::max(best, hi_idx - i + 1);
    }
    return std::min(best, m);
}

} // namespace discgrowth

#endif
