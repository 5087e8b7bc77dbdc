#ifndef DISCGROWTH_ZERO_SEQUENCE_HPP
#define DISCGROWTH_ZERO_SEQUENCE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "discgrowth/errors.hpp"
#include "discgrowth/point.hpp"

namespace discgrowth {

// Descriptor of the family that produced a sequence.  A sequence with a
// generator is a finite realization of an infinite zero set; one without is
// a complete (finite) zero set.
struct Generator {
    std::string family;                    // radial-power | geometric | log2-example | gamma-lattice
    std::map<std::string, double> params;  // family parameters
    std::size_t count = 0;                 // points (levels for gamma-lattice)
};

namespace detail {

// Golden angle in radians; gives a deterministic equidistributed angle
// sequence theta_k = k * golden_angle (mod 2*pi).
inline constexpr double golden_angle = 2.399963229728653;

inline double family_angle(const std::string& scheme, double base, std::size_t k) {
    if (scheme == "ray") return base;
    if (scheme == "golden") return normalize_angle(base + static_cast<double>(k) * golden_angle);
    throw DomainError("unknown angle scheme: " + scheme);
}

inline std::string angle_scheme(const std::map<std::string, double>& params,
                                const std::string& fallback) {
    auto it = params.find("angles");
    if (it == params.end()) return fallback;
    if (it->second == 0.0) return "ray";
    if (it->second == 1.0) return "golden";
    throw DomainError("angles parameter must be 0 (ray) or 1 (golden)");
}

inline double param_or(const std::map<std::string, double>& params, const std::string& key,
                       double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

inline double require_param(const std::map<std::string, double>& params, const std::string& key,
                            const std::string& family) {
    auto it = params.find(key);
    if (it == params.end())
        throw DomainError("make_sequence(" + family + "): missing parameter '" + key + "'");
    return it->second;
}

inline double log2_example_gap(std::size_t k) {
    const double lk = std::log(static_cast<double>(k));
    return 1.0 / (static_cast<double>(k) * lk * lk);
}

// Zeros per gamma-lattice level: ceil(2^{j(1-gamma)}).
inline std::size_t lattice_level_count(std::size_t j, double gamma) {
    return static_cast<std::size_t>(
        std::ceil(std::exp2(static_cast<double>(j) * (1.0 - gamma))));
}

} // namespace detail

// A finite zero sequence in the unit disc, canonicalized so that moduli are
// nondecreasing in storage order.  All statistics consume it in this order,
// which makes compensated sums reproducible.
class ZeroSequence {
public:
    ZeroSequence() = default;

    // A complete, explicitly listed zero set (no generator behind it).
    static ZeroSequence from_points(std::vector<DiscPoint> points) {
        ZeroSequence z;
        z.points_ = std::move(points);
        z.canonicalize();
        return z;
    }

    static ZeroSequence from_points(std::vector<DiscPoint> points, Generator gen) {
        ZeroSequence z;
        z.points_ = std::move(points);
        z.generator_ = std::move(gen);
        z.canonicalize();
        return z;
    }

    const std::vector<DiscPoint>& points() const { return points_; }
    const std::vector<double>& moduli() const { return moduli_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    const std::optional<Generator>& generator() const { return generator_; }

    // True when the stored points are the whole zero set rather than a
    // truncation of an infinite one.
    bool complete() const { return !generator_.has_value(); }

    bool origin_excluded() const { return origin_excluded_; }

    double max_modulus() const { return points_.empty() ? 0.0 : moduli_.back(); }

    // Realized-range guard: radii at or beyond the last stored modulus of a
    // generator-backed sequence would silently undercount.
    void require_realized(double r, const char* what) const {
        if (complete() || points_.empty()) return;
        if (r >= max_modulus())
            throw RangeError(std::string(what) +
                             ": r beyond the realized range of the generated sequence");
    }

    // Upper bound on sum over the *unrealized* tail of (1-|z_k|)^m, m >= 1.
    // Zero for complete sequences, +inf when the tail diverges.
    double tail_power_sum_bound(double m) const;

private:
    void canonicalize() {
        std::sort(points_.begin(), points_.end(), [](const DiscPoint& a, const DiscPoint& b) {
            const double ma = a.modulus(), mb = b.modulus();
            if (ma != mb) return ma < mb;
            const double aa = a.angle(), ab = b.angle();
            if (aa != ab) return aa < ab;
            if (a.re() != b.re()) return a.re() < b.re();
            return a.im() < b.im();
        });
        moduli_.resize(points_.size());
        origin_excluded_ = true;
        for (std::size_t i = 0; i < points_.size(); ++i) {
            moduli_[i] = points_[i].modulus();
            if (points_[i].is_origin()) origin_excluded_ = false;
        }
    }

    std::vector<DiscPoint> points_;
    std::vector<double> moduli_;
    std::optional<Generator> generator_;
    bool origin_excluded_ = true;
};

// Constructs one of the parametric families, canonicalized, with exactly
// `count` points (`count` = number of levels for gamma-lattice).
//
//   radial-power : 1-|z_k| = k^{-1/beta}, k = 2..count+1 (k=1 would put a
//                  zero at the origin); golden-angle by default, angles=0
//                  gives a ray at params["angle"].
//   geometric    : 1-|z_k| = q*c^k, k = 1..count; ray by default.
//   log2-example : z_k = 1 - 1/(k ln^2 k), k = 3..count+2, positive axis.
//   gamma-lattice: level j = 1..count holds ceil(2^{j(1-gamma)}) zeros at
//                  radius 1-2^{-j}, spread across the level's own Carleson
//                  arc (-pi 2^{-j}, pi 2^{-j}] at midpoint angles.  The sup
//                  Carleson-square mass then scales like delta^gamma.
inline ZeroSequence make_sequence(const std::string& family, std::size_t count,
                                  const std::map<std::string, double>& params = {}) {
    if (count < 1) throw DomainError("make_sequence: count must be positive");
    std::vector<DiscPoint> pts;
    Generator gen{family, params, count};

    if (family == "radial-power") {
        const double beta = detail::require_param(params, "beta", family);
        if (!(beta > 0.0)) throw DomainError("make_sequence(radial-power): beta must be > 0");
        const double base = detail::param_or(params, "angle", 0.0);
        const std::string scheme = detail::angle_scheme(params, "golden");
        pts.reserve(count);
        for (std::size_t k = 2; k <= count + 1; ++k) {
            const double gap = std::pow(static_cast<double>(k), -1.0 / beta);
            pts.push_back(DiscPoint::polar(1.0 - gap, detail::family_angle(scheme, base, k)));
        }
    } else if (family == "geometric") {
        const double c = detail::require_param(params, "c", family);
        const double q = detail::param_or(params, "q", 1.0);
        if (!(c > 0.0 && c < 1.0)) throw DomainError("make_sequence(geometric): c must be in (0,1)");
        if (!(q > 0.0 && q * c < 1.0))
            throw DomainError("make_sequence(geometric): need q > 0 and q*c < 1");
        const double base = detail::param_or(params, "angle", 0.0);
        const std::string scheme = detail::angle_scheme(params, "ray");
        pts.reserve(count);
        double gap = q;
        for (std::size_t k = 1; k <= count; ++k) {
            gap *= c;
            pts.push_back(DiscPoint::polar(1.0 - gap, detail::family_angle(scheme, base, k)));
        }
    } else if (family == "log2-example") {
        pts.reserve(count);
        for (std::size_t k = 3; k <= count + 2; ++k)
            pts.push_back(DiscPoint::polar(1.0 - detail::log2_example_gap(k), 0.0));
    } else if (family == "gamma-lattice") {
        const double gamma = detail::require_param(params, "gamma", family);
        if (!(gamma > 0.0 && gamma <= 1.0))
            throw DomainError("make_sequence(gamma-lattice): gamma must be in (0,1]");
        for (std::size_t j = 1; j <= count; ++j) {
            const double depth = std::exp2(-static_cast<double>(j));
            const std::size_t nj = detail::lattice_level_count(j, gamma);
            const double arc = std::numbers::pi * depth; // half-width of the level arc
            for (std::size_t i = 0; i < nj; ++i) {
                const double frac = (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(nj);
                pts.push_back(DiscPoint::polar(1.0 - depth, arc * (frac - 1.0)));
            }
        }
    } else {
        throw DomainError("make_sequence: unknown family '" + family + "'");
    }
    return ZeroSequence::from_points(std::move(pts), std::move(gen));
}

// Re-realizes a generator-backed sequence with at least `target_points`
// points (gamma-lattice grows by whole levels).
inline ZeroSequence extend_sequence(const ZeroSequence& z, std::size_t target_points) {
    if (!z.generator())
        throw DomainError("extend_sequence: sequence has no generator to extend");
    const Generator& g = *z.generator();
    if (g.family == "gamma-lattice") {
        std::size_t levels = g.count;
        while (true) {
            ++levels;
            ZeroSequence grown = make_sequence(g.family, levels, g.params);
            if (grown.size() >= target_points) return grown;
        }
    }
    return make_sequence(g.family, target_points, g.params);
}

inline double ZeroSequence::tail_power_sum_bound(double m) const {
    if (!(m >= 1.0)) throw DomainError("tail_power_sum_bound: exponent must be >= 1");
    if (complete()) return 0.0;
    const Generator& g = *generator_;
    const double inf = std::numeric_limits<double>::infinity();

    if (g.family == "geometric") {
        const double c = g.params.at("c");
        const double q = detail::param_or(g.params, "q", 1.0);
        const double cm = std::pow(c, m);
        // sum_{k > N} (q c^k)^m, exact geometric tail
        return std::pow(q, m) * std::pow(c, m * static_cast<double>(g.count + 1)) / (1.0 - cm);
    }
    if (g.family == "radial-power") {
        const double beta = g.params.at("beta");
        const double e = m / beta;
        if (e <= 1.0) return inf;
        const double K = static_cast<double>(g.count + 1); // last realized index
        return std::pow(K, 1.0 - e) / (e - 1.0);           // integral majorant
    }
    if (g.family == "log2-example") {
        const std::size_t K = g.count + 3; // first unrealized index
        const double a_K = detail::log2_example_gap(K);
        // sum_{k >= K} a_k <= int_{K-1}^inf dx/(x ln^2 x) = 1/ln(K-1)
        const double first_moment = 1.0 / std::log(static_cast<double>(K - 1));
        return std::pow(a_K, m - 1.0) * first_moment;
    }
    if (g.family == "gamma-lattice") {
        const double gamma = g.params.at("gamma");
        const double L1 = static_cast<double>(g.count + 1);
        const double e1 = m - 1.0 + gamma; // level mass exponent for 2^{j(1-gamma)} zeros
        const double t1 = std::exp2(-L1 * e1) / (1.0 - std::exp2(-e1));
        const double t2 = std::exp2(-L1 * m) / (1.0 - std::exp2(-m)); // the +1 from the ceiling
        return t1 + t2;
    }
    throw DomainError("tail_power_sum_bound: unknown family '" + g.family + "'");
}

} // namespace discgrowth

#endif
