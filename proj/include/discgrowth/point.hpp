#ifndef DISCGROWTH_POINT_HPP
#define DISCGROWTH_POINT_HPP

#include <cmath>
#include <complex>
#include <numbers>

#include "discgrowth/errors.hpp"

namespace discgrowth {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Normalize an angle to [0, 2*pi).
inline double normalize_angle(double theta) {
    double t = std::fmod(theta, two_pi);
    if (t < 0.0) t += two_pi;
    if (t >= two_pi) t = 0.0; // fmod can round up to 2*pi
    return t;
}

// Reduce an angular difference to (-pi, pi].
inline double reduce_angle(double delta) {
    double t = std::fmod(delta, two_pi);
    if (t > std::numbers::pi) t -= two_pi;
    if (t <= -std::numbers::pi) t += two_pi;
    return t;
}

// A point strictly inside the unit disc.  The atom of all zero sets.
class DiscPoint {
public:
    DiscPoint() = default;

    DiscPoint(double re, double im) : re_(re), im_(im) {
        if (!(re * re + im * im < 1.0))
            throw DomainError("DiscPoint: point not strictly inside the unit disc");
    }

    static DiscPoint polar(double modulus, double angle) {
        if (!(modulus >= 0.0 && modulus < 1.0))
            throw DomainError("DiscPoint::polar: modulus must lie in [0,1)");
        if (modulus == 0.0) return DiscPoint(0.0, 0.0);
        return DiscPoint(modulus * std::cos(angle), modulus * std::sin(angle));
    }

    double re() const { return re_; }
    double im() const { return im_; }
    double modulus() const { return std::hypot(re_, im_); }
    double angle() const { return normalize_angle(std::atan2(im_, re_)); }
    bool is_origin() const { return re_ == 0.0 && im_ == 0.0; }

    std::complex<double> to_complex() const { return {re_, im_}; }

    friend bool operator==(const DiscPoint& a, const DiscPoint& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    double re_ = 0.0;
    double im_ = 0.0;
};

} // namespace discgrowth

#endif
