#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace blaschke {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Absolute tolerance for angle comparisons.
inline constexpr double angle_tolerance = 1e-12;

/// Reduces an angle in radians to its canonical representative in [0, 2*pi).
inline double canonical_angle(double radians) {
    double r = std::fmod(radians, two_pi);
    if (r < 0.0) {
        r += two_pi;
    }
    if (r >= two_pi) {
        r = 0.0;
    }
    return r;
}

/// A position on the unit circle, stored canonically in [0, 2*pi).
class Angle {
public:
    Angle() = default;
    explicit Angle(double radians) : radians_(canonical_angle(radians)) {}

    double radians() const { return radians_; }

    /// Distance along the circle, in [0, pi].
    friend double circular_distance(Angle a, Angle b) {
        const double d = std::fabs(a.radians_ - b.radians_);
        return std::min(d, two_pi - d);
    }

    friend bool operator==(Angle a, Angle b) {
        return circular_distance(a, b) <= angle_tolerance;
    }
    friend bool operator!=(Angle a, Angle b) { return !(a == b); }

private:
    double radians_ = 0.0;
};

/// e^{i theta}.
inline std::complex<double> unit_point(Angle theta) {
    return std::polar(1.0, theta.radians());
}

}  // namespace blaschke
