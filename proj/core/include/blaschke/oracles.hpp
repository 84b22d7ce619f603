#pragma once

#include <cmath>

#include "blaschke/errors.hpp"

namespace blaschke::oracles {

/// Separation constant of n zeros equally spaced on a circle of radius r:
/// n r^(n-1) / (1 + r^2 + ... + r^(2(n-1))).
inline double equal_arcs_delta(int n, double r) {
    if (n < 2) {
        throw InvalidInput("equal_arcs_delta requires n >= 2");
    }
    if (!(r >= 0.0 && r < 1.0)) {
        throw InvalidInput("radius must lie in [0, 1)");
    }
    double geometric_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        geometric_sum += std::pow(r, 2 * i);
    }
    return n * std::pow(r, n - 1) / geometric_sum;
}

/// Closed-form radius of the short-arc zero for the symmetric two-arc
/// problem with arc lengths theta and 2*pi - theta, the long-arc zero held
/// at radius r2: (r2 + cos(theta/2)) / (1 + r2 cos(theta/2)).
inline double two_arcs_r1(double theta, double r2) {
    if (!(theta > 0.0) || theta > std::numbers::pi) {
        throw InvalidInput("theta must lie in (0, pi]");
    }
    if (!(r2 >= 0.0 && r2 < 1.0)) {
        throw InvalidInput("r2 must lie in [0, 1)");
    }
    const double c = std::cos(0.5 * theta);
    return (r2 + c) / (1.0 + r2 * c);
}

/// Separation constant of the symmetric two-arc solution, zeros at r1 and
/// -r2: (r1 + r2) / (1 + r1 r2).
inline double two_arcs_delta(double r1, double r2) {
    if (!(r1 >= 0.0 && r1 < 1.0) || !(r2 >= 0.0 && r2 < 1.0)) {
        throw InvalidInput("radii must lie in [0, 1)");
    }
    return (r1 + r2) / (1.0 + r1 * r2);
}

}  // namespace blaschke::oracles
