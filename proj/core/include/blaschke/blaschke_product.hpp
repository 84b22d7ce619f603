#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "blaschke/angle.hpp"

namespace blaschke {

/// Strict interior bound for disk points. Moduli at or above this are
/// rejected as overflow risks for the Moebius denominators.
inline constexpr double max_point_modulus = 1.0 - 1e-15;

/// A point strictly inside the unit disk.
class DiskPoint {
public:
    explicit DiskPoint(std::complex<double> value);

    static DiskPoint polar(double radius, Angle angle);

    std::complex<double> value() const { return value_; }
    double radius() const { return std::abs(value_); }
    Angle angle() const { return Angle(std::arg(value_)); }

private:
    std::complex<double> value_;
};

/// Finite product of Moebius factors (z - z_n)/(1 - conj(z_n) z) times a
/// unimodular rotation. Maps the closed disk to itself and the circle onto
/// itself degree() times.
class BlaschkeProduct {
public:
    BlaschkeProduct(std::complex<double> rotation, std::vector<DiskPoint> zeros);

    std::size_t degree() const { return zeros_.size(); }
    std::complex<double> rotation() const { return rotation_; }
    const std::vector<DiskPoint>& zeros() const { return zeros_; }

private:
    std::complex<double> rotation_;
    std::vector<DiskPoint> zeros_;
};

std::complex<double> evaluate(const BlaschkeProduct& product, std::complex<double> z);

/// |(a - b) / (1 - conj(b) a)|, the Moebius-invariant metric on the disk.
double pseudo_hyperbolic_distance(const DiskPoint& a, const DiskPoint& b);

/// min over k of the product over j != k of pairwise pseudo-hyperbolic
/// distances. Degree <= 1 gives 1 (empty product); coincident zeros give 0.
double separation_constant(const BlaschkeProduct& product);

/// Same zeros, rotation chosen so the value at e^{i phi} equals target.
BlaschkeProduct normalize_rotation(const BlaschkeProduct& product, Angle phi,
                                   std::complex<double> target);

/// d/dtheta of arg B(e^{i theta}): the summed Poisson kernel of the zeros.
double boundary_arg_derivative(std::span<const DiskPoint> zeros, Angle theta);

/// Pointwise product: concatenated zeros, multiplied rotations.
BlaschkeProduct multiply(const BlaschkeProduct& a, const BlaschkeProduct& b);

}  // namespace blaschke
