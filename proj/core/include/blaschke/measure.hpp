#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "blaschke/arc.hpp"
#include "blaschke/blaschke_product.hpp"

namespace blaschke {

/// Per-arc values of the zero-summed harmonic measure for one partition.
/// With one zero per arc the values lie in (0, N] and sum to N.
class MeasureVector {
public:
    explicit MeasureVector(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t index) const { return values_[index]; }
    const std::vector<double>& values() const { return values_; }
    double total() const;

private:
    std::vector<double> values_;
};

/// Harmonic measure of the arc at z: the Poisson integral of the arc's
/// indicator. Evaluated in closed form by mapping both endpoints through
/// w -> (w - z)/(1 - conj(z) w) and measuring the counterclockwise angular
/// gap between the images. The full circle yields exactly 1.
double arc_harmonic_measure(const DiskPoint& z, const Arc& arc);

/// Composite-midpoint integration of the Poisson kernel over the arc,
/// divided by 2*pi. Kept as an independent cross-check for the closed form;
/// converges to arc_harmonic_measure as n_points grows. Requires n >= 16.
double poisson_quadrature_oracle(const DiskPoint& z, const Arc& arc, int n_points);

/// Sum of arc_harmonic_measure over the zeros. Equals the winding of the
/// associated Blaschke product over the arc.
double mu(std::span<const DiskPoint> zeros, const Arc& arc);

/// Componentwise mu over the partition arcs, one zero per arc. A component
/// sum that strays from N beyond 1e-8 signals a geometry bug and throws
/// std::logic_error.
MeasureVector mu_vector(std::span<const DiskPoint> zeros, const Partition& partition);

/// Smallest initial radius guaranteeing that every zero's harmonic measure
/// on any other arc is non-increasing along its ray:
/// (1 - sin(L/2))/cos(L/2) with L the shortest arc length, clamped to 0
/// once L >= pi.
double min_radius_for_monotonicity(const Partition& partition);

}  // namespace blaschke
