#pragma once

#include <complex>
#include <random>
#include <vector>

#include "blaschke/angle.hpp"
#include "blaschke/arc.hpp"
#include "blaschke/blaschke_product.hpp"

namespace test_support {

using namespace blaschke;

inline std::mt19937 make_rng(unsigned seed) { return std::mt19937(seed); }

inline double uniform(std::mt19937& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Angle random_angle(std::mt19937& rng) { return Angle(uniform(rng, 0.0, two_pi)); }

inline DiskPoint random_disk_point(std::mt19937& rng, double max_radius) {
    // uniform over the disk of the given radius
    const double r = max_radius * std::sqrt(uniform(rng, 0.0, 1.0));
    return DiskPoint::polar(r, random_angle(rng));
}

inline std::complex<double> random_unimodular(std::mt19937& rng) {
    return std::polar(1.0, uniform(rng, 0.0, two_pi));
}

inline Arc random_arc(std::mt19937& rng, double min_length = 0.05,
                      double max_length = two_pi - 0.05) {
    const Angle start = random_angle(rng);
    const double length = uniform(rng, min_length, max_length);
    return Arc(start, Angle(start.radians() + length));
}

/// Random partition with every arc at least min_length long.
inline Partition random_partition(std::mt19937& rng, int n, double min_length) {
    if (n == 1) {
        return Partition::from_lengths(random_angle(rng), std::vector<double>{two_pi});
    }
    std::vector<double> lengths(n);
    double total = 0.0;
    for (double& length : lengths) {
        length = -std::log(uniform(rng, 1e-9, 1.0));
        total += length;
    }
    const double spare = two_pi - n * min_length;
    for (double& length : lengths) {
        length = min_length + spare * length / total;
    }
    return Partition::from_lengths(random_angle(rng), lengths);
}

/// The six-arc sample used throughout: lengths pi/5, 3pi/5, 3pi/5, 3pi/10,
/// pi/10, pi/5 with the first arc's midpoint at angle 0.
inline Partition six_arc_partition() {
    const double pi = std::numbers::pi;
    const std::vector<double> lengths{pi / 5, 3 * pi / 5, 3 * pi / 5, 3 * pi / 10, pi / 10,
                                      pi / 5};
    return Partition::from_lengths(Angle(-pi / 10), lengths);
}

inline std::vector<DiskPoint> zeros_at_midpoints(const Partition& partition, double radius) {
    std::vector<DiskPoint> zeros;
    for (const Angle& midpoint : partition.midpoints()) {
        zeros.push_back(DiskPoint::polar(radius, midpoint));
    }
    return zeros;
}

}  // namespace test_support
