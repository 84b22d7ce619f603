#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "blaschke/angle.hpp"
#include "blaschke/arc.hpp"
#include "blaschke/blaschke_product.hpp"
#include "blaschke/errors.hpp"

#include "support.hpp"

using namespace blaschke;
using test_support::make_rng;
using test_support::random_angle;
using test_support::random_disk_point;
using test_support::six_arc_partition;
using test_support::uniform;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_SUITE("disk_core") {

TEST_CASE("angles canonicalize into [0, 2pi)") {
    CHECK(Angle(0.0).radians() == 0.0);
    CHECK(Angle(two_pi).radians() == 0.0);
    CHECK(Angle(-pi / 2).radians() == doctest::Approx(3 * pi / 2).epsilon(1e-15));
    CHECK(Angle(5 * two_pi + 0.25).radians() == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(Angle(-1e-18).radians() < two_pi);

    CHECK(Angle(0.3) == Angle(0.3 + two_pi));
    CHECK(Angle(0.0) == Angle(1e-13));
    CHECK(Angle(0.0) == Angle(-1e-13));  // equality wraps around the seam
    CHECK(Angle(0.0) != Angle(1e-3));
}

TEST_CASE("arcs measure their counterclockwise span") {
    const Arc quarter(Angle(0.0), Angle(pi / 2));
    CHECK(quarter.length() == doctest::Approx(pi / 2));
    CHECK(quarter.midpoint().radians() == doctest::Approx(pi / 4));
    CHECK(quarter.contains(Angle(0.0)));       // half-open: start included
    CHECK(!quarter.contains(Angle(pi / 2)));   // end excluded
    CHECK(quarter.contains(Angle(0.7)));
    CHECK(!quarter.interior_contains(Angle(0.0)));
    CHECK(quarter.interior_contains(Angle(0.7)));

    const Arc wrapping(Angle(3 * pi / 2), Angle(pi / 2));
    CHECK(wrapping.length() == doctest::Approx(pi));
    CHECK(wrapping.contains(Angle(0.0)));
    CHECK(wrapping.midpoint().radians() == doctest::Approx(0.0).epsilon(1e-12));

    const Arc full(Angle(0.3), Angle(0.3));
    CHECK(full.is_full_circle());
    CHECK(full.length() == two_pi);
    CHECK(full.contains(Angle(5.0)));
}

TEST_CASE("partitions validate chaining and total length") {
    const Partition partition = six_arc_partition();
    CHECK(partition.size() == 6);
    CHECK(partition.min_arc_length() == doctest::Approx(pi / 10));

    // midpoints of the six-arc sample
    const auto midpoints = partition.midpoints();
    CHECK(midpoints[0].radians() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(midpoints[1].radians() == doctest::Approx(2 * pi / 5));
    CHECK(midpoints[2].radians() == doctest::Approx(pi));
    CHECK(midpoints[3].radians() == doctest::Approx(29 * pi / 20));
    CHECK(midpoints[4].radians() == doctest::Approx(33 * pi / 20));
    CHECK(midpoints[5].radians() == doctest::Approx(9 * pi / 5));

    double total = 0.0;
    for (const Arc& arc : partition.arcs()) total += arc.length();
    CHECK(total == doctest::Approx(two_pi).epsilon(1e-12));

    CHECK_THROWS_AS(Partition::from_arcs({Arc(Angle(0.0), Angle(pi))}), InvalidInput);
    CHECK_THROWS_AS(
        Partition::from_arcs({Arc(Angle(0.0), Angle(pi + 0.1)), Arc(Angle(pi), Angle(0.0))}),
        InvalidInput);
    CHECK_THROWS_WITH_AS(
        Partition::from_arcs({Arc(Angle(0.0), Angle(pi + 0.1)), Arc(Angle(pi), Angle(0.0))}),
        doctest::Contains("arcs overlap at angle"), InvalidInput);
    CHECK_THROWS_AS(Partition::from_lengths(Angle(0.0), std::vector<double>{pi, pi / 2}),
                    InvalidInput);

    const Partition single = Partition::from_lengths(Angle(0.4), std::vector<double>{two_pi});
    CHECK(single.size() == 1);
    CHECK(single.arc(0).is_full_circle());
}

TEST_CASE("disk points reject near-boundary moduli") {
    CHECK_NOTHROW(DiskPoint(std::complex<double>(0.9999, 0.0)));
    CHECK_THROWS_AS(DiskPoint(std::complex<double>(1.0, 0.0)), InvalidInput);
    CHECK_THROWS_AS(DiskPoint(std::complex<double>(0.0, 1.0 - 1e-16)), InvalidInput);
    CHECK_THROWS_AS(DiskPoint::polar(-0.1, Angle(0.0)), InvalidInput);
    const DiskPoint p = DiskPoint::polar(0.5, Angle(pi / 3));
    CHECK(p.radius() == doctest::Approx(0.5));
    CHECK(p.angle().radians() == doctest::Approx(pi / 3));
}

TEST_CASE("evaluate: identity, zeros and direct product cross-check") {
    const BlaschkeProduct identity(1.0, {DiskPoint(std::complex<double>(0.0, 0.0))});
    CHECK(evaluate(identity, {0.5, 0.0}) == std::complex<double>(0.5, 0.0));

    const BlaschkeProduct shifted(1.0, {DiskPoint({0.3, 0.4}), DiskPoint({-0.2, 0.1})});
    CHECK(std::abs(evaluate(shifted, {0.3, 0.4})) < 1e-12);

    // six zeros on the sample mid-rays, against an independent per-factor
    // evaluation
    const auto zeros = test_support::zeros_at_midpoints(six_arc_partition(), 0.86);
    const BlaschkeProduct product(1.0, zeros);
    const std::complex<double> z = std::polar(1.0, 0.3);
    std::complex<double> expected = 1.0;
    for (const DiskPoint& zero : zeros) {
        expected *= (z - zero.value()) / (1.0 - std::conj(zero.value()) * z);
    }
    CHECK(std::abs(evaluate(product, z) - expected) < 1e-14);
    CHECK(std::fabs(std::abs(evaluate(product, z)) - 1.0) < 1e-12);
}

TEST_CASE("boundary modulus is 1 for random products") {
    auto rng = make_rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<DiskPoint> zeros;
        const int degree = 1 + static_cast<int>(uniform(rng, 0.0, 6.0));
        for (int i = 0; i < degree; ++i) zeros.push_back(random_disk_point(rng, 0.99));
        const BlaschkeProduct product(test_support::random_unimodular(rng), zeros);
        for (int i = 0; i < 50; ++i) {
            const std::complex<double> w = std::polar(1.0, uniform(rng, 0.0, two_pi));
            CHECK(std::fabs(std::abs(evaluate(product, w)) - 1.0) < 1e-10);
        }
        for (const DiskPoint& zero : zeros) {
            CHECK(std::abs(evaluate(product, zero.value())) < 1e-12);
        }
    }
}

TEST_CASE("pseudo-hyperbolic distance") {
    const DiskPoint origin{std::complex<double>(0.0, 0.0)};
    CHECK(pseudo_hyperbolic_distance(origin, origin) == 0.0);

    // (r, -r) -> 2r/(1+r^2)
    const DiskPoint a{std::complex<double>(0.5, 0.0)};
    const DiskPoint b{std::complex<double>(-0.5, 0.0)};
    CHECK(pseudo_hyperbolic_distance(a, b) == doctest::Approx(0.8).epsilon(1e-15));

    auto rng = make_rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const DiskPoint p = random_disk_point(rng, 0.97);
        const DiskPoint q = random_disk_point(rng, 0.97);
        // Moebius at the origin: distance to 0 is the modulus
        CHECK(pseudo_hyperbolic_distance(origin, p) == doctest::Approx(p.radius()).epsilon(1e-14));
        // symmetry
        CHECK(pseudo_hyperbolic_distance(p, q) ==
              doctest::Approx(pseudo_hyperbolic_distance(q, p)).epsilon(1e-13));
        // rotation invariance
        const double alpha = uniform(rng, 0.0, two_pi);
        const std::complex<double> rot = std::polar(1.0, alpha);
        const DiskPoint pr{p.value() * rot};
        const DiskPoint qr{q.value() * rot};
        CHECK(std::fabs(pseudo_hyperbolic_distance(pr, qr) - pseudo_hyperbolic_distance(p, q)) <
              1e-12);
    }
}

TEST_CASE("separation constant: paper configuration and invariances") {
    const Partition partition = six_arc_partition();

    const BlaschkeProduct degree_one(1.0, {DiskPoint({0.4, 0.2})});
    CHECK(separation_constant(degree_one) == 1.0);

    const BlaschkeProduct at_086(1.0, test_support::zeros_at_midpoints(partition, 0.86));
    CHECK(std::fabs(separation_constant(at_086) - 0.7025) < 5e-4);

    const BlaschkeProduct at_0855(1.0, test_support::zeros_at_midpoints(partition, 0.855));
    CHECK(std::fabs(separation_constant(at_0855) - 0.6854) < 5e-4);

    // coincident zeros yield 0, not an error
    const DiskPoint twin{std::complex<double>(0.3, 0.3)};
    CHECK(separation_constant(BlaschkeProduct(1.0, {twin, twin})) == 0.0);

    auto rng = make_rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<DiskPoint> zeros;
        for (int i = 0; i < 5; ++i) zeros.push_back(random_disk_point(rng, 0.95));
        const BlaschkeProduct product(1.0, zeros);
        const double base = separation_constant(product);

        // global rotation invariance
        const std::complex<double> rot = std::polar(1.0, uniform(rng, 0.0, two_pi));
        std::vector<DiskPoint> rotated;
        for (const DiskPoint& zero : zeros) rotated.emplace_back(zero.value() * rot);
        CHECK(std::fabs(separation_constant(BlaschkeProduct(1.0, rotated)) - base) < 1e-10);

        // permutation invariance up to float associativity
        std::vector<DiskPoint> shuffled = zeros;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(std::fabs(separation_constant(BlaschkeProduct(1.0, shuffled)) - base) < 1e-12);
    }
}

TEST_CASE("normalize_rotation pins a boundary value") {
    const BlaschkeProduct flip = normalize_rotation(
        BlaschkeProduct(1.0, {DiskPoint(std::complex<double>(0.0, 0.0))}), Angle(0.0), -1.0);
    CHECK(std::abs(flip.rotation() - std::complex<double>(-1.0, 0.0)) < 1e-15);
    CHECK(std::abs(evaluate(flip, {0.25, 0.0}) - std::complex<double>(-0.25, 0.0)) < 1e-15);

    // idempotence: already at the target leaves the rotation unchanged
    auto rng = make_rng(39);
    const BlaschkeProduct product(test_support::random_unimodular(rng),
                                  {random_disk_point(rng, 0.9), random_disk_point(rng, 0.9)});
    const Angle phi = random_angle(rng);
    const std::complex<double> value = evaluate(product, unit_point(phi));
    const BlaschkeProduct renormalized = normalize_rotation(product, phi, value);
    CHECK(std::abs(renormalized.rotation() - product.rotation()) < 1e-12);

    CHECK_THROWS_AS(normalize_rotation(product, phi, {0.5, 0.0}), InvalidInput);
}

TEST_CASE("boundary argument derivative") {
    const std::vector<DiskPoint> center{DiskPoint(std::complex<double>(0.0, 0.0))};
    CHECK(boundary_arg_derivative(center, Angle(0.0)) == doctest::Approx(1.0));
    CHECK(boundary_arg_derivative(center, Angle(2.1)) == doctest::Approx(1.0));

    // kernel value at theta = 0 for a single zero at 0.86
    const std::vector<DiskPoint> off{DiskPoint(std::complex<double>(0.86, 0.0))};
    const double expected = (1.0 - 0.86 * 0.86) / ((1.0 - 0.86) * (1.0 - 0.86));
    CHECK(expected == doctest::Approx(13.2857).epsilon(1e-4));
    CHECK(boundary_arg_derivative(off, Angle(0.0)) == doctest::Approx(expected).epsilon(1e-13));

    // trapezoidal average over the circle recovers the degree
    auto rng = make_rng(55);
    std::vector<DiskPoint> zeros;
    for (int i = 0; i < 4; ++i) zeros.push_back(random_disk_point(rng, 0.9));
    constexpr int grid = 10000;
    double sum = 0.0;
    for (int i = 0; i < grid; ++i) {
        sum += boundary_arg_derivative(zeros, Angle(two_pi * i / grid));
    }
    CHECK(sum / grid == doctest::Approx(4.0).epsilon(1e-6));
}

}  // TEST_SUITE
