#include "blaschke/blaschke_product.hpp"

#include <cmath>
#include <sstream>

#include "blaschke/errors.hpp"

namespace blaschke {

DiskPoint::DiskPoint(std::complex<double> value) : value_(value) {
    if (!(std::abs(value) < max_point_modulus)) {
        std::ostringstream msg;
        msg << "disk point modulus " << std::abs(value) << " is not strictly inside the disk";
        throw InvalidInput(msg.str());
    }
}

DiskPoint DiskPoint::polar(double radius, Angle angle) {
    if (radius < 0.0) {
        throw InvalidInput("disk point radius must be nonnegative");
    }
    return DiskPoint(std::polar(radius, angle.radians()));
}

BlaschkeProduct::BlaschkeProduct(std::complex<double> rotation, std::vector<DiskPoint> zeros)
    : rotation_(rotation), zeros_(std::move(zeros)) {
    const double modulus = std::abs(rotation_);
    if (std::fabs(modulus - 1.0) > 1e-12) {
        throw InvalidInput("rotation must be unimodular");
    }
    rotation_ /= modulus;
}

std::complex<double> evaluate(const BlaschkeProduct& product, std::complex<double> z) {
    std::complex<double> w = product.rotation();
    for (const DiskPoint& zero : product.zeros()) {
        const std::complex<double> a = zero.value();
        w *= (z - a) / (1.0 - std::conj(a) * z);
    }
    return w;
}

double pseudo_hyperbolic_distance(const DiskPoint& a, const DiskPoint& b) {
    return std::abs((a.value() - b.value()) / (1.0 - std::conj(b.value()) * a.value()));
}

double separation_constant(const BlaschkeProduct& product) {
    const auto& zeros = product.zeros();
    const std::size_t n = zeros.size();
    if (n <= 1) {
        return 1.0;
    }
    double smallest = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        double factor_product = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != k) {
                factor_product *= pseudo_hyperbolic_distance(zeros[j], zeros[k]);
            }
        }
        smallest = std::min(smallest, factor_product);
    }
    return smallest;
}

BlaschkeProduct normalize_rotation(const BlaschkeProduct& product, Angle phi,
                                   std::complex<double> target) {
    if (std::fabs(std::abs(target) - 1.0) > 1e-12) {
        throw InvalidInput("rotation target must be unimodular");
    }
    const std::complex<double> at_phi = evaluate(product, unit_point(phi));
    std::complex<double> rotation = product.rotation() * target / at_phi;
    rotation /= std::abs(rotation);
    return BlaschkeProduct(rotation, product.zeros());
}

double boundary_arg_derivative(std::span<const DiskPoint> zeros, Angle theta) {
    const std::complex<double> boundary = unit_point(theta);
    double sum = 0.0;
    for (const DiskPoint& zero : zeros) {
        sum += (1.0 - std::norm(zero.value())) / std::norm(boundary - zero.value());
    }
    return sum;
}

BlaschkeProduct multiply(const BlaschkeProduct& a, const BlaschkeProduct& b) {
    std::vector<DiskPoint> zeros = a.zeros();
    zeros.insert(zeros.end(), b.zeros().begin(), b.zeros().end());
    std::complex<double> rotation = a.rotation() * b.rotation();
    rotation /= std::abs(rotation);
    return BlaschkeProduct(rotation, std::move(zeros));
}

}  // namespace blaschke
