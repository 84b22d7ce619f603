#include "blaschke/measure.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "blaschke/errors.hpp"

namespace blaschke {

namespace {

double poisson_kernel(const std::complex<double>& z, double theta) {
    const std::complex<double> boundary{std::cos(theta), std::sin(theta)};
    return (1.0 - std::norm(z)) / std::norm(boundary - z);
}

}  // namespace

MeasureVector::MeasureVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw InvalidInput("measure vector must not be empty");
    }
    const double n = static_cast<double>(values_.size());
    double sum = 0.0;
    for (double value : values_) {
        if (!(value > 0.0) || value > n + 1e-9) {
            std::ostringstream msg;
            msg << "arc measure " << value << " outside (0, " << values_.size() << "]";
            throw std::logic_error(msg.str());
        }
        sum += value;
    }
    if (std::fabs(sum - n) > 1e-8) {
        std::ostringstream msg;
        msg << "measure vector sums to " << sum << ", expected " << values_.size()
            << "; arc bookkeeping is inconsistent";
        throw std::logic_error(msg.str());
    }
}

double MeasureVector::total() const {
    double sum = 0.0;
    for (double value : values_) {
        sum += value;
    }
    return sum;
}

double arc_harmonic_measure(const DiskPoint& z, const Arc& arc) {
    if (arc.is_full_circle()) {
        return 1.0;
    }
    const std::complex<double> p = z.value();
    const std::complex<double> a = unit_point(arc.start());
    const std::complex<double> b = unit_point(arc.end());
    const std::complex<double> image_a = (a - p) / (1.0 - std::conj(p) * a);
    const std::complex<double> image_b = (b - p) / (1.0 - std::conj(p) * b);
    // Disk automorphisms preserve boundary orientation, so the image arc runs
    // counterclockwise from image_a to image_b.
    const double gap = canonical_angle(std::arg(image_b) - std::arg(image_a));
    return gap / two_pi;
}

double poisson_quadrature_oracle(const DiskPoint& z, const Arc& arc, int n_points) {
    if (n_points < 16) {
        throw InvalidInput("quadrature needs at least 16 points");
    }
    const double step = arc.length() / n_points;
    const double start = arc.start().radians();
    double sum = 0.0;
    for (int i = 0; i < n_points; ++i) {
        sum += poisson_kernel(z.value(), start + (i + 0.5) * step);
    }
    return sum * step / two_pi;
}

double mu(std::span<const DiskPoint> zeros, const Arc& arc) {
    if (zeros.empty()) {
        throw InvalidInput("mu requires at least one zero");
    }
    double sum = 0.0;
    for (const DiskPoint& zero : zeros) {
        sum += arc_harmonic_measure(zero, arc);
    }
    return sum;
}

MeasureVector mu_vector(std::span<const DiskPoint> zeros, const Partition& partition) {
    if (zeros.size() != partition.size()) {
        throw InvalidInput("zero count must match arc count");
    }
    std::vector<double> values;
    values.reserve(partition.size());
    for (const Arc& arc : partition.arcs()) {
        values.push_back(mu(zeros, arc));
    }
    return MeasureVector(std::move(values));
}

double min_radius_for_monotonicity(const Partition& partition) {
    const double shortest = partition.min_arc_length();
    if (shortest >= std::numbers::pi) {
        return 0.0;
    }
    const double half = 0.5 * shortest;
    return std::max(0.0, (1.0 - std::sin(half)) / std::cos(half));
}

}  // namespace blaschke
