#include "blaschke/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "blaschke/errors.hpp"

namespace blaschke {

namespace {

constexpr double radius_cap = 1.0 - 1e-13;
// Degenerate-bracket threshold. Kept at float-noise level so repeated
// updates of an already-solved arc return the same radius, while genuine
// sub-1e-12 deficits still get bisected; a larger threshold would put a
// floor under the reachable total error.
constexpr double stall_tolerance = 1e-15;

std::vector<DiskPoint> zeros_on_rays(std::span<const double> radii,
                                     std::span<const Angle> anchors) {
    std::vector<DiskPoint> zeros;
    zeros.reserve(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        zeros.push_back(DiskPoint::polar(radii[i], anchors[i]));
    }
    return zeros;
}

std::vector<Angle> validated_anchors(const Partition& partition, const SolverConfig& config) {
    if (!config.anchors) {
        return partition.midpoints();
    }
    const std::vector<Angle>& anchors = *config.anchors;
    if (anchors.size() != partition.size()) {
        throw InvalidInput("anchor count must match arc count");
    }
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        if (!partition.arc(i).interior_contains(anchors[i])) {
            std::ostringstream msg;
            msg << "anchor " << i << " at angle " << anchors[i].radians()
                << " is not strictly inside its arc";
            throw InvalidInput(msg.str());
        }
    }
    return anchors;
}

}  // namespace

std::vector<double> SolverTrace::radii_at(int k) const {
    std::vector<double> radii(anchors.size(), initial_radius);
    for (const TraceStep& step : steps) {
        if (step.iteration >= k) {
            break;
        }
        if (step.moved_arc) {
            radii[*step.moved_arc] = step.new_radius;
        }
    }
    return radii;
}

std::vector<double> SolverTrace::final_radii() const {
    if (steps.empty()) {
        return std::vector<double>(anchors.size(), initial_radius);
    }
    return radii_at(steps.back().iteration);
}

double choose_initial_radius(const Partition& partition, std::span<const Angle> anchors,
                             double separation_bound, std::optional<double> requested) {
    if (!(separation_bound < 1.0)) {
        throw InvalidInput("separation bound must be below 1");
    }
    if (anchors.size() != partition.size()) {
        throw InvalidInput("anchor count must match arc count");
    }
    const double radius_floor = min_radius_for_monotonicity(partition);
    const auto delta_at = [&](double radius) {
        std::vector<double> radii(anchors.size(), radius);
        return separation_constant(BlaschkeProduct(1.0, zeros_on_rays(radii, anchors)));
    };
    if (requested) {
        const double r = *requested;
        if (r >= 0.0 && r < 1.0 && r >= radius_floor && delta_at(r) > separation_bound) {
            return r;
        }
    }
    double radius = std::max(radius_floor, 0.5);
    while (!(delta_at(radius) > separation_bound)) {
        radius = 1.0 - 0.5 * (1.0 - radius);
        if (1.0 - radius < 1e-9) {
            throw SeparationUnreachable("separation bound unreachable below the radius cap");
        }
    }
    return radius;
}

double total_error(const MeasureVector& measures) {
    double sum = 0.0;
    for (double value : measures.values()) {
        sum += std::fabs(1.0 - value);
    }
    return sum;
}

double radial_update(std::span<const DiskPoint> zeros, const Partition& partition,
                     int arc_index, Angle anchor) {
    if (arc_index < 0 || static_cast<std::size_t>(arc_index) >= partition.size()) {
        throw InvalidInput("arc index out of range");
    }
    const Arc& arc = partition.arc(arc_index);
    const double current = zeros[arc_index].radius();

    double fixed_mass = 0.0;
    for (std::size_t j = 0; j < zeros.size(); ++j) {
        if (j != static_cast<std::size_t>(arc_index)) {
            fixed_mass += arc_harmonic_measure(zeros[j], arc);
        }
    }
    const auto measure_at = [&](double radius) {
        return fixed_mass + arc_harmonic_measure(DiskPoint::polar(radius, anchor), arc);
    };

    if (measure_at(current) - 1.0 >= -stall_tolerance) {
        return current;  // degenerate bracket, nothing to move
    }
    double lo = current;
    double hi = radius_cap;
    if (measure_at(hi) < 1.0) {
        throw BracketError("no bracket: arc measure stays below 1 up to the radius cap");
    }
    // 60 halvings resolve the radius to ~1e-18, far past the measure
    // tolerance; stopping on |residual| alone would leave an error floor
    // that stalls tight epsilon targets.
    for (int iter = 0; iter < 60 && hi - lo > 1e-17; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (measure_at(mid) < 1.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

SolveResult solve(const Partition& partition, const SolverConfig& config) {
    if (!(config.epsilon > 0.0)) {
        throw InvalidInput("epsilon must be positive");
    }
    if (config.max_iterations < 1) {
        throw InvalidInput("max_iterations must be positive");
    }
    if (config.separation_bound < 0.0 || !(config.separation_bound < 1.0)) {
        throw InvalidInput("separation bound must lie in [0, 1)");
    }
    const std::vector<Angle> anchors = validated_anchors(partition, config);
    const double initial_radius = choose_initial_radius(partition, anchors,
                                                        config.separation_bound,
                                                        config.initial_radius);
    std::vector<double> radii(partition.size(), initial_radius);

    SolverTrace trace;
    trace.initial_radius = initial_radius;
    trace.anchors = anchors;

    bool converged = false;
    int k = 0;
    while (true) {
        const std::vector<DiskPoint> zeros = zeros_on_rays(radii, anchors);
        MeasureVector measures = mu_vector(zeros, partition);
        const double error = total_error(measures);
        if (error < config.epsilon) {
            trace.steps.push_back({k, std::nullopt, 0.0, std::move(measures), error});
            converged = true;
            break;
        }
        if (k >= config.max_iterations) {
            trace.steps.push_back({k, std::nullopt, 0.0, std::move(measures), error});
            break;
        }
        const auto& values = measures.values();
        const int moved = static_cast<int>(
            std::min_element(values.begin(), values.end()) - values.begin());
        const double new_radius = radial_update(zeros, partition, moved, anchors[moved]);
        trace.steps.push_back({k, moved, new_radius, std::move(measures), error});
        radii[moved] = new_radius;
        ++k;
    }

    BlaschkeProduct product = normalize_rotation(
        BlaschkeProduct(1.0, zeros_on_rays(radii, anchors)), partition.arc(0).start(), 1.0);
    return {std::move(product), std::move(trace), converged, k};
}

VerificationReport verify_solution(const BlaschkeProduct& product, const Partition& partition,
                                   double tol) {
    if (product.degree() != partition.size()) {
        throw InvalidInput("product degree must match the arc count");
    }
    VerificationReport report;
    const MeasureVector measures = mu_vector(product.zeros(), partition);
    report.windings = measures.values();
    report.measure_deviations.reserve(measures.size());
    for (double value : measures.values()) {
        report.measure_deviations.push_back(std::fabs(1.0 - value));
        report.max_deviation = std::max(report.max_deviation, report.measure_deviations.back());
    }
    report.delta = separation_constant(product);

    const std::vector<Angle> boundary = partition.boundary_points();
    const std::complex<double> reference = evaluate(product, unit_point(boundary.front()));
    for (const Angle& point : boundary) {
        report.endpoint_spread = std::max(
            report.endpoint_spread, std::abs(evaluate(product, unit_point(point)) - reference));
    }

    // Sampled-argument sweep: arg B must increase along each arc, and the
    // unwrapped total must reproduce the arc measure.
    constexpr int samples_per_arc = 256;
    report.monotone_ok = true;
    report.windings_ok = true;
    for (std::size_t n = 0; n < partition.size(); ++n) {
        const Arc& arc = partition.arc(n);
        const double start = arc.start().radians();
        const double step = arc.length() / samples_per_arc;
        double previous = std::arg(evaluate(product, std::polar(1.0, start)));
        double unwrapped = 0.0;
        for (int i = 1; i <= samples_per_arc; ++i) {
            const double current = std::arg(evaluate(product, std::polar(1.0, start + i * step)));
            double increment = current - previous;
            if (increment <= -std::numbers::pi) {
                increment += two_pi;
            } else if (increment > std::numbers::pi) {
                increment -= two_pi;
            }
            if (increment <= 0.0) {
                report.monotone_ok = false;
            }
            unwrapped += increment;
            previous = current;
        }
        report.sampled_windings.push_back(unwrapped / two_pi);
        if (std::fabs(report.sampled_windings.back() - measures[n]) > 1e-6) {
            report.windings_ok = false;
        }
    }

    report.measures_ok = report.max_deviation < tol;
    report.delta_ok = report.delta > 0.0;
    report.endpoints_ok = report.endpoint_spread <= tol;
    report.pass = report.measures_ok && report.delta_ok;
    return report;
}

double convergence_ratio(const SolverTrace& trace) {
    if (trace.steps.size() < 2) {
        throw InvalidInput("trace too short");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < trace.steps.size(); ++i) {
        const double current = trace.steps[i].error;
        const double next = trace.steps[i + 1].error;
        if (current > 0.0) {
            worst = std::max(worst, next / current);
        }
    }
    return worst;
}

}  // namespace blaschke
