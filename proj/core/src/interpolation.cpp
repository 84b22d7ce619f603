#include "blaschke/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "blaschke/errors.hpp"
#include "blaschke/measure.hpp"
#include "blaschke/solver.hpp"

namespace blaschke {

namespace {

constexpr double radius_cap = 1.0 - 1e-9;
constexpr double turn_tolerance = 1e-8;
constexpr double inner_epsilon = 1e-10;
constexpr double value_tolerance = 1e-6;

void validate_distinct(std::span<const Angle> nodes, const char* what) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            if (circular_distance(nodes[i], nodes[j]) <= angle_tolerance) {
                std::ostringstream msg;
                msg << what << ": angles " << i << " and " << j << " coincide";
                throw InvalidInput(msg.str());
            }
        }
    }
}

void validate_unimodular(std::complex<double> value, const char* what) {
    if (std::fabs(std::abs(value) - 1.0) > 1e-12) {
        std::ostringstream msg;
        msg << what << " must be unimodular";
        throw InvalidInput(msg.str());
    }
}

/// Node layout with the extra point placed in the wrap sector: ring holds
/// the first N nodes counterclockwise starting just past the extra point,
/// so the extra point lies in the open sector (ring.back(), ring.front()).
struct SectorLayout {
    std::vector<Angle> ring;
    Angle extra;
    Partition partition;
    double target_turn;  // canonical arg(beta) / 2*pi, in (0, 1)
};

SectorLayout build_layout(const std::vector<Angle>& nodes, std::complex<double> beta) {
    if (nodes.size() < 2) {
        throw InvalidInput("need at least one node plus the extra point");
    }
    validate_distinct(nodes, "nodes too close");
    validate_unimodular(beta, "beta");
    if (std::abs(beta - 1.0) <= 1e-12) {
        throw InvalidInput("beta must lie on the unit circle and differ from 1");
    }

    const Angle extra = nodes.back();
    std::vector<Angle> ring(nodes.begin(), nodes.end() - 1);
    std::sort(ring.begin(), ring.end(),
              [](Angle a, Angle b) { return a.radians() < b.radians(); });
    std::size_t successor = 0;
    while (successor < ring.size() && ring[successor].radians() < extra.radians()) {
        ++successor;
    }
    if (successor == ring.size()) {
        successor = 0;
    }
    std::rotate(ring.begin(), ring.begin() + successor, ring.end());

    std::vector<Arc> arcs;
    arcs.reserve(ring.size());
    for (std::size_t j = 0; j < ring.size(); ++j) {
        arcs.emplace_back(ring[j], ring[(j + 1) % ring.size()]);
    }
    Partition partition = Partition::from_arcs(std::move(arcs));
    const double target_turn = canonical_angle(std::arg(beta)) / two_pi;
    return {std::move(ring), extra, std::move(partition), target_turn};
}

struct Probe {
    SolveResult solved;
    double turn;
};

/// Unwrapped boundary-argument travel from the first ring node to the
/// extra point, in full turns modulo the integer part: the measure of the
/// sub-arc from the last ring node plus the defects of the full arcs
/// crossed on the way.
double boundary_turn(const SolveResult& solved, const SectorLayout& layout) {
    const Arc partial(layout.ring.back(), layout.extra);
    double turn = mu(solved.product.zeros(), partial);
    const MeasureVector& measures = solved.trace.steps.back().measures;
    for (std::size_t j = 0; j + 1 < layout.partition.size(); ++j) {
        turn += measures[j] - 1.0;
    }
    return turn;
}

std::vector<Angle> ring_anchors(const Partition& partition, double fraction) {
    std::vector<Angle> anchors;
    anchors.reserve(partition.size());
    for (const Arc& arc : partition.arcs()) {
        anchors.emplace_back(arc.start().radians() + fraction * arc.length());
    }
    return anchors;
}

Probe probe_anchor(const SectorLayout& layout, double anchor, double radius, double fraction,
                   long& inner_iterations) {
    std::vector<Angle> anchors = ring_anchors(layout.partition, fraction);
    anchors.back() = Angle(anchor);
    SolverConfig config;
    config.separation_bound = 0.0;
    config.epsilon = inner_epsilon;
    config.max_iterations = 200000;
    config.anchors = std::move(anchors);
    config.initial_radius = radius;
    SolveResult solved = solve(layout.partition, config);
    inner_iterations += solved.iterations;
    if (!solved.converged) {
        throw BracketError("inner solve failed to converge during the anchor search");
    }
    const double turn = boundary_turn(solved, layout);
    return {std::move(solved), turn};
}

struct AnchorHit {
    Probe probe;
    double anchor;
};

/// Scans the free sector for a sign change of turn(anchor) - target and
/// bisects it. Returns nothing when the radius is too small to bracket the
/// target turn.
std::optional<AnchorHit> search_anchor(const SectorLayout& layout, double radius, double fraction,
                                       long& inner_iterations) {
    const Arc& sector = layout.partition.arcs().back();
    const double start = sector.start().radians();
    const double span = sector.length();
    const double goal = layout.target_turn;

    // The default mid-ray is the first candidate.
    {
        const double anchor = start + 0.5 * span;
        Probe mid = probe_anchor(layout, anchor, radius, fraction, inner_iterations);
        if (std::fabs(mid.turn - goal) <= turn_tolerance) {
            return AnchorHit{std::move(mid), anchor};
        }
    }

    constexpr int scan_points = 32;
    double best_quality = 0.0;
    std::optional<std::pair<std::pair<double, double>, std::pair<double, double>>> bracket;
    std::optional<std::pair<double, double>> previous;  // (anchor, gap)
    for (int i = 0; i < scan_points; ++i) {
        const double anchor = start + span * (i + 0.5) / scan_points;
        Probe probe = probe_anchor(layout, anchor, radius, fraction, inner_iterations);
        const double gap = probe.turn - goal;
        if (std::fabs(gap) <= turn_tolerance) {
            return AnchorHit{std::move(probe), anchor};
        }
        if (previous && std::signbit(previous->second) != std::signbit(gap)) {
            const double quality = std::min(std::fabs(previous->second), std::fabs(gap));
            if (!bracket || quality < best_quality) {
                bracket = {{previous->first, previous->second}, {anchor, gap}};
                best_quality = quality;
            }
        }
        previous = {anchor, gap};
    }
    if (!bracket) {
        return std::nullopt;
    }

    auto [lo, hi] = *bracket;
    for (int iter = 0; iter < 100 && hi.first - lo.first > 1e-14; ++iter) {
        if (!(lo.second * hi.second < 0.0)) {
            throw std::logic_error("anchor bisection lost its sign-change bracket");
        }
        const double anchor = 0.5 * (lo.first + hi.first);
        Probe probe = probe_anchor(layout, anchor, radius, fraction, inner_iterations);
        const double gap = probe.turn - goal;
        if (std::fabs(gap) <= turn_tolerance) {
            return AnchorHit{std::move(probe), anchor};
        }
        if (std::signbit(gap) == std::signbit(lo.second)) {
            lo = {anchor, gap};
        } else {
            hi = {anchor, gap};
        }
    }
    return std::nullopt;  // bracket exhausted without meeting the turn tolerance
}

}  // namespace

BlaschkeProduct solve_with_target(const InterpolationProblem& problem) {
    return solve_with_target_detailed(problem).product;
}

InterpolationOutcome solve_with_target_detailed(const InterpolationProblem& problem,
                                                const InterpolationOptions& options) {
    if (problem.separation_bound < 0.0 || !(problem.separation_bound < 1.0)) {
        throw InvalidInput("separation bound must lie in [0, 1)");
    }
    if (!(problem.s > 0.0 && problem.s < 1.0)) {
        throw InvalidInput("s must lie in (0, 1)");
    }
    if (problem.m < 1) {
        throw InvalidInput("m must be a positive integer");
    }
    if (!(options.ring_anchor_fraction > 0.0 && options.ring_anchor_fraction < 1.0)) {
        throw InvalidInput("ring anchor fraction must lie in (0, 1)");
    }
    const SectorLayout layout = build_layout(problem.nodes, problem.beta);
    const double fraction = options.ring_anchor_fraction;
    std::vector<Angle> initial_anchors = ring_anchors(layout.partition, fraction);
    initial_anchors.back() = layout.partition.arcs().back().midpoint();

    double radius =
        choose_initial_radius(layout.partition, initial_anchors, problem.separation_bound);
    radius = std::max(radius, options.radius_floor);

    long inner_iterations = 0;
    for (int escalation = 0;; ++escalation, radius = 1.0 - 0.5 * (1.0 - radius)) {
        if (radius >= radius_cap) {
            throw TargetUnreachable("target unreachable at radius cap");
        }
        std::optional<AnchorHit> hit = search_anchor(layout, radius, fraction, inner_iterations);
        if (!hit) {
            continue;
        }
        BlaschkeProduct& product = hit->probe.solved.product;
        if (!(separation_constant(product) > problem.separation_bound)) {
            continue;
        }
        if (options.enforce_value_bounds) {
            if (!check_near_one(product, problem.s, problem.m).pass) {
                continue;
            }
            if (!check_radial_rays(product, layout.ring, problem.m).pass) {
                continue;
            }
        }
        double node_residual = 0.0;
        for (const Angle& node : layout.ring) {
            node_residual = std::max(node_residual,
                                     std::abs(evaluate(product, unit_point(node)) - 1.0));
        }
        const double target_residual =
            std::abs(evaluate(product, unit_point(layout.extra)) - problem.beta);
        if (target_residual > value_tolerance || node_residual > value_tolerance) {
            continue;
        }
        return {std::move(product), hit->anchor,       radius,
                escalation,         inner_iterations,  node_residual,
                target_residual};
    }
}

CheckResult check_near_one(const BlaschkeProduct& product, double s, int m) {
    if (!(s > 0.0 && s < 1.0)) {
        throw InvalidInput("s must lie in (0, 1)");
    }
    if (m < 0) {
        throw InvalidInput("m must be nonnegative");
    }
    const double threshold = std::ldexp(1.0, -m - 2);
    constexpr int radial_samples = 64;
    constexpr int angular_samples = 256;
    double worst = 0.0;
    for (int ir = 0; ir < radial_samples; ++ir) {
        const double r = s * ir / (radial_samples - 1);
        for (int ia = 0; ia < angular_samples; ++ia) {
            const double theta = two_pi * ia / angular_samples;
            worst = std::max(worst, std::abs(1.0 - evaluate(product, std::polar(r, theta))));
        }
    }
    return {worst < threshold, worst, threshold};
}

CheckResult check_radial_rays(const BlaschkeProduct& product, std::span<const Angle> ray_nodes,
                              int m) {
    if (m < 0) {
        throw InvalidInput("m must be nonnegative");
    }
    const double threshold = std::ldexp(1.0, -m);
    constexpr int samples = 10000;
    double worst = 0.0;
    for (const Angle& node : ray_nodes) {
        const std::complex<double> direction = unit_point(node);
        for (int i = 1; i <= samples; ++i) {
            const double r = static_cast<double>(i) / samples;
            worst = std::max(worst, std::abs(1.0 - evaluate(product, r * direction)));
        }
    }
    return {worst < threshold, worst, threshold};
}

CheckResult check_zero_localization(const BlaschkeProduct& product, std::span<const Angle> nodes,
                                    int m) {
    if (product.degree() < 2) {
        throw InvalidInput("zero localization needs degree >= 2");
    }
    if (nodes.size() < 2) {
        throw InvalidInput("nodes must include the extra point");
    }
    if (m < 0) {
        throw InvalidInput("m must be nonnegative");
    }
    const double threshold = std::ldexp(1.0, -m);
    const Angle extra = nodes.back();
    std::vector<Angle> ring(nodes.begin(), nodes.end() - 1);
    std::sort(ring.begin(), ring.end(),
              [](Angle a, Angle b) { return a.radians() < b.radians(); });
    std::optional<Arc> sector;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Arc candidate(ring[i], ring[(i + 1) % ring.size()]);
        if (candidate.contains(extra)) {
            sector = candidate;
            break;
        }
    }

    const auto& zeros = product.zeros();
    const std::complex<double> extra_point = unit_point(extra);
    std::size_t sector_zero = 0;
    double closest = std::numeric_limits<double>::infinity();
    bool found_in_sector = false;
    for (std::size_t j = 0; j < zeros.size(); ++j) {
        const bool inside = sector && sector->contains(zeros[j].angle());
        if (found_in_sector && !inside) {
            continue;
        }
        const double distance = std::abs(zeros[j].value() - extra_point);
        if ((inside && !found_in_sector) || distance < closest) {
            sector_zero = j;
            closest = distance;
            found_in_sector = found_in_sector || inside;
        }
    }

    double worst = 0.0;
    for (std::size_t j = 0; j < zeros.size(); ++j) {
        if (j == sector_zero) {
            continue;
        }
        const double boundary_gap = 1.0 - zeros[j].radius();
        for (const Angle& node : nodes) {
            worst = std::max(worst, boundary_gap / std::abs(zeros[j].value() - unit_point(node)));
        }
    }
    return {worst <= threshold, worst, threshold};
}

BlaschkeProduct solve_fip(const FipProblem& problem, double separation_bound) {
    const std::size_t n = problem.nodes.size();
    if (n == 0) {
        throw InvalidInput("interpolation problem requires at least one node");
    }
    if (problem.targets.size() != n) {
        throw InvalidInput("node and target counts differ");
    }
    validate_distinct(problem.nodes, "duplicate nodes");
    for (const auto& target : problem.targets) {
        validate_unimodular(target, "target");
    }
    if (separation_bound < 0.0 || !(separation_bound < 1.0)) {
        throw InvalidInput("separation bound must lie in [0, 1)");
    }

    if (n == 1) {
        std::vector<DiskPoint> zeros;
        zeros.emplace_back(std::complex<double>(0.0, 0.0));
        std::complex<double> rotation =
            problem.targets.front() * std::conj(unit_point(problem.nodes.front()));
        return BlaschkeProduct(rotation / std::abs(rotation), std::move(zeros));
    }

    std::vector<std::size_t> active;
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(problem.targets[k] - 1.0) > 1e-12) {
            active.push_back(k);
        }
    }

    if (active.empty()) {
        // Every target is 1: a single common-value product over all nodes.
        std::vector<Angle> ring = problem.nodes;
        std::sort(ring.begin(), ring.end(),
                  [](Angle a, Angle b) { return a.radians() < b.radians(); });
        std::vector<Arc> arcs;
        for (std::size_t j = 0; j < ring.size(); ++j) {
            arcs.emplace_back(ring[j], ring[(j + 1) % ring.size()]);
        }
        SolverConfig config;
        config.separation_bound = separation_bound;
        config.epsilon = inner_epsilon;
        return solve(Partition::from_arcs(std::move(arcs)), config).product;
    }

    // Keep the factors' zeros apart two ways: every factor anchors its rays
    // at a different fraction of each arc, and the factor radius floors are
    // staggered geometrically. Escalating shrinks the stagger ratio and
    // pushes the floors toward the boundary until the combined separation
    // clears the bound.
    const std::size_t factors = active.size();
    for (int attempt = 0; attempt < 24; ++attempt) {
        const double base_gap = 0.5 * std::pow(0.5, attempt);
        const double stagger = std::clamp(
            0.25 * (1.0 - separation_bound) * std::pow(0.5, attempt), 1e-6, 0.5);
        if (base_gap * std::pow(stagger, static_cast<double>(factors) - 1.0) < 3e-9) {
            break;  // the deepest floor would cross the radius cap
        }
        std::optional<BlaschkeProduct> combined;
        for (std::size_t index = 0; index < factors; ++index) {
            const std::size_t k = active[index];
            InterpolationProblem factor;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != k) {
                    factor.nodes.push_back(problem.nodes[j]);
                }
            }
            factor.nodes.push_back(problem.nodes[k]);
            factor.beta = problem.targets[k];
            factor.separation_bound = 0.0;
            InterpolationOptions options;
            options.radius_floor = 1.0 - base_gap * std::pow(stagger, index);
            options.ring_anchor_fraction =
                factors == 1 ? 0.5 : 0.3 + 0.4 * index / (factors - 1.0);
            BlaschkeProduct piece = solve_with_target_detailed(factor, options).product;
            combined = combined ? multiply(*combined, piece) : std::move(piece);
        }
        if (separation_constant(*combined) > separation_bound) {
            return std::move(*combined);
        }
    }
    throw TargetUnreachable(
        "combined separation bound unreachable below the radius cap");
}

}  // namespace blaschke
