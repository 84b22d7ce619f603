#pragma once

#include <optional>
#include <span>
#include <vector>

#include "blaschke/arc.hpp"
#include "blaschke/blaschke_product.hpp"
#include "blaschke/measure.hpp"

namespace blaschke {

struct SolverConfig {
    /// Lower bound C < 1 the separation constant must exceed.
    double separation_bound = 0.0;
    /// Stop once the total measure error drops below this.
    double epsilon = 1e-6;
    int max_iterations = 100000;
    /// One ray angle per arc, each strictly inside its arc. Defaults to the
    /// arc midpoints.
    std::optional<std::vector<Angle>> anchors;
    /// Requested initial radius; honored when it meets the radius and
    /// separation requirements, otherwise the automatic search runs.
    std::optional<double> initial_radius;
};

/// One iteration record: the state at iteration k plus the move performed
/// from it. The terminal record has no move.
struct TraceStep {
    int iteration = 0;
    std::optional<int> moved_arc;
    double new_radius = 0.0;
    MeasureVector measures;
    double error = 0.0;
};

struct SolverTrace {
    double initial_radius = 0.0;
    std::vector<Angle> anchors;
    std::vector<TraceStep> steps;

    /// Zero radii of the state at iteration k, replayed from the moves.
    std::vector<double> radii_at(int k) const;
    std::vector<double> final_radii() const;
};

struct SolveResult {
    BlaschkeProduct product;
    SolverTrace trace;
    bool converged = false;
    /// Number of zero moves performed.
    int iterations = 0;
};

/// Smallest radius R >= max(radius floor, 0.5) of the doubling search
/// 1 - (1-R)/2 whose initial product clears the separation bound. A
/// requested override is returned unchanged when it is itself admissible.
double choose_initial_radius(const Partition& partition, std::span<const Angle> anchors,
                             double separation_bound,
                             std::optional<double> requested = std::nullopt);

/// Total deviation from the target measures: sum of |1 - value|.
double total_error(const MeasureVector& measures);

/// Radius in [current, 1) at which the arc's measure reaches 1 when the
/// arc's zero moves outward along its anchor ray. Bisection on the radius,
/// bracket [current, 1 - 1e-13], at most 60 halvings. Returns the current
/// radius when the measure is already at or above 1.
double radial_update(std::span<const DiskPoint> zeros, const Partition& partition,
                     int arc_index, Angle anchor);

/// Iterates: find the arc of smallest measure, move its zero outward until
/// that arc's measure is exactly 1, repeat until the total error drops
/// below epsilon. The result is rotation-normalized so the start point of
/// the first arc maps to 1. Non-convergence within max_iterations is
/// reported through `converged` with the partial trace attached.
SolveResult solve(const Partition& partition, const SolverConfig& config = {});

struct VerificationReport {
    std::vector<double> measure_deviations;  // |1 - mu| per arc
    double max_deviation = 0.0;
    double delta = 0.0;
    std::vector<double> windings;            // per-arc measure = arg winding / 2*pi
    std::vector<double> sampled_windings;    // 256-sample unwrapped cross-check
    double endpoint_spread = 0.0;            // max distance between boundary-point images
    bool measures_ok = false;
    bool delta_ok = false;
    bool endpoints_ok = false;
    bool monotone_ok = false;
    bool windings_ok = false;
    bool pass = false;  // measures_ok && delta_ok
};

/// Checks that the product maps every arc once onto the circle: per-arc
/// measure deviations, separation constant, common boundary-point image,
/// and a sampled-argument monotonicity sweep.
VerificationReport verify_solution(const BlaschkeProduct& product, const Partition& partition,
                                   double tol);

/// Largest consecutive error ratio E_{k+1}/E_k over the trace; below 1 for
/// geometric decay. Needs at least two records.
double convergence_ratio(const SolverTrace& trace);

}  // namespace blaschke
