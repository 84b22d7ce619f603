#pragma once

#include <complex>
#include <span>
#include <vector>

#include "blaschke/angle.hpp"
#include "blaschke/blaschke_product.hpp"

namespace blaschke {

/// Boundary interpolation instance with one prescribed value: the first N
/// node angles receive the value 1, the extra (last) node receives beta.
struct InterpolationProblem {
    std::vector<Angle> nodes;       ///< N + 1 distinct angles, extra point last
    std::complex<double> beta;      ///< unimodular target, != 1
    double s = 0.5;                 ///< near-one disk radius for check_near_one
    int m = 1;                      ///< strength exponent for the 2^-m bounds
    double separation_bound = 0.0;  ///< C
};

/// General finite interpolation problem B(node_n) = target_n.
struct FipProblem {
    std::vector<Angle> nodes;
    std::vector<std::complex<double>> targets;  ///< unimodular
};

struct CheckResult {
    bool pass = false;
    double worst = 0.0;
    double threshold = 0.0;
};

struct InterpolationOutcome {
    BlaschkeProduct product;
    double anchor_angle = 0.0;    ///< chosen free-ray angle for the sector zero
    double initial_radius = 0.0;  ///< radius shared by the inner runs
    int escalations = 0;
    long inner_iterations = 0;
    double node_residual = 0.0;    ///< max |B(node_j) - 1| over j <= N
    double target_residual = 0.0;  ///< |B(node_{N+1}) - beta|
};

struct InterpolationOptions {
    /// Lower bound on the shared inner radius.
    double radius_floor = 0.0;
    /// Escalate the radius until check_near_one and check_radial_rays pass
    /// for the problem's s and m.
    bool enforce_value_bounds = false;
    /// Where on each arc the fixed anchor rays sit, as a fraction of the
    /// arc length. Factor products use distinct fractions so no two
    /// factors share a ray.
    double ring_anchor_fraction = 0.5;
};

/// Builds a degree-N product with value 1 at the first N nodes and beta at
/// the extra node. The zero of the sector between the extra node's
/// neighbors moves along a searched ray; the search bisects the boundary
/// argument at the extra node over a sign-change bracket found by a
/// 32-point sector scan, re-running the measure solver at a fixed radius
/// for every probe. The radius is doubled toward 1 whenever no bracket
/// exists or the separation or value bounds fail.
BlaschkeProduct solve_with_target(const InterpolationProblem& problem);
InterpolationOutcome solve_with_target_detailed(const InterpolationProblem& problem,
                                                const InterpolationOptions& options = {});

/// Samples |1 - B| on 64 radii x 256 angles over |z| <= s; passes iff the
/// maximum stays below 2^(-m-2).
CheckResult check_near_one(const BlaschkeProduct& product, double s, int m);

/// Samples |1 - B| on 10^4 points of each radial ray (0, 1] * e^{i node};
/// passes iff the maximum stays below 2^(-m).
CheckResult check_radial_rays(const BlaschkeProduct& product, std::span<const Angle> ray_nodes,
                              int m);

/// Verifies (1 - |z|) / |z - e^{i node}| <= 2^(-m) for every zero except
/// the one in the sector adjacent to the extra (last) node, against all
/// N + 1 nodes. Requires degree >= 2.
CheckResult check_zero_localization(const BlaschkeProduct& product, std::span<const Angle> nodes,
                                    int m);

/// Solves B(node_n) = target_n as a product of per-node factors, each
/// fixing one target and value 1 elsewhere. Degree is at most N(N-1) for
/// N >= 2; factor radii are staggered and escalated until the combined
/// separation constant exceeds the bound.
BlaschkeProduct solve_fip(const FipProblem& problem, double separation_bound);

}  // namespace blaschke
