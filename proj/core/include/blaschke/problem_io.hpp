#pragma once

#include <complex>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "blaschke/arc.hpp"
#include "blaschke/interpolation.hpp"
#include "blaschke/solver.hpp"

namespace blaschke {

enum class ProblemMode { partition, interpolation, fip };

/// Parsed problem description. Angles are radians after the optional
/// "pi": true scaling (values interpreted as multiples of pi).
struct ProblemFile {
    ProblemMode mode = ProblemMode::partition;
    std::vector<std::pair<double, double>> arcs;  // (start, end), partition mode
    std::optional<std::vector<double>> anchors;
    std::vector<double> nodes;                    // interpolation / fip modes
    std::vector<std::complex<double>> targets;    // fip mode
    std::complex<double> beta{0.0, 0.0};          // interpolation mode
    std::optional<double> s;
    std::optional<int> m;
    double separation_bound = 0.0;  // C
    double epsilon = 1e-6;
    int max_iterations = 100000;
    std::optional<double> initial_radius;  // R_override
};

/// Parses and validates a problem document. Unknown fields are rejected;
/// diagnostics name the offending field.
ProblemFile parse_problem(const std::string& json_text);
ProblemFile load_problem(const std::filesystem::path& path);

Partition partition_from_problem(const ProblemFile& problem);
SolverConfig solver_config_from_problem(const ProblemFile& problem);
InterpolationProblem interpolation_from_problem(const ProblemFile& problem);
FipProblem fip_from_problem(const ProblemFile& problem);

struct ResultChecks {
    std::optional<CheckResult> near_one;
    std::optional<CheckResult> radial_rays;
    std::optional<CheckResult> zero_localization;
};

/// Solver or interpolation output in file form. Round-trips binary64
/// values exactly; reals are written with 17 significant digits.
struct ResultFile {
    std::complex<double> rotation{1.0, 0.0};
    std::vector<std::complex<double>> zeros;
    std::vector<double> measures;
    double delta = 0.0;
    double error = 0.0;
    int iterations = 0;
    bool converged = false;
    std::optional<int> degree;
    std::optional<ResultChecks> checks;
};

std::string write_result(const ResultFile& result);
ResultFile parse_result(const std::string& json_text);
ResultFile load_result(const std::filesystem::path& path);

BlaschkeProduct product_from_result(const ResultFile& result);

/// Line-delimited trace, one iteration per line. Each line carries the
/// iteration index, the moved arc (null on the terminal record), the new
/// radius, the error, the separation constant of the iterate, and the
/// measure vector.
std::string write_trace(const SolverTrace& trace);

}  // namespace blaschke
