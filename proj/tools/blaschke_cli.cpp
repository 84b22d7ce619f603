// Command-line front end: solve partition problems, run the boundary
// interpolation constructions, verify results and render figures.

#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "blaschke/errors.hpp"
#include "blaschke/interpolation.hpp"
#include "blaschke/measure.hpp"
#include "blaschke/problem_io.hpp"
#include "blaschke/solver.hpp"
#include "blaschke/svg_plot.hpp"

namespace {

using namespace blaschke;

constexpr int exit_ok = 0;
constexpr int exit_input_error = 1;
constexpr int exit_no_convergence = 2;
constexpr int exit_target_unreachable = 3;
constexpr int exit_verification_failed = 4;

struct CommonFlags {
    std::string input;
    std::optional<std::string> output;
    std::optional<std::string> trace_path;
    std::optional<double> epsilon;
    std::optional<int> max_iterations;
    std::optional<double> seed_radius;
    std::string format = "text";
};

void apply_overrides(ProblemFile& problem, const CommonFlags& flags) {
    if (flags.epsilon) problem.epsilon = *flags.epsilon;
    if (flags.max_iterations) problem.max_iterations = *flags.max_iterations;
    if (flags.seed_radius) problem.initial_radius = *flags.seed_radius;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream stream(path, std::ios::binary);
    if (!stream) {
        throw InvalidInput("cannot write file: " + path);
    }
    stream << content;
    if (!stream.flush()) {
        throw InvalidInput("failed while writing file: " + path);
    }
}

void emit_result(const ResultFile& result, const CommonFlags& flags) {
    const std::string text = write_result(result);
    if (flags.output) {
        write_text_file(*flags.output, text);
        if (flags.format == "json") {
            std::cout << text;
        } else {
            std::cout << (result.converged ? "converged" : "not converged") << " after "
                      << result.iterations << " iterations, error " << result.error
                      << ", delta " << result.delta << "\n";
        }
    } else {
        std::cout << text;
    }
}

ResultFile result_from_solve(const SolveResult& solved) {
    ResultFile result;
    result.rotation = solved.product.rotation();
    for (const DiskPoint& zero : solved.product.zeros()) {
        result.zeros.push_back(zero.value());
    }
    result.measures = solved.trace.steps.back().measures.values();
    result.delta = separation_constant(solved.product);
    result.error = solved.trace.steps.back().error;
    result.iterations = solved.iterations;
    result.converged = solved.converged;
    return result;
}

int run_solve(const CommonFlags& flags, bool trace_only) {
    ProblemFile problem = load_problem(flags.input);
    apply_overrides(problem, flags);
    if (problem.mode != ProblemMode::partition) {
        throw InvalidInput("solve requires a partition-mode problem");
    }
    const Partition partition = partition_from_problem(problem);
    const SolverConfig config = solver_config_from_problem(problem);
    const SolveResult solved = solve(partition, config);

    if (trace_only) {
        const std::string trace_text = write_trace(solved.trace);
        if (flags.output) {
            write_text_file(*flags.output, trace_text);
        } else {
            std::cout << trace_text;
        }
    } else {
        if (flags.trace_path) {
            write_text_file(*flags.trace_path, write_trace(solved.trace));
        }
        emit_result(result_from_solve(solved), flags);
    }
    return solved.converged ? exit_ok : exit_no_convergence;
}

int run_interpolate(const CommonFlags& flags) {
    ProblemFile problem = load_problem(flags.input);
    apply_overrides(problem, flags);

    ResultFile result;
    if (problem.mode == ProblemMode::interpolation) {
        const InterpolationProblem instance = interpolation_from_problem(problem);
        InterpolationOptions options;
        options.enforce_value_bounds = problem.s.has_value() && problem.m.has_value();
        if (problem.initial_radius) {
            options.radius_floor = *problem.initial_radius;
        }
        const InterpolationOutcome outcome = solve_with_target_detailed(instance, options);

        result.rotation = outcome.product.rotation();
        for (const DiskPoint& zero : outcome.product.zeros()) {
            result.zeros.push_back(zero.value());
        }
        result.delta = separation_constant(outcome.product);
        result.error = std::max(outcome.node_residual, outcome.target_residual);
        result.iterations = static_cast<int>(outcome.inner_iterations);
        result.converged = true;
        result.degree = static_cast<int>(outcome.product.degree());
        if (options.enforce_value_bounds) {
            ResultChecks checks;
            checks.near_one = check_near_one(outcome.product, instance.s, instance.m);
            checks.radial_rays = check_radial_rays(
                outcome.product,
                std::span<const Angle>(instance.nodes.data(), instance.nodes.size() - 1),
                instance.m);
            if (outcome.product.degree() >= 2) {
                checks.zero_localization =
                    check_zero_localization(outcome.product, instance.nodes, instance.m);
            }
            result.checks = std::move(checks);
        }
    } else if (problem.mode == ProblemMode::fip) {
        const FipProblem instance = fip_from_problem(problem);
        const BlaschkeProduct product = solve_fip(instance, problem.separation_bound);

        result.rotation = product.rotation();
        for (const DiskPoint& zero : product.zeros()) {
            result.zeros.push_back(zero.value());
        }
        result.delta = separation_constant(product);
        double worst = 0.0;
        for (std::size_t i = 0; i < instance.nodes.size(); ++i) {
            worst = std::max(worst, std::abs(evaluate(product, unit_point(instance.nodes[i])) -
                                             instance.targets[i]));
        }
        result.error = worst;
        result.iterations = 0;
        result.converged = true;
        result.degree = static_cast<int>(product.degree());
    } else {
        throw InvalidInput("interpolate requires an interpolation- or fip-mode problem");
    }
    emit_result(result, flags);
    return exit_ok;
}

int run_verify(const std::string& result_path, const std::string& problem_path, double tol,
               const std::string& format) {
    const ResultFile result = load_result(result_path);
    const ProblemFile problem = load_problem(problem_path);
    const BlaschkeProduct product = product_from_result(result);

    if (problem.mode == ProblemMode::partition) {
        const Partition partition = partition_from_problem(problem);
        if (product.degree() != partition.size()) {
            throw InvalidInput("result degree does not match the problem arc count");
        }
        const VerificationReport report = verify_solution(product, partition, tol);
        if (format == "json") {
            std::printf("{\"pass\": %s, \"max_deviation\": %.17g, \"delta\": %.17g, "
                        "\"endpoint_spread\": %.17g, \"monotone\": %s}\n",
                        report.pass ? "true" : "false", report.max_deviation, report.delta,
                        report.endpoint_spread, report.monotone_ok ? "true" : "false");
        } else {
            std::printf("max measure deviation: %.6g (tolerance %.6g)\n", report.max_deviation,
                        tol);
            std::printf("separation constant:   %.6g\n", report.delta);
            std::printf("endpoint spread:       %.6g\n", report.endpoint_spread);
            std::printf("argument monotone:     %s\n", report.monotone_ok ? "yes" : "no");
            std::printf("verdict:               %s\n", report.pass ? "PASS" : "FAIL");
        }
        return report.pass ? exit_ok : exit_verification_failed;
    }

    // Node-value verification for the interpolation modes.
    double worst = 0.0;
    if (problem.mode == ProblemMode::interpolation) {
        for (std::size_t i = 0; i + 1 < problem.nodes.size(); ++i) {
            worst = std::max(worst, std::abs(evaluate(product, std::polar(1.0, problem.nodes[i])) - 1.0));
        }
        worst = std::max(worst, std::abs(evaluate(product, std::polar(1.0, problem.nodes.back())) -
                                         problem.beta));
    } else {
        if (problem.nodes.size() != problem.targets.size()) {
            throw InvalidInput("node and target counts differ");
        }
        for (std::size_t i = 0; i < problem.nodes.size(); ++i) {
            worst = std::max(worst, std::abs(evaluate(product, std::polar(1.0, problem.nodes[i])) -
                                             problem.targets[i]));
        }
    }
    const double delta = separation_constant(product);
    const bool pass = worst < tol && delta > 0.0;
    if (format == "json") {
        std::printf("{\"pass\": %s, \"max_deviation\": %.17g, \"delta\": %.17g}\n",
                    pass ? "true" : "false", worst, delta);
    } else {
        std::printf("max node deviation: %.6g (tolerance %.6g)\n", worst, tol);
        std::printf("separation constant: %.6g\n", delta);
        std::printf("verdict: %s\n", pass ? "PASS" : "FAIL");
    }
    return pass ? exit_ok : exit_verification_failed;
}

int run_plot(const std::string& result_path, const std::string& problem_path,
             const std::string& out_path, bool annulus) {
    const ResultFile result = load_result(result_path);
    const ProblemFile problem = load_problem(problem_path);

    PlotSpec spec;
    spec.zeros = result.zeros;
    if (problem.mode == ProblemMode::partition) {
        const Partition partition = partition_from_problem(problem);
        if (partition.size() > 1) {
            for (const Angle& point : partition.boundary_points()) {
                spec.boundary_ticks.push_back(point.radians());
            }
        }
        const std::vector<Angle> anchors =
            problem.anchors ? [&] {
                std::vector<Angle> list;
                for (double value : *problem.anchors) list.emplace_back(value);
                return list;
            }()
                            : partition.midpoints();
        for (const Angle& anchor : anchors) {
            spec.anchor_rays.push_back(anchor.radians());
        }
    } else {
        for (double node : problem.nodes) {
            spec.boundary_ticks.push_back(canonical_angle(node));
        }
        for (const auto& zero : result.zeros) {
            spec.anchor_rays.push_back(canonical_angle(std::arg(zero)));
        }
    }
    if (annulus && !result.zeros.empty()) {
        double smallest = 1.0;
        for (const auto& zero : result.zeros) {
            smallest = std::min(smallest, std::abs(zero));
        }
        spec.annulus_radius = smallest;
    }
    write_text_file(out_path, render_plot_svg(spec));
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite Blaschke products with prescribed boundary behavior"};
    app.require_subcommand(1);

    CommonFlags solve_flags;
    CLI::App* cmd_solve = app.add_subcommand("solve", "solve a partition problem");
    cmd_solve->add_option("problem", solve_flags.input, "problem file")->required();
    cmd_solve->add_option("--out", solve_flags.output, "result file path");
    cmd_solve->add_option("--trace", solve_flags.trace_path, "trace file path");
    cmd_solve->add_option("--epsilon", solve_flags.epsilon, "stopping accuracy override");
    cmd_solve->add_option("--max-iter", solve_flags.max_iterations, "iteration cap override");
    cmd_solve->add_option("--seed-radius", solve_flags.seed_radius, "initial radius override");
    cmd_solve->add_option("--format", solve_flags.format, "stdout format: json or text");

    CommonFlags trace_flags;
    CLI::App* cmd_trace = app.add_subcommand("trace", "solve and emit the iteration trace");
    cmd_trace->add_option("problem", trace_flags.input, "problem file")->required();
    cmd_trace->add_option("--out", trace_flags.output, "trace file path (default stdout)");
    cmd_trace->add_option("--epsilon", trace_flags.epsilon, "stopping accuracy override");
    cmd_trace->add_option("--max-iter", trace_flags.max_iterations, "iteration cap override");
    cmd_trace->add_option("--seed-radius", trace_flags.seed_radius, "initial radius override");

    CommonFlags interp_flags;
    CLI::App* cmd_interpolate =
        app.add_subcommand("interpolate", "solve an interpolation or fip problem");
    cmd_interpolate->add_option("problem", interp_flags.input, "problem file")->required();
    cmd_interpolate->add_option("--out", interp_flags.output, "result file path");
    cmd_interpolate->add_option("--seed-radius", interp_flags.seed_radius,
                                "initial radius floor");
    cmd_interpolate->add_option("--format", interp_flags.format, "stdout format: json or text");

    std::string verify_result, verify_problem;
    double verify_tol = 1e-6;
    std::string verify_format = "text";
    CLI::App* cmd_verify = app.add_subcommand("verify", "verify a result against its problem");
    cmd_verify->add_option("result", verify_result, "result file")->required();
    cmd_verify->add_option("problem", verify_problem, "problem file")->required();
    cmd_verify->add_option("--tol", verify_tol, "verification tolerance");
    cmd_verify->add_option("--format", verify_format, "report format: json or text");

    std::string plot_result, plot_problem, plot_out;
    bool plot_no_annulus = false;
    CLI::App* cmd_plot = app.add_subcommand("plot", "render a result as an SVG figure");
    cmd_plot->add_option("result", plot_result, "result file")->required();
    cmd_plot->add_option("problem", plot_problem, "problem file")->required();
    cmd_plot->add_option("--out", plot_out, "output SVG path")->required();
    cmd_plot->add_flag("--no-annulus", plot_no_annulus, "omit the shaded annulus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return exit_input_error;
    }

    try {
        if (cmd_solve->parsed()) return run_solve(solve_flags, false);
        if (cmd_trace->parsed()) return run_solve(trace_flags, true);
        if (cmd_interpolate->parsed()) return run_interpolate(interp_flags);
        if (cmd_verify->parsed())
            return run_verify(verify_result, verify_problem, verify_tol, verify_format);
        if (cmd_plot->parsed())
            return run_plot(plot_result, plot_problem, plot_out, !plot_no_annulus);
    } catch (const TargetUnreachable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_target_unreachable;
    } catch (const SeparationUnreachable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_target_unreachable;
    } catch (const BracketError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_no_convergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}
