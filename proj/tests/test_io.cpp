#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "blaschke/errors.hpp"
#include "blaschke/problem_io.hpp"
#include "blaschke/solver.hpp"
#include "blaschke/svg_plot.hpp"

#include "support.hpp"

using namespace blaschke;

namespace {
constexpr double pi = std::numbers::pi;

const char* six_arc_problem = R"({
  "mode": "partition",
  "pi": true,
  "arcs": [
    {"start": -0.1, "end": 0.1},
    {"start": 0.1, "end": 0.7},
    {"start": 0.7, "end": 1.3},
    {"start": 1.3, "end": 1.6},
    {"start": 1.6, "end": 1.7},
    {"start": 1.7, "end": 1.9}
  ],
  "C": 0.7,
  "epsilon": 1e-8,
  "R_override": 0.86
})";
}  // namespace

TEST_SUITE("io") {

TEST_CASE("partition problems parse with pi scaling") {
    const ProblemFile problem = parse_problem(six_arc_problem);
    CHECK(problem.mode == ProblemMode::partition);
    CHECK(problem.separation_bound == 0.7);
    CHECK(problem.epsilon == 1e-8);
    REQUIRE(problem.initial_radius.has_value());
    CHECK(*problem.initial_radius == 0.86);

    const Partition partition = partition_from_problem(problem);
    CHECK(partition.size() == 6);
    CHECK(partition.min_arc_length() == doctest::Approx(pi / 10));
    CHECK(partition.arc(0).midpoint().radians() == doctest::Approx(0.0).epsilon(1e-12));

    // anchors pass through into the solver configuration, pi-scaled
    const ProblemFile anchored = parse_problem(R"({
      "mode": "partition",
      "pi": true,
      "arcs": [{"start": 0.0, "end": 1.0}, {"start": 1.0, "end": 2.0}],
      "anchors": [0.4, 1.6]
    })");
    const SolverConfig config = solver_config_from_problem(anchored);
    REQUIRE(config.anchors.has_value());
    CHECK((*config.anchors)[0].radians() == doctest::Approx(0.4 * pi));
    CHECK((*config.anchors)[1].radians() == doctest::Approx(1.6 * pi));
    CHECK(solve(partition_from_problem(anchored), config).converged);

    CHECK_THROWS_WITH_AS(parse_problem(R"({
      "mode": "partition",
      "arcs": [{"start": 0.0, "end": 3.141592653589793},
               {"start": 3.141592653589793, "end": 0.0}],
      "anchors": [1.0]
    })"),
                         doctest::Contains("anchors"), InvalidInput);
}

TEST_CASE("unknown and malformed fields are named in diagnostics") {
    CHECK_THROWS_WITH_AS(parse_problem(R"({"mode": "partition", "arcs": [], "bogus": 1})"),
                         doctest::Contains("bogus"), InvalidInput);
    CHECK_THROWS_WITH_AS(parse_problem(R"({"arcs": []})"), doctest::Contains("mode"),
                         InvalidInput);
    CHECK_THROWS_WITH_AS(parse_problem(R"({"mode": "partition", "arcs": [], "C": 1.5})"),
                         doctest::Contains("C"), InvalidInput);
    CHECK_THROWS_AS(parse_problem("not json"), InvalidInput);
    CHECK_THROWS_WITH_AS(
        parse_problem(R"({"mode": "interpolation", "nodes": [0, 1, 2],
                          "beta": {"re": 1.0, "im": 0.0}})"),
        doctest::Contains("beta"), InvalidInput);
    // overlap diagnostics surface through partition construction
    const ProblemFile overlapping = parse_problem(
        R"({"mode": "partition", "arcs": [{"start": 0.0, "end": 3.3},
                                           {"start": 3.14159, "end": 0.0}]})");
    CHECK_THROWS_WITH_AS(partition_from_problem(overlapping), doctest::Contains("overlap"),
                         InvalidInput);
}

TEST_CASE("interpolation and fip problems parse") {
    const ProblemFile interp = parse_problem(R"({
      "mode": "interpolation",
      "nodes": [0.0, 2.0, 4.0, 5.5],
      "beta": {"re": -1.0, "im": 0.0},
      "s": 0.3, "m": 3, "C": 0.5
    })");
    const InterpolationProblem instance = interpolation_from_problem(interp);
    CHECK(instance.nodes.size() == 4);
    CHECK(instance.beta == std::complex<double>(-1.0, 0.0));
    CHECK(instance.s == 0.3);
    CHECK(instance.m == 3);

    const ProblemFile fip = parse_problem(R"({
      "mode": "fip",
      "nodes": [0.0, 1.5, 3.0],
      "targets": [{"re": 1.0, "im": 0.0}, {"re": 0.0, "im": 1.0}, {"re": -1.0, "im": 0.0}]
    })");
    const FipProblem fip_instance = fip_from_problem(fip);
    CHECK(fip_instance.nodes.size() == 3);
    CHECK(fip_instance.targets[1] == std::complex<double>(0.0, 1.0));

    CHECK_THROWS_WITH_AS(parse_problem(R"({"mode": "fip", "nodes": [0.0],
                                           "targets": [{"re": 0.5, "im": 0.0}]})"),
                         doctest::Contains("targets"), InvalidInput);
}

TEST_CASE("result files round-trip bit-exactly") {
    const Partition partition = test_support::six_arc_partition();
    SolverConfig config;
    config.separation_bound = 0.7;
    config.initial_radius = 0.86;
    const SolveResult solved = solve(partition, config);

    ResultFile result;
    result.rotation = solved.product.rotation();
    for (const DiskPoint& zero : solved.product.zeros()) result.zeros.push_back(zero.value());
    result.measures = solved.trace.steps.back().measures.values();
    result.delta = separation_constant(solved.product);
    result.error = solved.trace.steps.back().error;
    result.iterations = solved.iterations;
    result.converged = solved.converged;

    const std::string text = write_result(result);
    const ResultFile reread = parse_result(text);
    CHECK(reread.rotation == result.rotation);  // bitwise, via 17 significant digits
    REQUIRE(reread.zeros.size() == result.zeros.size());
    for (std::size_t i = 0; i < result.zeros.size(); ++i) {
        CHECK(reread.zeros[i] == result.zeros[i]);
    }
    for (std::size_t i = 0; i < result.measures.size(); ++i) {
        CHECK(reread.measures[i] == result.measures[i]);
    }
    CHECK(reread.delta == result.delta);
    CHECK(reread.error == result.error);
    CHECK(reread.iterations == result.iterations);
    CHECK(reread.converged == result.converged);
    CHECK(write_result(reread) == text);  // stable bytes

    const BlaschkeProduct rebuilt = product_from_result(reread);
    CHECK(rebuilt.degree() == solved.product.degree());
    CHECK(verify_solution(rebuilt, partition, 1e-6).pass);
}

TEST_CASE("awkward doubles survive the writer") {
    ResultFile result;
    result.rotation = {0.1, -1.0 / 3.0};
    result.zeros = {{1e-300, 0.12345678901234567}, {-0.86, 2.2250738585072014e-308}};
    result.measures = {1.0, 1.0 + 2.220446049250313e-16};
    result.delta = 0.3;
    result.error = 5e-324;  // smallest subnormal
    const ResultFile reread = parse_result(write_result(result));
    CHECK(reread.rotation == result.rotation);
    CHECK(reread.zeros[0] == result.zeros[0]);
    CHECK(reread.zeros[1] == result.zeros[1]);
    CHECK(reread.measures[1] == result.measures[1]);
    CHECK(reread.error == result.error);
}

TEST_CASE("traces are line-delimited with one iteration per line") {
    const Partition partition = test_support::six_arc_partition();
    SolverConfig config;
    config.separation_bound = 0.7;
    config.initial_radius = 0.86;
    config.epsilon = 1e-300;
    config.max_iterations = 5;
    const SolveResult solved = solve(partition, config);
    const std::string trace_text = write_trace(solved.trace);

    std::size_t lines = 0;
    for (char c : trace_text) lines += c == '\n';
    CHECK(lines == solved.trace.steps.size());
    CHECK(trace_text.find("\"k\":0") != std::string::npos);
    CHECK(trace_text.find("\"moved\":4") != std::string::npos);   // arc 5 moves first
    CHECK(trace_text.find("\"moved\":null") != std::string::npos);
    CHECK(trace_text.find("\"delta\":0.70") != std::string::npos);
}

TEST_CASE("plots are deterministic") {
    PlotSpec spec;
    spec.boundary_ticks = {0.0, pi / 2, pi};
    spec.anchor_rays = {0.3, 2.0};
    spec.zeros = {{0.5, 0.2}, {-0.4, 0.7}};
    spec.annulus_radius = 0.86;
    const std::string first = render_plot_svg(spec);
    const std::string second = render_plot_svg(spec);
    CHECK(first == second);
    CHECK(first.rfind("<svg", 0) == 0);
    std::size_t zero_dots = 0;
    for (std::size_t pos = first.find("class=\"zero\""); pos != std::string::npos;
         pos = first.find("class=\"zero\"", pos + 1)) {
        ++zero_dots;
    }
    CHECK(zero_dots == 2);
}

}  // TEST_SUITE
