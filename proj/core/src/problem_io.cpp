#include "blaschke/problem_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "blaschke/errors.hpp"

namespace blaschke {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON emission with fixed real formatting.

std::string format_real(double value) {
    if (!std::isfinite(value)) {
        throw InvalidInput("cannot serialize a non-finite real");
    }
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void escape_string(const std::string& text, std::string& out) {
    out += '"';
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    out += '"';
}

void dump(const json& value, std::string& out, int indent, int depth) {
    const auto pad = [&](int level) {
        if (indent >= 0) {
            out += '\n';
            out.append(static_cast<std::size_t>(indent) * level, ' ');
        }
    };
    switch (value.type()) {
        case json::value_t::null:
            out += "null";
            break;
        case json::value_t::boolean:
            out += value.get<bool>() ? "true" : "false";
            break;
        case json::value_t::number_integer:
            out += std::to_string(value.get<std::int64_t>());
            break;
        case json::value_t::number_unsigned:
            out += std::to_string(value.get<std::uint64_t>());
            break;
        case json::value_t::number_float:
            out += format_real(value.get<double>());
            break;
        case json::value_t::string:
            escape_string(value.get<std::string>(), out);
            break;
        case json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& item : value) {
                if (!first) out += ',';
                first = false;
                pad(depth + 1);
                dump(item, out, indent, depth + 1);
            }
            if (!value.empty()) pad(depth);
            out += ']';
            break;
        }
        case json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, item] : value.items()) {
                if (!first) out += ',';
                first = false;
                pad(depth + 1);
                escape_string(key, out);
                out += indent >= 0 ? ": " : ":";
                dump(item, out, indent, depth + 1);
            }
            if (!value.empty()) pad(depth);
            out += '}';
            break;
        }
        default:
            throw InvalidInput("unsupported JSON value type");
    }
}

std::string dump_pretty(const json& value) {
    std::string out;
    dump(value, out, 2, 0);
    out += '\n';
    return out;
}

std::string dump_line(const json& value) {
    std::string out;
    dump(value, out, -1, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Parsing helpers.

[[noreturn]] void fail_field(const std::string& field, const std::string& why) {
    throw InvalidInput("field '" + field + "': " + why);
}

double require_number(const json& j, const std::string& field) {
    if (!j.is_number()) {
        fail_field(field, "expected a number");
    }
    return j.get<double>();
}

int require_integer(const json& j, const std::string& field) {
    if (!j.is_number_integer() && !j.is_number_unsigned()) {
        fail_field(field, "expected an integer");
    }
    return j.get<int>();
}

std::complex<double> require_complex(const json& j, const std::string& field) {
    if (!j.is_object()) {
        fail_field(field, "expected an object with 're' and 'im'");
    }
    for (const auto& [key, _] : j.items()) {
        if (key != "re" && key != "im") {
            fail_field(field, "unknown subfield '" + key + "'");
        }
    }
    if (!j.contains("re") || !j.contains("im")) {
        fail_field(field, "expected both 're' and 'im'");
    }
    return {require_number(j.at("re"), field + ".re"),
            require_number(j.at("im"), field + ".im")};
}

void check_known_fields(const json& j, const std::set<std::string>& allowed,
                        const std::string& mode_name) {
    for (const auto& [key, _] : j.items()) {
        if (!allowed.contains(key)) {
            throw InvalidInput("unknown field '" + key + "' for mode '" + mode_name + "'");
        }
    }
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("invalid JSON: ") + e.what());
    }
}

json complex_to_json(std::complex<double> value) {
    return json{{"re", value.real()}, {"im", value.imag()}};
}

json check_to_json(const CheckResult& check) {
    return json{{"pass", check.pass}, {"worst", check.worst}, {"threshold", check.threshold}};
}

CheckResult check_from_json(const json& j, const std::string& field) {
    CheckResult check;
    if (!j.is_object()) {
        fail_field(field, "expected an object");
    }
    check.pass = j.at("pass").get<bool>();
    check.worst = require_number(j.at("worst"), field + ".worst");
    check.threshold = require_number(j.at("threshold"), field + ".threshold");
    return check;
}

}  // namespace

ProblemFile parse_problem(const std::string& json_text) {
    const json document = parse_document(json_text);
    if (!document.is_object()) {
        throw InvalidInput("problem file must be a JSON object");
    }
    if (!document.contains("mode")) {
        throw InvalidInput("missing field 'mode'");
    }
    if (!document.at("mode").is_string()) {
        fail_field("mode", "expected a string");
    }
    const std::string mode_name = document.at("mode").get<std::string>();

    ProblemFile problem;
    std::set<std::string> allowed{"mode", "C", "epsilon", "max_iterations", "pi"};
    if (mode_name == "partition") {
        problem.mode = ProblemMode::partition;
        allowed.insert({"arcs", "anchors", "R_override"});
    } else if (mode_name == "interpolation") {
        problem.mode = ProblemMode::interpolation;
        allowed.insert({"nodes", "beta", "s", "m", "R_override"});
    } else if (mode_name == "fip") {
        problem.mode = ProblemMode::fip;
        allowed.insert({"nodes", "targets"});
    } else {
        fail_field("mode", "must be 'partition', 'interpolation' or 'fip'");
    }
    check_known_fields(document, allowed, mode_name);

    double angle_scale = 1.0;
    if (document.contains("pi")) {
        if (!document.at("pi").is_boolean()) {
            fail_field("pi", "expected a boolean");
        }
        if (document.at("pi").get<bool>()) {
            angle_scale = std::numbers::pi;
        }
    }

    if (document.contains("C")) {
        problem.separation_bound = require_number(document.at("C"), "C");
        if (problem.separation_bound < 0.0 || !(problem.separation_bound < 1.0)) {
            fail_field("C", "must lie in [0, 1)");
        }
    }
    if (document.contains("epsilon")) {
        problem.epsilon = require_number(document.at("epsilon"), "epsilon");
        if (!(problem.epsilon > 0.0)) {
            fail_field("epsilon", "must be positive");
        }
    }
    if (document.contains("max_iterations")) {
        problem.max_iterations = require_integer(document.at("max_iterations"), "max_iterations");
        if (problem.max_iterations < 1) {
            fail_field("max_iterations", "must be positive");
        }
    }
    if (document.contains("R_override")) {
        const double r = require_number(document.at("R_override"), "R_override");
        if (!(r >= 0.0 && r < 1.0)) {
            fail_field("R_override", "must lie in [0, 1)");
        }
        problem.initial_radius = r;
    }

    switch (problem.mode) {
        case ProblemMode::partition: {
            if (!document.contains("arcs")) {
                throw InvalidInput("missing field 'arcs'");
            }
            const json& arcs = document.at("arcs");
            if (!arcs.is_array() || arcs.empty()) {
                fail_field("arcs", "expected a non-empty array");
            }
            for (const auto& entry : arcs) {
                if (!entry.is_object()) {
                    fail_field("arcs", "each arc must be an object with 'start' and 'end'");
                }
                for (const auto& [key, _] : entry.items()) {
                    if (key != "start" && key != "end") {
                        fail_field("arcs", "unknown subfield '" + key + "'");
                    }
                }
                if (!entry.contains("start") || !entry.contains("end")) {
                    fail_field("arcs", "each arc needs both 'start' and 'end'");
                }
                problem.arcs.emplace_back(
                    require_number(entry.at("start"), "arcs.start") * angle_scale,
                    require_number(entry.at("end"), "arcs.end") * angle_scale);
            }
            if (document.contains("anchors")) {
                const json& anchors = document.at("anchors");
                if (!anchors.is_array()) {
                    fail_field("anchors", "expected an array of angles");
                }
                std::vector<double> values;
                for (const auto& entry : anchors) {
                    values.push_back(require_number(entry, "anchors") * angle_scale);
                }
                if (values.size() != problem.arcs.size()) {
                    fail_field("anchors", "count must match the arc count");
                }
                problem.anchors = std::move(values);
            }
            break;
        }
        case ProblemMode::interpolation: {
            if (!document.contains("nodes")) {
                throw InvalidInput("missing field 'nodes'");
            }
            const json& nodes = document.at("nodes");
            if (!nodes.is_array() || nodes.size() < 2) {
                fail_field("nodes", "expected at least two angles");
            }
            for (const auto& entry : nodes) {
                problem.nodes.push_back(require_number(entry, "nodes") * angle_scale);
            }
            if (!document.contains("beta")) {
                throw InvalidInput("missing field 'beta'");
            }
            problem.beta = require_complex(document.at("beta"), "beta");
            if (std::fabs(std::abs(problem.beta) - 1.0) > 1e-12 ||
                std::abs(problem.beta - 1.0) <= 1e-12) {
                fail_field("beta", "must lie on the unit circle and differ from 1");
            }
            if (document.contains("s")) {
                const double s = require_number(document.at("s"), "s");
                if (!(s > 0.0 && s < 1.0)) {
                    fail_field("s", "must lie in (0, 1)");
                }
                problem.s = s;
            }
            if (document.contains("m")) {
                const int m = require_integer(document.at("m"), "m");
                if (m < 1) {
                    fail_field("m", "must be a positive integer");
                }
                problem.m = m;
            }
            break;
        }
        case ProblemMode::fip: {
            if (!document.contains("nodes")) {
                throw InvalidInput("missing field 'nodes'");
            }
            const json& nodes = document.at("nodes");
            if (!nodes.is_array() || nodes.empty()) {
                fail_field("nodes", "expected a non-empty array");
            }
            for (const auto& entry : nodes) {
                problem.nodes.push_back(require_number(entry, "nodes") * angle_scale);
            }
            if (!document.contains("targets")) {
                throw InvalidInput("missing field 'targets'");
            }
            const json& targets = document.at("targets");
            if (!targets.is_array() || targets.size() != nodes.size()) {
                fail_field("targets", "count must match the node count");
            }
            for (const auto& entry : targets) {
                const std::complex<double> target = require_complex(entry, "targets");
                if (std::fabs(std::abs(target) - 1.0) > 1e-12) {
                    fail_field("targets", "every target must be unimodular");
                }
                problem.targets.push_back(target);
            }
            break;
        }
    }
    return problem;
}

ProblemFile load_problem(const std::filesystem::path& path) {
    std::ifstream stream(path);
    if (!stream) {
        throw InvalidInput("cannot open problem file: " + path.string());
    }
    std::ostringstream text;
    text << stream.rdbuf();
    return parse_problem(text.str());
}

Partition partition_from_problem(const ProblemFile& problem) {
    if (problem.mode != ProblemMode::partition) {
        throw InvalidInput("problem is not in partition mode");
    }
    std::vector<Arc> arcs;
    arcs.reserve(problem.arcs.size());
    for (const auto& [start, end] : problem.arcs) {
        arcs.emplace_back(Angle(start), Angle(end));
    }
    return Partition::from_arcs(std::move(arcs));
}

SolverConfig solver_config_from_problem(const ProblemFile& problem) {
    SolverConfig config;
    config.separation_bound = problem.separation_bound;
    config.epsilon = problem.epsilon;
    config.max_iterations = problem.max_iterations;
    config.initial_radius = problem.initial_radius;
    if (problem.anchors) {
        std::vector<Angle> anchors;
        anchors.reserve(problem.anchors->size());
        for (double value : *problem.anchors) {
            anchors.emplace_back(value);
        }
        config.anchors = std::move(anchors);
    }
    return config;
}

InterpolationProblem interpolation_from_problem(const ProblemFile& problem) {
    if (problem.mode != ProblemMode::interpolation) {
        throw InvalidInput("problem is not in interpolation mode");
    }
    InterpolationProblem result;
    result.nodes.reserve(problem.nodes.size());
    for (double value : problem.nodes) {
        result.nodes.emplace_back(value);
    }
    result.beta = problem.beta;
    result.separation_bound = problem.separation_bound;
    if (problem.s) result.s = *problem.s;
    if (problem.m) result.m = *problem.m;
    return result;
}

FipProblem fip_from_problem(const ProblemFile& problem) {
    if (problem.mode != ProblemMode::fip) {
        throw InvalidInput("problem is not in fip mode");
    }
    FipProblem result;
    result.nodes.reserve(problem.nodes.size());
    for (double value : problem.nodes) {
        result.nodes.emplace_back(value);
    }
    result.targets = problem.targets;
    return result;
}

std::string write_result(const ResultFile& result) {
    json document;
    document["rotation"] = complex_to_json(result.rotation);
    json zeros = json::array();
    for (const auto& zero : result.zeros) {
        zeros.push_back(json{{"re", zero.real()},
                             {"im", zero.imag()},
                             {"radius", std::abs(zero)},
                             {"angle", canonical_angle(std::arg(zero))}});
    }
    document["zeros"] = std::move(zeros);
    document["measures"] = result.measures;
    document["delta"] = result.delta;
    document["error"] = result.error;
    document["iterations"] = result.iterations;
    document["converged"] = result.converged;
    if (result.degree) {
        document["degree"] = *result.degree;
    }
    if (result.checks) {
        json checks;
        if (result.checks->near_one) checks["near_one"] = check_to_json(*result.checks->near_one);
        if (result.checks->radial_rays)
            checks["radial_rays"] = check_to_json(*result.checks->radial_rays);
        if (result.checks->zero_localization)
            checks["zero_localization"] = check_to_json(*result.checks->zero_localization);
        document["checks"] = std::move(checks);
    }
    return dump_pretty(document);
}

ResultFile parse_result(const std::string& json_text) {
    const json document = parse_document(json_text);
    if (!document.is_object()) {
        throw InvalidInput("result file must be a JSON object");
    }
    ResultFile result;
    result.rotation = require_complex(document.at("rotation"), "rotation");
    const json& zeros = document.at("zeros");
    if (!zeros.is_array()) {
        fail_field("zeros", "expected an array");
    }
    for (const auto& entry : zeros) {
        if (!entry.is_object() || !entry.contains("re") || !entry.contains("im")) {
            fail_field("zeros", "each zero needs 're' and 'im'");
        }
        result.zeros.emplace_back(require_number(entry.at("re"), "zeros.re"),
                                  require_number(entry.at("im"), "zeros.im"));
    }
    const json& measures = document.at("measures");
    if (!measures.is_array()) {
        fail_field("measures", "expected an array");
    }
    for (const auto& entry : measures) {
        result.measures.push_back(require_number(entry, "measures"));
    }
    result.delta = require_number(document.at("delta"), "delta");
    result.error = require_number(document.at("error"), "error");
    result.iterations = require_integer(document.at("iterations"), "iterations");
    if (!document.at("converged").is_boolean()) {
        fail_field("converged", "expected a boolean");
    }
    result.converged = document.at("converged").get<bool>();
    if (document.contains("degree")) {
        result.degree = require_integer(document.at("degree"), "degree");
    }
    if (document.contains("checks")) {
        ResultChecks checks;
        const json& block = document.at("checks");
        if (block.contains("near_one")) {
            checks.near_one = check_from_json(block.at("near_one"), "checks.near_one");
        }
        if (block.contains("radial_rays")) {
            checks.radial_rays = check_from_json(block.at("radial_rays"), "checks.radial_rays");
        }
        if (block.contains("zero_localization")) {
            checks.zero_localization =
                check_from_json(block.at("zero_localization"), "checks.zero_localization");
        }
        result.checks = std::move(checks);
    }
    return result;
}

ResultFile load_result(const std::filesystem::path& path) {
    std::ifstream stream(path);
    if (!stream) {
        throw InvalidInput("cannot open result file: " + path.string());
    }
    std::ostringstream text;
    text << stream.rdbuf();
    return parse_result(text.str());
}

BlaschkeProduct product_from_result(const ResultFile& result) {
    std::vector<DiskPoint> zeros;
    zeros.reserve(result.zeros.size());
    for (const auto& zero : result.zeros) {
        zeros.emplace_back(zero);
    }
    return BlaschkeProduct(result.rotation, std::move(zeros));
}

std::string write_trace(const SolverTrace& trace) {
    std::string out;
    std::vector<double> radii(trace.anchors.size(), trace.initial_radius);
    for (const TraceStep& step : trace.steps) {
        std::vector<DiskPoint> zeros;
        zeros.reserve(radii.size());
        for (std::size_t i = 0; i < radii.size(); ++i) {
            zeros.push_back(DiskPoint::polar(radii[i], trace.anchors[i]));
        }
        json line;
        line["k"] = step.iteration;
        line["moved"] = step.moved_arc ? json(*step.moved_arc) : json(nullptr);
        line["new_radius"] = step.moved_arc ? json(step.new_radius) : json(nullptr);
        line["error"] = step.error;
        line["delta"] = separation_constant(BlaschkeProduct(1.0, std::move(zeros)));
        line["measures"] = step.measures.values();
        out += dump_line(line);
        out += '\n';
        if (step.moved_arc) {
            radii[*step.moved_arc] = step.new_radius;
        }
    }
    return out;
}

}  // namespace blaschke
