#include "blaschke/svg_plot.hpp"

#include <cmath>
#include <cstdio>

namespace blaschke {

namespace {

std::string coord(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6f", value);
    return buffer;
}

// SVG y grows downward; mathematical y grows upward.
std::string point_attrs(const char* x_name, const char* y_name, double x, double y) {
    std::string out;
    out += ' ';
    out += x_name;
    out += "=\"" + coord(x) + "\" ";
    out += y_name;
    out += "=\"" + coord(-y) + "\"";
    return out;
}

}  // namespace

std::string render_plot_svg(const PlotSpec& spec) {
    std::string svg;
    svg +=
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.2 -1.2 2.4 2.4\" "
        "width=\"480\" height=\"480\">\n";

    if (spec.annulus_radius > 0.0) {
        svg += "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"#e0e0e0\" stroke=\"none\"/>\n";
        svg += "  <circle cx=\"0\" cy=\"0\" r=\"" + coord(spec.annulus_radius) +
               "\" fill=\"#ffffff\" stroke=\"none\"/>\n";
    }
    svg += "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#000000\" "
           "stroke-width=\"0.01\"/>\n";

    for (double angle : spec.anchor_rays) {
        const double x = std::cos(angle);
        const double y = std::sin(angle);
        svg += "  <line x1=\"0\" y1=\"0\"" + point_attrs("x2", "y2", x, y) +
               " stroke=\"#888888\" stroke-width=\"0.005\" stroke-dasharray=\"0.03,0.03\"/>\n";
    }

    for (double angle : spec.boundary_ticks) {
        const double c = std::cos(angle);
        const double s = std::sin(angle);
        svg += "  <line" + point_attrs("x1", "y1", 0.95 * c, 0.95 * s) +
               point_attrs("x2", "y2", 1.05 * c, 1.05 * s) +
               " stroke=\"#000000\" stroke-width=\"0.01\"/>\n";
    }

    for (const auto& zero : spec.zeros) {
        svg += "  <circle class=\"zero\"" + point_attrs("cx", "cy", zero.real(), zero.imag()) +
               " r=\"0.018\" fill=\"#000000\"/>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace blaschke
