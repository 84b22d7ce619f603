#pragma once

#include <complex>
#include <string>
#include <vector>

namespace blaschke {

/// Inputs for the figure-style rendering: the unit circle with boundary
/// ticks, anchor rays, zero dots and an optional shaded annulus.
struct PlotSpec {
    std::vector<double> boundary_ticks;  // angles in radians
    std::vector<double> anchor_rays;     // angles in radians
    std::vector<std::complex<double>> zeros;
    double annulus_radius = 0.0;  // 0 disables the shading
};

/// Deterministic SVG document: identical inputs produce identical bytes.
std::string render_plot_svg(const PlotSpec& spec);

}  // namespace blaschke
