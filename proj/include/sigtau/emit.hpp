#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sigtau/billiard.hpp"
#include "sigtau/enumerate.hpp"

namespace sigtau {

// Shared look of every figure. All emitters are pure functions of their
// data plus a style, and every byte of output is determined by them: no
// timestamps, no randomness, coordinates printed with at most six
// significant digits.
struct FigureStyle {
    int canvas_size = 640;  // square canvas, pixels
    int margin = 40;
    std::vector<std::string> palette = {"red",   "orange", "yellow",
                                        "green", "blue",   "violet"};
    double stroke_width = 2.0;
    double hair_width = 0.5;  // grids, axes, reference lines
    double point_radius = 4.0;
};

// Rejects styles the emitters cannot draw with: canvas_size must exceed
// twice the margin, the palette must be non-empty, widths and radius
// positive.
void validate_style(const FigureStyle& style);

// Unit square with labelled corners, start marker at A and the bounce
// polyline of the trajectory.
std::string render_trajectory_svg(const Trajectory& t, const FigureStyle& style);

// The golden-ratio staircase: lattice points reached by powers of
// sigma tau, the intermediate tau images as open circles, arrows between
// them, and the reference lines y = phi x, y = x / phi and the diagonal.
std::string render_golden_construction_svg(unsigned k_max, const FigureStyle& style);

// Single-sigma families: dashed rays of slope 1/n1 out of (1|0), family
// points on them, and the pure-tau anchor row at q = 1 in a distinct
// color.
std::string render_family_svg(unsigned n1_max, unsigned p_max, const FigureStyle& style);

// Scatter of every endpoint of word length 1..n_max, one palette color
// per length (cycling), with the diagonal drawn.
std::string render_endpoints_svg(unsigned n_max, const FigureStyle& style);

enum class GridFormat { csv, pgm };

// "csv" or "pgm"; anything else is rejected as std::invalid_argument.
GridFormat parse_grid_format(std::string_view text);

// CSV rows "p,q,steps" with p outermost, or a binary P5 PGM with q = N at
// the top and steps rescaled linearly so the grid maximum lands on 255.
std::string write_step_grid(const StepGrid& grid, GridFormat format);

// CSV "n,word,p,q", one row per endpoint, n being the word length.
std::string endpoint_csv(const std::vector<Endpoint>& rows);

}  // namespace sigtau
