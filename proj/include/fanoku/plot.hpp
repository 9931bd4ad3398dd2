#pragma once

// Deterministic SVG rendering of the (beta, alpha) half-plane and the (s, q)
// chart. All coordinates pass through one "%.12g" formatter.

#include "fanoku/wallengine.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fanoku {

enum class Plane { alphabeta, sq };

/// x = beta, y = alpha^2 in the alphabeta plane (drawn at height alpha);
/// x = s, y = q in the sq plane.
struct PlotPoint {
    std::string label;
    Rational x;
    Rational y;
};

struct PlotSpec {
    Plane plane = Plane::alphabeta;
    std::vector<Wall> walls;
    std::vector<PlotPoint> points;
    std::vector<std::pair<LiZhaoPoint<Rational>, LiZhaoPoint<Rational>>> chords;  // sq plane
    bool region_V = true;
    bool parabola = true;  // sq plane
    // viewport; y bounds are alpha (not alpha^2) in the alphabeta plane
    Rational xmin{-2};
    Rational xmax{1};
    Rational ymin{0};
    Rational ymax{3, 2};
    std::string title;

    static PlotSpec defaults(Plane plane);
};

std::string render_svg(const PlotSpec& spec);

}  // namespace fanoku
