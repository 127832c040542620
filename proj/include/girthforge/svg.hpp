#pragma once

#include <optional>
#include <string>
#include <utility>

#include "girthforge/realization.hpp"

namespace girthforge {

struct WorldBox {
  Rational xmin, xmax, ymin, ymax;
};

struct Viewport {
  int width = 800;
  int height = 800;
};

/// Bounding box of the points, padded by 5% of its span (1 if the span is 0).
WorldBox bounding_box(const PlanarArrangement& arr);

/// Exact segment of `line` inside `box`, or nullopt if it misses the box or
/// only touches a corner.
std::optional<std::pair<PlanarPoint, PlanarPoint>> clip_line(const PlanarLine& line, const WorldBox& box);

/// SVG 1.1 document: one circle per point, one clipped segment per line that
/// crosses the viewport, and a caption with the counts. Deterministic.
std::string export_svg(const PlanarArrangement& arr, const Viewport& viewport = {});

}  // namespace girthforge
