#pragma once

#include <string>
#include <vector>

#include "distort3/curve.hpp"
#include "distort3/geometry.hpp"

namespace distort3 {

/// Rendering options. plane selects the orthographic projection for inputs
/// of dimension >= 3: "xy", "xz" or "yz" (coordinate pairs 0-1, 0-2, 1-2).
struct SvgOptions {
  std::string plane = "xy";
  std::size_t per_unit = 64;  // curve sampling density
  double margin = 0.05;       // viewBox margin, fraction of the extent
};

/// Curve as a single path element plus one circle marker per marked point.
/// The y axis points up (mathematical orientation).
std::string render_curve_svg(const MarkedCurve& curve,
                             const SvgOptions& options = {});

/// Point sequence as a polyline path plus one circle marker per point.
std::string render_points_svg(const std::vector<Point>& points,
                              const SvgOptions& options = {});

}  // namespace distort3
