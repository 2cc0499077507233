#include "distort3/svg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "distort3/io.hpp"

namespace distort3 {

namespace {

std::pair<std::size_t, std::size_t> plane_axes(const std::string& plane) {
  if (plane == "xy") return {0, 1};
  if (plane == "xz") return {0, 2};
  if (plane == "yz") return {1, 2};
  throw std::invalid_argument("plane must be one of xy, xz, yz");
}

struct Frame {
  double min_x, min_y, width, height, stroke, marker;
};

// Projects to the chosen plane and flips y so the output reads
// mathematically (y up).
std::vector<std::pair<double, double>> project(
    const std::vector<Point>& pts, const SvgOptions& options) {
  const auto [ax, ay] = plane_axes(options.plane);
  std::vector<std::pair<double, double>> out;
  out.reserve(pts.size());
  for (const Point& p : pts) {
    if (p.dim() <= std::max(ax, ay)) {
      throw std::invalid_argument("points have too few coordinates for plane " +
                                  options.plane);
    }
    out.emplace_back(p[ax], -p[ay]);
  }
  return out;
}

Frame fit_frame(const std::vector<std::pair<double, double>>& pts,
                double margin) {
  double min_x = pts.front().first, max_x = min_x;
  double min_y = pts.front().second, max_y = min_y;
  for (const auto& [x, y] : pts) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  double w = max_x - min_x, h = max_y - min_y;
  const double extent = std::max({w, h, 1e-9});
  const double pad = margin * extent;
  Frame f;
  f.min_x = min_x - pad;
  f.min_y = min_y - pad;
  f.width = w + 2 * pad;
  f.height = h + 2 * pad;
  f.stroke = 0.004 * extent;
  f.marker = 0.008 * extent;
  return f;
}

void emit_header(std::ostringstream& out, const Frame& f) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
      << format_double(f.min_x) << " " << format_double(f.min_y) << " "
      << format_double(f.width) << " " << format_double(f.height)
      << "\" width=\"800\" height=\""
      << format_double(800.0 * f.height / f.width) << "\">\n";
}

void emit_path(std::ostringstream& out, const Frame& f,
               const std::vector<std::pair<double, double>>& pts) {
  out << "<path fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\""
      << format_double(f.stroke) << "\" d=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out << (i == 0 ? "M " : " L ") << format_double(pts[i].first) << " "
        << format_double(pts[i].second);
  }
  out << "\"/>\n";
}

void emit_markers(std::ostringstream& out, const Frame& f,
                  const std::vector<std::pair<double, double>>& pts) {
  for (const auto& [x, y] : pts) {
    out << "<circle cx=\"" << format_double(x) << "\" cy=\""
        << format_double(y) << "\" r=\"" << format_double(f.marker)
        << "\" fill=\"#c03a2b\"/>\n";
  }
}

}  // namespace

std::string render_curve_svg(const MarkedCurve& curve,
                             const SvgOptions& options) {
  const auto samples = project(sample_polyline(curve, options.per_unit),
                               options);
  const auto marks = project(curve.marked_points(), options);
  const Frame f = fit_frame(samples, options.margin);
  std::ostringstream out;
  emit_header(out, f);
  emit_path(out, f, samples);
  emit_markers(out, f, marks);
  out << "</svg>\n";
  return out.str();
}

std::string render_points_svg(const std::vector<Point>& points,
                              const SvgOptions& options) {
  if (points.empty()) {
    throw std::invalid_argument("render_points_svg: no points");
  }
  const auto pts = project(points, options);
  const Frame f = fit_frame(pts, options.margin);
  std::ostringstream out;
  emit_header(out, f);
  emit_path(out, f, pts);
  emit_markers(out, f, pts);
  out << "</svg>\n";
  return out.str();
}

}  // namespace distort3
