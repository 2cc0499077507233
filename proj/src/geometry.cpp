#include "distort3/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace distort3 {

namespace {

void require_same_dim(const Point& a, const Point& b, const Point& c,
                      std::size_t min_dim, const char* op) {
  if (a.dim() != b.dim() || a.dim() != c.dim()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch");
  }
  if (a.dim() < min_dim) {
    throw std::invalid_argument(std::string(op) + ": dimension must be >= " +
                                std::to_string(min_dim));
  }
}

}  // namespace

double distance_sq(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("distance: dimension mismatch");
  }
  return detail::dist_sq(a.data(), b.data(), a.dim());
}

double distance(const Point& a, const Point& b) {
  return std::sqrt(distance_sq(a, b));
}

double triangle_area(const Point& a, const Point& b, const Point& c) {
  require_same_dim(a, b, c, 2, "triangle_area");
  return detail::gram_area(a.data(), b.data(), c.data(), a.dim());
}

AngleValue angle_at_vertex(const Point& a, const Point& b, const Point& c) {
  require_same_dim(a, b, c, 1, "angle_at_vertex");
  const std::size_t d = a.dim();
  const double uu = detail::dist_sq(a.data(), b.data(), d);
  const double vv = detail::dist_sq(c.data(), b.data(), d);
  const double s2 = std::max(uu, vv);
  const double coinc = kCoincidenceEpsilon * kCoincidenceEpsilon * s2;
  if (s2 == 0.0 || uu <= coinc || vv <= coinc) {
    throw std::invalid_argument(
        "angle_at_vertex: vertex coincides with an endpoint");
  }
  const double dot = detail::dot_from(b.data(), a.data(), c.data(), d);
  double cosv = dot / (std::sqrt(uu) * std::sqrt(vv));
  cosv = std::clamp(cosv, -1.0, 1.0);
  return AngleValue{std::acos(cosv)};
}

double point_line_distance(const Point& p, const Point& a, const Point& b) {
  require_same_dim(p, a, b, 1, "point_line_distance");
  const std::size_t d = p.dim();
  const double ab = detail::dist_sq(a.data(), b.data(), d);
  const double pa = detail::dist_sq(p.data(), a.data(), d);
  const double pb = detail::dist_sq(p.data(), b.data(), d);
  const double s2 = detail::max3(ab, pa, pb);
  if (s2 == 0.0 || ab <= kCoincidenceEpsilon * kCoincidenceEpsilon * s2) {
    throw std::invalid_argument(
        "point_line_distance: line endpoints coincide");
  }
  return 2.0 * detail::gram_area(a.data(), b.data(), p.data(), d) /
         std::sqrt(ab);
}

bool is_convex_sequence(const std::vector<Point>& points) {
  const std::size_t m = points.size();
  if (m < 3) {
    throw std::invalid_argument("is_convex_sequence: need at least 3 points");
  }
  for (const Point& p : points) {
    if (p.dim() != 2) {
      throw std::invalid_argument("is_convex_sequence: points must be planar");
    }
  }

  int sign = 0;
  double turning = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const Point& a = points[i];
    const Point& b = points[(i + 1) % m];
    const Point& c = points[(i + 2) % m];
    const double e1x = b[0] - a[0], e1y = b[1] - a[1];
    const double e2x = c[0] - b[0], e2y = c[1] - b[1];
    const double cross = e1x * e2y - e1y * e2x;
    const double dot = e1x * e2x + e1y * e2y;
    const double s2 = detail::max3(distance_sq(a, b), distance_sq(b, c),
                                   distance_sq(a, c));
    // Strict sign test: a collinear (or repeated) vertex is not a hull vertex.
    if (!(std::fabs(cross) > kAreaEpsilon * s2)) {
      return false;
    }
    const int s = cross > 0.0 ? 1 : -1;
    if (sign == 0) {
      sign = s;
    } else if (s != sign) {
      return false;
    }
    turning += std::atan2(cross, dot);
  }
  return std::fabs(std::fabs(turning) - 2.0 * kPi) < 1e-6;
}

}  // namespace distort3
