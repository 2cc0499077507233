#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <vector>

namespace distort3 {

/// A triangle counts as degenerate when its area falls below
/// kAreaEpsilon * s^2, where s is the largest pairwise distance among its
/// vertices. Scale-relative, so rescaled configurations behave identically.
inline constexpr double kAreaEpsilon = 1e-12;

/// Slack on the unit-step constraint of tame sequences, absorbing the
/// rounding introduced by curve rescaling.
inline constexpr double kTameEpsilon = 1e-9;

/// Relative length threshold below which two points are treated as coincident.
inline constexpr double kCoincidenceEpsilon = 1e-14;

inline constexpr double kPi = 3.14159265358979323846;

/// A point of d-dimensional Euclidean space, d >= 1.
struct Point {
  std::vector<double> coords;

  Point() = default;
  Point(std::initializer_list<double> xs) : coords(xs) {}
  explicit Point(std::vector<double> xs) : coords(std::move(xs)) {}

  std::size_t dim() const { return coords.size(); }
  double operator[](std::size_t i) const { return coords[i]; }
  double& operator[](std::size_t i) { return coords[i]; }
  const double* data() const { return coords.data(); }

  bool operator==(const Point& other) const = default;
};

/// An undirected vertex angle, in [0, pi].
struct AngleValue {
  double radians = 0.0;
};

namespace detail {

inline double dist_sq(const double* a, const double* b, std::size_t d) {
  double acc = 0.0;
  for (std::size_t t = 0; t < d; ++t) {
    const double diff = a[t] - b[t];
    acc += diff * diff;
  }
  return acc;
}

// (p - o) . (q - o)
inline double dot_from(const double* o, const double* p, const double* q,
                       std::size_t d) {
  double acc = 0.0;
  for (std::size_t t = 0; t < d; ++t) {
    acc += (p[t] - o[t]) * (q[t] - o[t]);
  }
  return acc;
}

inline double max3(double a, double b, double c) {
  double m = a;
  if (b > m) m = b;
  if (c > m) m = c;
  return m;
}

// Triangle area from squared edge data (Gram identity); valid in any
// dimension. Clamps the Gram determinant at zero to absorb roundoff.
inline double gram_area(const double* a, const double* b, const double* c,
                        std::size_t d) {
  const double uu = dist_sq(a, b, d);
  const double vv = dist_sq(a, c, d);
  const double uv = dot_from(a, b, c, d);
  const double g = uu * vv - uv * uv;
  return 0.5 * std::sqrt(g > 0.0 ? g : 0.0);
}

// Distortion term of one index triple: rho / area, or +inf when the triangle
// is degenerate at the scale-relative threshold. Every distortion path in the
// library (serial reference, OpenMP kernel, test oracles) must evaluate
// triples through this one function so results stay bit-identical.
inline double triple_value(double rho, const double* a, const double* b,
                           const double* c, std::size_t d) {
  const double area = gram_area(a, b, c, d);
  const double s2 = max3(dist_sq(a, b, d), dist_sq(a, c, d), dist_sq(b, c, d));
  if (area < kAreaEpsilon * s2) {
    return std::numeric_limits<double>::infinity();
  }
  return rho / area;
}

}  // namespace detail

/// Squared Euclidean distance. Both points must share a dimension.
double distance_sq(const Point& a, const Point& b);

/// Euclidean distance.
double distance(const Point& a, const Point& b);

/// Area of the triangle [a, b, c], computed dimension-generically via the
/// Gram identity. Requires equal dimensions >= 2. Zero iff collinear (up to
/// floating tolerance).
double triangle_area(const Point& a, const Point& b, const Point& c);

/// Undirected angle at vertex b of the path a-b-c, in [0, pi]. The cosine is
/// clamped into [-1, 1] before acos, so near-straight configurations never
/// produce NaN. Throws if b coincides with a or c.
AngleValue angle_at_vertex(const Point& a, const Point& b, const Point& c);

/// Perpendicular distance from p to the infinite line through a and b.
/// Throws if a and b coincide.
double point_line_distance(const Point& p, const Point& a, const Point& b);

/// True iff the planar points, in the given order, are exactly the boundary
/// of their convex hull: all consecutive edge cross products share one strict
/// sign (collinear vertices fail), and the total turning is +-2*pi, which
/// rules out self-winding. Requires d == 2 and at least 3 points.
bool is_convex_sequence(const std::vector<Point>& points);

}  // namespace distort3
