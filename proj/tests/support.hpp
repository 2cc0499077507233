#pragma once

// Shared generators and independent oracles for the test suites. The oracles
// deliberately reimplement enumeration and reduction on top of the public
// geometry primitives only, so they can cross-check the production kernels.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "distort3/distortion.hpp"
#include "distort3/geometry.hpp"

namespace support {

using distort3::Point;
using Rng = std::mt19937_64;

// ---------------------------------------------------------------------------
// Fixed configurations

inline std::vector<Point> right_angle_points() {
  return {Point{0.0, 0.0}, Point{1.0, 0.0}, Point{1.0, 1.0}};
}

inline std::vector<Point> u_shape_points() {
  const double s = std::sqrt(3.0);
  return {Point{0.0, 0.0}, Point{1.0, 0.0}, Point{1.5, s / 2.0},
          Point{1.0, s}};
}

inline std::vector<Point> square_path_points() {
  return {Point{0.0, 0.0}, Point{1.0, 0.0}, Point{1.0, 1.0}, Point{0.0, 1.0}};
}

inline std::vector<Point> collinear_points(std::size_t count) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < count; ++i) {
    pts.push_back(Point{static_cast<double>(i), 0.0});
  }
  return pts;
}

// n+1 points at unit arclength spacing on a circle of circumference n+1;
// distinct, tame, and in strictly convex position.
inline std::vector<Point> circle_points(std::size_t n) {
  const double radius =
      static_cast<double>(n + 1) / (2.0 * distort3::kPi);
  std::vector<Point> pts;
  for (std::size_t i = 0; i <= n; ++i) {
    const double a = static_cast<double>(i) / radius;
    pts.push_back(Point{radius * std::cos(a), radius * std::sin(a)});
  }
  return pts;
}

// ---------------------------------------------------------------------------
// Random generators

inline Point random_unit_vector(Rng& rng, std::size_t d) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Point v{std::vector<double>(d, 0.0)};
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (std::size_t t = 0; t < d; ++t) {
      v[t] = gauss(rng);
      norm2 += v[t] * v[t];
    }
  } while (norm2 < 1e-12);
  const double inv = 1.0 / std::sqrt(norm2);
  for (std::size_t t = 0; t < d; ++t) v[t] *= inv;
  return v;
}

inline std::vector<Point> random_tame_points(Rng& rng, std::size_t n,
                                             std::size_t d) {
  std::uniform_real_distribution<double> ulen(0.3, 1.0);
  std::vector<Point> pts;
  pts.push_back(Point{std::vector<double>(d, 0.0)});
  for (std::size_t i = 0; i < n; ++i) {
    const Point dir = random_unit_vector(rng, d);
    const double len = ulen(rng);
    Point next = pts.back();
    for (std::size_t t = 0; t < d; ++t) next[t] += len * dir[t];
    pts.push_back(std::move(next));
  }
  return pts;
}

// Random rotation-or-reflection plus translation. Orthogonal maps preserve
// areas, angles and distortion, which is what the invariance suites check.
struct RigidMotion {
  std::size_t d = 0;
  std::vector<double> rot;  // d x d, row-major, orthogonal
  std::vector<double> shift;

  Point apply(const Point& p) const {
    Point out{std::vector<double>(d, 0.0)};
    for (std::size_t r = 0; r < d; ++r) {
      double acc = 0.0;
      for (std::size_t c = 0; c < d; ++c) acc += rot[r * d + c] * p[c];
      out[r] = acc + shift[r];
    }
    return out;
  }

  std::vector<Point> apply(const std::vector<Point>& pts) const {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const Point& p : pts) out.push_back(apply(p));
    return out;
  }
};

inline RigidMotion random_rigid_motion(Rng& rng, std::size_t d) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> ushift(-5.0, 5.0);
  RigidMotion motion;
  motion.d = d;
  motion.rot.assign(d * d, 0.0);
  // Gram-Schmidt on random gaussian columns.
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<double> col(d);
    double norm = 0.0;
    do {
      for (std::size_t r = 0; r < d; ++r) col[r] = gauss(rng);
      for (std::size_t prev = 0; prev < c; ++prev) {
        double dot = 0.0;
        for (std::size_t r = 0; r < d; ++r) dot += col[r] * motion.rot[r * d + prev];
        for (std::size_t r = 0; r < d; ++r) col[r] -= dot * motion.rot[r * d + prev];
      }
      norm = 0.0;
      for (double v : col) norm += v * v;
    } while (norm < 1e-6);
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < d; ++r) motion.rot[r * d + c] = col[r] / norm;
  }
  motion.shift.resize(d);
  for (double& v : motion.shift) v = ushift(rng);
  return motion;
}

// Strictly convex polygon: jittered sorted angles on a circle, then an
// affine stretch (which preserves convexity), rotation and translation.
inline std::vector<Point> random_convex_polygon(Rng& rng, std::size_t m) {
  std::uniform_real_distribution<double> jitter(0.05, 0.95);
  std::uniform_real_distribution<double> stretch(0.5, 2.0);
  std::uniform_real_distribution<double> uang(0.0, 2.0 * distort3::kPi);
  std::uniform_real_distribution<double> ushift(-10.0, 10.0);
  const double sx = stretch(rng), sy = stretch(rng);
  const double rot = uang(rng), tx = ushift(rng), ty = ushift(rng);
  const double cr = std::cos(rot), sr = std::sin(rot);
  std::vector<Point> pts;
  pts.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double a = 2.0 * distort3::kPi *
                     (static_cast<double>(i) + jitter(rng)) /
                     static_cast<double>(m);
    const double x = sx * std::cos(a), y = sy * std::sin(a);
    pts.push_back(Point{cr * x - sr * y + tx, sr * x + cr * y + ty});
  }
  return pts;
}

// ---------------------------------------------------------------------------
// Independent oracles

struct NaiveReport {
  double value = -1.0;
  std::size_t i = 0, j = 0, k = 0;
  std::uint64_t triples = 0;
};

// Deliberately naive distortion: one ascending triple loop over the public
// primitives, with the same degeneracy rule as the production kernel.
inline NaiveReport naive_delta3(const std::vector<Point>& pts) {
  NaiveReport best;
  const std::size_t count = pts.size();
  for (std::size_t i = 0; i + 2 < count; ++i) {
    for (std::size_t j = i + 1; j + 1 < count; ++j) {
      for (std::size_t k = j + 1; k < count; ++k) {
        const double area = distort3::triangle_area(pts[i], pts[j], pts[k]);
        const double s2 = std::max({distort3::distance_sq(pts[i], pts[j]),
                                    distort3::distance_sq(pts[i], pts[k]),
                                    distort3::distance_sq(pts[j], pts[k])});
        const double v =
            area < distort3::kAreaEpsilon * s2
                ? std::numeric_limits<double>::infinity()
                : distort3::rho3(i, j, k) / area;
        ++best.triples;
        if (v > best.value) {
          best.value = v;
          best.i = i;
          best.j = j;
          best.k = k;
        }
      }
    }
  }
  return best;
}

// Strict convex hull (Andrew monotone chain); collinear boundary points are
// not hull vertices.
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;
  auto cross = [](const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Point> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

// Hull-based convex-position oracle: every input point is a hull vertex and
// the input cyclic order matches the hull boundary in one orientation.
inline bool hull_convex_in_order(const std::vector<Point>& pts) {
  const std::size_t m = pts.size();
  const std::vector<Point> hull = convex_hull(pts);
  if (hull.size() != m) return false;
  std::size_t start = m;
  for (std::size_t i = 0; i < m; ++i) {
    if (pts[i] == hull[0]) {
      start = i;
      break;
    }
  }
  if (start == m) return false;
  bool forward = true, backward = true;
  for (std::size_t t = 0; t < m; ++t) {
    forward = forward && pts[(start + t) % m] == hull[t];
    backward = backward && pts[(start + m - t) % m] == hull[t];
  }
  return forward || backward;
}

}  // namespace support
