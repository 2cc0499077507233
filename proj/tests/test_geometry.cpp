#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "distort3/geometry.hpp"
#include "support.hpp"

using distort3::AngleValue;
using distort3::Point;
using distort3::angle_at_vertex;
using distort3::distance;
using distort3::distance_sq;
using distort3::is_convex_sequence;
using distort3::kPi;
using distort3::point_line_distance;
using distort3::triangle_area;

namespace {

double rel_err(double got, double want) {
  return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

// Planar cross-product area, the independent route for d == 2.
double cross_area(const Point& a, const Point& b, const Point& c) {
  const double ux = b[0] - a[0], uy = b[1] - a[1];
  const double vx = c[0] - a[0], vy = c[1] - a[1];
  return 0.5 * std::fabs(ux * vy - uy * vx);
}

}  // namespace

TEST_CASE("triangle_area basic values") {
  CHECK(triangle_area({0, 0}, {1, 0}, {0, 1}) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(triangle_area({0, 0, 0}, {1, 0, 0}, {2, 0, 0}) == 0.0);
  const double expected = std::sqrt(3.0) / 4.0;
  const Point c{1.5, std::sqrt(3.0) / 2.0};
  CHECK(rel_err(triangle_area({0, 0}, {1, 0}, c), expected) < 1e-12);
  // Gram route must agree with the cross-product route on planar inputs.
  CHECK(rel_err(triangle_area({0, 0}, {1, 0}, c), cross_area({0, 0}, {1, 0}, c)) < 1e-12);
}

TEST_CASE("triangle_area rejects bad input") {
  CHECK_THROWS_AS(triangle_area({0, 0}, {1, 0, 0}, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(triangle_area(Point{0.0}, Point{1.0}, Point{2.0}),
                  std::invalid_argument);
}

TEST_CASE("gram area equals cross area on random planar triples") {
  support::Rng rng(11);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int trial = 0; trial < 500; ++trial) {
    const Point a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
    const double gram = triangle_area(a, b, c);
    const double cross = cross_area(a, b, c);
    CHECK(std::fabs(gram - cross) <= 1e-12 * std::max(1.0, cross));
  }
}

TEST_CASE("triangle_area is symmetric under permutations") {
  support::Rng rng(12);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Point a{u(rng), u(rng), u(rng)}, b{u(rng), u(rng), u(rng)},
        c{u(rng), u(rng), u(rng)};
    const double ref = triangle_area(a, b, c);
    for (const auto& [x, y, z] :
         {std::tuple{a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}}) {
      CHECK(rel_err(triangle_area(x, y, z), ref) < 1e-12);
    }
  }
}

TEST_CASE("area and angle are rigid-motion invariant") {
  support::Rng rng(13);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (std::size_t d : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 100; ++trial) {
      Point a{std::vector<double>(d)}, b{std::vector<double>(d)},
          c{std::vector<double>(d)};
      for (std::size_t t = 0; t < d; ++t) {
        a[t] = u(rng);
        b[t] = u(rng);
        c[t] = u(rng);
      }
      const auto motion = support::random_rigid_motion(rng, d);
      const double area0 = triangle_area(a, b, c);
      const double area1 =
          triangle_area(motion.apply(a), motion.apply(b), motion.apply(c));
      CHECK(std::fabs(area0 - area1) <= 1e-9 * std::max(1.0, area0));
      if (distance(a, b) > 1e-3 && distance(c, b) > 1e-3) {
        const double ang0 = angle_at_vertex(a, b, c).radians;
        const double ang1 =
            angle_at_vertex(motion.apply(a), motion.apply(b), motion.apply(c))
                .radians;
        CHECK(std::fabs(ang0 - ang1) < 1e-9);
      }
    }
  }
}

TEST_CASE("angle_at_vertex basic values") {
  CHECK(angle_at_vertex({1, 0}, {0, 0}, {0, 1}).radians ==
        doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(angle_at_vertex({0, 0}, {1, 0}, {2, 0}).radians ==
        doctest::Approx(kPi).epsilon(1e-12));
  // U-shape vertex: unit edges meeting at 2*pi/3.
  CHECK(angle_at_vertex({0, 0}, {1, 0}, {1.5, std::sqrt(3.0) / 2.0}).radians ==
        doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-12));
}

TEST_CASE("angle_at_vertex clamps near-straight configurations") {
  // Numerically just past straight; the clamp keeps acos in range.
  const Point a{0.0, 0.0}, b{1.0, 1e-16}, c{2.0, 0.0};
  const double ang = angle_at_vertex(a, b, c).radians;
  CHECK(std::isfinite(ang));
  CHECK(ang <= kPi);
  CHECK(ang >= 0.0);
}

TEST_CASE("angle_at_vertex rejects coincident vertex") {
  CHECK_THROWS_AS(angle_at_vertex({0, 0}, {0, 0}, {1, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(angle_at_vertex({1, 0}, {1, 0}, {1, 0}),
                  std::invalid_argument);
}

TEST_CASE("point_line_distance basic values") {
  CHECK(point_line_distance({0, 1}, {0, 0}, {1, 0}) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(point_line_distance({5, 0}, {0, 0}, {1, 0}) ==
        doctest::Approx(0.0).epsilon(1e-14));
  // 3D: distance from (1,1,1) to the x axis is sqrt(2); cross-check against
  // the 2*area/base route it is defined by.
  const Point p{1, 1, 1}, a{0, 0, 0}, b{1, 0, 0};
  CHECK(rel_err(point_line_distance(p, a, b), std::sqrt(2.0)) < 1e-12);
  CHECK(rel_err(point_line_distance(p, a, b),
                2.0 * triangle_area(a, b, p) / distance(a, b)) < 1e-12);
}

TEST_CASE("point_line_distance is symmetric in the line endpoints") {
  support::Rng rng(14);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Point p{u(rng), u(rng), u(rng)}, a{u(rng), u(rng), u(rng)},
        b{u(rng), u(rng), u(rng)};
    const double d1 = point_line_distance(p, a, b);
    const double d2 = point_line_distance(p, b, a);
    CHECK(std::fabs(d1 - d2) <= 1e-12 * std::max(1.0, d1));
  }
}

TEST_CASE("point_line_distance rejects a degenerate line") {
  CHECK_THROWS_AS(point_line_distance({0, 1}, {2, 2}, {2, 2}),
                  std::invalid_argument);
}

TEST_CASE("is_convex_sequence examples") {
  CHECK(is_convex_sequence({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  CHECK_FALSE(is_convex_sequence({{0, 0}, {1, 1}, {1, 0}, {0, 1}}));
  CHECK_FALSE(is_convex_sequence({{0, 0}, {1, 0}, {2, 0}, {1, 1}}));
  // Clockwise order is convex too (either orientation).
  CHECK(is_convex_sequence({{0, 0}, {0, 1}, {1, 1}, {1, 0}}));
  // Repeated vertex collapses an edge.
  CHECK_FALSE(is_convex_sequence({{0, 0}, {0, 0}, {1, 1}, {1, 0}}));
}

TEST_CASE("is_convex_sequence rejects self-winding polygons") {
  // Pentagram: every turn has the same sign, but total turning is 4*pi.
  std::vector<Point> star;
  for (int i = 0; i < 5; ++i) {
    const double a = 2.0 * kPi * (2.0 * i) / 5.0;
    star.push_back(Point{std::cos(a), std::sin(a)});
  }
  CHECK_FALSE(is_convex_sequence(star));
}

TEST_CASE("is_convex_sequence input validation") {
  CHECK_THROWS_AS(is_convex_sequence({{0, 0}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(is_convex_sequence({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}),
                  std::invalid_argument);
}

TEST_CASE("is_convex_sequence agrees with the hull oracle") {
  support::Rng rng(15);
  std::uniform_real_distribution<double> u(-8.0, 8.0);
  std::uniform_int_distribution<std::size_t> usize(3, 12);
  int convex_seen = 0, nonconvex_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<Point> pts;
    if (trial % 2 == 0) {
      pts = support::random_convex_polygon(rng, usize(rng));
    } else {
      const std::size_t m = usize(rng);
      for (std::size_t i = 0; i < m; ++i) pts.push_back(Point{u(rng), u(rng)});
    }
    const bool got = is_convex_sequence(pts);
    const bool want = support::hull_convex_in_order(pts);
    CHECK(got == want);
    (got ? convex_seen : nonconvex_seen)++;
  }
  // The corpus must exercise both outcomes.
  CHECK(convex_seen > 50);
  CHECK(nonconvex_seen > 50);
}
