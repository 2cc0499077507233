#include "distort3/curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace distort3 {

namespace {

double wrap_pm_pi(double a) {
  while (a > kPi) a -= 2.0 * kPi;
  while (a <= -kPi) a += 2.0 * kPi;
  return a;
}

Point eval_arc(const ArcSegment& seg, double local) {
  const double a = seg.angle0 + seg.sweep * local;
  return Point{seg.cx + seg.radius * std::cos(a),
               seg.cy + seg.radius * std::sin(a)};
}

}  // namespace

MarkedCurve::MarkedCurve(std::size_t dim, std::vector<Point> marks,
                         std::variant<PlanarRep, LiftedRep> rep)
    : dim_(dim),
      total_length_(static_cast<double>(marks.size() - 1)),
      marks_(std::move(marks)),
      rep_(std::move(rep)) {}

const std::vector<ArcSegment>* MarkedCurve::arcs() const {
  if (const auto* p = std::get_if<PlanarRep>(&rep_)) return &p->segments;
  return nullptr;
}

const MarkedCurve* MarkedCurve::base() const {
  if (const auto* l = std::get_if<LiftedRep>(&rep_)) return l->base.get();
  return nullptr;
}

double MarkedCurve::height_sign(std::size_t copy_index) const {
  const auto& l = std::get<LiftedRep>(rep_);
  if (l.side == CylinderSide::alternating && copy_index % 2 == 1) return -1.0;
  return 1.0;
}

Point MarkedCurve::point_at(double s) const {
  if (s < -1e-9 || s > total_length_ + 1e-9) {
    throw std::out_of_range("MarkedCurve::point_at: arclength " +
                            std::to_string(s) + " outside [0, " +
                            std::to_string(total_length_) + "]");
  }
  s = std::clamp(s, 0.0, total_length_);

  if (const auto* planar = std::get_if<PlanarRep>(&rep_)) {
    const std::size_t nseg = planar->segments.size();
    std::size_t seg = static_cast<std::size_t>(s);
    if (seg >= nseg) seg = nseg - 1;
    return eval_arc(planar->segments[seg], s - static_cast<double>(seg));
  }

  const auto& l = std::get<LiftedRep>(rep_);
  const double span = l.copy->total_length();  // marks per copy
  const std::size_t ncopies = l.base->mark_count() - 1;
  std::size_t k = static_cast<std::size_t>(s / span);
  if (k >= ncopies) k = ncopies - 1;
  const double t = s - static_cast<double>(k) * span;
  const Point xy = l.copy->point_at(t);
  const Point base_pt =
      l.base->point_at(static_cast<double>(k) + xy[0] / l.copy_chord);
  Point out;
  out.coords.reserve(dim_);
  for (double c : base_pt.coords) out.coords.push_back(l.copy_chord * c);
  out.coords.push_back(height_sign(k) * xy[1]);
  return out;
}

double MarkedCurve::endpoint_chord() const {
  return distance(marks_.front(), marks_.back());
}

CylinderChart::CylinderChart(std::shared_ptr<const MarkedCurve> base)
    : base_(std::move(base)) {
  if (!base_) {
    throw std::invalid_argument("CylinderChart: null base curve");
  }
}

Point CylinderChart::map(double s, double h) const {
  if (h < -1e-9) {
    throw std::invalid_argument("CylinderChart::map: negative height");
  }
  if (h < 0.0) h = 0.0;
  Point p = base_->point_at(s);  // validates s
  p.coords.push_back(h);
  return p;
}

MarkedCurve build_gamma2(const ConstructionParams& params) {
  const std::size_t m = params.m;
  const double r = params.r;
  if (m < 2) {
    throw std::invalid_argument("build_gamma2: m must be >= 2");
  }
  if (!(r > 0.0)) {
    throw std::invalid_argument("build_gamma2: r must be positive");
  }

  // Points P_0..P_m on the sixth circle, angular spacing pi/(3m).
  const double beta = kPi / (6.0 * static_cast<double>(m));
  std::vector<Point> marks;
  marks.reserve(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    const double a = 2.0 * beta * static_cast<double>(i);
    marks.push_back(Point{r * std::cos(a), r * std::sin(a)});
  }

  // Replacement arc: radius 2r through P_i, P_{i+1}, half-angle alpha with
  // sin(alpha) = sin(beta) / 2. Its center sits on the perpendicular
  // bisector of the chord (the ray through the circle center), at distance
  // 2r cos(alpha) from the chord midpoint, past the circle center; the minor
  // arc then lies between the chord and the original arc.
  const double alpha = std::asin(std::sin(beta) / 2.0);
  std::vector<ArcSegment> segs;
  segs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Point& A = marks[i];
    const Point& B = marks[i + 1];
    const double qx = 0.5 * (A[0] + B[0]);
    const double qy = 0.5 * (A[1] + B[1]);
    const double qn = std::hypot(qx, qy);
    const double wx = -qx / qn, wy = -qy / qn;  // towards the circle center
    ArcSegment seg;
    seg.radius = 2.0 * r;
    seg.cx = qx + seg.radius * std::cos(alpha) * wx;
    seg.cy = qy + seg.radius * std::cos(alpha) * wy;
    seg.angle0 = std::atan2(A[1] - seg.cy, A[0] - seg.cx);
    const double angle1 = std::atan2(B[1] - seg.cy, B[0] - seg.cx);
    seg.sweep = wrap_pm_pi(angle1 - seg.angle0);
    segs.push_back(seg);
  }

  // Rescale so each sub-arc has arclength 1: each spans angle 2*alpha on
  // radius 2r.
  const double scale = 1.0 / (4.0 * r * alpha);
  for (ArcSegment& seg : segs) {
    seg.cx *= scale;
    seg.cy *= scale;
    seg.radius *= scale;
  }
  for (Point& p : marks) {
    p[0] *= scale;
    p[1] *= scale;
  }

  // Canonical pose: first mark at the origin, endpoint chord along +x,
  // interior bulging towards +y.
  const double tx = marks.front()[0], ty = marks.front()[1];
  for (ArcSegment& seg : segs) {
    seg.cx -= tx;
    seg.cy -= ty;
  }
  for (Point& p : marks) {
    p[0] -= tx;
    p[1] -= ty;
  }
  const double chord_len = std::hypot(marks.back()[0], marks.back()[1]);
  const double rot = -std::atan2(marks.back()[1], marks.back()[0]);
  const double cr = std::cos(rot), sr = std::sin(rot);
  auto rotate = [&](double& x, double& y) {
    const double nx = cr * x - sr * y;
    const double ny = sr * x + cr * y;
    x = nx;
    y = ny;
  };
  for (ArcSegment& seg : segs) {
    rotate(seg.cx, seg.cy);
    seg.angle0 += rot;
  }
  for (Point& p : marks) rotate(p[0], p[1]);
  if (marks[m / 2][1] < 0.0) {
    for (ArcSegment& seg : segs) {
      seg.cy = -seg.cy;
      seg.angle0 = -seg.angle0;
      seg.sweep = -seg.sweep;
    }
    for (Point& p : marks) p[1] = -p[1];
  }
  // Snap the endpoints the pose pins analytically.
  marks.front() = Point{0.0, 0.0};
  marks.back() = Point{chord_len, 0.0};

  return MarkedCurve(2, std::move(marks),
                     MarkedCurve::PlanarRep{std::move(segs)});
}

MarkedCurve lift_curve(const MarkedCurve& base, std::size_t m,
                       CylinderSide side, double r) {
  if (base.mark_count() < 2) {
    throw std::invalid_argument("lift_curve: base must carry >= 2 marks");
  }
  auto base_ptr = std::make_shared<const MarkedCurve>(base);
  auto copy = std::make_shared<const MarkedCurve>(
      build_gamma2(ConstructionParams{m, 2, r}));
  const double chord = copy->endpoint_chord();

  const std::size_t ncopies = base.mark_count() - 1;
  const std::size_t nmarks = ncopies * m + 1;
  const std::size_t dim = base.dim() + 1;
  const std::vector<Point>& base_marks = base.marked_points();
  const std::vector<Point>& copy_marks = copy->marked_points();

  std::vector<Point> marks;
  marks.reserve(nmarks);
  for (std::size_t j = 0; j < nmarks; ++j) {
    std::size_t k = j / m;
    if (k >= ncopies) k = ncopies - 1;
    const std::size_t t = j - k * m;
    const double sign =
        (side == CylinderSide::alternating && k % 2 == 1) ? -1.0 : 1.0;
    Point p;
    p.coords.reserve(dim);
    if (t == 0 || t == m) {
      // Copy endpoints land exactly on the (rescaled) base marks, height 0.
      const Point& b = base_marks[t == 0 ? k : k + 1];
      for (double c : b.coords) p.coords.push_back(chord * c);
      p.coords.push_back(0.0);
    } else {
      const Point& xy = copy_marks[t];
      const Point b =
          base.point_at(static_cast<double>(k) + xy[0] / chord);
      for (double c : b.coords) p.coords.push_back(chord * c);
      p.coords.push_back(sign * xy[1]);
    }
    marks.push_back(std::move(p));
  }

  return MarkedCurve(
      dim, std::move(marks),
      MarkedCurve::LiftedRep{std::move(base_ptr), std::move(copy), chord,
                             side});
}

MarkedCurve build_gamma_curve(const ConstructionParams& params,
                              CylinderSide side) {
  if (params.d < 2) {
    throw std::invalid_argument("build_gamma_curve: d must be >= 2");
  }
  MarkedCurve curve = build_gamma2(params);
  for (std::size_t level = 3; level <= params.d; ++level) {
    curve = lift_curve(curve, params.m, side, params.r);
  }
  return curve;
}

TameSequence build_gamma(const ConstructionParams& params, CylinderSide side) {
  if (params.m < 2 || params.d < 2) {
    throw std::invalid_argument("build_gamma: require m >= 2 and d >= 2");
  }
  double n = 1.0;
  for (std::size_t i = 0; i + 1 < params.d; ++i) {
    n *= static_cast<double>(params.m);
    if (n > 1e6) {
      throw std::invalid_argument(
          "build_gamma: m^(d-1) exceeds the 10^6 point guard");
    }
  }
  return check_tame(build_gamma_curve(params, side).marked_points());
}

std::vector<Point> sample_polyline(const MarkedCurve& curve,
                                   std::size_t per_unit) {
  if (per_unit < 1) {
    throw std::invalid_argument("sample_polyline: per_unit must be >= 1");
  }
  const std::size_t steps =
      static_cast<std::size_t>(std::llround(curve.total_length())) * per_unit;
  std::vector<Point> out;
  out.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    out.push_back(curve.point_at(static_cast<double>(i) /
                                 static_cast<double>(per_unit)));
  }
  return out;
}

double metric_contraction_ratio(const MarkedCurve& curve,
                                std::size_t per_unit) {
  if (per_unit < 2) {
    throw std::invalid_argument(
        "metric_contraction_ratio: per_unit must be >= 2");
  }
  const std::vector<Point> pts = sample_polyline(curve, per_unit);
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double arc = static_cast<double>(j - i) /
                         static_cast<double>(per_unit);
      const double ratio = distance(pts[i], pts[j]) / arc;
      if (ratio < worst) worst = ratio;
    }
  }
  return worst;
}

double max_spanning_angle(const MarkedCurve& curve, std::size_t per_unit) {
  if (per_unit < 1) {
    throw std::invalid_argument("max_spanning_angle: per_unit must be >= 1");
  }
  const std::vector<Point> pts = sample_polyline(curve, per_unit);
  const double inv = 1.0 / static_cast<double>(per_unit);
  double worst = 0.0;
  for (std::size_t a = 0; a + 2 < pts.size(); ++a) {
    const double sa = static_cast<double>(a) * inv;
    // Triples wholly inside one closed unit arc [i, i+1] are exempt.
    const double window_end = std::floor(sa) + 1.0;
    for (std::size_t b = a + 1; b + 1 < pts.size(); ++b) {
      for (std::size_t c = b + 1; c < pts.size(); ++c) {
        if (static_cast<double>(c) * inv <= window_end + 1e-12) continue;
        const double ang =
            angle_at_vertex(pts[a], pts[b], pts[c]).radians;
        if (ang > worst) worst = ang;
      }
    }
  }
  return worst;
}

}  // namespace distort3
