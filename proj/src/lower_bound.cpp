#include "distort3/lower_bound.hpp"

#include <algorithm>
#include <cmath>

namespace distort3 {

namespace {

void require_planar(const TameSequence& seq, const char* op) {
  if (seq.dim() != 2) {
    throw std::invalid_argument(std::string(op) + ": sequence must be planar");
  }
}

}  // namespace

std::vector<std::size_t> subsample(const TameSequence& seq,
                                   std::size_t delta) {
  if (delta < 1) {
    throw std::invalid_argument("subsample: delta must be >= 1");
  }
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i <= seq.n(); i += delta) {
    idx.push_back(i);
  }
  return idx;
}

std::tuple<std::size_t, AngleValue, double> angle_witness(
    const std::vector<Point>& convex_points) {
  if (!is_convex_sequence(convex_points)) {
    throw std::invalid_argument("angle_witness: input is not convex");
  }
  const std::size_t m = convex_points.size();
  std::size_t best_i = 0;
  double best_angle = -1.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double ang = angle_at_vertex(convex_points[i],
                                       convex_points[(i + 1) % m],
                                       convex_points[(i + 2) % m])
                           .radians;
    if (ang > best_angle) {
      best_angle = ang;
      best_i = i;
    }
  }
  const double floor_angle =
      (static_cast<double>(m) - 2.0) * kPi / static_cast<double>(m);
  if (best_angle < floor_angle - 1e-9) {
    throw lemma_violation_error(
        "angle_witness: max cyclic angle below (m-2)*pi/m");
  }
  return {best_i, AngleValue{best_angle},
          static_cast<double>(m) / (2.0 * kPi)};
}

Certificate convexity_certificate(const TameSequence& seq,
                                  std::size_t delta) {
  require_planar(seq, "convexity_certificate");
  Certificate cert;
  cert.delta = delta;
  cert.subsample_indices = subsample(seq, delta);

  const std::size_t m = cert.subsample_indices.size();
  if (m < 3) {
    cert.convex = true;  // vacuous: no triple to violate convex position
    return cert;
  }

  std::vector<Point> pts;
  pts.reserve(m);
  for (std::size_t idx : cert.subsample_indices) {
    pts.push_back(seq.points()[idx]);
  }
  cert.convex = is_convex_sequence(pts);
  if (!cert.convex) {
    return cert;
  }

  auto [pos, angle, bound] = angle_witness(pts);
  WitnessInfo wit;
  wit.position = pos;
  wit.angle = angle;
  wit.bound = bound;
  wit.subsample_positions = {pos, (pos + 1) % m, (pos + 2) % m};
  std::array<std::size_t, 3> orig = {
      cert.subsample_indices[wit.subsample_positions[0]],
      cert.subsample_indices[wit.subsample_positions[1]],
      cert.subsample_indices[wit.subsample_positions[2]]};
  std::sort(orig.begin(), orig.end());
  wit.original_indices = orig;
  wit.triple_distortion = detail::triple_value(
      rho3(orig[0], orig[1], orig[2]), seq.points()[orig[0]].data(),
      seq.points()[orig[1]].data(), seq.points()[orig[2]].data(), seq.dim());
  cert.witness = wit;
  cert.implied_lower_bound = bound;
  return cert;
}

std::size_t ceil_delta(double delta3_value) {
  if (!std::isfinite(delta3_value) || delta3_value < 0.0) {
    throw std::invalid_argument("ceil_delta: value must be finite and >= 0");
  }
  return static_cast<std::size_t>(std::ceil(delta3_value + 1e-9));
}

Prop1Report prop1_verify(const TameSequence& seq) {
  require_planar(seq, "prop1_verify");
  const DistortionReport rep = delta3(seq);
  if (rep.is_infinite()) {
    throw std::domain_error(
        "prop1_verify: distortion is infinite, no finite step exists");
  }

  Prop1Report out;
  out.delta3_value = rep.delta3;
  out.delta = ceil_delta(rep.delta3);
  out.n = seq.n();
  out.certificate = convexity_certificate(seq, out.delta);
  out.reference_bound =
      std::sqrt(static_cast<double>(out.n) / (2.0 * kPi));

  const std::size_t quotient = out.n / out.delta;
  out.small_n_branch = quotient < 2;
  if (out.small_n_branch) {
    // floor(n/delta) < 2 forces n < 2*delta.
    if (2 * out.delta < out.n) {
      throw lemma_violation_error("prop1_verify: small-n branch with "
                                  "delta < n/2");
    }
    out.implied_bound = static_cast<double>(out.n) / 2.0;
  } else {
    if (!out.certificate.convex) {
      throw lemma_violation_error(
          "prop1_verify: subsample at ceil(delta3) is not convex");
    }
    if (!out.certificate.witness.has_value()) {
      throw lemma_violation_error("prop1_verify: convex certificate lacks a "
                                  "witness");
    }
    out.implied_bound =
        static_cast<double>(quotient) / (2.0 * kPi);
    if (out.implied_bound > static_cast<double>(out.delta) + 1e-9) {
      throw lemma_violation_error(
          "prop1_verify: witness bound exceeds delta");
    }
  }
  return out;
}

bool line_distance_bound_check(const TameSequence& seq, std::size_t delta) {
  if (delta < 1) {
    throw std::invalid_argument(
        "line_distance_bound_check: delta must be >= 1");
  }
  const std::vector<Point>& pts = seq.points();
  const std::size_t count = pts.size();
  const double inv_delta = 1.0 / static_cast<double>(delta);
  for (std::size_t i = 0; i + 2 < count; ++i) {
    for (std::size_t j = i + 1; j + 1 < count; ++j) {
      if (distance_sq(pts[i], pts[j]) == 0.0) {
        return false;  // no line to measure against; bound cannot hold
      }
      for (std::size_t k = j + 1; k < count; ++k) {
        const double need =
            static_cast<double>(k - j) * inv_delta - 1e-9;
        if (point_line_distance(pts[k], pts[i], pts[j]) < need) {
          return false;
        }
      }
    }
  }
  return true;
}

bool same_side_check(const TameSequence& seq, std::size_t delta) {
  require_planar(seq, "same_side_check");
  if (delta < 1) {
    throw std::invalid_argument("same_side_check: delta must be >= 1");
  }
  const std::vector<Point>& pts = seq.points();
  const std::size_t n = seq.n();

  auto signed_side = [&](std::size_t i, std::size_t j, std::size_t k) {
    const double ex = pts[j][0] - pts[i][0];
    const double ey = pts[j][1] - pts[i][1];
    const double fx = pts[k][0] - pts[i][0];
    const double fy = pts[k][1] - pts[i][1];
    const double cross = ex * fy - ey * fx;
    const double s2 =
        detail::max3(distance_sq(pts[i], pts[j]), distance_sq(pts[i], pts[k]),
                     distance_sq(pts[j], pts[k]));
    if (!(std::fabs(cross) > kAreaEpsilon * s2)) return 0;
    return cross > 0.0 ? 1 : -1;
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      for (std::size_t k = j + delta; k + 1 <= n; ++k) {
        const int a = signed_side(i, j, k);
        const int b = signed_side(i, j, k + 1);
        if (a == 0 || b == 0 || a != b) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace distort3
