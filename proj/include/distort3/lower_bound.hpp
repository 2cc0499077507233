#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "distort3/distortion.hpp"
#include "distort3/geometry.hpp"

namespace distort3 {

/// Raised when a certified inequality fails. The inequalities are theorems,
/// so this always indicates an implementation bug, never bad data.
class lemma_violation_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The witness triangle of a convex subsample: the sharpest cyclic
/// consecutive triple, whose large vertex angle certifies a distortion bound.
struct WitnessInfo {
  std::size_t position = 0;  // angle sits at subsample vertex position+1 (cyclic)
  AngleValue angle;
  double bound = 0.0;  // m / (2*pi) for a convex m-gon
  std::array<std::size_t, 3> subsample_positions{};  // cyclic triple, positions
  std::array<std::size_t, 3> original_indices{};     // same triple, sorted path indices
  double triple_distortion = 0.0;  // rho3 / area of the sorted path triple
};

/// Lower-bound witness for one tame sequence and one subsampling step.
struct Certificate {
  std::size_t delta = 0;
  std::vector<std::size_t> subsample_indices;
  bool convex = false;
  std::optional<WitnessInfo> witness;
  double implied_lower_bound = 0.0;  // m/(2*pi) when convex with >= 3 points
};

/// Verification record of the square-root lower-bound pipeline.
struct Prop1Report {
  double delta3_value = 0.0;
  std::size_t delta = 0;
  std::size_t n = 0;
  bool small_n_branch = false;  // floor(n/delta) < 2
  Certificate certificate;
  double implied_bound = 0.0;    // n/2 on the small branch, else floor(n/delta)/(2*pi)
  double reference_bound = 0.0;  // sqrt(n / (2*pi)), for comparison
};

/// Indices 0, delta, 2*delta, ..., floor(n/delta)*delta. Requires delta >= 1.
std::vector<std::size_t> subsample(const TameSequence& seq, std::size_t delta);

/// For a convex planar sequence (is_convex_sequence must hold), returns the
/// position i maximizing the cyclic consecutive vertex angle at P_{i+1},
/// that angle, and the bound m/(2*pi). The angle is checked against the
/// pigeonhole floor (m-2)*pi/m; the bound follows since the triangle area is
/// at most half the product of its edges times sin(angle) and
/// sin(angle) <= sin(2*pi/m) <= 2*pi/m.
std::tuple<std::size_t, AngleValue, double> angle_witness(
    const std::vector<Point>& convex_points);

/// Subsamples at step delta and tests convex position. Non-convex outcomes
/// are recorded, not errors, so the sharpness of the certificate can be
/// explored with deliberately small delta. Fewer than 3 subsample points are
/// vacuously convex and carry no witness. Requires planar input.
Certificate convexity_certificate(const TameSequence& seq, std::size_t delta);

/// ceil(value) with a +1e-9 guard, so a value computed a hair below an
/// integer still rounds up to a step that dominates the true distortion.
std::size_t ceil_delta(double delta3_value);

/// Runs the full lower-bound pipeline on a planar tame sequence with finite
/// distortion: delta = ceil(delta3), then either the small-n branch
/// (floor(n/delta) < 2 forces delta >= n/2) or the convex-certificate branch
/// (subsample convex, witness bound at most delta). Throws
/// lemma_violation_error if any certified inequality fails.
Prop1Report prop1_verify(const TameSequence& seq);

/// True iff every triple i < j < k satisfies
/// dist(M_k, line(M_i, M_j)) >= (k - j)/delta - 1e-9. Holds whenever
/// delta >= ceil(delta3).
bool line_distance_bound_check(const TameSequence& seq, std::size_t delta);

/// True iff for every i < j and k >= j + delta with k + 1 <= n, the points
/// M_k and M_{k+1} lie strictly on the same side of line(M_i, M_j).
/// Requires planar input.
bool same_side_check(const TameSequence& seq, std::size_t delta);

}  // namespace distort3
