#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "distort3/geometry.hpp"

namespace distort3 {

/// Thrown when a consecutive step of a point sequence exceeds unit length.
class tameness_error : public std::runtime_error {
 public:
  tameness_error(std::size_t index, double gap)
      : std::runtime_error("step " + std::to_string(index) +
                           " has length " + std::to_string(gap) +
                           " > 1 (sequence is not tame)"),
        index_(index),
        gap_(gap) {}

  std::size_t index() const { return index_; }
  double gap() const { return gap_; }

 private:
  std::size_t index_;
  double gap_;
};

/// Thrown when an operation needs at least 3 points.
class insufficient_points_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Points M_0, ..., M_n with every consecutive Euclidean distance <= 1
/// (up to kTameEpsilon slack). Construct through check_tame only; immutable
/// afterwards and safe to share across threads.
class TameSequence {
 public:
  const std::vector<Point>& points() const { return points_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  std::size_t n() const { return points_.size() - 1; }

  /// Largest consecutive step, for diagnostics.
  double max_step() const { return max_step_; }

  friend TameSequence check_tame(std::vector<Point> points);

 private:
  TameSequence(std::vector<Point> points, std::size_t dim, double max_step)
      : points_(std::move(points)), dim_(dim), max_step_(max_step) {}

  std::vector<Point> points_;
  std::size_t dim_;
  double max_step_;
};

/// Validates a point list as a tame sequence: >= 2 points, one common
/// dimension >= 2, finite coordinates, all steps <= 1 + kTameEpsilon.
/// Throws tameness_error naming the first offending step.
TameSequence check_tame(std::vector<Point> points);

/// Ideal (maximal achievable) triangle area for path indices i < j < k:
/// (j - i) * (k - j) / 2, exact.
double rho3(std::size_t i, std::size_t j, std::size_t k);

/// One term of the distortion supremum.
struct TripleDistortion {
  std::size_t i = 0, j = 0, k = 0;
  double rho3 = 0.0;
  double area = 0.0;
  double value = 0.0;  // rho3 / area, +inf when degenerate
};

struct DistortionReport {
  double delta3 = 0.0;  // == worst.value
  TripleDistortion worst;
  std::uint64_t triples_evaluated = 0;

  bool is_infinite() const;
};

/// Exhaustive 3-distortion of a tame sequence: the maximum of
/// rho3(i,j,k) / Area(M_i, M_j, M_k) over all index triples, +inf iff some
/// triple is degenerate. The reported worst triple is the lexicographically
/// smallest maximizer. Parallelized with OpenMP for large inputs; the result
/// is bit-identical regardless of thread count.
DistortionReport delta3(const TameSequence& seq);

/// Serial reference implementation: one naive ascending triple loop. Kept
/// alongside the parallel kernel for testing and benchmarking; must agree
/// with delta3 bit-for-bit.
DistortionReport delta3_serial(const TameSequence& seq);

}  // namespace distort3
