#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "distort3/distortion.hpp"

namespace distort3 {

/// A chart on tame sequences modulo rigid motion: the first point is anchored
/// at the origin and the first edge runs along the first axis. Edge lengths
/// lie in (0, 1], so decoded sequences are tame by construction.
///
/// For d == 2, turn_angles holds n-1 signed turns in (-pi, pi); the direction
/// of edge i is the accumulated sum of the first i turns. For d >= 3 it holds
/// n-1 rows of d-1 hyperspherical angles giving each edge direction after the
/// first (the all-zero row is the first axis, so zero angles decode to a
/// straight, fully collinear sequence).
struct EmbeddingParams {
  std::size_t n = 0;
  std::size_t d = 2;
  std::vector<double> edge_lengths;  // n values in (0, 1]
  std::vector<double> turn_angles;   // (n-1) * (d-1), row-major
};

struct SearchConfig {
  std::size_t restarts = 0;  // 0 = default: 100 for n <= 6, else 20
  std::uint64_t seed = 42;
  std::size_t max_evals_per_stage = 6000;
};

struct OptimizationResult {
  TameSequence best;
  double value = 0.0;  // exact distortion of best
  std::size_t restarts = 0;
  bool converged = false;
  /// Incumbent value after each restart, in restart order.
  std::vector<std::pair<std::size_t, double>> history;
};

/// Decodes the chart into a tame sequence.
TameSequence decode(const EmbeddingParams& params);

/// Exact distortion of the decoded sequence (may be +inf).
double objective(const EmbeddingParams& params);

/// Log-sum-exp relaxation at temperature tau > 0: degenerate triples are
/// floored at the degeneracy threshold instead of diverging, and the result
/// dominates the exact maximum, converging to it as tau -> 0. tau == 0 falls
/// back to the exact objective.
double objective_smoothed(const EmbeddingParams& params, double tau);

/// Multi-start derivative-free descent (compass pattern search) over the
/// chart, annealed through temperatures 0.1, 0.01, exact. Deterministic given
/// the seed and independent of thread count: restarts draw from per-restart
/// generators and the final reduction prefers (value, restart index).
OptimizationResult local_search(std::size_t n, std::size_t d,
                                const SearchConfig& config = {});

/// Exhaustive planar grid search for n in {2, 3}: turn angles on a grid of
/// the given step (first turn in (0, pi), by reflection symmetry; second in
/// (-pi, pi)), edge lengths in {0.25, 0.5, 0.75, 1}, followed by two local
/// refinement passes at step/10 and step/100 around the best cell. Returns
/// the minimal distortion found.
double brute_force_oracle(std::size_t n, double grid_step);

}  // namespace distort3
