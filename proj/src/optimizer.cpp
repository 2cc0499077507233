#include "distort3/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "distort3/parallel.hpp"

namespace distort3 {

namespace {

constexpr double kMinEdge = 1e-6;
constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_params(const EmbeddingParams& p) {
  if (p.n < 1 || p.d < 2) {
    throw std::invalid_argument("EmbeddingParams: require n >= 1, d >= 2");
  }
  if (p.edge_lengths.size() != p.n) {
    throw std::invalid_argument("EmbeddingParams: expected n edge lengths");
  }
  if (p.turn_angles.size() != (p.n - 1) * (p.d - 1)) {
    throw std::invalid_argument(
        "EmbeddingParams: expected (n-1)*(d-1) turn angles");
  }
  for (double len : p.edge_lengths) {
    if (!(len > 0.0) || len > 1.0 + kTameEpsilon) {
      throw std::invalid_argument(
          "EmbeddingParams: edge lengths must lie in (0, 1]");
    }
  }
  if (p.d == 2) {
    for (double t : p.turn_angles) {
      if (!(t > -kPi && t < kPi)) {
        throw std::invalid_argument(
            "EmbeddingParams: planar turns must lie in (-pi, pi)");
      }
    }
  }
}

// Unit vector from hyperspherical angles a[0..d-2].
void hyperspherical(const double* a, std::size_t d, double* dir) {
  double prod = 1.0;
  for (std::size_t t = 0; t + 1 < d; ++t) {
    dir[t] = prod * std::cos(a[t]);
    prod *= std::sin(a[t]);
  }
  dir[d - 1] = prod;
}

std::vector<Point> decode_points(const EmbeddingParams& p) {
  validate_params(p);
  const std::size_t d = p.d;
  std::vector<Point> pts;
  pts.reserve(p.n + 1);
  pts.push_back(Point{std::vector<double>(d, 0.0)});

  if (d == 2) {
    double phi = 0.0;
    for (std::size_t i = 0; i < p.n; ++i) {
      if (i > 0) phi += p.turn_angles[i - 1];
      Point next = pts.back();
      next[0] += p.edge_lengths[i] * std::cos(phi);
      next[1] += p.edge_lengths[i] * std::sin(phi);
      pts.push_back(std::move(next));
    }
    return pts;
  }

  std::vector<double> dir(d, 0.0);
  for (std::size_t i = 0; i < p.n; ++i) {
    if (i == 0) {
      std::fill(dir.begin(), dir.end(), 0.0);
      dir[0] = 1.0;
    } else {
      hyperspherical(&p.turn_angles[(i - 1) * (d - 1)], d, dir.data());
    }
    Point next = pts.back();
    for (std::size_t t = 0; t < d; ++t) {
      next[t] += p.edge_lengths[i] * dir[t];
    }
    pts.push_back(std::move(next));
  }
  return pts;
}

// Exact maximum of the triple values over decoded points, without report
// bookkeeping. Degenerate triples floored when floor_degenerate is set
// (smoothed mode), +inf otherwise.
double raw_objective(const std::vector<Point>& pts, bool floor_degenerate,
                     double tau) {
  const std::size_t count = pts.size();
  const std::size_t d = pts.front().dim();
  std::vector<double> vals;
  vals.reserve(count * count * count / 6 + 1);
  for (std::size_t i = 0; i + 2 < count; ++i) {
    for (std::size_t j = i + 1; j + 1 < count; ++j) {
      for (std::size_t k = j + 1; k < count; ++k) {
        const double rho = rho3(i, j, k);
        double v;
        if (floor_degenerate) {
          const double area = detail::gram_area(pts[i].data(), pts[j].data(),
                                                pts[k].data(), d);
          const double s2 = detail::max3(distance_sq(pts[i], pts[j]),
                                         distance_sq(pts[i], pts[k]),
                                         distance_sq(pts[j], pts[k]));
          const double floor_area = kAreaEpsilon * s2;
          v = rho / std::max(area, floor_area);
          if (!std::isfinite(v)) v = 1.0 / kAreaEpsilon;  // fully collapsed
        } else {
          v = detail::triple_value(rho, pts[i].data(), pts[j].data(),
                                   pts[k].data(), d);
        }
        vals.push_back(v);
      }
    }
  }
  const double mx = *std::max_element(vals.begin(), vals.end());
  if (tau <= 0.0 || !std::isfinite(mx)) return mx;
  double sum = 0.0;
  for (double v : vals) sum += std::exp((v - mx) / tau);
  return mx + tau * std::log(sum);
}

struct SearchSpace {
  std::size_t n = 0, d = 2;

  std::size_t size() const { return n + (n - 1) * (d - 1); }

  bool is_length(std::size_t c) const { return c < n; }

  EmbeddingParams to_params(const std::vector<double>& x) const {
    EmbeddingParams p;
    p.n = n;
    p.d = d;
    p.edge_lengths.assign(x.begin(), x.begin() + static_cast<long>(n));
    p.turn_angles.assign(x.begin() + static_cast<long>(n), x.end());
    return p;
  }

  void clamp(std::vector<double>& x) const {
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (is_length(c)) {
        x[c] = std::clamp(x[c], kMinEdge, 1.0);
      } else if (d == 2) {
        x[c] = std::clamp(x[c], -kPi + 1e-9, kPi - 1e-9);
      }
    }
  }

  double eval(const std::vector<double>& x, double tau) const {
    return raw_objective(decode_points(to_params(x)), tau > 0.0, tau);
  }
};

// Compass pattern search: probe +-step on each coordinate, accept the first
// improvement, halve all steps after a pass with none.
void pattern_search(const SearchSpace& space, std::vector<double>& x,
                    double tau, std::size_t max_evals) {
  std::vector<double> steps(space.size());
  for (std::size_t c = 0; c < steps.size(); ++c) {
    steps[c] = space.is_length(c) ? 0.15 : 0.4;
  }
  double fx = space.eval(x, tau);
  std::size_t evals = 1;
  while (evals < max_evals) {
    bool improved = false;
    for (std::size_t c = 0; c < x.size() && evals < max_evals; ++c) {
      for (double sgn : {1.0, -1.0}) {
        std::vector<double> y = x;
        y[c] += sgn * steps[c];
        space.clamp(y);
        if (y[c] == x[c]) continue;
        const double fy = space.eval(y, tau);
        ++evals;
        if (fy < fx) {
          x = std::move(y);
          fx = fy;
          improved = true;
          break;
        }
      }
    }
    if (!improved) {
      double mx = 0.0;
      for (double& s : steps) {
        s *= 0.5;
        mx = std::max(mx, s);
      }
      if (mx < 1e-8) break;
    }
  }
}

}  // namespace

TameSequence decode(const EmbeddingParams& params) {
  return check_tame(decode_points(params));
}

double objective(const EmbeddingParams& params) {
  return raw_objective(decode_points(params), false, 0.0);
}

double objective_smoothed(const EmbeddingParams& params, double tau) {
  if (tau < 0.0) {
    throw std::invalid_argument("objective_smoothed: tau must be >= 0");
  }
  return raw_objective(decode_points(params), tau > 0.0, tau);
}

OptimizationResult local_search(std::size_t n, std::size_t d,
                                const SearchConfig& config) {
  if (n < 2 || d < 2) {
    throw std::invalid_argument("local_search: require n >= 2 and d >= 2");
  }
  const std::size_t restarts =
      config.restarts > 0 ? config.restarts : (n <= 6 ? 100 : 20);
  const SearchSpace space{n, d};
  constexpr double kTauSchedule[3] = {0.1, 0.01, 0.0};

  std::vector<double> values(restarts, kInf);
  std::vector<std::vector<double>> best_x(restarts);

  // Restart initializations sweep turn magnitudes from gentle arcs to tight
  // zigzags; every other restart keeps one turning sign, the shape the small
  // optima favour.
  constexpr double kTurnScales[5] = {0.3, 0.6, 1.0, 1.7, 2.5};

  const int threads = effective_threads();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (long long r = 0; r < static_cast<long long>(restarts); ++r) {
    std::mt19937_64 rng(config.seed +
                        0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(r) + 1));
    std::uniform_real_distribution<double> ulen(0.75, 1.0);
    const double turn_scale = kTurnScales[static_cast<std::size_t>(r) % 5];
    std::uniform_real_distribution<double> uang(-turn_scale, turn_scale);
    const bool one_sign = r % 2 == 0;
    double value = kInf;
    std::vector<double> x;
    for (int attempt = 0; attempt < 4 && !std::isfinite(value); ++attempt) {
      const double sign = (rng() & 1) ? 1.0 : -1.0;
      x.assign(space.size(), 0.0);
      for (std::size_t c = 0; c < x.size(); ++c) {
        if (space.is_length(c)) {
          x[c] = ulen(rng);
        } else {
          x[c] = uang(rng);
          if (one_sign) x[c] = sign * std::fabs(x[c]);
        }
      }
      for (double tau : kTauSchedule) {
        pattern_search(space, x, tau, config.max_evals_per_stage);
      }
      value = space.eval(x, 0.0);
    }
    values[static_cast<std::size_t>(r)] = value;
    best_x[static_cast<std::size_t>(r)] = std::move(x);
  }

  std::size_t winner = 0;
  std::vector<std::pair<std::size_t, double>> history;
  history.reserve(restarts);
  for (std::size_t r = 0; r < restarts; ++r) {
    if (values[r] < values[winner]) winner = r;
    history.emplace_back(r, values[winner]);
  }

  const EmbeddingParams params = space.to_params(best_x[winner]);
  OptimizationResult result{decode(params), values[winner], restarts,
                            std::isfinite(values[winner]),
                            std::move(history)};
  return result;
}

namespace {

// Stack-based evaluation for the oracle grid: n <= 3, planar.
double oracle_eval(std::size_t n, const double* lens, const double* turns) {
  double pts[4][2] = {{0.0, 0.0}};
  double phi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) phi += turns[i - 1];
    pts[i + 1][0] = pts[i][0] + lens[i] * std::cos(phi);
    pts[i + 1][1] = pts[i][1] + lens[i] * std::sin(phi);
  }
  double worst = -1.0;
  const std::size_t count = n + 1;
  for (std::size_t i = 0; i + 2 < count; ++i) {
    for (std::size_t j = i + 1; j + 1 < count; ++j) {
      for (std::size_t k = j + 1; k < count; ++k) {
        const double v =
            detail::triple_value(rho3(i, j, k), pts[i], pts[j], pts[k], 2);
        if (v > worst) worst = v;
      }
    }
  }
  return worst;
}

struct OracleCell {
  double value = kInf;
  double lens[3] = {1.0, 1.0, 1.0};
  double turns[2] = {0.0, 0.0};
};

// Total order on candidate cells: value first, then the cell coordinates.
// Exact value ties happen (swapping two edge lengths, for one), so the
// tie-break keeps the scan result independent of OpenMP chunk order.
bool cell_less(const OracleCell& a, const OracleCell& b) {
  if (a.value != b.value) return a.value < b.value;
  for (int t = 0; t < 2; ++t) {
    if (a.turns[t] != b.turns[t]) return a.turns[t] < b.turns[t];
  }
  for (int t = 0; t < 3; ++t) {
    if (a.lens[t] != b.lens[t]) return a.lens[t] < b.lens[t];
  }
  return false;
}

void oracle_consider(std::size_t n, const double* lens, const double* turns,
                     OracleCell& best) {
  OracleCell cand;
  cand.value = oracle_eval(n, lens, turns);
  std::copy(lens, lens + 3, cand.lens);
  std::copy(turns, turns + 2, cand.turns);
  if (cell_less(cand, best)) best = cand;
}

// Dense scan over length grids for fixed turn angles.
void oracle_scan_lengths(std::size_t n, const double* turns,
                         const std::vector<double>& len_grid,
                         OracleCell& best) {
  double lens[3] = {1.0, 1.0, 1.0};
  for (double l0 : len_grid) {
    lens[0] = l0;
    for (double l1 : len_grid) {
      lens[1] = l1;
      if (n == 2) {
        oracle_consider(n, lens, turns, best);
        continue;
      }
      for (double l2 : len_grid) {
        lens[2] = l2;
        oracle_consider(n, lens, turns, best);
      }
    }
  }
}

// Index-based so the endpoints (the unit edge length in particular) are hit
// exactly instead of drifting past the bound by accumulation error.
std::vector<double> centered_grid(double center, double halfwidth,
                                  double step, double lo, double hi) {
  std::vector<double> out;
  const long long reach = std::llround(halfwidth / step);
  for (long long i = -reach; i <= reach; ++i) {
    const double v = center + static_cast<double>(i) * step;
    if (v < lo - 1e-12 || v > hi + 1e-12) continue;
    out.push_back(std::clamp(v, lo, hi));
  }
  return out;
}

}  // namespace

double brute_force_oracle(std::size_t n, double grid_step) {
  if (n != 2 && n != 3) {
    throw std::invalid_argument("brute_force_oracle: only n in {2, 3}");
  }
  if (!(grid_step > 0.0) || grid_step > 0.5) {
    throw std::invalid_argument("brute_force_oracle: step must be in (0, 0.5]");
  }
  const std::vector<double> coarse_lens = {0.25, 0.5, 0.75, 1.0};

  std::vector<double> t1_grid;
  for (double t = grid_step; t < kPi; t += grid_step) t1_grid.push_back(t);
  std::vector<double> t2_grid = {0.0};
  if (n == 3) {
    t2_grid.clear();
    for (double t = -kPi + grid_step; t < kPi; t += grid_step) {
      t2_grid.push_back(t);
    }
  }

  OracleCell best;
  const int threads = effective_threads();
  std::vector<OracleCell> locals(static_cast<std::size_t>(threads));
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
  {
    OracleCell local;
#pragma omp for schedule(dynamic, 4) nowait
    for (long long a = 0; a < static_cast<long long>(t1_grid.size()); ++a) {
      double turns[2] = {t1_grid[static_cast<std::size_t>(a)], 0.0};
      for (double t2 : t2_grid) {
        turns[1] = t2;
        oracle_scan_lengths(n, turns, coarse_lens, local);
      }
    }
    locals[static_cast<std::size_t>(omp_get_thread_num())] = local;
  }
  for (const OracleCell& local : locals) {
    if (cell_less(local, best)) best = local;
  }
#else
  for (double t1 : t1_grid) {
    double turns[2] = {t1, 0.0};
    for (double t2 : t2_grid) {
      turns[1] = t2;
      oracle_scan_lengths(n, turns, coarse_lens, best);
    }
  }
#endif

  // Two refinement passes around the best cell.
  double astep = grid_step;
  double lstep = 0.25;
  for (int round = 0; round < 2; ++round) {
    const double fine_astep = astep / 10.0;
    const double fine_lstep = lstep / 10.0;
    const auto t1s = centered_grid(best.turns[0], astep, fine_astep, 1e-9,
                                   kPi - 1e-9);
    const auto t2s = n == 3 ? centered_grid(best.turns[1], astep, fine_astep,
                                            -kPi + 1e-9, kPi - 1e-9)
                            : std::vector<double>{0.0};
    const auto l0s =
        centered_grid(best.lens[0], lstep, fine_lstep, kMinEdge, 1.0);
    const auto l1s =
        centered_grid(best.lens[1], lstep, fine_lstep, kMinEdge, 1.0);
    const auto l2s = n == 3 ? centered_grid(best.lens[2], lstep, fine_lstep,
                                            kMinEdge, 1.0)
                            : std::vector<double>{1.0};
    OracleCell refined = best;
    for (double t1 : t1s) {
      for (double t2 : t2s) {
        const double turns[2] = {t1, t2};
        for (double l0 : l0s) {
          for (double l1 : l1s) {
            for (double l2 : l2s) {
              const double lens[3] = {l0, l1, l2};
              oracle_consider(n, lens, turns, refined);
            }
          }
        }
      }
    }
    best = refined;
    astep = fine_astep;
    lstep = fine_lstep;
  }
  return best.value;
}

}  // namespace distort3
