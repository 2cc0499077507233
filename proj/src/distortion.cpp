#include "distort3/distortion.hpp"

#include <cmath>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "distort3/parallel.hpp"

namespace distort3 {

namespace {

struct BestTriple {
  double value = -1.0;
  std::size_t i = static_cast<std::size_t>(-1);
  std::size_t j = static_cast<std::size_t>(-1);
  std::size_t k = static_cast<std::size_t>(-1);
};

// Total order: larger value first, then lexicographically smaller triple.
// Taking the extremum under this order is associative and commutative, so
// any merge order of partial results yields the same winner.
inline bool better(const BestTriple& a, const BestTriple& b) {
  if (a.value != b.value) return a.value > b.value;
  return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
}

// Scans all triples (i, j, k) for one fixed i. Ascending j, k order plus the
// strict comparison keeps the lexicographically first maximizer.
inline void scan_plane(const double* flat, std::size_t d, std::size_t count,
                       std::size_t i, BestTriple& best) {
  const double* pi = flat + i * d;
  for (std::size_t j = i + 1; j + 1 < count; ++j) {
    const double* pj = flat + j * d;
    for (std::size_t k = j + 1; k < count; ++k) {
      const double* pk = flat + k * d;
      const double value = detail::triple_value(rho3(i, j, k), pi, pj, pk, d);
      if (value > best.value) {
        best = BestTriple{value, i, j, k};
      }
    }
  }
}

DistortionReport make_report(const std::vector<Point>& pts, std::size_t d,
                             const BestTriple& best, std::uint64_t triples) {
  DistortionReport rep;
  rep.delta3 = best.value;
  rep.worst.i = best.i;
  rep.worst.j = best.j;
  rep.worst.k = best.k;
  rep.worst.rho3 = rho3(best.i, best.j, best.k);
  rep.worst.area = detail::gram_area(pts[best.i].data(), pts[best.j].data(),
                                     pts[best.k].data(), d);
  rep.worst.value = best.value;
  rep.triples_evaluated = triples;
  return rep;
}

std::vector<double> flatten(const TameSequence& seq) {
  const std::size_t d = seq.dim();
  std::vector<double> flat;
  flat.reserve(seq.size() * d);
  for (const Point& p : seq.points()) {
    flat.insert(flat.end(), p.coords.begin(), p.coords.end());
  }
  return flat;
}

std::uint64_t triple_count(std::uint64_t count) {
  return count * (count - 1) * (count - 2) / 6;
}

}  // namespace

bool DistortionReport::is_infinite() const { return std::isinf(delta3); }

TameSequence check_tame(std::vector<Point> points) {
  if (points.size() < 2) {
    throw std::invalid_argument("check_tame: need at least 2 points");
  }
  const std::size_t d = points.front().dim();
  if (d < 2) {
    throw std::invalid_argument("check_tame: dimension must be >= 2");
  }
  for (const Point& p : points) {
    if (p.dim() != d) {
      throw std::invalid_argument("check_tame: dimension mismatch");
    }
    for (double x : p.coords) {
      if (!std::isfinite(x)) {
        throw std::invalid_argument("check_tame: non-finite coordinate");
      }
    }
  }
  double max_step = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double gap = distance(points[i], points[i + 1]);
    if (gap > 1.0 + kTameEpsilon) {
      throw tameness_error(i, gap);
    }
    if (gap > max_step) max_step = gap;
  }
  return TameSequence(std::move(points), d, max_step);
}

double rho3(std::size_t i, std::size_t j, std::size_t k) {
  if (!(i < j && j < k)) {
    throw std::invalid_argument("rho3: indices must satisfy i < j < k");
  }
  const std::uint64_t prod =
      static_cast<std::uint64_t>(j - i) * static_cast<std::uint64_t>(k - j);
  return static_cast<double>(prod) / 2.0;
}

DistortionReport delta3(const TameSequence& seq) {
  const std::size_t count = seq.size();
  if (count < 3) {
    throw insufficient_points_error("delta3: need at least 3 points");
  }
  const std::size_t d = seq.dim();
  const std::vector<double> flat = flatten(seq);

  const std::uint64_t triples = triple_count(count);
  const int threads = effective_threads();

  BestTriple best;
  if (threads <= 1 || triples < 200000) {
    for (std::size_t i = 0; i + 2 < count; ++i) {
      scan_plane(flat.data(), d, count, i, best);
    }
  } else {
    std::vector<BestTriple> locals(static_cast<std::size_t>(threads));
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
    {
      BestTriple local;
#pragma omp for schedule(dynamic, 4) nowait
      for (long long i = 0; i < static_cast<long long>(count) - 2; ++i) {
        scan_plane(flat.data(), d, count, static_cast<std::size_t>(i), local);
      }
      locals[static_cast<std::size_t>(omp_get_thread_num())] = local;
    }
#else
    for (std::size_t i = 0; i + 2 < count; ++i) {
      scan_plane(flat.data(), d, count, i, locals[0]);
    }
#endif
    for (const BestTriple& local : locals) {
      if (better(local, best)) best = local;
    }
  }
  return make_report(seq.points(), d, best, triples);
}

DistortionReport delta3_serial(const TameSequence& seq) {
  const std::size_t count = seq.size();
  if (count < 3) {
    throw insufficient_points_error("delta3: need at least 3 points");
  }
  const std::size_t d = seq.dim();
  const std::vector<Point>& pts = seq.points();

  BestTriple best;
  for (std::size_t i = 0; i + 2 < count; ++i) {
    for (std::size_t j = i + 1; j + 1 < count; ++j) {
      for (std::size_t k = j + 1; k < count; ++k) {
        const double value = detail::triple_value(
            rho3(i, j, k), pts[i].data(), pts[j].data(), pts[k].data(), d);
        if (value > best.value) {
          best = BestTriple{value, i, j, k};
        }
      }
    }
  }
  return make_report(pts, d, best, triple_count(count));
}

}  // namespace distort3
