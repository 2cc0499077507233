// Benchmark of the OpenMP distortion kernel against the serial reference,
// with a bit-exactness check on every instance.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "distort3/distortion.hpp"
#include "distort3/parallel.hpp"

namespace d3 = distort3;

namespace {

d3::TameSequence random_sequence(std::mt19937_64& rng, std::size_t n,
                                 std::size_t dim) {
  std::uniform_real_distribution<double> ulen(0.3, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<d3::Point> pts;
  pts.push_back(d3::Point{std::vector<double>(dim, 0.0)});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> dir(dim);
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (double& c : dir) {
        c = gauss(rng);
        norm2 += c * c;
      }
    } while (norm2 < 1e-12);
    const double scale = ulen(rng) / std::sqrt(norm2);
    d3::Point next = pts.back();
    for (std::size_t t = 0; t < dim; ++t) next[t] += scale * dir[t];
    pts.push_back(std::move(next));
  }
  return d3::check_tame(std::move(pts));
}

double time_ms(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> sizes = {200, 400, 800};
  std::size_t dim = 3;
  if (argc > 1) {
    sizes.clear();
    for (int a = 1; a < argc; ++a) {
      sizes.push_back(static_cast<std::size_t>(std::stoul(argv[a])));
    }
  }

  std::printf("threads=%d\n", d3::effective_threads());
  std::printf("%8s %6s %14s %14s %9s %8s\n", "n", "d", "serial_ms",
              "parallel_ms", "speedup", "match");

  bool all_match = true;
  std::mt19937_64 rng(20240611);
  for (std::size_t n : sizes) {
    const d3::TameSequence seq = random_sequence(rng, n, dim);
    d3::DistortionReport serial, parallel;
    // Warm up thread pool outside the timed region.
    parallel = d3::delta3(seq);
    const double t_serial = time_ms([&] { serial = d3::delta3_serial(seq); });
    const double t_parallel = time_ms([&] { parallel = d3::delta3(seq); });
    const bool match = serial.delta3 == parallel.delta3 &&
                       serial.worst.i == parallel.worst.i &&
                       serial.worst.j == parallel.worst.j &&
                       serial.worst.k == parallel.worst.k;
    all_match = all_match && match;
    std::printf("%8zu %6zu %14.2f %14.2f %8.2fx %8s\n", n, dim, t_serial,
                t_parallel, t_serial / t_parallel, match ? "yes" : "NO");
  }
  if (!all_match) {
    std::printf("MISMATCH between serial and parallel kernels\n");
    return 1;
  }
  return 0;
}
