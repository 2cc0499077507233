#include "distort3/scan.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "distort3/io.hpp"

namespace distort3 {

FitResult fit_exponent(const std::vector<std::pair<double, double>>& pairs) {
  if (pairs.size() < 2) {
    throw std::invalid_argument("fit_exponent: need at least 2 pairs");
  }
  double sx = 0.0, sy = 0.0;
  for (const auto& [x, y] : pairs) {
    if (!(x > 0.0) || !(y > 0.0)) {
      throw std::invalid_argument("fit_exponent: entries must be positive");
    }
    sx += std::log(x);
    sy += std::log(y);
  }
  const double mx = sx / static_cast<double>(pairs.size());
  const double my = sy / static_cast<double>(pairs.size());
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : pairs) {
    const double dx = std::log(x) - mx;
    const double dy = std::log(y) - my;
    sxx += dx * dx;
    sxy += dx * dy;
  }
  if (sxx == 0.0) {
    throw std::invalid_argument("fit_exponent: all n equal, slope undefined");
  }
  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double rss = 0.0;
  for (const auto& [x, y] : pairs) {
    const double r = std::log(y) - (fit.intercept + fit.slope * std::log(x));
    rss += r * r;
  }
  fit.residual_norm = std::sqrt(rss);
  return fit;
}

std::vector<ScanRecord> run_scan(std::size_t d,
                                 const std::vector<std::size_t>& ms,
                                 CylinderSide side, std::size_t max_n) {
  std::vector<ScanRecord> records;
  records.reserve(ms.size());
  for (std::size_t m : ms) {
    double n_check = 1.0;
    for (std::size_t i = 0; i + 1 < d; ++i) n_check *= static_cast<double>(m);
    if (n_check > static_cast<double>(max_n)) {
      throw std::invalid_argument(
          "run_scan: m=" + std::to_string(m) + " gives n=" +
          std::to_string(static_cast<std::size_t>(n_check)) +
          " beyond the limit of " + std::to_string(max_n));
    }
    const auto t0 = std::chrono::steady_clock::now();
    const TameSequence seq = build_gamma(ConstructionParams{m, d, 1.0}, side);
    const DistortionReport rep = delta3(seq);
    const auto t1 = std::chrono::steady_clock::now();
    ScanRecord rec;
    rec.m = m;
    rec.d = d;
    rec.n = seq.n();
    rec.delta3 = rep.delta3;
    rec.ratio = rep.delta3 / static_cast<double>(m);
    rec.runtime_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
            .count());
    records.push_back(rec);
  }
  return records;
}

std::string scan_csv(const std::vector<ScanRecord>& records) {
  std::ostringstream out;
  out << "m,d,n,delta3,ratio,runtime_ms\n";
  for (const ScanRecord& r : records) {
    out << r.m << "," << r.d << "," << r.n << "," << format_double(r.delta3)
        << "," << format_double(r.ratio) << "," << r.runtime_ms << "\n";
  }
  return out.str();
}

FitResult fit_scan(const std::vector<ScanRecord>& records) {
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(records.size());
  for (const ScanRecord& r : records) {
    pairs.emplace_back(static_cast<double>(r.n), r.delta3);
  }
  return fit_exponent(pairs);
}

std::vector<Point> baseline_arc_points(std::size_t n, double opening_angle) {
  if (n < 3) {
    throw std::invalid_argument("baseline_arc_points: need n >= 3");
  }
  if (!(opening_angle > 0.0) || opening_angle > 2.0 * kPi) {
    throw std::invalid_argument(
        "baseline_arc_points: opening angle must lie in (0, 2*pi]");
  }
  const double radius = static_cast<double>(n) / opening_angle;
  std::vector<Point> pts;
  pts.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double a = static_cast<double>(i) / radius;
    pts.push_back(Point{radius * std::cos(a), radius * std::sin(a)});
  }
  return pts;
}

std::vector<BaselineRecord> run_baseline(const std::vector<std::size_t>& ns,
                                         double opening_angle) {
  std::vector<BaselineRecord> records;
  records.reserve(ns.size());
  for (std::size_t n : ns) {
    const TameSequence seq = check_tame(baseline_arc_points(n, opening_angle));
    const DistortionReport rep = delta3(seq);
    BaselineRecord rec;
    rec.n = n;
    rec.delta3 = rep.delta3;
    const std::vector<Point>& pts = seq.points();
    rec.consecutive_triple = detail::triple_value(
        rho3(0, 1, 2), pts[0].data(), pts[1].data(), pts[2].data(), 2);
    records.push_back(rec);
  }
  return records;
}

std::string baseline_csv(const std::vector<BaselineRecord>& records) {
  std::ostringstream out;
  out << "n,delta3,consecutive_triple\n";
  for (const BaselineRecord& r : records) {
    out << r.n << "," << format_double(r.delta3) << ","
        << format_double(r.consecutive_triple) << "\n";
  }
  return out.str();
}

FitResult fit_baseline(const std::vector<BaselineRecord>& records) {
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(records.size());
  for (const BaselineRecord& r : records) {
    pairs.emplace_back(static_cast<double>(r.n), r.delta3);
  }
  return fit_exponent(pairs);
}

}  // namespace distort3
