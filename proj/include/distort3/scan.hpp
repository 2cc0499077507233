#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "distort3/curve.hpp"
#include "distort3/distortion.hpp"

namespace distort3 {

/// One row of a scaling scan.
struct ScanRecord {
  std::size_t m = 0;
  std::size_t d = 0;
  std::size_t n = 0;  // m^(d-1)
  double delta3 = 0.0;
  double ratio = 0.0;  // delta3 / m
  std::uint64_t runtime_ms = 0;
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_norm = 0.0;
};

/// Ordinary least-squares slope of log(value) against log(n).
/// Requires at least 2 pairs, all entries positive.
FitResult fit_exponent(const std::vector<std::pair<double, double>>& pairs);

/// Builds the recursive construction for each m and measures its exact
/// distortion. Guards each n = m^(d-1) against max_n.
std::vector<ScanRecord> run_scan(std::size_t d,
                                 const std::vector<std::size_t>& ms,
                                 CylinderSide side, std::size_t max_n);

/// Fixed order: m,d,n,delta3,ratio,runtime_ms with a header row.
std::string scan_csv(const std::vector<ScanRecord>& records);

FitResult fit_scan(const std::vector<ScanRecord>& records);

/// n+1 points spaced at unit arclength along a circular arc of the given
/// opening angle, rescaled to arclength n. A fixed shape rescaled this way
/// keeps a bounded osculating radius, so its distortion grows linearly.
std::vector<Point> baseline_arc_points(std::size_t n,
                                       double opening_angle = kPi / 3.0);

struct BaselineRecord {
  std::size_t n = 0;
  double delta3 = 0.0;
  double consecutive_triple = 0.0;  // distortion of the triple (0, 1, 2)
};

std::vector<BaselineRecord> run_baseline(const std::vector<std::size_t>& ns,
                                         double opening_angle = kPi / 3.0);

std::string baseline_csv(const std::vector<BaselineRecord>& records);

FitResult fit_baseline(const std::vector<BaselineRecord>& records);

}  // namespace distort3
