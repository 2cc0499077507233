#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "distort3/geometry.hpp"

namespace distort3 {

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// CSV point format: first line "dim=<d>", then one point per line as d
/// comma-separated decimals. Row order carries the path structure.
/// JSON alternative: {"dim": d, "points": [[...], ...]}.
/// Doubles are written with 17 significant digits, so write-then-read
/// round-trips exactly.

std::vector<Point> parse_points(const std::string& text);
std::vector<Point> read_point_file(const std::string& path);

std::string points_to_csv(const std::vector<Point>& points);
std::string points_to_json(const std::vector<Point>& points);

/// Writes CSV, or JSON when the path ends in ".json".
void write_point_file(const std::string& path,
                      const std::vector<Point>& points);

/// "%.17g", with infinities rendered as "inf".
std::string format_double(double v);

}  // namespace distort3
