#include "distort3/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace distort3 {

namespace {

std::vector<Point> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw parse_error("empty point file");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.rfind("dim=", 0) != 0) {
    throw parse_error("point file must start with 'dim=<d>'");
  }
  std::size_t dim = 0;
  try {
    dim = std::stoul(line.substr(4));
  } catch (...) {
    throw parse_error("malformed dimension header: " + line);
  }
  if (dim < 1) {
    throw parse_error("dimension must be >= 1");
  }

  std::vector<Point> points;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Point p;
    p.coords.reserve(dim);
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      try {
        std::size_t used = 0;
        const double v = std::stod(field, &used);
        while (used < field.size() && std::isspace(static_cast<unsigned char>(
                                          field[used]))) {
          ++used;
        }
        if (used != field.size()) throw parse_error("");
        p.coords.push_back(v);
      } catch (...) {
        throw parse_error("line " + std::to_string(lineno) +
                          ": malformed coordinate '" + field + "'");
      }
    }
    if (p.dim() != dim) {
      throw parse_error("line " + std::to_string(lineno) + ": expected " +
                        std::to_string(dim) + " coordinates, got " +
                        std::to_string(p.dim()));
    }
    for (double v : p.coords) {
      if (!std::isfinite(v)) {
        throw parse_error("line " + std::to_string(lineno) +
                          ": non-finite coordinate");
      }
    }
    points.push_back(std::move(p));
  }
  return points;
}

std::vector<Point> parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("points")) {
    throw parse_error("JSON point file needs 'dim' and 'points'");
  }
  const std::size_t dim = doc["dim"].get<std::size_t>();
  std::vector<Point> points;
  for (const auto& row : doc["points"]) {
    Point p;
    for (const auto& v : row) {
      if (!v.is_number()) throw parse_error("non-numeric coordinate");
      p.coords.push_back(v.get<double>());
    }
    if (p.dim() != dim) {
      throw parse_error("point dimension disagrees with 'dim'");
    }
    points.push_back(std::move(p));
  }
  return points;
}

}  // namespace

std::vector<Point> parse_points(const std::string& text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return parse_json(text);
  }
  return parse_csv(text);
}

std::vector<Point> read_point_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw parse_error("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_points(buf.str());
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string points_to_csv(const std::vector<Point>& points) {
  if (points.empty()) {
    throw std::invalid_argument("points_to_csv: no points");
  }
  std::ostringstream out;
  out << "dim=" << points.front().dim() << "\n";
  for (const Point& p : points) {
    for (std::size_t t = 0; t < p.dim(); ++t) {
      if (t) out << ",";
      out << format_double(p[t]);
    }
    out << "\n";
  }
  return out.str();
}

std::string points_to_json(const std::vector<Point>& points) {
  if (points.empty()) {
    throw std::invalid_argument("points_to_json: no points");
  }
  nlohmann::json doc;
  doc["dim"] = points.front().dim();
  auto rows = nlohmann::json::array();
  for (const Point& p : points) {
    rows.push_back(p.coords);
  }
  doc["points"] = std::move(rows);
  return doc.dump(2);
}

void write_point_file(const std::string& path,
                      const std::vector<Point>& points) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  const bool json =
      path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  out << (json ? points_to_json(points) : points_to_csv(points));
  if (!out) {
    throw std::runtime_error("write failed for " + path);
  }
}

}  // namespace distort3
