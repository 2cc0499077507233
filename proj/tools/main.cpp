#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "distort3/curve.hpp"
#include "distort3/distortion.hpp"
#include "distort3/io.hpp"
#include "distort3/lower_bound.hpp"
#include "distort3/optimizer.hpp"
#include "distort3/scan.hpp"
#include "distort3/svg.hpp"

namespace d3 = distort3;
using nlohmann::json;

namespace {

constexpr std::size_t kDefaultMaxN = 1500;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

json value_or_inf(double v) {
  if (std::isinf(v)) return json(d3::format_double(v));
  return json(v);
}

d3::TameSequence load_sequence(const std::string& path) {
  return d3::check_tame(d3::read_point_file(path));
}

json certificate_json(const d3::Certificate& cert) {
  json j;
  j["delta"] = cert.delta;
  j["subsample_indices"] = cert.subsample_indices;
  j["convex"] = cert.convex;
  j["implied_lower_bound"] = cert.implied_lower_bound;
  if (cert.witness) {
    const d3::WitnessInfo& w = *cert.witness;
    j["witness"] = {{"position", w.position},
                    {"angle", w.angle.radians},
                    {"bound", w.bound},
                    {"subsample_positions", w.subsample_positions},
                    {"original_indices", w.original_indices},
                    {"triple_distortion", value_or_inf(w.triple_distortion)}};
  }
  return j;
}

int cmd_delta3(const std::string& input, const std::string& json_out,
               bool max_n_override) {
  const d3::TameSequence seq = load_sequence(input);
  if (seq.n() > kDefaultMaxN && !max_n_override) {
    std::cerr << "error: n=" << seq.n() << " exceeds " << kDefaultMaxN
              << "; pass --max-n-override to run the exhaustive scan anyway\n";
    return 1;
  }
  const d3::DistortionReport rep = d3::delta3(seq);
  std::cout << "delta3=" << d3::format_double(rep.delta3) << " worst=("
            << rep.worst.i << "," << rep.worst.j << "," << rep.worst.k
            << ") triples=" << rep.triples_evaluated << "\n";
  if (!json_out.empty()) {
    json j;
    j["delta3"] = value_or_inf(rep.delta3);
    j["worst"] = {rep.worst.i, rep.worst.j, rep.worst.k};
    j["rho3"] = rep.worst.rho3;
    j["area"] = rep.worst.area;
    j["triples_evaluated"] = rep.triples_evaluated;
    j["n"] = seq.n();
    j["max_step"] = seq.max_step();
    write_text(json_out, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_construct(std::size_t m, std::size_t d, double r,
                  const std::string& side_name, const std::string& out,
                  const std::string& svg_out, const std::string& plane,
                  std::size_t per_unit) {
  const d3::CylinderSide side = side_name == "positive"
                                    ? d3::CylinderSide::positive
                                    : d3::CylinderSide::alternating;
  const d3::ConstructionParams params{m, d, r};
  const d3::TameSequence seq = d3::build_gamma(params, side);
  d3::write_point_file(out, seq.points());
  std::cout << "wrote " << seq.size() << " points (n=" << seq.n() << ", d="
            << d << ") to " << out << "\n";
  if (!svg_out.empty()) {
    const d3::MarkedCurve curve = d3::build_gamma_curve(params, side);
    d3::SvgOptions opt;
    opt.plane = plane;
    opt.per_unit = per_unit;
    write_text(svg_out, d3::render_curve_svg(curve, opt));
    std::cout << "wrote " << svg_out << "\n";
  }
  return 0;
}

int cmd_scan(std::size_t d, const std::vector<std::size_t>& ms,
             const std::string& side_name, const std::string& out,
             bool max_n_override) {
  const d3::CylinderSide side = side_name == "positive"
                                    ? d3::CylinderSide::positive
                                    : d3::CylinderSide::alternating;
  const std::size_t max_n = max_n_override ? 1000000 : kDefaultMaxN;
  const auto records = d3::run_scan(d, ms, side, max_n);
  const std::string csv = d3::scan_csv(records);
  if (out.empty()) {
    std::cout << csv;
  } else {
    write_text(out, csv);
    std::cout << "wrote " << out << "\n";
  }
  const d3::FitResult fit = d3::fit_scan(records);
  std::cout << "slope=" << d3::format_double(fit.slope)
            << " residual=" << d3::format_double(fit.residual_norm) << "\n";
  return 0;
}

int cmd_baseline(const std::vector<std::size_t>& ns, double opening,
                 const std::string& out) {
  const auto records = d3::run_baseline(ns, opening);
  const std::string csv = d3::baseline_csv(records);
  if (out.empty()) {
    std::cout << csv;
  } else {
    write_text(out, csv);
    std::cout << "wrote " << out << "\n";
  }
  const d3::FitResult fit = d3::fit_baseline(records);
  std::cout << "slope=" << d3::format_double(fit.slope)
            << " residual=" << d3::format_double(fit.residual_norm) << "\n";
  return 0;
}

int cmd_witness(const std::string& input, long long delta_override,
                const std::string& json_out) {
  const d3::TameSequence seq = load_sequence(input);
  if (seq.dim() != 2) {
    std::cerr << "error: witness requires planar input (d=2), got d="
              << seq.dim() << "\n";
    return 1;
  }
  json j;
  if (delta_override > 0) {
    // Exploration mode: certify a user-chosen step, no pipeline assertions.
    const d3::Certificate cert = d3::convexity_certificate(
        seq, static_cast<std::size_t>(delta_override));
    j = certificate_json(cert);
    j["n"] = seq.n();
    j["mode"] = "explore";
  } else {
    const d3::Prop1Report rep = d3::prop1_verify(seq);
    j = certificate_json(rep.certificate);
    j["n"] = rep.n;
    j["mode"] = "verify";
    j["delta3"] = rep.delta3_value;
    j["delta"] = rep.delta;
    j["small_n_branch"] = rep.small_n_branch;
    j["implied_bound"] = rep.implied_bound;
    j["reference_bound"] = rep.reference_bound;
  }
  const std::string text = j.dump(2) + "\n";
  std::cout << text;
  if (!json_out.empty()) write_text(json_out, text);
  return 0;
}

int cmd_optimize(std::size_t n, std::size_t d, std::uint64_t seed,
                 std::size_t restarts, const std::string& out,
                 double oracle_step, bool no_oracle) {
  d3::SearchConfig cfg;
  cfg.seed = seed;
  cfg.restarts = restarts;
  const d3::OptimizationResult res = d3::local_search(n, d, cfg);
  std::cout << "value=" << d3::format_double(res.value)
            << " restarts=" << res.restarts
            << " converged=" << (res.converged ? "true" : "false") << "\n";
  if (n <= 3 && d == 2 && !no_oracle) {
    const double oracle = d3::brute_force_oracle(n, oracle_step);
    std::cout << "oracle=" << d3::format_double(oracle)
              << " step=" << d3::format_double(oracle_step) << "\n";
  }
  if (!out.empty()) {
    d3::write_point_file(out, res.best.points());
    std::cout << "wrote " << out << "\n";
  }
  return 0;
}

int cmd_render(const std::string& input, const std::string& svg_out,
               const std::string& plane) {
  const auto points = d3::read_point_file(input);
  d3::SvgOptions opt;
  opt.plane = plane;
  write_text(svg_out, d3::render_points_svg(points, opt));
  std::cout << "wrote " << svg_out << "\n";
  return 0;
}

int guarded(const std::function<int()>& fn) {
  try {
    return fn();
  } catch (const d3::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const d3::tameness_error& e) {
    std::cerr << "tameness violation: " << e.what() << "\n";
    return 2;
  } catch (const d3::insufficient_points_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const d3::lemma_violation_error& e) {
    std::cerr << "lemma violation (implementation bug): " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "distort3: distortion of tame point sequences, recursive arc-spline "
      "embeddings, convexity certificates, and small-n optimal searches"};
  app.require_subcommand(1);

  // delta3
  std::string in_file, json_out;
  bool max_n_override = false;
  auto* sub_delta3 =
      app.add_subcommand("delta3", "distortion of a point file");
  sub_delta3->add_option("input", in_file, "point file (CSV or JSON)")
      ->required();
  sub_delta3->add_option("--json", json_out, "also write a JSON report");
  sub_delta3->add_flag("--max-n-override", max_n_override,
                       "allow n beyond 1500 (cubic cost)");

  // construct
  std::size_t m = 6, dim = 2, per_unit = 64;
  double radius = 1.0;
  std::string out_file, svg_file, plane = "xy", side = "alternating";
  auto* sub_construct = app.add_subcommand(
      "construct", "build the recursive arc-spline embedding");
  sub_construct->add_option("--m", m, "marked gaps per planar level")
      ->required()
      ->check(CLI::Range(static_cast<std::size_t>(2),
                         static_cast<std::size_t>(1000000)));
  sub_construct->add_option("--d", dim, "target dimension")
      ->required()
      ->check(CLI::Range(static_cast<std::size_t>(2),
                         static_cast<std::size_t>(64)));
  sub_construct->add_option("--r", radius, "base radius (cancels; testing)");
  sub_construct->add_option("--side", side, "cylinder side")
      ->check(CLI::IsMember({"alternating", "positive"}));
  sub_construct->add_option("--out", out_file, "output point file")
      ->required();
  sub_construct->add_option("--svg", svg_file, "also render to SVG");
  sub_construct->add_option("--plane", plane, "projection plane for d >= 3")
      ->check(CLI::IsMember({"xy", "xz", "yz"}));
  sub_construct->add_option("--per-unit", per_unit,
                            "curve samples per arclength unit")
      ->check(CLI::Range(static_cast<std::size_t>(1),
                         static_cast<std::size_t>(4096)));

  // scan
  std::vector<std::size_t> m_list;
  std::string scan_out, scan_side = "alternating";
  std::size_t scan_d = 2;
  bool scan_override = false;
  auto* sub_scan =
      app.add_subcommand("scan", "distortion scaling of the construction");
  sub_scan->add_option("--d", scan_d, "dimension")->required();
  sub_scan->add_option("--m", m_list, "m values")
      ->required()
      ->delimiter(',');
  sub_scan->add_option("--out", scan_out, "CSV output path");
  sub_scan->add_option("--side", scan_side, "cylinder side")
      ->check(CLI::IsMember({"alternating", "positive"}));
  sub_scan->add_flag("--max-n-override", scan_override,
                     "allow n beyond 1500 (cubic cost)");

  // baseline
  std::vector<std::size_t> n_list;
  double opening = d3::kPi / 3.0;
  std::string base_out;
  auto* sub_baseline = app.add_subcommand(
      "baseline", "fixed-shape arc rescaled to length n (linear growth)");
  sub_baseline->add_option("--n", n_list, "n values")
      ->required()
      ->delimiter(',');
  sub_baseline->add_option("--opening", opening, "arc opening angle");
  sub_baseline->add_option("--out", base_out, "CSV output path");

  // witness
  std::string wit_in, wit_json;
  long long wit_delta = 0;
  auto* sub_witness = app.add_subcommand(
      "witness", "convex-subsample certificate of a planar point file");
  sub_witness->add_option("input", wit_in, "point file")->required();
  sub_witness->add_option("--delta", wit_delta,
                          "explore a specific subsampling step instead of "
                          "running the verification pipeline");
  sub_witness->add_option("--json", wit_json, "also write the JSON");

  // optimize
  std::size_t opt_n = 3, opt_d = 2, opt_restarts = 0;
  std::uint64_t opt_seed = 42;
  double oracle_step = 0.01;
  bool no_oracle = false;
  std::string opt_out;
  auto* sub_optimize = app.add_subcommand(
      "optimize", "search for a minimal-distortion tame sequence");
  sub_optimize->add_option("--n", opt_n, "path length")
      ->required()
      ->check(CLI::Range(static_cast<std::size_t>(2),
                         static_cast<std::size_t>(64)));
  sub_optimize->add_option("--d", opt_d, "dimension");
  sub_optimize->add_option("--seed", opt_seed, "RNG seed");
  sub_optimize->add_option("--restarts", opt_restarts,
                           "restart count (0 = default)");
  sub_optimize->add_option("--out", opt_out, "write the best points");
  sub_optimize->add_option("--oracle-step", oracle_step,
                           "grid step of the exhaustive check (n <= 3)");
  sub_optimize->add_flag("--no-oracle", no_oracle,
                         "skip the exhaustive grid check");

  // render
  std::string render_in, render_svg, render_plane = "xy";
  auto* sub_render = app.add_subcommand("render", "point file to SVG");
  sub_render->add_option("input", render_in, "point file")->required();
  sub_render->add_option("--svg", render_svg, "SVG output path")->required();
  sub_render->add_option("--plane", render_plane, "projection plane")
      ->check(CLI::IsMember({"xy", "xz", "yz"}));

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand(sub_delta3)) {
    return guarded([&] { return cmd_delta3(in_file, json_out, max_n_override); });
  }
  if (app.got_subcommand(sub_construct)) {
    return guarded([&] {
      return cmd_construct(m, dim, radius, side, out_file, svg_file, plane,
                           per_unit);
    });
  }
  if (app.got_subcommand(sub_scan)) {
    return guarded([&] {
      return cmd_scan(scan_d, m_list, scan_side, scan_out, scan_override);
    });
  }
  if (app.got_subcommand(sub_baseline)) {
    return guarded([&] { return cmd_baseline(n_list, opening, base_out); });
  }
  if (app.got_subcommand(sub_witness)) {
    return guarded([&] { return cmd_witness(wit_in, wit_delta, wit_json); });
  }
  if (app.got_subcommand(sub_optimize)) {
    return guarded([&] {
      return cmd_optimize(opt_n, opt_d, opt_seed, opt_restarts, opt_out,
                          oracle_step, no_oracle);
    });
  }
  if (app.got_subcommand(sub_render)) {
    return guarded([&] { return cmd_render(render_in, render_svg, render_plane); });
  }
  return 0;
}
