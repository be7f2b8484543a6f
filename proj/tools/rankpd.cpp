// Command-line interface: persistence of weighted complexes, Wasserstein
// distances between diagrams, landscapes, metric-ball boundaries and the
// stability verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 input-invariant violation, 4 unsupported combination.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rankpd/ball.hpp"
#include "rankpd/errors.hpp"
#include "rankpd/graded.hpp"
#include "rankpd/harness.hpp"
#include "rankpd/landscape.hpp"
#include "rankpd/num_format.hpp"
#include "rankpd/stability.hpp"
#include "rankpd/transport.hpp"

namespace {

using namespace rankpd;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot write " + path);
  out << content;
}

MetricKind metric_from_flags(const std::string& name, double metric_p) {
  if (name == "rank") return MetricKind::rank(metric_p);
  if (name == "dim") return MetricKind::dim();
  if (name == "linf") return MetricKind::linfty();
  if (name == "lp") return MetricKind::lp_endpoint(metric_p);
  throw parse_error("unknown metric " + name);
}

double wasserstein_p_from_flag(const std::string& flag) {
  if (flag == "inf") return kInfinity;
  double p = 0.0;
  if (!parse_double(flag, p) || !(p >= 1.0))
    throw parse_error("--wasserstein-p must be a number >= 1 or `inf`");
  return p;
}

int cmd_compute(const std::string& complex_path, const std::string& weight_path,
                int degree, double horizon_flag, std::string out_prefix) {
  WeightedComplex k = parse_complex(slurp(complex_path));
  k.validate();
  WeightMap w = k.weight;
  if (!weight_path.empty()) {
    w = parse_weights(slurp(weight_path));
    k.validate_weights(w);
  }
  const double horizon = std::isnan(horizon_flag) ? k.horizon() : horizon_flag;
  const auto family = compute_diagrams(k, w, horizon);
  if (out_prefix.empty()) {
    out_prefix = complex_path;
    if (const auto dot = out_prefix.rfind('.'); dot != std::string::npos)
      out_prefix.erase(dot);
  }
  for (int i = 0; i <= k.max_dim(); ++i) {
    if (degree >= 0 && i != degree) continue;
    const auto it = family.find(i);
    const std::string path = out_prefix + ".deg" + std::to_string(i) + ".dgm";
    spill(path, format_diagram(it == family.end() ? Diagram{} : it->second));
    std::cout << "wrote " << path << "\n";
  }
  return 0;
}

int cmd_dist(const std::string& a_path, const std::string& b_path,
             const std::string& metric_name, double metric_p,
             const std::string& wp_flag, bool dump_coupling) {
  const Diagram a = parse_diagram(slurp(a_path));
  const Diagram b = parse_diagram(slurp(b_path));
  const MetricKind m = metric_from_flags(metric_name, metric_p);
  const double p = wasserstein_p_from_flag(wp_flag);
  if (!a.ordinary() || !b.ordinary()) {
    if (p != 1.0)
      throw unsupported_error("signed diagrams require --wasserstein-p 1");
    if (dump_coupling)
      throw unsupported_error("--coupling is unavailable for signed diagrams");
    std::printf("%.12g\n", wasserstein_signed(a, b, m));
    return 0;
  }
  const auto result = wasserstein(a, b, m, p);
  std::printf("%.12g\n", result.distance);
  if (dump_coupling) {
    for (const auto& [x, y] : result.coupling.matched)
      std::cout << "match " << fmt_double(x.birth) << " " << fmt_double(x.death)
                << " " << fmt_double(y.birth) << " " << fmt_double(y.death) << "\n";
    for (const auto& x : result.coupling.left_unmatched)
      std::cout << "left " << fmt_double(x.birth) << " " << fmt_double(x.death)
                << "\n";
    for (const auto& y : result.coupling.right_unmatched)
      std::cout << "right " << fmt_double(y.birth) << " " << fmt_double(y.death)
                << "\n";
  }
  return 0;
}

int cmd_landscape(const std::string& a_path, const std::string& dist_path,
                  const std::string& out_path) {
  const Diagram a = parse_diagram(slurp(a_path));
  if (!dist_path.empty()) {
    const Diagram b = parse_diagram(slurp(dist_path));
    std::printf("%.12g\n", l1_distance(landscape_of(a), landscape_of(b)));
    return 0;
  }
  const std::string text = format_landscape(landscape_of(a));
  if (out_path.empty())
    std::cout << text;
  else
    spill(out_path, text);
  return 0;
}

int cmd_ball(double center_birth, double center_death, double radius,
             const std::string& metric_name, double metric_p, int samples,
             const std::string& out_path) {
  if (!(radius > 0.0)) throw unsupported_error("--radius must be positive");
  if (!(center_birth <= center_death))
    throw invariant_error("--center must satisfy birth <= death");
  const MetricKind m = metric_from_flags(metric_name, metric_p);
  const auto points =
      ball_boundary({center_birth, center_death}, radius, m, samples);
  std::string csv = "y1,y2\n";
  for (const auto& [y1, y2] : points)
    csv += fmt_double(y1) + "," + fmt_double(y2) + "\n";
  if (out_path.empty())
    std::cout << csv;
  else
    spill(out_path, csv);
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int trials,
               double horizon_flag, const std::vector<std::string>& fixtures) {
  std::vector<Report> reports;
  const std::optional<double> horizon =
      std::isnan(horizon_flag) ? std::nullopt : std::optional<double>(horizon_flag);
  if (suite == "barcode") {
    if (!fixtures.empty()) {
      WeightedComplex k = parse_complex(slurp(fixtures[0]));
      WeightMap v = fixtures.size() > 1 ? parse_weights(slurp(fixtures[1])) : k.weight;
      k.validate();
      k.validate_weights(v);
      const auto fixture_reports =
          harness::run_barcode_fixture(k, v, horizon.value_or(k.horizon()));
      reports.insert(reports.end(), fixture_reports.begin(), fixture_reports.end());
    }
    const auto random_reports = harness::run_barcode_suite(seed, trials, horizon);
    reports.insert(reports.end(), random_reports.begin(), random_reports.end());
  } else if (suite == "landscape") {
    reports = harness::run_landscape_suite(seed, trials);
  } else if (suite == "graded") {
    reports = harness::run_graded_suite(seed, trials);
  } else if (suite == "coupling") {
    reports = harness::run_coupling_suite(seed, trials);
  } else {
    throw parse_error("unknown suite " + suite);
  }
  for (const auto& r : reports) std::cout << format_report(r) << "\n";
  return all_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank-metric Wasserstein distances, persistence, landscapes"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "persistence diagrams of a weighted complex");
  std::string complex_path, weight_path, out_prefix;
  int degree = -1;
  double horizon_flag = std::nan("");
  compute->add_option("complex", complex_path, "complex file")->required();
  compute->add_option("weights", weight_path, "weight file overriding the complex weights");
  compute->add_option("--degree", degree, "only this homology degree");
  compute->add_option("--horizon", horizon_flag, "essential-class death (default 2b-a)");
  compute->add_option("--out", out_prefix, "output prefix (default: complex path stem)");

  auto* dist = app.add_subcommand("dist", "Wasserstein distance between two diagrams");
  std::string a_path, b_path, metric_name = "rank", wp_flag = "1";
  double metric_p = std::nan("");
  bool dump_coupling = false;
  dist->add_option("a", a_path, "first diagram")->required();
  dist->add_option("b", b_path, "second diagram")->required();
  dist->add_option("--metric", metric_name, "rank|dim|linf|lp")
      ->check(CLI::IsMember({"rank", "dim", "linf", "lp"}));
  dist->add_option("--metric-p", metric_p, "p of the ground metric (rank: 1, lp: 2)");
  dist->add_option("--wasserstein-p", wp_flag, "aggregation order, number or `inf`");
  dist->add_flag("--coupling", dump_coupling, "dump an optimal coupling");

  auto* landscape = app.add_subcommand("landscape", "persistence landscape of a diagram");
  std::string ls_path, ls_dist_path, ls_out;
  landscape->add_option("a", ls_path, "diagram")->required();
  landscape->add_option("--dist", ls_dist_path, "print the L1 distance to this diagram");
  landscape->add_option("--out", ls_out, "write the landscape here instead of stdout");

  auto* ball = app.add_subcommand("ball", "metric ball boundary as CSV");
  std::vector<double> center;
  double radius = 0.0;
  int samples = 256;
  std::string ball_metric = "rank", ball_out;
  double ball_metric_p = std::nan("");
  ball->add_option("--center", center, "birth death")->expected(2)->required();
  ball->add_option("--radius", radius, "ball radius")->required();
  ball->add_option("--metric", ball_metric, "rank|dim|linf|lp")
      ->check(CLI::IsMember({"rank", "dim", "linf", "lp"}));
  ball->add_option("--metric-p", ball_metric_p, "p of the ground metric");
  ball->add_option("--samples", samples, "number of boundary points");
  ball->add_option("--out", ball_out, "write CSV here instead of stdout");

  auto* verify = app.add_subcommand("verify", "run a stability verification suite");
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 100;
  double verify_horizon = std::nan("");
  std::vector<std::string> fixtures;
  verify->add_option("--suite", suite, "barcode|landscape|graded|coupling")->required();
  verify->add_option("--seed", seed, "base seed (trial i uses seed + i)");
  verify->add_option("--trials", trials, "number of random trials");
  verify->add_option("--horizon", verify_horizon, "horizon override (barcode suite)");
  verify->add_option("fixtures", fixtures, "barcode suite: complex file [v weights]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*compute)
      return cmd_compute(complex_path, weight_path, degree, horizon_flag, out_prefix);
    if (*dist) {
      if (std::isnan(metric_p)) metric_p = metric_name == "lp" ? 2.0 : 1.0;
      return cmd_dist(a_path, b_path, metric_name, metric_p, wp_flag, dump_coupling);
    }
    if (*landscape) return cmd_landscape(ls_path, ls_dist_path, ls_out);
    if (*ball) {
      if (std::isnan(ball_metric_p)) ball_metric_p = ball_metric == "lp" ? 2.0 : 1.0;
      if (samples < 4) throw parse_error("--samples must be at least 4");
      return cmd_ball(center[0], center[1], radius, ball_metric, ball_metric_p,
                      samples, ball_out);
    }
    if (*verify) return cmd_verify(suite, seed, trials, verify_horizon, fixtures);
  } catch (const unsupported_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const invariant_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
