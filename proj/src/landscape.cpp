#include "rankpd/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rankpd/errors.hpp"
#include "rankpd/num_format.hpp"
#include "rankpd/transport.hpp"

namespace rankpd {

double PiecewiseLinear::value_at(double t) const {
  if (breakpoints.empty()) return 0.0;
  if (t <= breakpoints.front().first || t >= breakpoints.back().first) {
    if (t == breakpoints.front().first) return breakpoints.front().second;
    if (t == breakpoints.back().first) return breakpoints.back().second;
    return 0.0;
  }
  const auto it = std::lower_bound(
      breakpoints.begin(), breakpoints.end(), t,
      [](const std::pair<double, double>& bp, double key) { return bp.first < key; });
  if (it->first == t) return it->second;
  const auto prev = std::prev(it);
  const double u = (t - prev->first) / (it->first - prev->first);
  return prev->second + u * (it->second - prev->second);
}

double PiecewiseLinear::integral() const {
  double total = 0.0;
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    total += 0.5 * (breakpoints[i].second + breakpoints[i - 1].second) *
             (breakpoints[i].first - breakpoints[i - 1].first);
  return total;
}

double abs_difference_integral(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  std::vector<double> ts;
  ts.reserve(f.breakpoints.size() + g.breakpoints.size());
  for (const auto& bp : f.breakpoints) ts.push_back(bp.first);
  for (const auto& bp : g.breakpoints) ts.push_back(bp.first);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  double total = 0.0;
  for (std::size_t i = 1; i < ts.size(); ++i) {
    const double dt = ts[i] - ts[i - 1];
    const double h0 = f.value_at(ts[i - 1]) - g.value_at(ts[i - 1]);
    const double h1 = f.value_at(ts[i]) - g.value_at(ts[i]);
    if (h0 * h1 >= 0.0) {
      total += 0.5 * std::abs(h0 + h1) * dt;
    } else {
      const double root = dt * h0 / (h0 - h1);
      total += 0.5 * (std::abs(h0) * root + std::abs(h1) * (dt - root));
    }
  }
  return total;
}

const PiecewiseLinear& Landscape::level(std::size_t k) const {
  static const PiecewiseLinear zero{};
  return k >= 1 && k <= levels.size() ? levels[k - 1] : zero;
}

Landscape landscape_of(const Diagram& alpha) {
  auto points = alpha.expanded();
  std::erase_if(points, [](const Interval& iv) { return iv.degenerate(); });
  if (points.empty()) return {};
  const std::size_t n = points.size();

  // Candidate abscissae: tent feet plus every up/down piece crossing
  // (b_i + d_j) / 2; between consecutive candidates every tent is linear and
  // the tents keep their order, so each level is linear there.
  std::vector<double> ts;
  ts.reserve(2 * n + n * n);
  for (const auto& p : points) {
    ts.push_back(p.birth);
    ts.push_back(p.death);
  }
  for (const auto& pi : points)
    for (const auto& pj : points) ts.push_back(0.5 * (pi.birth + pj.death));
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  std::size_t max_levels = 0;
  std::vector<std::vector<double>> columns(ts.size());
  std::vector<double> vals(n);
  for (std::size_t c = 0; c < ts.size(); ++c) {
    const double t = ts[c];
    std::size_t positive = 0;
    for (std::size_t i = 0; i < n; ++i) {
      vals[i] = std::max(0.0, std::min(t - points[i].birth, points[i].death - t));
      if (vals[i] > 0.0) ++positive;
    }
    std::sort(vals.begin(), vals.end(), std::greater<>());
    columns[c] = vals;
    max_levels = std::max(max_levels, positive);
  }

  Landscape ls;
  for (std::size_t k = 0; k < max_levels; ++k) {
    PiecewiseLinear pl;
    std::size_t first = ts.size(), last = 0;
    for (std::size_t c = 0; c < ts.size(); ++c) {
      if (columns[c][k] > 0.0) {
        first = std::min(first, c);
        last = std::max(last, c);
      }
    }
    for (std::size_t c = first == 0 ? 0 : first - 1;
         c <= std::min(last + 1, ts.size() - 1); ++c) {
      // skip interior points of zero runs
      if (columns[c][k] == 0.0 && !pl.breakpoints.empty() &&
          pl.breakpoints.back().second == 0.0 && c + 1 <= last &&
          columns[c + 1][k] == 0.0)
        continue;
      pl.breakpoints.emplace_back(ts[c], columns[c][k]);
    }
    ls.levels.push_back(std::move(pl));
  }
  return ls;
}

double l1_norm(const Landscape& ls) {
  double total = 0.0;
  for (const auto& level : ls.levels) total += level.integral();
  return total;
}

double l1_distance(const Landscape& a, const Landscape& b) {
  const std::size_t levels = std::max(a.levels.size(), b.levels.size());
  double total = 0.0;
  for (std::size_t k = 1; k <= levels; ++k)
    total += abs_difference_integral(a.level(k), b.level(k));
  return total;
}

Report verify_landscape_stability(const Diagram& alpha, const Diagram& beta) {
  const double lhs = l1_distance(landscape_of(alpha), landscape_of(beta));
  const double rhs =
      0.5 * wasserstein(alpha, beta, MetricKind::rank(1.0), 1.0).distance;
  auto report = check_leq("landscape L1 vs half W1^rank", lhs, rhs);
  if (report.pass && std::abs(report.slack) <= kReportTolerance)
    report.details = "equality";
  return report;
}

Landscape parse_landscape(std::string_view text) {
  Landscape ls;
  PiecewiseLinear current;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  const auto flush = [&] {
    if (!current.breakpoints.empty()) {
      ls.levels.push_back(std::move(current));
      current = {};
    }
  };
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::istringstream ss{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    if (tokens.empty()) {
      flush();
      continue;
    }
    double t = 0.0, v = 0.0;
    if (tokens.size() != 2 || !parse_double(tokens[0], t) || !parse_double(tokens[1], v))
      throw parse_error("landscape line " + std::to_string(line_no) +
                        ": expected `t value`");
    if (!current.breakpoints.empty() && t <= current.breakpoints.back().first)
      throw parse_error("landscape line " + std::to_string(line_no) +
                        ": abscissae must increase");
    current.breakpoints.emplace_back(t, v);
  }
  flush();
  return ls;
}

std::string format_landscape(const Landscape& ls) {
  std::string out;
  for (std::size_t k = 0; k < ls.levels.size(); ++k) {
    if (k) out += '\n';
    for (const auto& [t, v] : ls.levels[k].breakpoints)
      out += fmt_double(t) + " " + fmt_double(v) + "\n";
  }
  return out;
}

}  // namespace rankpd
