#include "rankpd/stability.hpp"

#include <cmath>
#include <stdexcept>

#include "rankpd/transport.hpp"

namespace rankpd {

namespace {

const Diagram kEmpty{};

const Diagram& degree_or_empty(const GradedDiagramFamily& f, int degree) {
  const auto it = f.find(degree);
  return it == f.end() ? kEmpty : it->second;
}

}  // namespace

std::vector<Report> verify_barcode_stability(const WeightedComplex& k,
                                             const WeightMap& w, const WeightMap& v,
                                             double horizon) {
  if (!(horizon >= k.upper))
    throw std::invalid_argument("verify_barcode_stability: horizon below b");
  const auto dgm_w = compute_diagrams(k, w, horizon);
  const auto dgm_v = compute_diagrams(k, v, horizon);
  const bool short_horizon = horizon < k.horizon() - 1e-12;
  const std::string label =
      short_horizon ? "expected per Lemma optimal interval (horizon < 2b-a)" : "";

  std::vector<Report> reports;
  const MetricKind rank1 = MetricKind::rank(1.0);
  double lhs_total = 0.0;
  double rhs_total = 0.0;
  for (const auto& cell : k.cells)
    rhs_total += free_module_distance(k, w, v, cell.id, rank1, horizon);

  for (int degree = 0; degree <= k.max_dim(); ++degree) {
    const double lhs =
        wasserstein(degree_or_empty(dgm_w, degree), degree_or_empty(dgm_v, degree),
                    rank1, 1.0)
            .distance;
    lhs_total += lhs;
    double rhs = 0.0;
    for (const auto& cell : k.cells)
      if (cell.dim == degree || cell.dim == degree + 1)
        rhs += free_module_distance(k, w, v, cell.id, rank1, horizon);
    auto rep = check_leq("barcode degree " + std::to_string(degree), lhs, rhs);
    if (!rep.pass) rep.details = label;
    reports.push_back(std::move(rep));
  }
  auto global = check_leq("barcode global", lhs_total, rhs_total);
  if (!global.pass) global.details = label;
  reports.push_back(std::move(global));
  return reports;
}

std::vector<Report> verify_wp_stability(const WeightedComplex& k, const WeightMap& w,
                                        const WeightMap& v, double p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("verify_wp_stability: p must be finite and >= 1");
  const double horizon = k.horizon();
  const auto dgm_w = compute_diagrams(k, w, horizon);
  const auto dgm_v = compute_diagrams(k, v, horizon);
  const MetricKind rank_p = MetricKind::rank(p);

  std::vector<Report> reports;
  double lhs_total = 0.0;
  double rhs_total_pow = 0.0;
  for (const auto& cell : k.cells)
    rhs_total_pow +=
        free_module_distance(k, w, v, cell.id, MetricKind::rank(1.0), horizon);

  for (int degree = 0; degree <= k.max_dim(); ++degree) {
    const double lhs =
        wasserstein(degree_or_empty(dgm_w, degree), degree_or_empty(dgm_v, degree),
                    rank_p, p)
            .distance;
    lhs_total += lhs;
    double rhs_pow = 0.0;
    for (const auto& cell : k.cells)
      if (cell.dim == degree || cell.dim == degree + 1)
        rhs_pow +=
            free_module_distance(k, w, v, cell.id, MetricKind::rank(1.0), horizon);
    reports.push_back(check_leq("wp degree " + std::to_string(degree) +
                                    " (p=" + std::to_string(p) + ")",
                                lhs, std::pow(rhs_pow, 1.0 / p)));
  }
  reports.push_back(check_leq("wp summed (p=" + std::to_string(p) + ")", lhs_total,
                              std::pow(rhs_total_pow, 1.0 / p)));
  return reports;
}

}  // namespace rankpd
