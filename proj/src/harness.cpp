#include "rankpd/harness.hpp"

#include <algorithm>
#include <cmath>

#include "rankpd/landscape.hpp"
#include "rankpd/graded.hpp"
#include "rankpd/stability.hpp"
#include "rankpd/transport.hpp"

namespace rankpd::harness {

namespace {

std::mt19937_64 trial_rng(std::uint64_t seed, int trial) {
  return std::mt19937_64(seed + static_cast<std::uint64_t>(trial));
}

MetricKind cycle_metric(int i) {
  switch (i % 4) {
    case 0: return MetricKind::rank(1.0);
    case 1: return MetricKind::dim();
    case 2: return MetricKind::linfty();
    default: return MetricKind::lp_endpoint(2.0);
  }
}

const char* metric_name(int i) {
  switch (i % 4) {
    case 0: return "rank";
    case 1: return "dim";
    case 2: return "linf";
    default: return "l2";
  }
}

}  // namespace

Diagram random_diagram(std::mt19937_64& rng, int max_points, double lo, double hi,
                       double max_pers) {
  std::uniform_int_distribution<int> count(0, max_points);
  std::uniform_real_distribution<double> coord(lo, hi);
  Diagram d;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    const double b = coord(rng);
    const double cap = max_pers > 0.0 ? std::min(hi, b + max_pers) : hi;
    std::uniform_real_distribution<double> death(b, cap);
    d.add({b, death(rng)});
  }
  return d;
}

WeightedComplex random_complex(std::mt19937_64& rng, int max_cells) {
  WeightedComplex k;
  k.lower = 0.0;
  k.upper = 1.0;
  std::uniform_int_distribution<int> nv_dist(1, 6);
  const int nv = std::min(nv_dist(rng), max_cells);
  for (int i = 0; i < nv; ++i) k.cells.push_back({i, 0, {}});

  std::vector<std::pair<int, int>> possible_edges;
  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v) possible_edges.emplace_back(u, v);
  std::shuffle(possible_edges.begin(), possible_edges.end(), rng);
  std::uniform_int_distribution<int> ne_dist(0, static_cast<int>(possible_edges.size()));
  const int ne = std::min(ne_dist(rng), max_cells - nv);
  std::map<std::pair<int, int>, int> edge_id;
  int next_id = nv;
  for (int i = 0; i < ne; ++i) {
    const auto [u, v] = possible_edges[i];
    k.cells.push_back({next_id, 1, {u, v}});
    edge_id[{u, v}] = next_id++;
  }

  std::vector<std::array<int, 3>> possible_tris;
  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v)
      for (int t = v + 1; t < nv; ++t)
        if (edge_id.count({u, v}) && edge_id.count({v, t}) && edge_id.count({u, t}))
          possible_tris.push_back({u, v, t});
  std::shuffle(possible_tris.begin(), possible_tris.end(), rng);
  std::uniform_int_distribution<int> nt_dist(0, static_cast<int>(possible_tris.size()));
  const int nt =
      std::min(nt_dist(rng), max_cells - static_cast<int>(k.cells.size()));
  for (int i = 0; i < nt; ++i) {
    const auto [u, v, t] = possible_tris[i];
    k.cells.push_back(
        {next_id++, 2, {edge_id[{u, v}], edge_id[{v, t}], edge_id[{u, t}]}});
  }

  k.weight = random_monotone_weights(rng, k);
  return k;
}

WeightMap random_monotone_weights(std::mt19937_64& rng, const WeightedComplex& k) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  WeightMap w;
  auto cells = k.cells;
  std::sort(cells.begin(), cells.end(),
            [](const auto& a, const auto& b) { return a.dim < b.dim; });
  for (const auto& cell : cells) {
    double floor = k.lower;
    for (int fid : cell.boundary) floor = std::max(floor, w.at(fid));
    w[cell.id] = floor + unit(rng) * (k.upper - floor);
  }
  return w;
}

WeightMap compatible_reweighting(std::mt19937_64& rng, const WeightedComplex& k,
                                 const WeightMap& w) {
  std::vector<double> values;
  for (const auto& [id, val] : w) {
    (void)id;
    values.push_back(val);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::uniform_real_distribution<double> unit(k.lower, k.upper);
  std::vector<double> targets(values.size());
  for (auto& t : targets) t = unit(rng);
  std::sort(targets.begin(), targets.end());
  WeightMap out;
  for (const auto& [id, val] : w) {
    const auto pos = std::lower_bound(values.begin(), values.end(), val);
    out[id] = targets[static_cast<std::size_t>(pos - values.begin())];
  }
  return out;
}

StabilityWitness optimal_interval_witness(double a, double b) {
  StabilityWitness wit;
  wit.complex.lower = a;
  wit.complex.upper = b;
  wit.complex.cells = {{0, 0, {}}, {1, 1, {}}, {2, 2, {1}}};
  wit.complex.weight = {{0, a}, {1, a}, {2, 0.5 * (a + b)}};
  wit.v = {{0, a}, {1, a}, {2, b}};
  return wit;
}

std::vector<Report> run_coupling_suite(std::uint64_t seed, int trials) {
  std::vector<Report> reports;
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const MetricKind m = cycle_metric(t);
    const std::string tag = " [t" + std::to_string(t) + " " + metric_name(t) + "]";
    const auto gen = [&] { return random_diagram(rng, 4); };
    const Diagram alpha = gen(), beta = gen(), sigma = gen(), tau = gen(),
                  gamma = gen(), eta = gen();
    const auto w1 = [&](const Diagram& x, const Diagram& y) {
      return wasserstein(x, y, m, 1.0).distance;
    };
    reports.push_back(check_leq("coupling add" + tag, w1(alpha + sigma, beta + tau),
                                w1(alpha, beta) + w1(sigma, tau)));
    reports.push_back(check_leq(
        "coupling match" + tag,
        std::abs(w1(alpha + sigma, beta + sigma) - w1(alpha, beta)), 0.0));
    reports.push_back(check_leq("coupling arithmetic" + tag, w1(alpha + tau, beta + eta),
                                w1(alpha + gamma, beta + sigma) +
                                    w1(tau + sigma, eta + gamma)));
    reports.push_back(check_leq("W1 triangle" + tag, w1(alpha, gamma),
                                w1(alpha, beta) + w1(beta, gamma)));
  }
  return reports;
}

std::vector<Report> run_landscape_suite(std::uint64_t seed, int trials) {
  std::vector<Report> reports;
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const std::string tag = " [t" + std::to_string(t) + "]";
    const Diagram alpha = random_diagram(rng, 20);
    const Diagram beta = random_diagram(rng, 20);
    auto stability = verify_landscape_stability(alpha, beta);
    stability.name += tag;
    reports.push_back(std::move(stability));
    const double norm = l1_norm(landscape_of(alpha));
    const double half_w1 =
        0.5 * wasserstein(alpha, Diagram{}, MetricKind::rank(1.0), 1.0).distance;
    reports.push_back(
        check_leq("landscape norm identity" + tag, std::abs(norm - half_w1), 0.0));
  }
  return reports;
}

std::vector<Report> run_graded_suite(std::uint64_t seed, int trials) {
  std::vector<Report> reports;
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const std::string tag = " [t" + std::to_string(t) + "]";
    const Diagram alpha = random_diagram(rng, 8);
    const Diagram beta = random_diagram(rng, 8);

    const auto grades = graded_diagrams(alpha);
    Diagram sum;
    int bad_mult = 0;
    for (const auto& g : grades) {
      sum += g;
      for (const auto& [iv, mult] : g.entries()) {
        (void)iv;
        if (mult != 1 && mult != -1) ++bad_mult;
      }
    }
    reports.push_back(check_leq("graded sum identity" + tag,
                                sum == alpha ? 0.0 : 1.0, 0.0));
    reports.push_back(
        check_leq("graded multiplicities in {-1,+1}" + tag, bad_mult, 0.0));
    for (auto rep : verify_graded_stability(alpha, beta, MetricKind::rank(1.0))) {
      rep.name += " [rank]" + tag;
      reports.push_back(std::move(rep));
    }
    for (auto rep : verify_graded_stability(alpha, beta, MetricKind::dim())) {
      rep.name += " [dim]" + tag;
      reports.push_back(std::move(rep));
    }
  }
  return reports;
}

std::vector<Report> run_barcode_suite(std::uint64_t seed, int trials,
                                      std::optional<double> horizon) {
  std::vector<Report> reports;
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const WeightedComplex k = random_complex(rng, 30);
    const WeightMap v = random_monotone_weights(rng, k);
    const double h = horizon.value_or(k.horizon());
    for (auto rep : verify_barcode_stability(k, k.weight, v, h)) {
      rep.name += " [t" + std::to_string(t) + "]";
      reports.push_back(std::move(rep));
    }
  }
  return reports;
}

std::vector<Report> run_barcode_fixture(const WeightedComplex& k, const WeightMap& v,
                                        double horizon) {
  auto reports = verify_barcode_stability(k, k.weight, v, horizon);
  for (auto& rep : reports) rep.name += " [fixture]";
  return reports;
}

}  // namespace rankpd::harness
