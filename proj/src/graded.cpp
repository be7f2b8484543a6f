#include "rankpd/graded.hpp"

#include <algorithm>

#include "rankpd/errors.hpp"
#include "rankpd/landscape.hpp"
#include "rankpd/transport.hpp"

namespace rankpd {

CriticalGrid CriticalGrid::from_diagram(const Diagram& alpha) {
  std::vector<double> vals;
  for (const auto& [iv, mult] : alpha.entries()) {
    (void)mult;
    vals.push_back(iv.birth);
    vals.push_back(iv.death);
  }
  if (vals.empty()) return {{0.0, 1.0}};
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<double> grid;
  grid.reserve(vals.size() + 2);
  grid.push_back(vals.front() - 1.0);
  grid.insert(grid.end(), vals.begin(), vals.end());
  grid.push_back(vals.back() + 1.0);
  return {std::move(grid)};
}

int CriticalGrid::index_of(double v) const {
  const auto it = std::lower_bound(values.begin(), values.end(), v);
  if (it == values.end() || *it != v) return -1;
  return static_cast<int>(it - values.begin());
}

int RankFunction::at(int i, int j) const {
  if (i < 0 || j >= n() || i > j) return 0;
  return table[static_cast<std::size_t>(i) * n() + j];
}

int RankFunction::max_value() const {
  int best = 0;
  for (int v : table) best = std::max(best, v);
  return best;
}

RankFunction rank_function_of(const Diagram& alpha, const CriticalGrid& grid) {
  if (!alpha.ordinary())
    throw unsupported_error("rank_function_of: signed diagram");
  for (const auto& [iv, mult] : alpha.entries()) {
    (void)mult;
    if (grid.index_of(iv.birth) < 0 || grid.index_of(iv.death) < 0)
      throw invariant_error("rank_function_of: grid missing a critical value");
  }
  RankFunction rf{grid, std::vector<int>(static_cast<std::size_t>(grid.size()) *
                                             grid.size(),
                                         0)};
  const int n = grid.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      int count = 0;
      for (const auto& [iv, mult] : alpha.entries())
        if (iv.birth <= grid.values[i] && grid.values[j] <= iv.death) count += mult;
      rf.entry(i, j) = count;
    }
  }
  return rf;
}

RankFunction graded_rank(const RankFunction& rf, int k) {
  if (k < 1) throw std::invalid_argument("graded_rank: k must be >= 1");
  RankFunction out{rf.grid,
                   std::vector<int>(static_cast<std::size_t>(rf.n()) * rf.n(), 0)};
  for (int i = 0; i < rf.n(); ++i)
    for (int j = i; j < rf.n(); ++j) out.entry(i, j) = rf.at(i, j) >= k ? 1 : 0;
  return out;
}

Diagram diagram_from_ranks(const RankFunction& rf) {
  Diagram out;
  const int n = rf.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const int mult =
          rf.at(i, j) - rf.at(i - 1, j) - rf.at(i, j + 1) + rf.at(i - 1, j + 1);
      if (mult != 0) out.add({rf.grid.values[i], rf.grid.values[j]}, mult);
    }
  }
  return out;
}

std::vector<Diagram> graded_diagrams(const Diagram& alpha) {
  if (alpha.empty()) return {};
  const auto grid = CriticalGrid::from_diagram(alpha);
  const auto rf = rank_function_of(alpha, grid);
  std::vector<Diagram> grades;
  const int top = rf.max_value();
  grades.reserve(static_cast<std::size_t>(top));
  for (int k = 1; k <= top; ++k)
    grades.push_back(diagram_from_ranks(graded_rank(rf, k)));
  return grades;
}

std::vector<Report> verify_graded_stability(const Diagram& alpha, const Diagram& beta,
                                            const MetricKind& m) {
  const auto ga = graded_diagrams(alpha);
  const auto gb = graded_diagrams(beta);
  const std::size_t grades = std::max(ga.size(), gb.size());
  double graded_sum = 0.0;
  for (std::size_t k = 0; k < grades; ++k)
    graded_sum += wasserstein_signed(k < ga.size() ? ga[k] : Diagram{},
                                     k < gb.size() ? gb[k] : Diagram{}, m);
  std::vector<Report> reports;
  reports.push_back(check_leq("graded sum dominates W1",
                              wasserstein(alpha, beta, m, 1.0).distance, graded_sum));
  if (m.tag == MetricKind::Tag::rank && m.p == 1.0)
    reports.push_back(check_leq("graded sum dominates landscape L1",
                                l1_distance(landscape_of(alpha), landscape_of(beta)),
                                graded_sum));
  return reports;
}

}  // namespace rankpd
