#include "rankpd/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rankpd/errors.hpp"

namespace rankpd {

namespace {

// Min-cost perfect matching on a square cost matrix via augmenting shortest
// paths with potentials (Jonker-Volgenant style, O(n^3)). rowsol[i] = column
// assigned to row i.
double solve_assignment(const std::vector<std::vector<double>>& cost,
                        std::vector<int>& rowsol) {
  const int n = static_cast<int>(cost.size());
  rowsol.assign(n, -1);
  if (n == 0) return 0.0;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = 0;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  for (int j = 1; j <= n; ++j)
    if (p[j]) rowsol[p[j] - 1] = j - 1;
  double total = 0.0;
  for (int i = 0; i < n; ++i) total += cost[i][rowsol[i]];
  return total;
}

// Rows 0..n-1 are left points, n..n+m-1 diagonal slots; columns 0..m-1 are
// right points, m..n+m-1 diagonal slots.
Coupling coupling_from_assignment(const std::vector<Interval>& xs,
                                  const std::vector<Interval>& ys,
                                  const std::vector<int>& rowsol) {
  const int n = static_cast<int>(xs.size());
  const int m = static_cast<int>(ys.size());
  Coupling c;
  for (int i = 0; i < n; ++i) {
    if (rowsol[i] < m)
      c.matched.emplace_back(xs[i], ys[rowsol[i]]);
    else
      c.left_unmatched.push_back(xs[i]);
  }
  for (int i = n; i < n + m; ++i)
    if (rowsol[i] < m) c.right_unmatched.push_back(ys[rowsol[i]]);
  return c;
}

// Kuhn's augmenting path over the implicit threshold graph.
bool kuhn_augment(int row, int n, int m,
                  const std::function<bool(int, int)>& edge_ok,
                  std::vector<int>& match_col, std::vector<char>& visited) {
  const int cols = n + m;
  for (int j = 0; j < cols; ++j) {
    if (visited[j] || !edge_ok(row, j)) continue;
    visited[j] = 1;
    if (match_col[j] < 0 ||
        kuhn_augment(match_col[j], n, m, edge_ok, match_col, visited)) {
      match_col[j] = row;
      return true;
    }
  }
  return false;
}

TransportResult bottleneck(const std::vector<Interval>& xs,
                           const std::vector<Interval>& ys, const MetricKind& metric) {
  const int n = static_cast<int>(xs.size());
  const int m = static_cast<int>(ys.size());
  std::vector<std::vector<double>> d(n, std::vector<double>(m));
  std::vector<double> dxs(n), dys(m);
  std::vector<double> cands{0.0};
  for (int i = 0; i < n; ++i) {
    dxs[i] = d_to_diagonal(xs[i], metric);
    cands.push_back(dxs[i]);
  }
  for (int j = 0; j < m; ++j) {
    dys[j] = d_to_diagonal(ys[j], metric);
    cands.push_back(dys[j]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      d[i][j] = distance(xs[i], ys[j], metric);
      cands.push_back(d[i][j]);
    }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  const auto matching_at = [&](double thr, std::vector<int>& match_col) {
    const auto edge_ok = [&](int row, int col) {
      if (row < n)
        return col < m ? d[row][col] <= thr : dxs[row] <= thr;
      return col < m ? dys[col] <= thr : true;
    };
    match_col.assign(n + m, -1);
    int size = 0;
    for (int i = 0; i < n + m; ++i) {
      std::vector<char> visited(n + m, 0);
      if (kuhn_augment(i, n, m, edge_ok, match_col, visited)) ++size;
    }
    return size == n + m;
  };

  std::vector<int> match_col;
  int lo = 0, hi = static_cast<int>(cands.size()) - 1;
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (matching_at(cands[mid], match_col))
      hi = mid;
    else
      lo = mid + 1;
  }
  matching_at(cands[lo], match_col);
  std::vector<int> rowsol(n + m, -1);
  for (int j = 0; j < n + m; ++j)
    if (match_col[j] >= 0) rowsol[match_col[j]] = j;
  return {cands[lo], coupling_from_assignment(xs, ys, rowsol)};
}

}  // namespace

TransportResult wasserstein(const Diagram& a, const Diagram& b,
                            const MetricKind& m, double p) {
  if (!a.ordinary() || !b.ordinary())
    throw unsupported_error("wasserstein: signed diagram (use wasserstein_signed)");
  if (!(p >= 1.0)) throw std::invalid_argument("wasserstein requires p >= 1");
  const auto xs = a.expanded();
  const auto ys = b.expanded();
  const int n = static_cast<int>(xs.size());
  const int mm = static_cast<int>(ys.size());
  if (n + mm == 0) return {0.0, {}};
  if (std::isinf(p)) return bottleneck(xs, ys, m);

  const auto raise = [p](double v) { return p == 1.0 ? v : std::pow(v, p); };
  std::vector<std::vector<double>> cost(n + mm, std::vector<double>(n + mm, 0.0));
  for (int i = 0; i < n; ++i) {
    const double diag = raise(d_to_diagonal(xs[i], m));
    for (int j = 0; j < mm; ++j) cost[i][j] = raise(distance(xs[i], ys[j], m));
    for (int j = mm; j < n + mm; ++j) cost[i][j] = diag;
  }
  for (int i = n; i < n + mm; ++i) {
    const double diag = raise(d_to_diagonal(ys[i - n], m));
    for (int j = 0; j < mm; ++j) cost[i][j] = diag;
  }
  std::vector<int> rowsol;
  const double total = solve_assignment(cost, rowsol);
  const double dist = p == 1.0 ? total : std::pow(std::max(0.0, total), 1.0 / p);
  return {dist, coupling_from_assignment(xs, ys, rowsol)};
}

double wasserstein_signed(const Diagram& a, const Diagram& b, const MetricKind& m) {
  const auto [ap, am] = split_signed(a);
  const auto [bp, bm] = split_signed(b);
  return wasserstein(ap + bm, bp + am, m, 1.0).distance;
}

double wasserstein_bruteforce(const Diagram& a, const Diagram& b,
                              const MetricKind& m, double p) {
  double best = std::numeric_limits<double>::infinity();
  bool any = false;
  enumerate_couplings(a, b, [&](const Coupling& c) {
    best = std::min(best, coupling_cost(c, m, p));
    any = true;
  });
  return any ? best : 0.0;
}

double sorted_matching_distance(const Diagram& a, const Diagram& b,
                                const MetricKind& m) {
  const auto xs = a.expanded();
  const auto ys = b.expanded();
  if (xs.size() != ys.size())
    throw invariant_error("sorted_matching_distance: unequal cardinalities");
  if (xs.empty()) return 0.0;
  const double death = xs.front().death;
  for (const auto& iv : xs)
    if (std::abs(iv.death - death) > 1e-9)
      throw invariant_error("sorted_matching_distance: deaths differ on the left");
  for (const auto& iv : ys)
    if (std::abs(iv.death - death) > 1e-9)
      throw invariant_error("sorted_matching_distance: deaths differ on the right");
  // expanded() is already sorted by (birth, death)
  double total = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) total += distance(xs[i], ys[i], m);
  return total;
}

}  // namespace rankpd
