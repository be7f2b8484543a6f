#pragma once

#include <vector>

#include "rankpd/diagram.hpp"
#include "rankpd/report.hpp"

namespace rankpd {

/// Strictly increasing critical values, augmented with a sentinel strictly
/// below the minimum and one above the maximum. Carrier for Mobius inversion
/// of rank functions.
struct CriticalGrid {
  std::vector<double> values;

  static CriticalGrid from_diagram(const Diagram& alpha);
  int size() const { return static_cast<int>(values.size()); }
  int index_of(double v) const;  // exact match, -1 if absent
};

/// rank(i, j) = number of diagram points whose interval contains
/// [values[i], values[j]], for i <= j.
struct RankFunction {
  CriticalGrid grid;
  std::vector<int> table;  // n*n row-major; valid for i <= j

  int n() const { return grid.size(); }
  int at(int i, int j) const;  // 0 outside the valid index range
  int& entry(int i, int j) { return table[static_cast<std::size_t>(i) * n() + j]; }
  int max_value() const;
};

RankFunction rank_function_of(const Diagram& alpha, const CriticalGrid& grid);

/// Indicator thresholding: 1 iff rank >= k.
RankFunction graded_rank(const RankFunction& rf, int k);

/// Mobius inversion over Int of the grid: the four-term finite difference
///   rank(i,j) - rank(i-1,j) - rank(i,j+1) + rank(i-1,j+1),
/// out-of-range indices contributing 0. Inverts rank_function_of.
Diagram diagram_from_ranks(const RankFunction& rf);

/// Graded diagrams alpha^(1..N), N = max rank: Mobius inversion of each
/// thresholded rank function. Multiplicities land in {-1, +1} and the grades
/// sum back to alpha.
std::vector<Diagram> graded_diagrams(const Diagram& alpha);

/// W1^d(alpha, beta) <= sum_k W1^d(alpha^(k), beta^(k)) (signed per grade);
/// for the rank metric also ||La - Lb||_1 <= the same graded sum.
std::vector<Report> verify_graded_stability(const Diagram& alpha, const Diagram& beta,
                                            const MetricKind& m);

}  // namespace rankpd
