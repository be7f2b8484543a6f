#pragma once

#include <compare>
#include <limits>

namespace rankpd {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Closed interval [birth, death] with birth <= death. Doubles as a point of
/// the half-plane {(b, d) : b <= d}; degenerate intervals (birth == death)
/// lie on the diagonal.
struct Interval {
  double birth = 0.0;
  double death = 0.0;

  double persistence() const { return death - birth; }
  bool degenerate() const { return birth == death; }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Ground metric on interval modules.
///
///   rank         L1 distance between rank functions: the area of the
///                symmetric difference of the triangles under the intervals,
///                raised to 1/p for p > 1.
///   dim          length of the symmetric difference of the intervals.
///   linfty       sup-norm distance between endpoint pairs.
///   lp_endpoint  p-norm distance between endpoint pairs (p may be infinite).
struct MetricKind {
  enum class Tag { rank, dim, linfty, lp_endpoint };
  Tag tag = Tag::rank;
  double p = 1.0;

  static MetricKind rank(double p = 1.0);
  static MetricKind dim() { return {Tag::dim, 1.0}; }
  static MetricKind linfty() { return {Tag::linfty, kInfinity}; }
  static MetricKind lp_endpoint(double p);

  friend bool operator==(const MetricKind&, const MetricKind&) = default;
};

/// max(0, min deaths - max births): length of the intersection.
double overlap_length(const Interval& x, const Interval& y);

/// pers(x)^2/2 + pers(y)^2/2 - overlap^2.
double d_rank(const Interval& x, const Interval& y);

/// d_rank^(1/p); the integrand is 0/1-valued so the p-th power collapses.
double d_rank_p(const Interval& x, const Interval& y, double p);

/// pers(x) + pers(y) - 2*overlap.
double d_dim(const Interval& x, const Interval& y);

/// p-norm of (birth difference, death difference); p may be infinite.
double d_endpoint(const Interval& x, const Interval& y, double p);

/// Infimum of distance(x, .) over diagonal points, per metric.
double d_to_diagonal(const Interval& x, const MetricKind& m);

double distance(const Interval& x, const Interval& y, const MetricKind& m);

}  // namespace rankpd
