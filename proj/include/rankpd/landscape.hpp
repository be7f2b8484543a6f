#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rankpd/diagram.hpp"
#include "rankpd/report.hpp"

namespace rankpd {

/// Nonnegative piecewise-linear function: linear interpolation between
/// breakpoints with strictly increasing abscissae, zero outside the span.
/// First and last values are 0. Empty breakpoints encode the zero function.
struct PiecewiseLinear {
  std::vector<std::pair<double, double>> breakpoints;

  bool zero() const { return breakpoints.empty(); }
  double value_at(double t) const;
  double integral() const;  // exact (trapezoid on the breakpoints)
};

/// Exact integral of |f - g| (breakpoints merged, sign-change roots split).
double abs_difference_integral(const PiecewiseLinear& f, const PiecewiseLinear& g);

/// levels[k-1] is the k-th largest tent value; levels beyond the diagram's
/// point count are identically zero and not stored.
struct Landscape {
  std::vector<PiecewiseLinear> levels;

  const PiecewiseLinear& level(std::size_t k) const;  // 1-based, zero if absent
};

/// Exact landscape of an ordinary diagram: level k is the k-th largest of the
/// tent functions t -> max(0, min(t - b, d - t)), with breakpoints at tent
/// feet, apexes and pairwise intersections.
Landscape landscape_of(const Diagram& alpha);

double l1_norm(const Landscape& ls);
double l1_distance(const Landscape& a, const Landscape& b);

/// ||La - Lb||_1 <= (1/2) W1^rank(a, b); equality cases flagged in details.
Report verify_landscape_stability(const Diagram& alpha, const Diagram& beta);

/// Text format: per level a block of `t value` lines, blank line between
/// levels.
Landscape parse_landscape(std::string_view text);
std::string format_landscape(const Landscape& ls);

}  // namespace rankpd
