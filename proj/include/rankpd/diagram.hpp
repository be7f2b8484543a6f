#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rankpd/metric.hpp"

namespace rankpd {

/// Finite signed multiset of intervals. Kept canonical: entries sorted by
/// (birth, death), equal intervals merged, zero multiplicities dropped.
/// Ordinary diagrams have all multiplicities positive.
class Diagram {
 public:
  using Entry = std::pair<Interval, int>;

  Diagram() = default;
  explicit Diagram(std::vector<Entry> entries);

  void add(const Interval& iv, int multiplicity = 1);
  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  bool ordinary() const;
  long long point_count() const;  // sum of |multiplicity|
  int multiplicity(const Interval& iv) const;

  /// One copy per unit of multiplicity, canonical order. Ordinary only.
  std::vector<Interval> expanded() const;

  Diagram& operator+=(const Diagram& rhs);
  friend Diagram operator+(Diagram lhs, const Diagram& rhs) {
    lhs += rhs;
    return lhs;
  }
  Diagram negated() const;
  friend Diagram operator-(Diagram lhs, const Diagram& rhs) {
    lhs += rhs.negated();
    return lhs;
  }
  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<Entry> entries_;
  void canonicalize();
};

/// (alpha_plus, alpha_minus): the positive and negative parts, both ordinary
/// with disjoint supports, alpha = alpha_plus - alpha_minus.
std::pair<Diagram, Diagram> split_signed(const Diagram& alpha);

/// Partial matching between two diagrams; unmatched points pair with the
/// diagonal.
struct Coupling {
  std::vector<std::pair<Interval, Interval>> matched;
  std::vector<Interval> left_unmatched;
  std::vector<Interval> right_unmatched;
};

/// (sum d^p)^(1/p) over matched pairs plus diagonal distances for unmatched
/// points; p = infinity takes the maximum instead.
double coupling_cost(const Coupling& c, const MetricKind& m, double p);

/// Exhaustive enumeration of the couplings between two small ordinary
/// diagrams (at most 8 points with multiplicity per side). Each coupling is
/// visited once; copies of equal points do not produce duplicates.
void enumerate_couplings(const Diagram& a, const Diagram& b,
                         const std::function<void(const Coupling&)>& visit);
std::vector<Coupling> all_couplings(const Diagram& a, const Diagram& b);

/// Text format: one `birth death multiplicity` entry per line, whitespace
/// separated, `#` comments, multiplicity optional (default 1), signed
/// multiplicities allowed.
Diagram parse_diagram(std::string_view text);
std::string format_diagram(const Diagram& d);

}  // namespace rankpd
