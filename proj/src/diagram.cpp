#include "rankpd/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <tuple>

#include "rankpd/errors.hpp"
#include "rankpd/num_format.hpp"

namespace rankpd {

Diagram::Diagram(std::vector<Entry> entries) : entries_(std::move(entries)) {
  for (const auto& [iv, mult] : entries_) {
    (void)mult;
    if (!(iv.birth <= iv.death))
      throw invariant_error("interval with birth > death");
  }
  canonicalize();
}

void Diagram::canonicalize() {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::vector<Entry> merged;
  for (const auto& e : entries_) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(e);
    if (merged.back().second == 0) merged.pop_back();
  }
  entries_ = std::move(merged);
}

void Diagram::add(const Interval& iv, int multiplicity) {
  if (!(iv.birth <= iv.death)) throw invariant_error("interval with birth > death");
  if (multiplicity == 0) return;
  entries_.emplace_back(iv, multiplicity);
  canonicalize();
}

bool Diagram::ordinary() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.second > 0; });
}

long long Diagram::point_count() const {
  long long n = 0;
  for (const auto& [iv, mult] : entries_) {
    (void)iv;
    n += std::abs(static_cast<long long>(mult));
  }
  return n;
}

int Diagram::multiplicity(const Interval& iv) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), iv,
      [](const Entry& e, const Interval& key) { return e.first < key; });
  return it != entries_.end() && it->first == iv ? it->second : 0;
}

std::vector<Interval> Diagram::expanded() const {
  if (!ordinary())
    throw unsupported_error("signed diagram: operation requires positive multiplicities");
  std::vector<Interval> points;
  points.reserve(static_cast<std::size_t>(point_count()));
  for (const auto& [iv, mult] : entries_)
    for (int k = 0; k < mult; ++k) points.push_back(iv);
  return points;
}

Diagram& Diagram::operator+=(const Diagram& rhs) {
  entries_.insert(entries_.end(), rhs.entries_.begin(), rhs.entries_.end());
  canonicalize();
  return *this;
}

Diagram Diagram::negated() const {
  Diagram out(*this);
  for (auto& e : out.entries_) e.second = -e.second;
  return out;
}

std::pair<Diagram, Diagram> split_signed(const Diagram& alpha) {
  Diagram plus, minus;
  for (const auto& [iv, mult] : alpha.entries()) {
    if (mult > 0)
      plus.add(iv, mult);
    else
      minus.add(iv, -mult);
  }
  return {plus, minus};
}

double coupling_cost(const Coupling& c, const MetricKind& m, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("coupling_cost requires p >= 1");
  std::vector<double> parts;
  parts.reserve(c.matched.size() + c.left_unmatched.size() + c.right_unmatched.size());
  for (const auto& [x, y] : c.matched) parts.push_back(distance(x, y, m));
  for (const auto& x : c.left_unmatched) parts.push_back(d_to_diagonal(x, m));
  for (const auto& y : c.right_unmatched) parts.push_back(d_to_diagonal(y, m));
  if (std::isinf(p)) {
    double best = 0.0;
    for (double v : parts) best = std::max(best, v);
    return best;
  }
  double total = 0.0;
  for (double v : parts) total += p == 1.0 ? v : std::pow(v, p);
  return p == 1.0 ? total : std::pow(total, 1.0 / p);
}

namespace {

using CouplingKey = std::tuple<std::vector<std::pair<Interval, Interval>>,
                               std::vector<Interval>, std::vector<Interval>>;

CouplingKey key_of(const Coupling& c) {
  auto matched = c.matched;
  auto left = c.left_unmatched;
  auto right = c.right_unmatched;
  std::sort(matched.begin(), matched.end());
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  return {std::move(matched), std::move(left), std::move(right)};
}

}  // namespace

void enumerate_couplings(const Diagram& a, const Diagram& b,
                         const std::function<void(const Coupling&)>& visit) {
  if (a.point_count() > 8 || b.point_count() > 8)
    throw std::invalid_argument("enumerate_couplings: more than 8 points per side");
  const auto xs = a.expanded();
  const auto ys = b.expanded();
  std::vector<char> used(ys.size(), 0);
  Coupling cur;
  std::set<CouplingKey> seen;

  const std::function<void(std::size_t)> recurse = [&](std::size_t i) {
    if (i == xs.size()) {
      cur.right_unmatched.clear();
      for (std::size_t j = 0; j < ys.size(); ++j)
        if (!used[j]) cur.right_unmatched.push_back(ys[j]);
      if (seen.insert(key_of(cur)).second) visit(cur);
      return;
    }
    cur.left_unmatched.push_back(xs[i]);
    recurse(i + 1);
    cur.left_unmatched.pop_back();
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      cur.matched.emplace_back(xs[i], ys[j]);
      recurse(i + 1);
      cur.matched.pop_back();
      used[j] = 0;
    }
  };
  recurse(0);
}

std::vector<Coupling> all_couplings(const Diagram& a, const Diagram& b) {
  std::vector<Coupling> out;
  enumerate_couplings(a, b, [&](const Coupling& c) { out.push_back(c); });
  return out;
}

Diagram parse_diagram(std::string_view text) {
  std::vector<Diagram::Entry> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::istringstream ss{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() < 2 || tokens.size() > 3)
      throw parse_error("diagram line " + std::to_string(line_no) +
                        ": expected `birth death [multiplicity]`");
    double birth = 0.0, death = 0.0;
    int mult = 1;
    if (!parse_double(tokens[0], birth) || !parse_double(tokens[1], death) ||
        (tokens.size() == 3 && !parse_int(tokens[2], mult)))
      throw parse_error("diagram line " + std::to_string(line_no) + ": bad number");
    if (!(birth <= death))
      throw invariant_error("diagram line " + std::to_string(line_no) + ": birth > death");
    entries.emplace_back(Interval{birth, death}, mult);
  }
  return Diagram(std::move(entries));
}

std::string format_diagram(const Diagram& d) {
  std::string out;
  for (const auto& [iv, mult] : d.entries()) {
    out += fmt_double(iv.birth);
    out += ' ';
    out += fmt_double(iv.death);
    out += ' ';
    out += std::to_string(mult);
    out += '\n';
  }
  return out;
}

}  // namespace rankpd
