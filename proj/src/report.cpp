#include "rankpd/report.hpp"

#include <algorithm>

#include "rankpd/num_format.hpp"

namespace rankpd {

Report check_leq(std::string name, double lhs, double rhs, double tolerance,
                 std::string details) {
  Report r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.pass = r.slack >= -tolerance;
  r.details = std::move(details);
  return r;
}

std::string format_report(const Report& r) {
  std::string out = r.pass ? "PASS " : "FAIL ";
  out += r.name;
  out += ": lhs=" + fmt_sig12(r.lhs);
  out += " rhs=" + fmt_sig12(r.rhs);
  out += " slack=" + fmt_sig12(r.slack);
  if (!r.details.empty()) out += " | " + r.details;
  return out;
}

bool all_pass(const std::vector<Report>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const Report& r) { return r.pass; });
}

}  // namespace rankpd
