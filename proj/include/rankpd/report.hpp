#pragma once

#include <string>
#include <vector>

namespace rankpd {

/// One checked inequality: pass iff slack = rhs - lhs >= -tolerance.
struct Report {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = true;
  std::string details;
};

inline constexpr double kReportTolerance = 1e-9;

Report check_leq(std::string name, double lhs, double rhs,
                 double tolerance = kReportTolerance, std::string details = "");

/// `PASS name: lhs=... rhs=... slack=...` with 12-significant-digit columns.
std::string format_report(const Report& r);

bool all_pass(const std::vector<Report>& reports);

}  // namespace rankpd
