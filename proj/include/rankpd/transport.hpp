#pragma once

#include "rankpd/diagram.hpp"

namespace rankpd {

struct TransportResult {
  double distance = 0.0;
  Coupling coupling;  // any optimal coupling; cost equals distance
};

/// Exact p-Wasserstein distance between ordinary diagrams under ground
/// metric m. Expands multiplicities, builds the square (n+m) x (n+m) cost
/// matrix with diagonal slots, and solves a min-cost perfect matching; the
/// bottleneck case (p = infinity) binary-searches the candidate costs with a
/// feasibility matching.
TransportResult wasserstein(const Diagram& a, const Diagram& b,
                            const MetricKind& m, double p);

/// 1-Wasserstein distance between signed diagrams:
/// W1(a, b) = W1(a_plus + b_minus, b_plus + a_minus).
double wasserstein_signed(const Diagram& a, const Diagram& b, const MetricKind& m);

/// Exact minimum over the exhaustive coupling stream (<= 8 points per side).
double wasserstein_bruteforce(const Diagram& a, const Diagram& b,
                              const MetricKind& m, double p);

/// Cost of the coupling that pairs points in increasing birth order. Requires
/// all intervals on both sides to share one common death value and equal
/// cardinalities (the free persistence chain module case).
double sorted_matching_distance(const Diagram& a, const Diagram& b,
                                const MetricKind& m);

}  // namespace rankpd
