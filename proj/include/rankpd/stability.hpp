#pragma once

#include "rankpd/complex.hpp"
#include "rankpd/report.hpp"

namespace rankpd {

/// Checks, per homology degree i and globally,
///   W1^rank(Dgm_i(w), Dgm_i(v)) <= sum over cells of degree i and i+1 of
///                                  d_rank(I_w(cell), I_v(cell))
///   sum_i W1^rank(Dgm_i(w), Dgm_i(v)) <= sum over all cells ...
/// with free modules and essential classes capped at `horizon`. The
/// inequalities are guaranteed for horizon >= 2b-a; for smaller horizons
/// failures are surfaced in the reports (not an error) and labeled expected.
std::vector<Report> verify_barcode_stability(const WeightedComplex& k,
                                             const WeightMap& w, const WeightMap& v,
                                             double horizon);

/// The p-Wasserstein generalization at horizon 2b-a: per degree
///   W_p^{rank,p}(Dgm_i(w), Dgm_i(v)) <= (sum over K_i u K_{i+1} d_rank)^(1/p)
/// and the summed form against the global p-norm.
std::vector<Report> verify_wp_stability(const WeightedComplex& k, const WeightMap& w,
                                        const WeightMap& v, double p);

}  // namespace rankpd
