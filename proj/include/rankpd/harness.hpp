#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "rankpd/complex.hpp"
#include "rankpd/report.hpp"

namespace rankpd::harness {

/// Ordinary diagram with up to max_points points, coordinates in [lo, hi],
/// persistence at most max_pers (0 = unbounded up to hi).
Diagram random_diagram(std::mt19937_64& rng, int max_points, double lo = -5.0,
                       double hi = 5.0, double max_pers = 0.0);

/// Random simplicial complex (vertices, edges, triangles) with at most
/// max_cells cells, bounds [0, 1], and a random monotone weight.
WeightedComplex random_complex(std::mt19937_64& rng, int max_cells);

/// Fresh monotone weight for an existing complex.
WeightMap random_monotone_weights(std::mt19937_64& rng, const WeightedComplex& k);

/// Weight compatible with w: w's values pushed through a random strictly
/// increasing map of [lower, upper].
WeightMap compatible_reweighting(std::mt19937_64& rng, const WeightedComplex& k,
                                 const WeightMap& w);

/// Vertex + loop edge + disk, weights (a, a, (a+b)/2) vs (a, a, b): the
/// degree-1 diagrams are {(a, (a+b)/2)} and {(a, b)}, so the barcode
/// inequality fails for horizons below (3b-a)/2 and holds at 2b-a.
struct StabilityWitness {
  WeightedComplex complex;  // primary weight plays the role of w
  WeightMap v;
};
StabilityWitness optimal_interval_witness(double a, double b);

/// Deterministic suites; trial i is seeded with seed + i.
std::vector<Report> run_coupling_suite(std::uint64_t seed, int trials);
std::vector<Report> run_landscape_suite(std::uint64_t seed, int trials);
std::vector<Report> run_graded_suite(std::uint64_t seed, int trials);
std::vector<Report> run_barcode_suite(std::uint64_t seed, int trials,
                                      std::optional<double> horizon = {});
std::vector<Report> run_barcode_fixture(const WeightedComplex& k, const WeightMap& v,
                                        double horizon);

}  // namespace rankpd::harness
