#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rankpd/diagram.hpp"

namespace rankpd {

using WeightMap = std::map<int, double>;

/// Finite regular complex presented by boundary incidence, with a monotone
/// weight per cell taking values in [lower, upper]. Boundaries are stored as
/// face-id lists with mod-2 coefficients (the coefficient field is GF(2);
/// repeated ids cancel, so a loop edge has empty boundary).
struct WeightedComplex {
  struct Cell {
    int id = 0;
    int dim = 0;
    std::vector<int> boundary;  // ids of faces, one dimension down
  };

  std::vector<Cell> cells;
  WeightMap weight;
  double lower = 0.0;
  double upper = 1.0;

  double horizon() const { return 2.0 * upper - lower; }
  int max_dim() const;
  const Cell* find(int id) const;

  /// Structural checks plus the primary weight: faces exist one dimension
  /// down, boundary-of-boundary vanishes mod 2, weights cover all cells,
  /// stay within [lower, upper] and are monotone along faces.
  void validate() const;
  void validate_weights(const WeightMap& w) const;
};

/// Birth/death cells of the sublevel filtration, cells ordered by
/// (weight, dimension, id). death_cell = -1 marks an essential class.
struct PersistencePair {
  int degree = 0;
  int birth_cell = 0;
  int death_cell = -1;
};
std::vector<PersistencePair> persistence_pairs(const WeightedComplex& k,
                                               const WeightMap& w);

using GradedDiagramFamily = std::map<int, Diagram>;

/// Persistence diagrams of the sublevel filtration per homology degree over
/// GF(2). Zero-length bars are dropped; essential classes die at `horizon`
/// (default 2*upper - lower).
GradedDiagramFamily compute_diagrams(const WeightedComplex& k);
GradedDiagramFamily compute_diagrams(const WeightedComplex& k, const WeightMap& w,
                                     double horizon);

/// The free module generated by a cell: [w(cell), horizon].
Interval free_module(const WeightedComplex& k, const WeightMap& w, int cell_id,
                     double horizon);
double free_module_distance(const WeightedComplex& k, const WeightMap& w,
                            const WeightMap& v, int cell_id, const MetricKind& m);
double free_module_distance(const WeightedComplex& k, const WeightMap& w,
                            const WeightMap& v, int cell_id, const MetricKind& m,
                            double horizon);

/// True iff no cell pair is ordered strictly oppositely by the two weights
/// (ties are compatible with anything; chambers are closed).
bool are_compatible(const WeightedComplex& k, const WeightMap& w, const WeightMap& v);

/// Weights along the segment from w0 to w1, subdivided at every hyperplane
/// crossing w_t(sigma) = w_t(tau) for pairs ordered oppositely by the two
/// endpoints. Consecutive outputs are pairwise compatible.
std::vector<WeightMap> segment_path(const WeightedComplex& k, const WeightMap& w0,
                                    const WeightMap& w1);

/// Text format: header line `a b`, then one cell per line
/// `id dim w_value [boundary ids...]`, `#` comments.
WeightedComplex parse_complex(std::string_view text);
std::string format_complex(const WeightedComplex& k);

/// Companion weight file reusing ids: `id value` lines.
WeightMap parse_weights(std::string_view text);
std::string format_weights(const WeightMap& w);

}  // namespace rankpd
