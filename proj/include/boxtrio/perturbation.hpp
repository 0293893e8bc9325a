#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boxtrio/solver.hpp"

namespace boxtrio {

// One first-order level: E(lambda) = e0 + slope * lambda + O(lambda^2).
// Degenerate noninteracting groups (same irrep, same energy sum, including
// coincidences like 5^2+1^2+1^2 = 3^2+3^2+3^2) are resolved by diagonalizing
// the coupling inside the group; equal slopes within a group are merged and
// counted in multiplicity.
struct FirstOrderLevel {
  IrrepLabel irrep = IrrepLabel::A1g;
  int ordinal = 0;  // 1-based index within the irrep, ordered by (e0, slope)
  std::int64_t energy_sum = 0;
  double e0 = 0.0;
  double slope = 0.0;
  int multiplicity = 1;
};

std::vector<FirstOrderLevel> first_order_table(const BlockSet& set);

// The twelve lowest levels with closed-form slopes, used as the fixed
// reference for correctness checks. slope_rank orders levels that share an
// (irrep, energy_sum) group, ascending in slope.
struct ReferenceSlope {
  std::string name;  // e.g. "2Eu"
  IrrepLabel irrep = IrrepLabel::A1g;
  std::int64_t energy_sum = 0;
  int slope_rank = 0;
  double slope = 0.0;
};

const std::vector<ReferenceSlope>& reference_slopes();

struct SlopeCheckRow {
  ReferenceSlope ref;
  double computed = 0.0;
  double relative_error = 0.0;
  bool ok = false;
};

struct SlopeReport {
  double tolerance = 0.0;
  std::vector<SlopeCheckRow> rows;
  bool all_ok = false;
};

// Compares the computed first-order slopes against the twelve closed forms.
SlopeReport check_first_order_slopes(const BlockSet& set, double rel_tol = 1e-10);

// Independent estimate of the same slope by central differences on the
// variational eigenvalues: (E(+h) - E(-h)) / (2h) for the rank-th level
// (ascending in slope) of the (irrep, energy_sum) group. The group occupies a
// contiguous index range of the block spectrum at small |lambda|; note the
// within-group ordering reverses between +h and -h.
double rr_slope_estimate(const BlockSet& set, IrrepLabel irrep,
                         std::int64_t energy_sum, int slope_rank, double h);

}  // namespace boxtrio
