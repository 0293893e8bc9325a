#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boxtrio/solver.hpp"

namespace boxtrio {

// Ascending grids for coupling-strength sweeps.
std::vector<double> linear_grid(double lo, double hi, int points);
std::vector<double> geometric_grid(double lo, double hi, int points);

struct SweepOptions {
  std::vector<double> lambdas;      // ascending, all >= 0
  bool keep_vectors = true;         // retain eigenvectors per grid point
  double overlap_confidence = 0.9;  // near-permutation threshold for tracking
};

// Eigenvalue curves over a lambda grid. Level identity across the grid is by
// sorted index inside each irrep (same-symmetry curves never cross); the
// eigenvector overlaps between neighboring grid points are only used to flag
// steps where the grid is too coarse to follow level character.
struct SpectrumCurve {
  std::int64_t cutoff = 0;
  std::vector<double> lambdas;
  std::array<Eigen::MatrixXd, 6> energies;  // per irrep: dimension x points
  std::array<std::vector<Eigen::MatrixXd>, 6> vectors;  // empty if not kept
  std::array<std::vector<int>, 6> low_confidence_steps;

  int points() const { return static_cast<int>(lambdas.size()); }
  const Eigen::MatrixXd& of(IrrepLabel s) const;
  // lambda^{-1/2} E; nan where lambda <= 0.
  Eigen::MatrixXd scaled(IrrepLabel s) const;
};

SpectrumCurve sweep_spectrum(const BlockSet& set, const SweepOptions& options);

struct AvoidedCrossing {
  IrrepLabel irrep = IrrepLabel::A1g;
  int lower_level = 0;  // sorted index k; the partner is k+1
  double lambda_c = 0.0;
  double min_gap = 0.0;
  std::int64_t cutoff = 0;
};

// All strict interior local minima of the gaps E_{k+1}-E_k on the grid, each
// refined by golden-section search on freshly solved blocks until the lambda
// bracket shrinks below rel_tol * lambda_c. max_levels > 0 restricts the scan
// to the lowest max_levels curves (every refinement step re-solves the whole
// block, so scanning hundreds of high levels gets expensive fast).
std::vector<AvoidedCrossing> detect_avoided_crossings(const BlockSet& set,
                                                      const SpectrumCurve& curve,
                                                      IrrepLabel irrep,
                                                      double rel_tol = 1e-4,
                                                      int max_levels = 0);

// The scaled-limit reference values 2 sqrt(3) (n+1), n = 0..3.
std::array<double, 4> scaled_reference_lines();

// Tail behavior of the scaled curves against the strong-coupling limits.
struct TailCheck {
  IrrepLabel irrep = IrrepLabel::A1g;
  int level = 0;
  bool monotone_nonincreasing = false;
};

struct PairConvergence {
  std::string name;  // e.g. "1A1g/1A2u"
  IrrepLabel first = IrrepLabel::A1g;
  IrrepLabel second = IrrepLabel::A1g;
  int level = 0;        // sorted index used in both irreps
  double limit = 0.0;   // 2 sqrt(3) (n+1)
  bool gap_shrinks_monotonically = false;
  bool above_limit_at_end = false;
  double final_first = 0.0;
  double final_second = 0.0;
  double final_gap = 0.0;
};

struct AsymptoteReport {
  std::int64_t cutoff = 0;
  double tail_start = 0.0;  // first lambda of the tail third
  std::vector<TailCheck> tails;
  std::vector<PairConvergence> pairs;
  bool all_ok = false;
};

// Checks the scaled-curve invariants on the tail third of the grid: monotone
// nonincreasing scaled levels, shrinking pair gaps for the three connected
// pairs (1A1g/1A2u, 1Eu/1Eg, 1A2g/1A1u), and final values above their limits.
AsymptoteReport analyze_asymptotics(const SpectrumCurve& curve,
                                    int levels_per_irrep = 4);

// Energy-proximity association of one reference curve with the levels of
// another irrep, for the character-exchange analysis around an avoided
// crossing.
struct AssociationReport {
  IrrepLabel target = IrrepLabel::A1g;  // whose levels are candidates
  IrrepLabel reference = IrrepLabel::Eg;
  int reference_level = 0;
  std::vector<int> nearest;  // per grid point: argmin_k |E_target,k - E_ref|
  bool flipped = false;
  int before_level = 0;
  int after_level = 0;
  std::optional<double> flip_lambda;  // first grid point with a new association
};

AssociationReport track_association(const SpectrumCurve& curve,
                                    IrrepLabel target, IrrepLabel reference,
                                    int reference_level);

}  // namespace boxtrio
