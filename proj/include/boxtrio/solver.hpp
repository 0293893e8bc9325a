#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "boxtrio/matrix_elements.hpp"

namespace boxtrio {

// Raised when an eigensolve or downstream numerical step fails; the CLI maps
// this to its numerical-failure exit code.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EigenSolution {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns; first component above 1e-12 is positive
};

// Dense symmetric eigensolve of H(lambda) = H0 + lambda W for one block.
// lambda may be any finite real; negative values are used by the
// finite-difference checks of first-order theory.
EigenSolution eigensolve_block(const HamiltonianBlock& block, double lambda);

// Eigenvalues of every block at one coupling strength (row-0 blocks only;
// row-1 spectra are identical by construction).
struct SpectrumSlice {
  double lambda = 0.0;
  std::int64_t cutoff = 0;
  std::array<std::vector<double>, 6> levels;  // canonical irrep order

  const std::vector<double>& of(IrrepLabel s) const;
};

SpectrumSlice spectrum_at(const BlockSet& set, double lambda);

// Convenience: builds the blocks for the cutoff first. Requires lambda >= 0;
// the BlockSet overload accepts any finite real for finite-difference work.
SpectrumSlice spectrum_at(double lambda, std::int64_t cutoff);

// All levels in one ascending list, with E-type entries duplicated for their
// two rows. Comparable to a solve over the full unsymmetrized product basis.
std::vector<double> merged_levels(const SpectrumSlice& slice);

// Clusters an ascending level list into (value, multiplicity) groups; two
// consecutive levels belong to one cluster when they differ by at most tol.
// The reported value is the cluster mean.
std::vector<std::pair<double, int>> degeneracy_census(
    const std::vector<double>& levels, double tol);

}  // namespace boxtrio
