#include "boxtrio/solver.hpp"

#include <algorithm>
#include <cmath>

namespace boxtrio {

EigenSolution eigensolve_block(const HamiltonianBlock& block, double lambda) {
  if (!std::isfinite(lambda))
    throw std::invalid_argument("coupling strength must be finite");
  EigenSolution sol;
  const int n = block.dimension();
  if (n == 0) {
    sol.values.resize(0);
    sol.vectors.resize(0, 0);
    return sol;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block.hamiltonian(lambda));
  if (es.info() != Eigen::Success)
    throw NumericalError("eigensolve failed for " + to_string(block.irrep) +
                         " block of dimension " + std::to_string(n));
  sol.values = es.eigenvalues();
  sol.vectors = es.eigenvectors();
  // Deterministic phases: make the first appreciable component positive.
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double v = sol.vectors(i, j);
      if (std::abs(v) > 1e-12) {
        if (v < 0) sol.vectors.col(j) = -sol.vectors.col(j);
        break;
      }
    }
  }
  return sol;
}

const std::vector<double>& SpectrumSlice::of(IrrepLabel s) const {
  const auto& order = irrep_order();
  const auto it = std::find(order.begin(), order.end(), s);
  return levels[static_cast<int>(it - order.begin())];
}

SpectrumSlice spectrum_at(const BlockSet& set, double lambda) {
  SpectrumSlice slice;
  slice.lambda = lambda;
  slice.cutoff = set.cutoff;
  for (int oi = 0; oi < 6; ++oi) {
    const HamiltonianBlock& b = set.block(irrep_order()[oi], 0);
    const EigenSolution sol = eigensolve_block(b, lambda);
    slice.levels[oi].assign(sol.values.data(), sol.values.data() + sol.values.size());
  }
  return slice;
}

SpectrumSlice spectrum_at(double lambda, std::int64_t cutoff) {
  if (!(lambda >= 0))
    throw std::invalid_argument("physical spectra need lambda >= 0");
  return spectrum_at(build_block_set(cutoff), lambda);
}

std::vector<double> merged_levels(const SpectrumSlice& slice) {
  std::vector<double> all;
  for (int oi = 0; oi < 6; ++oi) {
    const IrrepLabel s = irrep_order()[oi];
    const int copies = irrep_dimension(s);
    for (double e : slice.levels[oi])
      for (int r = 0; r < copies; ++r) all.push_back(e);
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<std::pair<double, int>> degeneracy_census(
    const std::vector<double>& levels, double tol) {
  std::vector<std::pair<double, int>> out;
  size_t i = 0;
  while (i < levels.size()) {
    size_t j = i + 1;
    double sum = levels[i];
    while (j < levels.size() && levels[j] - levels[j - 1] <= tol) {
      sum += levels[j];
      ++j;
    }
    out.emplace_back(sum / static_cast<double>(j - i), static_cast<int>(j - i));
    i = j;
  }
  return out;
}

}  // namespace boxtrio
