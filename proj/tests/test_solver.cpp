#include "boxtrio/solver.hpp"

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

using namespace boxtrio;

TEST_CASE("block eigensolves satisfy the residual and orthonormality bounds") {
  const BlockSet set = build_block_set(27);
  for (double lambda : {0.0, 0.3, 1.0, 10.0, -0.001}) {
    for (const HamiltonianBlock& block : set.blocks) {
      if (block.dimension() == 0) continue;
      const EigenSolution sol = eigensolve_block(block, lambda);
      const Eigen::MatrixXd h = block.hamiltonian(lambda);
      const double scale =
          block.h0_diagonal.cwiseAbs().maxCoeff() +
          std::abs(lambda) * block.coupling.cwiseAbs().maxCoeff();

      const Eigen::MatrixXd residual =
          h * sol.vectors - sol.vectors * sol.values.asDiagonal();
      CHECK(residual.cwiseAbs().maxCoeff() < 1e-9 * scale);

      const Eigen::MatrixXd gram =
          sol.vectors.transpose() * sol.vectors -
          Eigen::MatrixXd::Identity(block.dimension(), block.dimension());
      CHECK(gram.cwiseAbs().maxCoeff() < 1e-10);

      for (int i = 1; i < sol.values.size(); ++i)
        CHECK(sol.values[i] >= sol.values[i - 1]);
    }
  }
}

TEST_CASE("eigenvector phases are deterministic") {
  const BlockSet set = build_block_set(27);
  const HamiltonianBlock& block = set.block(IrrepLabel::A1g);
  const EigenSolution a = eigensolve_block(block, 2.5);
  const EigenSolution b = eigensolve_block(block, 2.5);
  CHECK((a.vectors - b.vectors).norm() == 0.0);
  for (int j = 0; j < a.vectors.cols(); ++j) {
    for (int i = 0; i < a.vectors.rows(); ++i) {
      if (std::abs(a.vectors(i, j)) > 1e-12) {
        CHECK(a.vectors(i, j) > 0.0);
        break;
      }
    }
  }
}

TEST_CASE("the noninteracting spectrum is exactly the mode energies") {
  const BlockSet set = build_block_set(27);
  const SpectrumSlice slice = spectrum_at(set, 0.0);
  constexpr double quarter_pi2 = std::numbers::pi * std::numbers::pi / 4.0;

  for (IrrepLabel s : irrep_order()) {
    const HamiltonianBlock& block = set.block(s, 0);
    const auto& levels = slice.of(s);
    REQUIRE(static_cast<int>(levels.size()) == block.dimension());
    for (size_t i = 0; i < levels.size(); ++i) {
      const double exact =
          quarter_pi2 * static_cast<double>(block.basis[i].energy_sum);
      CHECK(std::abs(levels[i] - exact) <= 1e-10 * exact);
    }
  }
}

TEST_CASE("merged levels double the two-dimensional symmetry types") {
  const BlockSet set = build_block_set(14);
  const SpectrumSlice slice = spectrum_at(set, 0.5);
  const std::vector<double> merged = merged_levels(slice);

  size_t expected = 0;
  for (IrrepLabel s : irrep_order())
    expected += slice.of(s).size() * irrep_dimension(s);
  REQUIRE(merged.size() == expected);
  CHECK(std::is_sorted(merged.begin(), merged.end()));

  // Every Eg/Eu level appears at least twice in the merged list.
  for (IrrepLabel s : {IrrepLabel::Eg, IrrepLabel::Eu}) {
    for (double level : slice.of(s))
      CHECK(std::count(merged.begin(), merged.end(), level) >= 2);
  }
}

TEST_CASE("the lambda=0 census reproduces the multiplet sizes") {
  const SpectrumSlice slice = spectrum_at(0.0, 14);
  const auto census = degeneracy_census(merged_levels(slice), 1e-9);

  // Multiplets at cutoff 14: (1,1,1), (2,1,1), (2,2,1), (3,1,1), (2,2,2),
  // (3,2,1) with orbit sizes 1, 3, 3, 3, 1, 6.
  REQUIRE(census.size() == 6);
  CHECK(census[0].second == 1);
  CHECK(census[1].second == 3);
  CHECK(census[2].second == 3);
  CHECK(census[3].second == 3);
  CHECK(census[4].second == 1);
  CHECK(census[5].second == 6);

  constexpr double quarter_pi2 = std::numbers::pi * std::numbers::pi / 4.0;
  const std::int64_t sums[6] = {3, 6, 9, 11, 12, 14};
  for (int i = 0; i < 6; ++i)
    CHECK(census[i].first ==
          doctest::Approx(quarter_pi2 * static_cast<double>(sums[i]))
              .epsilon(1e-12));
}

TEST_CASE("degeneracy clustering splits levels separated beyond the tolerance") {
  const std::vector<double> levels{1.0, 1.0 + 1e-10, 1.1, 2.0};
  const auto census = degeneracy_census(levels, 1e-9);
  REQUIRE(census.size() == 3);
  CHECK(census[0].second == 2);
  CHECK(census[1].second == 1);
  CHECK(census[2].second == 1);
  CHECK(census[0].first == doctest::Approx(1.0 + 5e-11).epsilon(1e-12));
}

TEST_CASE("solver input validation") {
  const BlockSet set = build_block_set(14);
  CHECK_THROWS_AS(
      eigensolve_block(set.block(IrrepLabel::A1g),
                       std::numeric_limits<double>::quiet_NaN()),
      std::invalid_argument);
  CHECK_THROWS_AS(
      eigensolve_block(set.block(IrrepLabel::A1g),
                       std::numeric_limits<double>::infinity()),
      std::invalid_argument);
  // The convenience overload is for physical spectra only.
  CHECK_THROWS_AS(spectrum_at(-0.5, 14), std::invalid_argument);
  // Negative couplings are legitimate on a prebuilt set (finite differences
  // across lambda = 0).
  CHECK_NOTHROW(spectrum_at(set, -0.001));
}
