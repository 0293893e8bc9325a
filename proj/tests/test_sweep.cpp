#include "boxtrio/sweep.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>

#include "boxtrio/perturbation.hpp"

using namespace boxtrio;

TEST_CASE("grid constructors pin endpoints and ordering") {
  const std::vector<double> lin = linear_grid(0.0, 10.0, 11);
  REQUIRE(lin.size() == 11);
  CHECK(lin.front() == 0.0);
  CHECK(lin.back() == 10.0);
  CHECK(lin[5] == doctest::Approx(5.0).epsilon(1e-15));

  const std::vector<double> geo = geometric_grid(1e-3, 1e3, 7);
  REQUIRE(geo.size() == 7);
  CHECK(geo.front() == 1e-3);
  CHECK(geo.back() == 1e3);
  CHECK(geo[3] == doctest::Approx(1.0).epsilon(1e-12));
  for (size_t i = 1; i < geo.size(); ++i) {
    CHECK(geo[i] > geo[i - 1]);
    CHECK(geo[i] / geo[i - 1] ==
          doctest::Approx(geo[1] / geo[0]).epsilon(1e-12));
  }

  CHECK(linear_grid(2.5, 2.5, 1) == std::vector<double>{2.5});
  CHECK(geometric_grid(2.5, 2.5, 1) == std::vector<double>{2.5});
  CHECK_THROWS_AS(linear_grid(1.0, 2.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(linear_grid(2.0, 1.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(linear_grid(0.0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(geometric_grid(0.0, 1.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(geometric_grid(-1.0, 1.0, 5), std::invalid_argument);
}

TEST_CASE("sweeping validates the coupling grid") {
  const BlockSet set = build_block_set(14);
  SweepOptions opts;
  opts.lambdas = {0.0, 0.5, 0.5};
  CHECK_THROWS_AS(sweep_spectrum(set, opts), std::invalid_argument);
  opts.lambdas = {0.5, 0.0};
  CHECK_THROWS_AS(sweep_spectrum(set, opts), std::invalid_argument);
  opts.lambdas = {-0.5, 0.0};
  CHECK_THROWS_AS(sweep_spectrum(set, opts), std::invalid_argument);
  opts.lambdas = {};
  CHECK_THROWS_AS(sweep_spectrum(set, opts), std::invalid_argument);
}

TEST_CASE("a single-point sweep at zero coupling is the exact spectrum") {
  const BlockSet set = build_block_set(14);
  SweepOptions opts;
  opts.lambdas = {0.0};
  const SpectrumCurve curve = sweep_spectrum(set, opts);
  REQUIRE(curve.points() == 1);

  constexpr double quarter_pi2 = std::numbers::pi * std::numbers::pi / 4.0;
  const Eigen::MatrixXd& a1g = curve.of(IrrepLabel::A1g);
  // A1g content below cutoff 14: (1,1,1), (2,2,1), (3,1,1) -> sums 3, 9, 11.
  REQUIRE(a1g.rows() == 3);
  CHECK(a1g(0, 0) == doctest::Approx(3.0 * quarter_pi2).epsilon(1e-12));
  CHECK(a1g(1, 0) == doctest::Approx(9.0 * quarter_pi2).epsilon(1e-12));
  CHECK(a1g(2, 0) == doctest::Approx(11.0 * quarter_pi2).epsilon(1e-12));

  // Scaled values are undefined at lambda = 0.
  CHECK(std::isnan(curve.scaled(IrrepLabel::A1g)(0, 0)));
}

TEST_CASE("a two-point sweep recovers the first-order slope") {
  const BlockSet set = build_block_set(14);
  SweepOptions opts;
  opts.lambdas = {0.0, 0.001};
  const SpectrumCurve curve = sweep_spectrum(set, opts);
  const Eigen::MatrixXd& a1g = curve.of(IrrepLabel::A1g);
  const double slope = (a1g(0, 1) - a1g(0, 0)) / 0.001;
  CHECK(std::abs(slope - 0.784144) < 1e-3);
}

TEST_CASE("curves are nondecreasing in the coupling and stay sorted") {
  const BlockSet set = build_block_set(27);
  SweepOptions opts;
  opts.lambdas = geometric_grid(1e-3, 1e3, 25);
  opts.keep_vectors = false;
  const SpectrumCurve curve = sweep_spectrum(set, opts);

  for (IrrepLabel s : irrep_order()) {
    const Eigen::MatrixXd& e = curve.of(s);
    for (int k = 0; k < e.rows(); ++k)
      for (int j = 1; j < e.cols(); ++j) CHECK(e(k, j) >= e(k, j - 1));
    // Strict level ordering at positive coupling.
    for (int j = 0; j < e.cols(); ++j)
      for (int k = 1; k < e.rows(); ++k) CHECK(e(k, j) > e(k - 1, j));
  }
  CHECK(curve.points() == 25);
}

TEST_CASE("coarse grids trip the eigenvector-overlap confidence flag") {
  const BlockSet set = build_block_set(27);
  SweepOptions opts;
  opts.lambdas = geometric_grid(1e-3, 1e3, 12);
  const SpectrumCurve fine = sweep_spectrum(set, opts);
  size_t flagged = 0;
  for (const auto& steps : fine.low_confidence_steps) flagged += steps.size();
  CHECK(flagged > 0);

  // Flags disappear when the tracking threshold is relaxed to zero.
  opts.overlap_confidence = 0.0;
  const SpectrumCurve loose = sweep_spectrum(set, opts);
  for (const auto& steps : loose.low_confidence_steps) CHECK(steps.empty());
}

TEST_CASE("the third and fourth totally symmetric levels avoid crossing") {
  const BlockSet set = build_block_set(27);
  SweepOptions opts;
  opts.lambdas = geometric_grid(1.0, 100.0, 30);
  opts.keep_vectors = false;
  const SpectrumCurve curve = sweep_spectrum(set, opts);

  const auto crossings = detect_avoided_crossings(set, curve, IrrepLabel::A1g,
                                                  1e-4, 4);
  bool found = false;
  for (const AvoidedCrossing& c : crossings) {
    if (c.lower_level != 2) continue;  // levels 3 and 4, 0-based index 2
    found = true;
    CHECK(c.lambda_c > 15.0);
    CHECK(c.lambda_c < 30.0);
    CHECK(c.min_gap > 0.0);
    CHECK(c.min_gap < 1.0);
    CHECK(c.cutoff == 27);
    // The refined gap is a local minimum: strictly below the gap nearby.
    const auto gap = [&](double lam) {
      const Eigen::VectorXd v =
          eigensolve_block(set.block(IrrepLabel::A1g), lam).values;
      return v[3] - v[2];
    };
    CHECK(gap(c.lambda_c) <= gap(c.lambda_c * 1.05));
    CHECK(gap(c.lambda_c) <= gap(c.lambda_c * 0.95));
  }
  CHECK(found);

  // Restricting the scan below the crossing levels hides it.
  for (const AvoidedCrossing& c :
       detect_avoided_crossings(set, curve, IrrepLabel::A1g, 1e-4, 2))
    CHECK(c.lower_level < 1);
}

TEST_CASE("one-dimensional blocks report no avoided crossings") {
  const BlockSet set = build_block_set(14);
  SweepOptions opts;
  opts.lambdas = geometric_grid(0.1, 10.0, 9);
  opts.keep_vectors = false;
  const SpectrumCurve curve = sweep_spectrum(set, opts);
  // A1u has exactly one basis function below cutoff 14.
  REQUIRE(set.block(IrrepLabel::A1u).dimension() == 1);
  CHECK(detect_avoided_crossings(set, curve, IrrepLabel::A1u).empty());
}

TEST_CASE("asymptotic analysis reports limits and approach from above") {
  const std::array<double, 4> lines = scaled_reference_lines();
  CHECK(lines[0] == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-15));
  CHECK(lines[1] == doctest::Approx(4.0 * std::sqrt(3.0)).epsilon(1e-15));
  CHECK(lines[3] == doctest::Approx(8.0 * std::sqrt(3.0)).epsilon(1e-15));

  const BlockSet set = build_block_set(75);
  SweepOptions opts;
  opts.lambdas = geometric_grid(1e-3, 1e3, 30);
  opts.keep_vectors = false;
  const SpectrumCurve curve = sweep_spectrum(set, opts);
  const AsymptoteReport report = analyze_asymptotics(curve, 2);

  CHECK(report.cutoff == 75);
  CHECK(report.tails.size() == 12);  // 2 levels x 6 irreps
  REQUIRE(report.pairs.size() == 3);
  CHECK(report.pairs[0].name == "1A1g/1A2u");
  CHECK(report.pairs[1].name == "1Eu/1Eg");
  CHECK(report.pairs[2].name == "1A2g/1A1u");
  CHECK(report.pairs[0].limit == doctest::Approx(lines[0]).epsilon(1e-15));
  CHECK(report.pairs[1].limit == doctest::Approx(lines[1]).epsilon(1e-15));
  CHECK(report.pairs[2].limit == doctest::Approx(lines[3]).epsilon(1e-15));

  // Even at this modest cutoff the variational bound keeps every scaled
  // value above its limit.
  for (const PairConvergence& p : report.pairs) {
    CHECK(p.above_limit_at_end);
    CHECK(p.final_first > p.limit);
    CHECK(p.final_second > p.limit);
    CHECK(p.final_gap >= 0.0);
  }
}

TEST_CASE("association tracking watches a level change partners") {
  const BlockSet set = build_block_set(27);
  SweepOptions opts;
  opts.lambdas = linear_grid(10.0, 40.0, 31);
  opts.keep_vectors = false;
  const SpectrumCurve curve = sweep_spectrum(set, opts);

  // The second Eg level hugs the third A1g level before their common
  // avoided-crossing region and the fourth after it.
  const AssociationReport report =
      track_association(curve, IrrepLabel::A1g, IrrepLabel::Eg, 1);
  CHECK(report.before_level == 2);
  CHECK(report.after_level == 3);
  CHECK(report.flipped);
  REQUIRE(report.flip_lambda.has_value());
  CHECK(*report.flip_lambda > 10.0);
  CHECK(*report.flip_lambda < 40.0);

  CHECK_THROWS_AS(track_association(curve, IrrepLabel::A1g, IrrepLabel::Eg, 99),
                  std::invalid_argument);
}
