#include "boxtrio/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace boxtrio {

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 1) throw std::invalid_argument("grid needs at least one point");
  if (points == 1) {
    if (lo != hi)
      throw std::invalid_argument("single-point grid requires equal endpoints");
    return {lo};
  }
  if (!(lo < hi)) throw std::invalid_argument("grid endpoints must ascend");
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  g.back() = hi;
  return g;
}

std::vector<double> geometric_grid(double lo, double hi, int points) {
  if (points < 1) throw std::invalid_argument("grid needs at least one point");
  if (points == 1) {
    if (lo != hi)
      throw std::invalid_argument("single-point grid requires equal endpoints");
    return {lo};
  }
  if (!(lo > 0)) throw std::invalid_argument("geometric grid requires lo > 0");
  if (!(lo < hi)) throw std::invalid_argument("grid endpoints must ascend");
  std::vector<double> g(points);
  const double ratio = std::log(hi / lo);
  for (int i = 0; i < points; ++i)
    g[i] = lo * std::exp(ratio * static_cast<double>(i) / (points - 1));
  g.back() = hi;
  return g;
}

const Eigen::MatrixXd& SpectrumCurve::of(IrrepLabel s) const {
  const auto& order = irrep_order();
  const auto it = std::find(order.begin(), order.end(), s);
  return energies[static_cast<int>(it - order.begin())];
}

Eigen::MatrixXd SpectrumCurve::scaled(IrrepLabel s) const {
  Eigen::MatrixXd m = of(s);
  for (int j = 0; j < m.cols(); ++j) {
    const double lam = lambdas[j];
    if (lam > 0)
      m.col(j) /= std::sqrt(lam);
    else
      m.col(j).setConstant(std::numeric_limits<double>::quiet_NaN());
  }
  return m;
}

SpectrumCurve sweep_spectrum(const BlockSet& set, const SweepOptions& options) {
  const auto& grid = options.lambdas;
  if (grid.empty()) throw std::invalid_argument("empty coupling grid");
  for (size_t j = 0; j < grid.size(); ++j) {
    if (grid[j] < 0)
      throw std::invalid_argument("sweep requires nonnegative couplings");
    if (j > 0 && !(grid[j] > grid[j - 1]))
      throw std::invalid_argument("coupling grid must ascend strictly");
  }

  SpectrumCurve curve;
  curve.cutoff = set.cutoff;
  curve.lambdas = grid;
  const int npts = curve.points();
  for (int oi = 0; oi < 6; ++oi) {
    const HamiltonianBlock& block = set.block(irrep_order()[oi], 0);
    const int dim = block.dimension();
    curve.energies[oi].resize(dim, npts);
    if (options.keep_vectors) curve.vectors[oi].reserve(npts);
    Eigen::MatrixXd previous;
    for (int j = 0; j < npts; ++j) {
      EigenSolution sol = eigensolve_block(block, grid[j]);
      curve.energies[oi].col(j) = sol.values;
      if (j > 0 && dim > 0) {
        // Near-permutation test on the overlap between neighboring points:
        // every level must have a dominant ancestor, else flag the step.
        const Eigen::MatrixXd overlap = previous.transpose() * sol.vectors;
        const double worst =
            overlap.cwiseAbs().colwise().maxCoeff().minCoeff();
        if (worst < options.overlap_confidence)
          curve.low_confidence_steps[oi].push_back(j);
      }
      previous = sol.vectors;
      if (options.keep_vectors) curve.vectors[oi].push_back(std::move(sol.vectors));
    }
  }
  return curve;
}

namespace {

double gap_at(const HamiltonianBlock& block, int k, double lambda) {
  const Eigen::VectorXd v = eigensolve_block(block, lambda).values;
  return v[k + 1] - v[k];
}

// Golden-section minimization of the k-th gap on [a, b].
std::pair<double, double> refine_gap_minimum(const HamiltonianBlock& block,
                                             int k, double a, double b,
                                             double rel_tol) {
  constexpr double invphi = 0.6180339887498949;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = gap_at(block, k, x1);
  double f2 = gap_at(block, k, x2);
  while ((b - a) > rel_tol * (0.5 * (a + b))) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = gap_at(block, k, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = gap_at(block, k, x2);
    }
  }
  const double xc = 0.5 * (a + b);
  return {xc, gap_at(block, k, xc)};
}

}  // namespace

std::vector<AvoidedCrossing> detect_avoided_crossings(const BlockSet& set,
                                                      const SpectrumCurve& curve,
                                                      IrrepLabel irrep,
                                                      double rel_tol,
                                                      int max_levels) {
  if (curve.points() < 3)
    throw std::invalid_argument("crossing detection needs at least 3 grid points");
  const HamiltonianBlock& block = set.block(irrep, 0);
  const Eigen::MatrixXd& e = curve.of(irrep);
  std::vector<AvoidedCrossing> out;
  const int top =
      max_levels > 0 ? std::min<int>(max_levels, e.rows()) : e.rows();
  for (int k = 0; k + 1 < top; ++k) {
    for (int j = 1; j + 1 < curve.points(); ++j) {
      const double gm = e(k + 1, j - 1) - e(k, j - 1);
      const double g0 = e(k + 1, j) - e(k, j);
      const double gp = e(k + 1, j + 1) - e(k, j + 1);
      if (g0 < gm && g0 <= gp) {
        const auto [lc, gap] = refine_gap_minimum(
            block, k, curve.lambdas[j - 1], curve.lambdas[j + 1], rel_tol);
        AvoidedCrossing c;
        c.irrep = irrep;
        c.lower_level = k;
        c.lambda_c = lc;
        c.min_gap = gap;
        c.cutoff = curve.cutoff;
        out.push_back(c);
      }
    }
  }
  return out;
}

std::array<double, 4> scaled_reference_lines() {
  const double unit = 2.0 * std::sqrt(3.0);
  return {unit, 2.0 * unit, 3.0 * unit, 4.0 * unit};
}

namespace {

bool monotone_nonincreasing(const Eigen::VectorXd& v, double slack) {
  for (int i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1] + slack) return false;
  return true;
}

}  // namespace

AsymptoteReport analyze_asymptotics(const SpectrumCurve& curve,
                                    int levels_per_irrep) {
  AsymptoteReport report;
  report.cutoff = curve.cutoff;
  report.all_ok = true;
  const int npts = curve.points();
  if (npts < 6) throw std::invalid_argument("asymptote analysis needs a real grid");
  const int tail_begin = (2 * npts) / 3;
  report.tail_start = curve.lambdas[tail_begin];
  if (!(report.tail_start > 0))
    throw std::invalid_argument("tail of the grid must have positive couplings");
  const int tail_len = npts - tail_begin;

  for (int oi = 0; oi < 6; ++oi) {
    const IrrepLabel s = irrep_order()[oi];
    const Eigen::MatrixXd scaled = curve.scaled(s);
    const int nlev = std::min<int>(levels_per_irrep, scaled.rows());
    for (int k = 0; k < nlev; ++k) {
      TailCheck t;
      t.irrep = s;
      t.level = k;
      t.monotone_nonincreasing = monotone_nonincreasing(
          scaled.row(k).segment(tail_begin, tail_len).transpose(), 0.0);
      report.all_ok = report.all_ok && t.monotone_nonincreasing;
      report.tails.push_back(t);
    }
  }

  const std::array<double, 4> lines = scaled_reference_lines();
  struct PairSpec {
    const char* name;
    IrrepLabel a, b;
    double limit;
  };
  const PairSpec specs[3] = {
      {"1A1g/1A2u", IrrepLabel::A1g, IrrepLabel::A2u, lines[0]},
      {"1Eu/1Eg", IrrepLabel::Eu, IrrepLabel::Eg, lines[1]},
      {"1A2g/1A1u", IrrepLabel::A2g, IrrepLabel::A1u, lines[3]},
  };
  for (const PairSpec& spec : specs) {
    PairConvergence p;
    p.name = spec.name;
    p.first = spec.a;
    p.second = spec.b;
    p.level = 0;
    p.limit = spec.limit;
    const Eigen::MatrixXd sa = curve.scaled(spec.a);
    const Eigen::MatrixXd sb = curve.scaled(spec.b);
    if (sa.rows() == 0 || sb.rows() == 0)
      throw std::invalid_argument("pair analysis needs both irreps populated");
    Eigen::VectorXd gap(tail_len);
    for (int j = 0; j < tail_len; ++j)
      gap[j] = std::abs(sa(0, tail_begin + j) - sb(0, tail_begin + j));
    p.gap_shrinks_monotonically = monotone_nonincreasing(gap, 0.0) &&
                                  gap[tail_len - 1] < gap[0];
    p.final_first = sa(0, npts - 1);
    p.final_second = sb(0, npts - 1);
    p.final_gap = gap[tail_len - 1];
    p.above_limit_at_end =
        p.final_first > spec.limit && p.final_second > spec.limit;
    report.all_ok =
        report.all_ok && p.gap_shrinks_monotonically && p.above_limit_at_end;
    report.pairs.push_back(p);
  }
  return report;
}

AssociationReport track_association(const SpectrumCurve& curve,
                                    IrrepLabel target, IrrepLabel reference,
                                    int reference_level) {
  AssociationReport report;
  report.target = target;
  report.reference = reference;
  report.reference_level = reference_level;
  const Eigen::MatrixXd& et = curve.of(target);
  const Eigen::MatrixXd& er = curve.of(reference);
  if (reference_level < 0 || reference_level >= er.rows())
    throw std::invalid_argument("reference level outside block");
  if (et.rows() == 0) throw std::invalid_argument("target block is empty");
  for (int j = 0; j < curve.points(); ++j) {
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int k = 0; k < et.rows(); ++k) {
      const double d = std::abs(et(k, j) - er(reference_level, j));
      if (d < best_d) {
        best_d = d;
        best = k;
      }
    }
    report.nearest.push_back(best);
  }
  report.before_level = report.nearest.front();
  report.after_level = report.nearest.back();
  report.flipped = report.before_level != report.after_level;
  if (report.flipped) {
    for (int j = 0; j < curve.points(); ++j) {
      if (report.nearest[j] != report.before_level) {
        report.flip_lambda = curve.lambdas[j];
        break;
      }
    }
  }
  return report;
}

}  // namespace boxtrio
