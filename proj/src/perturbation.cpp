#include "boxtrio/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace boxtrio {

namespace {

// Slopes of one degenerate group: eigenvalues of the coupling restricted to
// the group's indices, ascending.
std::vector<double> group_slopes(const HamiltonianBlock& block, int begin,
                                 int end) {
  const int m = end - begin;
  if (m == 1) return {block.coupling(begin, begin)};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      block.coupling.block(begin, begin, m, m));
  if (es.info() != Eigen::Success)
    throw NumericalError("first-order diagonalization failed");
  return {es.eigenvalues().data(), es.eigenvalues().data() + m};
}

struct GroupRange {
  std::int64_t energy_sum;
  int begin;
  int end;
};

std::vector<GroupRange> degenerate_groups(const HamiltonianBlock& block) {
  std::vector<GroupRange> out;
  const int n = block.dimension();
  int i = 0;
  while (i < n) {
    const std::int64_t sum = block.basis[i].energy_sum;
    int j = i + 1;
    while (j < n && block.basis[j].energy_sum == sum) ++j;
    out.push_back({sum, i, j});
    i = j;
  }
  return out;
}

}  // namespace

std::vector<FirstOrderLevel> first_order_table(const BlockSet& set) {
  constexpr double pi = std::numbers::pi;
  std::vector<FirstOrderLevel> out;
  for (IrrepLabel s : irrep_order()) {
    const HamiltonianBlock& block = set.block(s, 0);
    std::vector<FirstOrderLevel> mine;
    for (const GroupRange& g : degenerate_groups(block)) {
      const std::vector<double> slopes = group_slopes(block, g.begin, g.end);
      for (double v : slopes) {
        if (!mine.empty() && mine.back().energy_sum == g.energy_sum &&
            std::abs(mine.back().slope - v) <=
                1e-12 * (1.0 + std::abs(mine.back().slope))) {
          ++mine.back().multiplicity;
          continue;
        }
        FirstOrderLevel lvl;
        lvl.irrep = s;
        lvl.energy_sum = g.energy_sum;
        lvl.e0 = pi * pi / 4.0 * static_cast<double>(g.energy_sum);
        lvl.slope = v;
        mine.push_back(lvl);
      }
    }
    // Blocks are ordered by energy sum and slopes ascend within a group, so
    // the list is already sorted by (e0, slope).
    for (size_t k = 0; k < mine.size(); ++k)
      mine[k].ordinal = static_cast<int>(k) + 1;
    out.insert(out.end(), mine.begin(), mine.end());
  }
  return out;
}

const std::vector<ReferenceSlope>& reference_slopes() {
  static const std::vector<ReferenceSlope> refs = [] {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double pi4 = pi2 * pi2;
    const double root = std::sqrt(466441.0);
    std::vector<ReferenceSlope> v;
    using L = IrrepLabel;
    v.push_back({"1A1g", L::A1g, 3, 0, 2.0 * (pi2 - 6.0) / pi2});
    v.push_back({"1A2u", L::A2u, 6, 0,
                 (162.0 * pi4 - 729.0 * pi2 - 4096.0) / (81.0 * pi4)});
    v.push_back({"1Eu", L::Eu, 6, 0,
                 (162.0 * pi4 - 729.0 * pi2 + 2048.0) / (81.0 * pi4)});
    v.push_back({"2A1g", L::A1g, 9, 0,
                 2.0 * (81.0 * pi4 - 243.0 * pi2 - 2048.0) / (81.0 * pi4)});
    v.push_back({"1Eg", L::Eg, 9, 0,
                 2.0 * (81.0 * pi4 - 243.0 * pi2 + 1024.0) / (81.0 * pi4)});
    v.push_back({"3A1g", L::A1g, 11, 0, 2.0 * (9.0 * pi2 - 38.0) / (9.0 * pi2)});
    v.push_back({"2Eg", L::Eg, 11, 0, 2.0 * (9.0 * pi2 - 38.0) / (9.0 * pi2)});
    v.push_back({"2A2u", L::A2u, 12, 0, (2.0 * pi2 - 3.0) / pi2});
    v.push_back({"3A2u", L::A2u, 14, 0,
                 (101250.0 * pi4 - 275625.0 * pi2 - 2772992.0) / (50625.0 * pi4)});
    v.push_back({"2Eu", L::Eu, 14, 0,
                 (101250.0 * pi4 - 275625.0 * pi2 - 2048.0 * root) /
                     (50625.0 * pi4)});
    v.push_back({"3Eu", L::Eu, 14, 1,
                 (101250.0 * pi4 - 275625.0 * pi2 + 2048.0 * root) /
                     (50625.0 * pi4)});
    v.push_back({"1A1u", L::A1u, 14, 0,
                 (101250.0 * pi4 - 275625.0 * pi2 + 2772992.0) / (50625.0 * pi4)});
    return v;
  }();
  return refs;
}

namespace {

// Slopes of one (irrep, energy_sum) group, ascending, multiplicities expanded.
std::vector<double> slopes_of_group(const std::vector<FirstOrderLevel>& table,
                                    IrrepLabel irrep, std::int64_t energy_sum) {
  std::vector<double> slopes;
  for (const FirstOrderLevel& lvl : table)
    if (lvl.irrep == irrep && lvl.energy_sum == energy_sum)
      for (int k = 0; k < lvl.multiplicity; ++k) slopes.push_back(lvl.slope);
  return slopes;
}

}  // namespace

SlopeReport check_first_order_slopes(const BlockSet& set, double rel_tol) {
  const std::vector<FirstOrderLevel> table = first_order_table(set);
  SlopeReport report;
  report.tolerance = rel_tol;
  report.all_ok = true;
  for (const ReferenceSlope& ref : reference_slopes()) {
    // References above the basis cutoff have no degenerate group to compare;
    // a smaller basis checks a shorter table rather than failing.
    if (ref.energy_sum > set.cutoff) continue;
    SlopeCheckRow row;
    row.ref = ref;
    const std::vector<double> slopes =
        slopes_of_group(table, ref.irrep, ref.energy_sum);
    if (ref.slope_rank >= static_cast<int>(slopes.size())) {
      row.computed = std::nan("");
      row.relative_error = std::nan("");
      row.ok = false;
    } else {
      row.computed = slopes[ref.slope_rank];
      row.relative_error = std::abs(row.computed - ref.slope) / std::abs(ref.slope);
      row.ok = row.relative_error <= rel_tol;
    }
    report.all_ok = report.all_ok && row.ok;
    report.rows.push_back(row);
  }
  return report;
}

double rr_slope_estimate(const BlockSet& set, IrrepLabel irrep,
                         std::int64_t energy_sum, int slope_rank, double h) {
  if (!(h > 0))
    throw std::invalid_argument("finite-difference step must be positive");
  const HamiltonianBlock& block = set.block(irrep, 0);
  int begin = -1, end = -1;
  for (const GroupRange& g : degenerate_groups(block)) {
    if (g.energy_sum == energy_sum) {
      begin = g.begin;
      end = g.end;
      break;
    }
  }
  if (begin < 0)
    throw std::invalid_argument("no " + to_string(irrep) +
                                " group with energy sum " +
                                std::to_string(energy_sum));
  const int m = end - begin;
  if (slope_rank < 0 || slope_rank >= m)
    throw std::invalid_argument("slope rank outside the degenerate group");
  // For small h the group still occupies its lambda = 0 index range [begin,
  // end); within the group the ordering at -h is reversed relative to +h.
  const Eigen::VectorXd up = eigensolve_block(block, h).values;
  const Eigen::VectorXd down = eigensolve_block(block, -h).values;
  const double e_up = up[begin + slope_rank];
  const double e_down = down[begin + (m - 1 - slope_rank)];
  return (e_up - e_down) / (2.0 * h);
}

}  // namespace boxtrio
