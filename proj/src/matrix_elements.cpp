#include "boxtrio/matrix_elements.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace boxtrio {

namespace {
constexpr double kPi = std::numbers::pi;

void check_mode(int n, int max_mode) {
  if (n < 1 || n > max_mode)
    throw std::out_of_range("mode index " + std::to_string(n) +
                            " outside table range [1, " +
                            std::to_string(max_mode) + "]");
}
}  // namespace

double IntegralTable::p1_closed_form(int m, int n) {
  if ((m + n) % 2 == 0) return 0.0;
  const double d = static_cast<double>(m) * m - static_cast<double>(n) * n;
  return -16.0 * m * n / (kPi * kPi * d * d);
}

double IntegralTable::p2_closed_form(int m, int n) {
  if (m == n) return 1.0 / 3.0 - 2.0 / (kPi * kPi * m * m);
  if ((m + n) % 2 != 0) return 0.0;
  const double d = static_cast<double>(m) * m - static_cast<double>(n) * n;
  return 32.0 * m * n / (kPi * kPi * d * d);
}

IntegralTable::IntegralTable(int max_mode) : max_mode_(max_mode) {
  if (max_mode < 1)
    throw std::invalid_argument("integral table needs max_mode >= 1");
  p1_.resize(max_mode, max_mode);
  p2_.resize(max_mode, max_mode);
  for (int m = 1; m <= max_mode; ++m) {
    for (int n = 1; n <= max_mode; ++n) {
      p1_(m - 1, n - 1) = p1_closed_form(m, n);
      p2_(m - 1, n - 1) = p2_closed_form(m, n);
    }
  }
}

double IntegralTable::p1(int m, int n) const {
  check_mode(m, max_mode_);
  check_mode(n, max_mode_);
  return p1_(m - 1, n - 1);
}

double IntegralTable::p2(int m, int n) const {
  check_mode(m, max_mode_);
  check_mode(n, max_mode_);
  return p2_(m - 1, n - 1);
}

IntegralTable IntegralTable::with_p2_offset(double eps) const {
  IntegralTable t(*this);
  t.p2_.array() += eps;
  return t;
}

int required_max_mode(std::int64_t cutoff) {
  if (cutoff < 3) throw std::invalid_argument("cutoff below smallest triple");
  int n = static_cast<int>(std::sqrt(static_cast<double>(cutoff - 2)));
  while (static_cast<std::int64_t>(n + 1) * (n + 1) + 2 <= cutoff) ++n;
  while (n > 1 && static_cast<std::int64_t>(n) * n + 2 > cutoff) --n;
  return n;
}

double coupling_element(const ModeTriple& a, const ModeTriple& b,
                        const IntegralTable& table) {
  const bool d1 = a.n1 == b.n1;
  const bool d2 = a.n2 == b.n2;
  const bool d3 = a.n3 == b.n3;
  double elem = 0.0;
  // 2(x^2 + y^2 + z^2): each term needs the other two modes to match.
  if (d2 && d3) elem += 2.0 * table.p2(a.n1, b.n1);
  if (d1 && d3) elem += 2.0 * table.p2(a.n2, b.n2);
  if (d1 && d2) elem += 2.0 * table.p2(a.n3, b.n3);
  // -2(xy + yz + zx): each term needs the remaining mode to match.
  if (d3) elem -= 2.0 * table.p1(a.n1, b.n1) * table.p1(a.n2, b.n2);
  if (d1) elem -= 2.0 * table.p1(a.n2, b.n2) * table.p1(a.n3, b.n3);
  if (d2) elem -= 2.0 * table.p1(a.n1, b.n1) * table.p1(a.n3, b.n3);
  return elem;
}

double coupling_element(const StateVector& x, const StateVector& y,
                        const IntegralTable& table) {
  double sum = 0.0;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) sum += ca * cb * coupling_element(a, b, table);
  return sum;
}

Eigen::MatrixXd HamiltonianBlock::hamiltonian(double lambda) const {
  Eigen::MatrixXd h = lambda * coupling;
  h.diagonal() += h0_diagonal;
  return h;
}

namespace {

HamiltonianBlock assemble_block(IrrepLabel irrep, int row,
                                std::vector<Salc> basis, std::int64_t cutoff,
                                const IntegralTable& table) {
  HamiltonianBlock blk;
  blk.irrep = irrep;
  blk.row = row;
  blk.cutoff = cutoff;
  blk.basis = std::move(basis);
  const int n = blk.dimension();
  blk.h0_diagonal.resize(n);
  blk.coupling.resize(n, n);
  for (int i = 0; i < n; ++i) {
    blk.h0_diagonal[i] =
        kPi * kPi / 4.0 * static_cast<double>(blk.basis[i].energy_sum);
    for (int j = 0; j <= i; ++j) {
      const double w =
          coupling_element(blk.basis[i].coeffs, blk.basis[j].coeffs, table);
      blk.coupling(i, j) = w;
      blk.coupling(j, i) = w;
    }
  }
  return blk;
}

}  // namespace

const HamiltonianBlock& BlockSet::block(IrrepLabel s, int row) const {
  for (const HamiltonianBlock& b : blocks)
    if (b.irrep == s && b.row == row) return b;
  throw std::invalid_argument("no block for " + to_string(s) + " row " +
                              std::to_string(row));
}

BlockSet build_block_set(std::int64_t cutoff) {
  return build_block_set(cutoff, IntegralTable(required_max_mode(cutoff)));
}

BlockSet build_block_set(std::int64_t cutoff, const IntegralTable& table) {
  if (table.max_mode() < required_max_mode(cutoff))
    throw std::invalid_argument("integral table too small for cutoff");

  // Bucket the symmetry functions by (irrep, row), keeping enumeration order.
  std::map<std::pair<int, int>, std::vector<Salc>> buckets;
  for (const Multiplet& m : enumerate_multiplets(cutoff)) {
    for (Salc& s : build_salcs(m)) {
      const auto& order = irrep_order();
      const int oi = static_cast<int>(
          std::find(order.begin(), order.end(), s.irrep) - order.begin());
      buckets[{oi, s.row}].push_back(std::move(s));
    }
  }

  BlockSet set;
  set.cutoff = cutoff;
  for (int oi = 0; oi < 6; ++oi) {
    const IrrepLabel s = irrep_order()[oi];
    for (int row = 0; row < irrep_dimension(s); ++row) {
      std::vector<Salc> basis;  // empty block if the irrep is absent
      if (auto it = buckets.find({oi, row}); it != buckets.end())
        basis = std::move(it->second);
      set.blocks.push_back(assemble_block(s, row, std::move(basis), cutoff, table));
    }
  }

  // Row consistency for the two-dimensional irreps: both rows must produce
  // identical H0 and W, and W must not couple distinct rows. These are exact
  // statements; the tolerances only absorb rounding.
  for (IrrepLabel s : {IrrepLabel::Eg, IrrepLabel::Eu}) {
    const HamiltonianBlock& b0 = set.block(s, 0);
    const HamiltonianBlock& b1 = set.block(s, 1);
    if (b0.dimension() != b1.dimension())
      throw std::runtime_error("row dimensions differ in " + to_string(s));
    if (b0.dimension() == 0) continue;
    const double scale = 1.0 + b0.coupling.cwiseAbs().maxCoeff();
    if ((b0.coupling - b1.coupling).cwiseAbs().maxCoeff() > 1e-12 * scale)
      throw std::runtime_error("row blocks differ in " + to_string(s));
    for (int i = 0; i < b0.dimension(); ++i) {
      if (b0.basis[i].energy_sum != b1.basis[i].energy_sum)
        throw std::runtime_error("row bases misaligned in " + to_string(s));
      for (int j = 0; j < b0.dimension(); ++j) {
        const double cross =
            coupling_element(b0.basis[i].coeffs, b1.basis[j].coeffs, table);
        if (std::abs(cross) > 1e-12 * scale)
          throw std::runtime_error("rows of " + to_string(s) +
                                   " are coupled; partner alignment broken");
      }
    }
  }
  return set;
}

double max_cross_block_coupling(const std::vector<Salc>& salcs,
                                const IntegralTable& table) {
  double worst = 0.0;
  for (size_t i = 0; i < salcs.size(); ++i) {
    for (size_t j = i + 1; j < salcs.size(); ++j) {
      if (salcs[i].irrep == salcs[j].irrep && salcs[i].row == salcs[j].row)
        continue;
      worst = std::max(
          worst, std::abs(coupling_element(salcs[i].coeffs, salcs[j].coeffs, table)));
    }
  }
  return worst;
}

}  // namespace boxtrio
