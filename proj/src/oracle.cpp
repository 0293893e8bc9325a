#include "boxtrio/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "boxtrio/matrix_elements.hpp"
#include "boxtrio/solver.hpp"

namespace boxtrio::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss-Kronrod 7-15 nodes and weights on [-1,1] (positive half; the rule is
// symmetric). Odd-index nodes carry the embedded 7-point Gauss rule.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
  double kronrod;
  double error;
};

PanelEstimate gauss_kronrod(const std::function<double(double)>& f, double a,
                            double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double resk = 0.0;
  double resg = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double x = half * kNodes[i];
    const double fsum =
        (i < 7) ? f(mid - x) + f(mid + x) : f(mid);  // center counted once
    resk += kKronrodWeights[i] * fsum;
    // Odd indices and the center carry the embedded 7-point Gauss rule.
    if (i % 2 == 1) resg += kGaussWeights[i / 2] * fsum;
  }
  resk *= half;
  resg *= half;
  return {resk, std::abs(resk - resg)};
}

double integrate_recursive(const std::function<double(double)>& f, double a,
                           double b, double tol, int depth) {
  const PanelEstimate est = gauss_kronrod(f, a, b);
  // Never trust the very first panels: a feature narrower than the node
  // spacing is invisible to the estimate, so resolve to 8 panels regardless.
  if (depth >= 3 && (est.error <= tol || est.error <= 1e-17))
    return est.kronrod;
  if (depth >= 52)
    throw std::runtime_error("quadrature failed to converge on [" +
                             std::to_string(a) + ", " + std::to_string(b) + "]");
  const double mid = 0.5 * (a + b);
  const double half_tol = std::max(0.5 * tol, 5e-18);
  return integrate_recursive(f, a, mid, half_tol, depth + 1) +
         integrate_recursive(f, mid, b, half_tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
  if (!(abs_tol > 0)) throw std::invalid_argument("tolerance must be positive");
  return integrate_recursive(f, a, b, abs_tol, 0);
}

double mode_moment_by_quadrature(int power, int m, int n, double abs_tol) {
  if (power != 1 && power != 2)
    throw std::invalid_argument("only first and second moments are defined");
  if (m < 1 || n < 1) throw std::invalid_argument("mode indices start at 1");
  auto mode = [](int k, double q) { return std::sin(k * kPi * (q + 1.0) / 2.0); };
  return integrate(
      [&](double q) {
        const double weight = (power == 1) ? q : q * q;
        return mode(m, q) * weight * mode(n, q);
      },
      -1.0, 1.0, abs_tol);
}

namespace {

struct ProductState {
  int n1, n2, n3;
  std::int64_t sum;
};

// Deliberately separate from the solver's enumeration: plain integer loops in
// lexicographic order over all (not just representative) triples.
std::vector<ProductState> all_product_states(std::int64_t cutoff) {
  std::vector<ProductState> states;
  for (std::int64_t n1 = 1; n1 * n1 + 2 <= cutoff; ++n1)
    for (std::int64_t n2 = 1; n1 * n1 + n2 * n2 + 1 <= cutoff; ++n2)
      for (std::int64_t n3 = 1; n1 * n1 + n2 * n2 + n3 * n3 <= cutoff; ++n3)
        states.push_back({static_cast<int>(n1), static_cast<int>(n2),
                          static_cast<int>(n3),
                          n1 * n1 + n2 * n2 + n3 * n3});
  return states;
}

// Pair-coupling matrix element from quadrature-built moment tables, summing
// (q_i - q_j)^2 = q_i^2 + q_j^2 - 2 q_i q_j over the three coordinate pairs.
double pair_coupling(const ProductState& a, const ProductState& b,
                     const Eigen::MatrixXd& q1, const Eigen::MatrixXd& q2) {
  const std::array<int, 3> av{a.n1, a.n2, a.n3};
  const std::array<int, 3> bv{b.n1, b.n2, b.n3};
  double elem = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const int k = 3 - i - j;  // the spectator coordinate
      if (av[k] != bv[k]) continue;
      if (av[j] == bv[j]) elem += q2(av[i] - 1, bv[i] - 1);
      if (av[i] == bv[i]) elem += q2(av[j] - 1, bv[j] - 1);
      elem -= 2.0 * q1(av[i] - 1, bv[i] - 1) * q1(av[j] - 1, bv[j] - 1);
    }
  }
  return elem;
}

}  // namespace

std::vector<double> full_spectrum(double lambda, std::int64_t cutoff,
                                  int max_states) {
  const std::vector<ProductState> states = all_product_states(cutoff);
  const int n = static_cast<int>(states.size());
  if (n == 0) throw std::invalid_argument("cutoff admits no product states");
  if (n > max_states)
    throw std::invalid_argument("full-basis solve would need " +
                                std::to_string(n) + " states, cap is " +
                                std::to_string(max_states));
  int max_mode = 1;
  for (const ProductState& s : states)
    max_mode = std::max({max_mode, s.n1, s.n2, s.n3});

  Eigen::MatrixXd q1(max_mode, max_mode), q2(max_mode, max_mode);
  for (int m = 1; m <= max_mode; ++m) {
    for (int k = 1; k <= max_mode; ++k) {
      q1(m - 1, k - 1) = mode_moment_by_quadrature(1, m, k);
      q2(m - 1, k - 1) = mode_moment_by_quadrature(2, m, k);
    }
  }

  Eigen::MatrixXd h(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double v = lambda * pair_coupling(states[i], states[j], q1, q2);
      if (i == j) v += kPi * kPi / 4.0 * static_cast<double>(states[i].sum);
      h(i, j) = v;
      h(j, i) = v;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("full-basis eigensolve failed");
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

double separable_harmonic_reference(double lambda, int n1, int n2) {
  if (n1 < 0 || n2 < 0)
    throw std::invalid_argument("oscillator quantum numbers start at 0");
  return 2.0 * std::sqrt(1.0 + 3.0 * lambda) * (n1 + n2 + 1);
}

OracleReport run_oracle_suite(const OracleOptions& options) {
  OracleReport report;
  report.all_passed = true;
  auto push = [&](OracleCheck c) {
    report.all_passed = report.all_passed && c.passed;
    report.checks.push_back(std::move(c));
  };

  {
    OracleCheck c;
    c.name = "quadrature vs closed-form integrals";
    c.tolerance = options.quadrature_tol;
    double worst = 0.0;
    int worst_m = 1, worst_n = 1, worst_power = 1;
    for (int m = 1; m <= options.quadrature_max_mode; ++m) {
      for (int n = m; n <= options.quadrature_max_mode; ++n) {
        const double d1 = std::abs(mode_moment_by_quadrature(1, m, n) -
                                   IntegralTable::p1_closed_form(m, n));
        const double d2 = std::abs(mode_moment_by_quadrature(2, m, n) -
                                   IntegralTable::p2_closed_form(m, n) -
                                   options.perturb_p2);
        if (d1 > worst) worst = d1, worst_m = m, worst_n = n, worst_power = 1;
        if (d2 > worst) worst = d2, worst_m = m, worst_n = n, worst_power = 2;
      }
    }
    c.measured = worst;
    c.passed = worst <= c.tolerance;
    c.details["max_mode"] = options.quadrature_max_mode;
    c.details["worst_entry"] = {{"power", worst_power}, {"m", worst_m}, {"n", worst_n}};
    push(std::move(c));
  }

  if (options.quadrature_only) return report;

  for (const std::int64_t cutoff : options.cutoffs) {
    const IntegralTable table =
        options.perturb_p2 == 0.0
            ? IntegralTable(required_max_mode(cutoff))
            : IntegralTable(required_max_mode(cutoff)).with_p2_offset(options.perturb_p2);
    const BlockSet set = build_block_set(cutoff, table);
    for (const double lambda : options.lambdas) {
      OracleCheck c;
      c.name = "block spectrum vs full basis, cutoff " + std::to_string(cutoff) +
               ", lambda " + std::to_string(lambda);
      c.tolerance = options.spectrum_tol;
      const std::vector<double> mine = merged_levels(spectrum_at(set, lambda));
      const std::vector<double> full = full_spectrum(lambda, cutoff);
      if (mine.size() != full.size()) {
        c.passed = false;
        c.measured = std::abs(static_cast<double>(mine.size()) -
                              static_cast<double>(full.size()));
        c.details["reason"] = "state counts differ";
      } else {
        double worst = 0.0;
        for (size_t i = 0; i < mine.size(); ++i)
          worst = std::max(worst, std::abs(mine[i] - full[i]));
        c.measured = worst;
        c.passed = worst <= c.tolerance;
        c.details["states"] = mine.size();
      }
      push(std::move(c));
    }

    {
      // Degeneracy census at lambda = 0: merged block multiplicities must
      // reproduce the multiplet orbit sizes.
      OracleCheck c;
      c.name = "noninteracting degeneracy census, cutoff " + std::to_string(cutoff);
      c.tolerance = 1e-9;
      const std::vector<double> mine = merged_levels(spectrum_at(set, 0.0));
      const auto census = degeneracy_census(mine, 1e-9);
      std::map<std::int64_t, int> expected;
      for (const Multiplet& m : enumerate_multiplets(cutoff))
        expected[m.energy_sum] += m.orbit_size();
      bool ok = census.size() == expected.size();
      if (ok) {
        auto it = expected.begin();
        for (const auto& [value, count] : census) {
          const double e0 = kPi * kPi / 4.0 * static_cast<double>(it->first);
          ok = ok && count == it->second && std::abs(value - e0) <= 1e-9;
          ++it;
        }
      }
      c.passed = ok;
      c.measured = ok ? 0.0 : 1.0;
      c.details["distinct_levels"] = census.size();
      push(std::move(c));
    }
  }
  return report;
}

}  // namespace boxtrio::oracle
