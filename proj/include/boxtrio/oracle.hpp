#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace boxtrio::oracle {

// Everything in this namespace is an independent cross-check path: it shares
// no tables, no symmetry machinery, and no matrix assembly with the solver.
// Integrals come from adaptive quadrature instead of closed forms, and the
// spectrum comes from the full unsymmetrized product basis.

// Adaptive Gauss-Kronrod 7-15 integration with bisection; throws on failure
// to reach the requested absolute accuracy.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-13);

// <phi_m| q^power |phi_n> over (-1,1) by quadrature, power 1 or 2.
double mode_moment_by_quadrature(int power, int m, int n, double abs_tol = 1e-13);

// Eigenvalues of H(lambda) over all product states with energy sum <= cutoff,
// no symmetry used, ascending. max_states guards the dense solve.
std::vector<double> full_spectrum(double lambda, std::int64_t cutoff,
                                  int max_states = 4000);

// Transverse energy 2 sqrt(1 + 3 lambda) (n1 + n2 + 1) of the fully separable
// harmonic-trap analog, where the pair coupling turns the two relative
// coordinates into an oscillator of frequency sqrt(1 + 3 lambda). The box
// spectrum approaches the same scaled limits 2 sqrt(3) (n1 + n2 + 1) at
// strong coupling, so this serves as the asymptotic guide.
double separable_harmonic_reference(double lambda, int n1, int n2);

struct OracleCheck {
  std::string name;
  bool passed = false;
  double measured = 0.0;   // what the check observed (max deviation, etc.)
  double tolerance = 0.0;  // what it compared against
  nlohmann::ordered_json details;
};

struct OracleOptions {
  std::vector<std::int64_t> cutoffs{14, 27};
  std::vector<double> lambdas{0.0, 0.1, 1.0, 10.0};
  int quadrature_max_mode = 50;
  double quadrature_tol = 1e-12;
  double spectrum_tol = 1e-8;
  bool quadrature_only = false;
  // Optional negative-control offset applied to the solver-side q^2 table.
  double perturb_p2 = 0.0;
};

struct OracleReport {
  std::vector<OracleCheck> checks;
  bool all_passed = false;
};

// Runs the quadrature-vs-closed-form comparison and, unless quadrature_only,
// the merged-block-spectrum vs full-basis comparison with the lambda = 0
// degeneracy census.
OracleReport run_oracle_suite(const OracleOptions& options);

}  // namespace boxtrio::oracle
