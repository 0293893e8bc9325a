#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "boxtrio/basis.hpp"

namespace boxtrio {

// The symmetry group of the interacting three-particle problem: the six
// coordinate permutations, each optionally composed with global negation
// (x,y,z) -> (-x,-y,-z). Isomorphic to D3d acting on the line x+y+z = const.
struct GroupElement {
  // Action on coordinates: q'_j = sign * q_{perm[j]}. For product states this
  // means (O_g phi)_{n} = factor * phi_{n o perm}, with a factor determined by
  // the mode parities when sign = -1.
  std::array<int, 3> perm{0, 1, 2};
  int sign = +1;  // +1 or -1

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Parity of the permutation part: +1 for identity and 3-cycles, -1 for
// transpositions.
int permutation_parity(const GroupElement& g);

GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

// The twelve elements in a fixed deterministic order: the six pure
// permutations (identity, the two 3-cycles, the three transpositions), then
// the same six composed with negation.
const std::array<GroupElement, 12>& group_elements();

enum class ConjClass { E, C3, C2, Inversion, S6, SigmaD };

// Geometric class assignment: pure transpositions are reflections (sigma_d,
// determinant -1 on coordinates), negated transpositions are the C2 rotations,
// pure 3-cycles are C3, negated 3-cycles are S6, negated identity is the
// inversion.
ConjClass class_of(const GroupElement& g);

int class_size(ConjClass c);
std::string to_string(ConjClass c);

enum class IrrepLabel { A1g, A2g, Eg, A1u, A2u, Eu };

// Canonical ordering used everywhere blocks or labels are listed.
const std::array<IrrepLabel, 6>& irrep_order();

int irrep_dimension(IrrepLabel s);
std::string to_string(IrrepLabel s);
// Parses "A1g", "Eg", ... ; throws std::invalid_argument on anything else.
IrrepLabel irrep_from_string(const std::string& name);

// Character of irrep s on class c.
double character(IrrepLabel s, ConjClass c);

// Representation matrix entry D^S(g)_{tr}. One-dimensional irreps only have
// (t,r) = (0,0); the two-dimensional irreps use the real orthogonal matrices
// fixed by the partner convention below.
double irrep_matrix_entry(IrrepLabel s, const GroupElement& g, int t, int r);

// Full 2x2 matrix for Eg/Eu.
Eigen::Matrix2d irrep_matrix(IrrepLabel s, const GroupElement& g);

// A (sparse) real linear combination of product states, keyed by mode triple.
// std::map keeps iteration deterministic.
using StateVector = std::map<ModeTriple, double>;

// O_g applied to a basis product state: returns (permuted triple, factor).
std::pair<ModeTriple, double> act(const GroupElement& g, const ModeTriple& t);
StateVector act(const GroupElement& g, const StateVector& v);

double dot(const StateVector& a, const StateVector& b);
double norm(const StateVector& v);
// a += c * b, dropping entries below 1e-14 in magnitude afterwards.
void accumulate(StateVector& a, double c, const StateVector& b);
StateVector scaled(const StateVector& v, double c);

// Row projection / transfer operator P_{tr} = (dim/12) sum_g D^S(g)_{tr} O_g.
// P_{rr} projects onto row r of the S-isotypic component; P_{tr} maps row r
// partners to row t partners within the same copy.
StateVector apply_row_operator(IrrepLabel s, int t, int r, const StateVector& v);

// Character projector onto the full S-isotypic component,
// P^S = (dim/12) sum_g chi_S(g) O_g.
StateVector apply_character_projector(IrrepLabel s, const StateVector& v);

// One symmetry-adapted basis function.
struct Salc {
  IrrepLabel irrep = IrrepLabel::A1g;
  int row = 0;   // 0 for 1D irreps; 0 or 1 for E types
  int copy = 0;  // which copy of the irrep inside this multiplet (0-based)
  ModeTriple multiplet;  // representative (descending) of the source multiplet
  std::int64_t energy_sum = 0;
  StateVector coeffs;
};

// Irrep content of a multiplet, by parity pattern. Returned in canonical irrep
// order; E labels appear once per copy.
std::vector<IrrepLabel> decompose_multiplet(const Multiplet& m);

// Symmetry-adapted combinations spanning the multiplet, built from the
// closed-form templates (orbit sizes 1 and 3, and the 1D combinations of
// 6-orbits) and from row projection with deterministic seeds (E types of
// 6-orbits, where the raw templates are not row-aligned across copies).
//
// Postconditions, all verified internally (std::runtime_error on failure):
//   * count matches decompose_multiplet with E counted twice;
//   * the set is orthonormal to 1e-12;
//   * every function transforms under all 12 elements exactly by its irrep's
//     matrices (tolerance 1e-12), with E partners row-aligned so that
//     O_g s_{row r, copy c} = sum_t D(g)_{tr} s_{row t, copy c};
//   * the span per irrep agrees with the character-projector route.
// Ordering: canonical irrep order, then copy, then row.
std::vector<Salc> build_salcs(const Multiplet& m);

// Multiplicity census: number of copies of each irrep summed over multiplets
// up to the cutoff, in canonical irrep order. Each E copy spans two states, so
// sum_s census[s] * dim(s) equals the number of product states.
std::array<int, 6> salc_census(std::int64_t cutoff);

}  // namespace boxtrio
