#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace boxtrio {

// Quantum numbers (n1,n2,n3) of one product state phi_n1(x) phi_n2(y) phi_n3(z)
// of box modes phi_n(q) = sin(n pi (q+1)/2) on (-1,1). All indices >= 1.
struct ModeTriple {
  int n1 = 1;
  int n2 = 1;
  int n3 = 1;

  int operator[](int i) const { return i == 0 ? n1 : (i == 1 ? n2 : n3); }
  int& operator[](int i) { return i == 0 ? n1 : (i == 1 ? n2 : n3); }

  // n1^2 + n2^2 + n3^2, exact. Energy is (pi^2/4) times this.
  std::int64_t energy_sum() const {
    auto sq = [](std::int64_t v) { return v * v; };
    return sq(n1) + sq(n2) + sq(n3);
  }

  friend auto operator<=>(const ModeTriple&, const ModeTriple&) = default;
};

// Noninteracting energy (pi^2/4)(n1^2+n2^2+n3^2).
double mode_energy(const ModeTriple& t);

std::string to_string(const ModeTriple& t);

// Parity of phi_n about q = 0: phi_n(-q) = (-1)^(n+1) phi_n(q),
// so odd mode numbers give even functions.
enum class FunctionParity { Even, Odd };

FunctionParity mode_parity(int n);

// The ten parity/multiplicity patterns a mode triple can realize. "Even"/"Odd"
// refer to function parity; the suffix encodes the multiplicity structure of
// the triple restricted to that parity (Pair = two equal values, Distinct =
// all values distinct). These patterns determine the symmetry content of a
// multiplet without further computation.
enum class ParityClass {
  EvenTriple,            // three equal even functions      (n n n), n odd
  EvenPairPlusEven,      // two equal + one distinct, even  (n n m)
  EvenDistinct,          // three distinct even functions
  OddPlusEvenPair,       // one odd function + equal even pair
  OddPlusEvenDistinct,   // one odd function + distinct even pair
  EvenPlusOddPair,       // one even function + equal odd pair
  EvenPlusOddDistinct,   // one even function + distinct odd pair
  OddTriple,             // three equal odd functions
  OddPairPlusOdd,        // two equal + one distinct, odd
  OddDistinct,           // three distinct odd functions
};

std::string to_string(ParityClass c);

ParityClass parity_class(const ModeTriple& t);

// One degenerate group of product states: all distinct arrangements of a
// multiset {n1,n2,n3}. Members share the energy sum; the representative has
// components sorted descending.
struct Multiplet {
  std::int64_t energy_sum = 0;
  ModeTriple representative;        // n1 >= n2 >= n3
  std::vector<ModeTriple> members;  // ascending lexicographic order

  int orbit_size() const { return static_cast<int>(members.size()); }
};

// All multiplets with energy_sum <= cutoff, ordered by energy_sum and, within
// ties, by ascending lexicographic order of the representative. cutoff must
// lie in [3, 10^6]; throws std::invalid_argument otherwise.
std::vector<Multiplet> enumerate_multiplets(std::int64_t cutoff);

}  // namespace boxtrio
