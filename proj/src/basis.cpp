#include "boxtrio/basis.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace boxtrio {

double mode_energy(const ModeTriple& t) {
  constexpr double pi = std::numbers::pi;
  return pi * pi / 4.0 * static_cast<double>(t.energy_sum());
}

std::string to_string(const ModeTriple& t) {
  return "(" + std::to_string(t.n1) + "," + std::to_string(t.n2) + "," +
         std::to_string(t.n3) + ")";
}

FunctionParity mode_parity(int n) {
  return (n % 2 == 1) ? FunctionParity::Even : FunctionParity::Odd;
}

ParityClass parity_class(const ModeTriple& t) {
  std::array<int, 3> s{t.n1, t.n2, t.n3};
  std::sort(s.begin(), s.end(), std::greater<>());
  const bool all_equal = s[0] == s[2];
  const bool all_distinct = s[0] != s[1] && s[1] != s[2];

  if (all_equal) {
    return mode_parity(s[0]) == FunctionParity::Even ? ParityClass::EvenTriple
                                                     : ParityClass::OddTriple;
  }
  if (all_distinct) {
    int odd_fns = 0;
    for (int v : s)
      if (mode_parity(v) == FunctionParity::Odd) ++odd_fns;
    switch (odd_fns) {
      case 0: return ParityClass::EvenDistinct;
      case 1: return ParityClass::OddPlusEvenDistinct;
      case 2: return ParityClass::EvenPlusOddDistinct;
      default: return ParityClass::OddDistinct;
    }
  }
  // Exactly one repeated value.
  const int pair = (s[0] == s[1]) ? s[0] : s[1];
  const int lone = (s[0] == s[1]) ? s[2] : s[0];
  const bool pair_even = mode_parity(pair) == FunctionParity::Even;
  const bool lone_even = mode_parity(lone) == FunctionParity::Even;
  if (pair_even) {
    return lone_even ? ParityClass::EvenPairPlusEven : ParityClass::OddPlusEvenPair;
  }
  return lone_even ? ParityClass::EvenPlusOddPair : ParityClass::OddPairPlusOdd;
}

std::string to_string(ParityClass c) {
  switch (c) {
    case ParityClass::EvenTriple: return "{e,e,e}";
    case ParityClass::EvenPairPlusEven: return "{e',e,e}";
    case ParityClass::EvenDistinct: return "{e1,e2,e3}";
    case ParityClass::OddPlusEvenPair: return "{o,e,e}";
    case ParityClass::OddPlusEvenDistinct: return "{o,e1,e2}";
    case ParityClass::EvenPlusOddPair: return "{e,o,o}";
    case ParityClass::EvenPlusOddDistinct: return "{e,o1,o2}";
    case ParityClass::OddTriple: return "{o,o,o}";
    case ParityClass::OddPairPlusOdd: return "{o',o,o}";
    case ParityClass::OddDistinct: return "{o1,o2,o3}";
  }
  return "?";
}

std::vector<Multiplet> enumerate_multiplets(std::int64_t cutoff) {
  if (cutoff < 3 || cutoff > 1'000'000) {
    throw std::invalid_argument("energy-sum cutoff must lie in [3, 1e6], got " +
                                std::to_string(cutoff));
  }
  std::vector<Multiplet> out;
  // Representatives are descending triples a >= b >= c >= 1.
  for (std::int64_t a = 1; a * a + 2 <= cutoff; ++a) {
    for (std::int64_t b = 1; b <= a && a * a + b * b + 1 <= cutoff; ++b) {
      for (std::int64_t c = 1; c <= b; ++c) {
        const std::int64_t sum = a * a + b * b + c * c;
        if (sum > cutoff) break;
        Multiplet m;
        m.energy_sum = sum;
        m.representative = ModeTriple{static_cast<int>(a), static_cast<int>(b),
                                      static_cast<int>(c)};
        std::array<int, 3> v{m.representative.n1, m.representative.n2,
                             m.representative.n3};
        std::sort(v.begin(), v.end());
        do {
          m.members.push_back(ModeTriple{v[0], v[1], v[2]});
        } while (std::next_permutation(v.begin(), v.end()));
        out.push_back(std::move(m));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Multiplet& x, const Multiplet& y) {
    if (x.energy_sum != y.energy_sum) return x.energy_sum < y.energy_sum;
    return x.representative < y.representative;
  });
  return out;
}

}  // namespace boxtrio
