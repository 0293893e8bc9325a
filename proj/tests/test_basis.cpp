#include "boxtrio/basis.hpp"

#include "doctest.h"

#include <algorithm>
#include <map>
#include <numbers>
#include <set>
#include <vector>

using namespace boxtrio;

namespace {

// Independent enumeration: every ordered triple with energy sum below the
// cutoff, grouped by sorted content. Cubic loops, no cleverness.
std::map<std::vector<int>, std::vector<ModeTriple>> brute_force_groups(
    std::int64_t cutoff) {
  std::map<std::vector<int>, std::vector<ModeTriple>> groups;
  for (int a = 1; 1LL * a * a + 2 <= cutoff; ++a)
    for (int b = 1; 1LL * a * a + 1LL * b * b + 1 <= cutoff; ++b)
      for (int c = 1; 1LL * a * a + 1LL * b * b + 1LL * c * c <= cutoff; ++c) {
        std::vector<int> key{a, b, c};
        std::sort(key.begin(), key.end());
        groups[key].push_back(ModeTriple{a, b, c});
      }
  return groups;
}

}  // namespace

TEST_CASE("multiplet enumeration matches a brute-force scan of product states") {
  for (std::int64_t cutoff : {3, 14, 27, 50}) {
    const auto groups = brute_force_groups(cutoff);
    const std::vector<Multiplet> multiplets = enumerate_multiplets(cutoff);
    REQUIRE(multiplets.size() == groups.size());

    size_t total_states = 0;
    for (const Multiplet& m : multiplets) {
      std::vector<int> key{m.representative.n3, m.representative.n2,
                           m.representative.n1};
      auto it = groups.find(key);
      REQUIRE(it != groups.end());
      CHECK(m.orbit_size() == static_cast<int>(it->second.size()));
      total_states += m.members.size();

      CHECK(m.representative.n1 >= m.representative.n2);
      CHECK(m.representative.n2 >= m.representative.n3);
      CHECK(m.energy_sum == m.representative.energy_sum());
      CHECK(std::is_sorted(m.members.begin(), m.members.end()));
      for (const ModeTriple& t : m.members) CHECK(t.energy_sum() == m.energy_sum);
    }

    size_t brute_total = 0;
    for (const auto& [key, members] : groups) brute_total += members.size();
    CHECK(total_states == brute_total);

    for (size_t i = 1; i < multiplets.size(); ++i) {
      const bool ordered =
          multiplets[i - 1].energy_sum < multiplets[i].energy_sum ||
          (multiplets[i - 1].energy_sum == multiplets[i].energy_sum &&
           multiplets[i - 1].representative < multiplets[i].representative);
      CHECK(ordered);
    }
  }
}

TEST_CASE("orbit sizes are 1, 3, or 6 and the cutoff-14 census is exact") {
  const std::vector<Multiplet> multiplets = enumerate_multiplets(14);
  REQUIRE(multiplets.size() == 6);

  // (1,1,1), (2,1,1), (2,2,1), (3,1,1), (2,2,2), (3,2,1)
  CHECK(multiplets[0].representative == ModeTriple{1, 1, 1});
  CHECK(multiplets[0].orbit_size() == 1);
  CHECK(multiplets[1].representative == ModeTriple{2, 1, 1});
  CHECK(multiplets[1].orbit_size() == 3);
  CHECK(multiplets[2].representative == ModeTriple{2, 2, 1});
  CHECK(multiplets[2].orbit_size() == 3);
  CHECK(multiplets[3].representative == ModeTriple{3, 1, 1});
  CHECK(multiplets[3].orbit_size() == 3);
  CHECK(multiplets[4].representative == ModeTriple{2, 2, 2});
  CHECK(multiplets[4].orbit_size() == 1);
  CHECK(multiplets[5].representative == ModeTriple{3, 2, 1});
  CHECK(multiplets[5].orbit_size() == 6);

  for (const Multiplet& m : enumerate_multiplets(200)) {
    const int size = m.orbit_size();
    CHECK((size == 1 || size == 3 || size == 6));
  }
}

TEST_CASE("accidental equal energy sums keep their multiplets separate") {
  // 27 = 5^2+1+1 = 3^2+3^2+3^2 and 33 = 5^2+2^2+2^2 = 4^2+4^2+1.
  const std::vector<Multiplet> multiplets = enumerate_multiplets(33);
  std::map<std::int64_t, std::vector<ModeTriple>> by_sum;
  for (const Multiplet& m : multiplets)
    by_sum[m.energy_sum].push_back(m.representative);

  REQUIRE(by_sum.at(27).size() == 2);
  CHECK(by_sum.at(27)[0] == ModeTriple{3, 3, 3});
  CHECK(by_sum.at(27)[1] == ModeTriple{5, 1, 1});
  REQUIRE(by_sum.at(33).size() == 2);
  CHECK(by_sum.at(33)[0] == ModeTriple{4, 4, 1});
  CHECK(by_sum.at(33)[1] == ModeTriple{5, 2, 2});
}

TEST_CASE("mode energies and parities follow the box-mode conventions") {
  CHECK(mode_energy(ModeTriple{1, 1, 1}) ==
        doctest::Approx(3.0 * std::numbers::pi * std::numbers::pi / 4.0)
            .epsilon(1e-15));
  CHECK(ModeTriple{3, 2, 1}.energy_sum() == 14);

  // phi_n(-q) = (-1)^(n+1) phi_n(q): odd mode numbers are even functions.
  CHECK(mode_parity(1) == FunctionParity::Even);
  CHECK(mode_parity(2) == FunctionParity::Odd);
  CHECK(mode_parity(7) == FunctionParity::Even);
  CHECK(mode_parity(10) == FunctionParity::Odd);
}

TEST_CASE("parity classes cover all ten patterns with the documented spellings") {
  struct Expect {
    ModeTriple t;
    ParityClass c;
    const char* text;
  };
  const Expect table[] = {
      {{1, 1, 1}, ParityClass::EvenTriple, "{e,e,e}"},
      {{3, 3, 1}, ParityClass::EvenPairPlusEven, "{e',e,e}"},
      {{5, 3, 1}, ParityClass::EvenDistinct, "{e1,e2,e3}"},
      {{2, 1, 1}, ParityClass::OddPlusEvenPair, "{o,e,e}"},
      {{2, 3, 1}, ParityClass::OddPlusEvenDistinct, "{o,e1,e2}"},
      {{1, 2, 2}, ParityClass::EvenPlusOddPair, "{e,o,o}"},
      {{1, 2, 4}, ParityClass::EvenPlusOddDistinct, "{e,o1,o2}"},
      {{2, 2, 2}, ParityClass::OddTriple, "{o,o,o}"},
      {{2, 2, 4}, ParityClass::OddPairPlusOdd, "{o',o,o}"},
      {{2, 4, 6}, ParityClass::OddDistinct, "{o1,o2,o3}"},
  };
  for (const Expect& e : table) {
    CHECK(parity_class(e.t) == e.c);
    CHECK(to_string(e.c) == e.text);
  }

  // The class is a function of the multiset, not the ordering.
  CHECK(parity_class(ModeTriple{1, 3, 2}) == parity_class(ModeTriple{2, 3, 1}));
  CHECK(parity_class(ModeTriple{4, 2, 2}) == parity_class(ModeTriple{2, 2, 4}));
}

TEST_CASE("enumeration rejects cutoffs outside the supported range") {
  CHECK_THROWS_AS(enumerate_multiplets(2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_multiplets(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_multiplets(-5), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_multiplets(1000001), std::invalid_argument);

  const std::vector<Multiplet> minimal = enumerate_multiplets(3);
  REQUIRE(minimal.size() == 1);
  CHECK(minimal[0].representative == ModeTriple{1, 1, 1});
}
