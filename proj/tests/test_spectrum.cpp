#include "spinsuth/fock.hpp"
#include "spinsuth/spectrum.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace spinsuth;

TEST_CASE("palindromic capacity vectors") {
  CHECK(palindromic_capacities(4, 1).empty());
  CHECK(palindromic_capacities(4, 3).empty());
  CHECK(palindromic_capacities(4, 2).size() == 2);
  const auto caps = palindromic_capacities(3, 1);
  REQUIRE(caps.size() == 1);
  CHECK(caps[0].C == std::vector<long long>{0, 1, 0});
  for (long long k = 0; k <= 6; ++k)
    for (int N = 3; N <= 6; ++N) {
      for (const auto& c : palindromic_capacities(N, k)) {
        long long total = 0;
        for (std::size_t i = 0; i < c.C.size(); ++i) {
          CHECK(c.C[i] == c.C[c.C.size() - 1 - i]);
          total += c.C[i];
        }
        CHECK(total == k);
      }
    }
}

TEST_CASE("shift weights match the invariant dimension") {
  CHECK(twisted_chi_set(3, 1) == std::vector<DominantWeight>{DominantWeight{3, {1, 0}}});
  CHECK(twisted_chi_set(4, 2) ==
        std::vector<DominantWeight>{DominantWeight{4, {0, 0, 1}}, DominantWeight{4, {1, 1, 0}}});
  for (int N = 3; N <= 6; ++N)
    for (long long k = 0; k <= 6; ++k)
      CHECK(Int(static_cast<long long>(twisted_chi_set(N, k).size())) == dim_invariant(N, k));
}

TEST_CASE("twisted spectrum of su(3) at level 1") {
  const SpectrumPrediction p = spectrum_twisted_lowest(1, 3, 5);
  REQUIRE(p.entries.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    const long long a = static_cast<long long>(i);
    CHECK(p.entries[i].value == rat(2 * a * a + 6 * a) + rat(8, 3));
    CHECK(p.entries[i].multiplicity == 1);
    REQUIRE(p.entries[i].sources.size() == 1);
    CHECK(p.entries[i].sources[0] == DominantWeight{3, {a + 1, a}});
  }
}

TEST_CASE("twisted spectrum is empty for even N at odd level") {
  CHECK(spectrum_twisted(1, 4, rat(100)).entries.empty());
  CHECK(spectrum_twisted(3, 6, rat(100)).entries.empty());
  // The lowest-count form must recognize the empty sector instead of growing
  // its cutoff forever.
  CHECK(spectrum_twisted_lowest(1, 4, 5).entries.empty());
}

TEST_CASE("standard spectrum of su(2)") {
  const SpectrumPrediction g2 = spectrum_standard_lowest(1, 2, 4);
  REQUIRE(g2.entries.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    const long long a = static_cast<long long>(i);
    CHECK(g2.entries[i].value == rat((a + 2) * (a + 2)));
    CHECK(g2.entries[i].multiplicity == 1);
  }
  const SpectrumPrediction g1 = spectrum_standard_lowest(0, 2, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const long long a = static_cast<long long>(i);
    CHECK(g1.entries[i].value == rat((a + 1) * (a + 1)));
  }
}

TEST_CASE("cutoff enumeration is a prefix of the lowest-entry enumeration") {
  const SpectrumPrediction cut = spectrum_twisted(2, 3, rat(40));
  const SpectrumPrediction low = spectrum_twisted_lowest(2, 3, static_cast<int>(cut.entries.size()));
  REQUIRE(cut.entries.size() == low.entries.size());
  for (std::size_t i = 0; i < cut.entries.size(); ++i) {
    CHECK(cut.entries[i].value == low.entries[i].value);
    CHECK(cut.entries[i].value <= rat(40));
    CHECK(cut.entries[i].multiplicity == low.entries[i].multiplicity);
  }
  for (std::size_t i = 1; i < cut.entries.size(); ++i)
    CHECK(cut.entries[i - 1].value < cut.entries[i].value);
}

TEST_CASE("admissible sets are sorted, unique, and internally consistent") {
  const auto tw = admissible_twisted(2, 4, rat(30));
  std::set<std::vector<long long>> seen;
  Rat prev = -1;
  for (const auto& w : tw) {
    CHECK(seen.insert(w.m).second);
    CHECK(casimir(w) >= prev);
    prev = casimir(w);
    // Every admissible weight contains its own conjugate in the level-k tensor decomposition.
    CHECK(pieri_contains(w, 2, conjugate(w)).has_value());
  }
  const auto un = admissible_untwisted(1, 3, rat(30));
  for (const auto& w : un) {
    // w = rho + mu keeps every coefficient at least gamma = 1.
    for (long long c : w.m) CHECK(c >= 1);
  }
}

TEST_CASE("multiplicities count distinct sources") {
  const SpectrumPrediction p = spectrum_twisted(2, 4, rat(40));
  for (const auto& e : p.entries) {
    CHECK(e.multiplicity == static_cast<int>(e.sources.size()));
    std::set<std::vector<long long>> uniq;
    for (const auto& s : e.sources) {
      CHECK(casimir(s) == e.value);
      CHECK(uniq.insert(s.m).second);
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(spectrum_twisted(1, 2, rat(10)), std::invalid_argument);
  CHECK_THROWS_AS(palindromic_capacities(3, -1), std::invalid_argument);
  CHECK_THROWS_AS(admissible_untwisted(-1, 2, rat(10)), std::invalid_argument);
  CHECK_THROWS_AS(spectrum_twisted_lowest(1, 3, 0), std::invalid_argument);
}
