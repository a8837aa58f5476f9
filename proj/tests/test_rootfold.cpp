#include "spinsuth/rootfold.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace spinsuth;

TEST_CASE("family mapping and names") {
  CHECK(twisted_family_for(3) == Family::a_even);
  CHECK(twisted_family_for(5) == Family::a_even);
  CHECK(twisted_family_for(4) == Family::a_odd);
  CHECK(twisted_family_for(6) == Family::a_odd);
  CHECK_THROWS_AS(twisted_family_for(2), std::invalid_argument);
  CHECK(family_from_string("a-even") == Family::a_even);
  CHECK(family_from_string(family_name(Family::d_series)) == Family::d_series);
  CHECK_THROWS_AS(family_from_string("bogus"), std::invalid_argument);
}

TEST_CASE("folded sets at rank 1") {
  const FoldedRootData d = build_folded_roots(Family::a_even, 1);
  REQUIRE(d.positive_roots.size() == 1);
  CHECK(d.positive_roots[0] == basis_form(1, 1));
  REQUIRE(d.positive_weights.size() == 2);
  CHECK(d.positive_weights[0] == basis_form(1, 1));
  CHECK(d.positive_weights[1] == rat(2) * basis_form(1, 1));
  REQUIRE(d.p_plus.size() == 1);
  CHECK(d.p_plus[0] == rat(4) * basis_form(1, 1));
  CHECK(rho_theta(d) == rat(2) * basis_form(1, 1));
  CHECK(d.group_size() == 3);

  const FoldedRootData c = build_folded_roots(Family::a_odd, 1);
  REQUIRE(c.positive_roots.size() == 1);
  CHECK(c.positive_roots[0] == rat(2) * basis_form(1, 1));
  CHECK(c.positive_weights.empty());
  CHECK(c.group_size() == 2);
}

TEST_CASE("folded set sizes at higher rank") {
  for (int n = 2; n <= 4; ++n) {
    const FoldedRootData be = build_folded_roots(Family::a_even, n);
    CHECK(be.positive_roots.size() == static_cast<std::size_t>(n * n));
    CHECK(be.positive_weights.size() == static_cast<std::size_t>(n * n + n));
    CHECK(be.p_plus.size() == static_cast<std::size_t>(n * n));

    const FoldedRootData bo = build_folded_roots(Family::a_odd, n);
    CHECK(bo.positive_roots.size() == static_cast<std::size_t>(n * n));
    CHECK(bo.positive_weights.size() == static_cast<std::size_t>(n * n - n));
    CHECK(bo.p_plus.size() == static_cast<std::size_t>(n * n));

    const FoldedRootData ds = build_folded_roots(Family::d_series, n);
    CHECK(ds.positive_roots.size() == static_cast<std::size_t>(n * n));
    CHECK(ds.positive_weights.size() == static_cast<std::size_t>(n));

    const FoldedRootData ut = build_folded_roots(Family::a_untwisted, n);
    CHECK(ut.positive_roots.size() == static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(ut.positive_weights.empty());
    CHECK(ut.p_plus == ut.positive_roots);
  }
}

TEST_CASE("half sum over p_plus reproduces the twisted Weyl vector") {
  for (Family family : {Family::a_even, Family::a_odd, Family::d_series})
    for (int n = (family == Family::d_series ? 2 : 1); n <= 5; ++n) {
      const FoldedRootData d = build_folded_roots(family, n);
      LinearForm half(static_cast<std::size_t>(n));
      for (const auto& f : d.p_plus) half = half + f;
      CHECK(rho_theta(d) == rat(1, 2) * half);
    }
}

TEST_CASE("squared norm formulas") {
  for (int n = 1; n <= 6; ++n) {
    const Rat odd = rho_theta_norm(build_folded_roots(Family::a_odd, n),
                                   trace_form(Family::a_odd, n));
    CHECK(odd == rat(1LL * n * (2 * n - 1) * (2 * n + 1), 6));
    const Rat even = rho_theta_norm(build_folded_roots(Family::a_even, n),
                                    trace_form(Family::a_even, n));
    CHECK(even == rat(2LL * n * (n + 1) * (2 * n + 1), 6));
  }
  // Untwisted su(N): components (N+1-2i)/2 under the unit gram.
  for (int N = 2; N <= 5; ++N) {
    const Rat got = rho_theta_norm(build_folded_roots(Family::a_untwisted, N),
                                   trace_form(Family::a_untwisted, N));
    CHECK(got == rat(1LL * N * N * N - N, 12));
  }
}

TEST_CASE("alcove membership") {
  const double pi = std::numbers::pi;
  CHECK(alcove_contains(Family::a_even, 2, std::vector<double>{1.2, 0.4}));
  CHECK_FALSE(alcove_contains(Family::a_even, 2, std::vector<double>{0.4, 1.2}));  // not ordered
  CHECK_FALSE(alcove_contains(Family::a_even, 2, std::vector<double>{1.6, 0.4}));  // above pi/2
  CHECK(alcove_contains(Family::a_odd, 2, std::vector<double>{1.9, 0.8}));
  CHECK_FALSE(alcove_contains(Family::a_odd, 2, std::vector<double>{2.5, 0.8}));  // sum above pi
  CHECK(alcove_contains(Family::d_series, 2, std::vector<double>{2.5, 0.8}));
  CHECK(alcove_contains(Family::a_untwisted, 3, std::vector<double>{2.0, 0.5, -1.0}));
  CHECK_FALSE(alcove_contains(Family::a_untwisted, 3, std::vector<double>{4.0, 0.5, -2.5}));
  CHECK_FALSE(alcove_contains(Family::a_even, 2, std::vector<double>{1.2}));  // rank mismatch
  (void)pi;
}

TEST_CASE("random alcove points stay interior") {
  std::mt19937_64 rng(7);
  for (Family family : {Family::a_even, Family::a_odd, Family::d_series, Family::a_untwisted})
    for (int n = 2; n <= 4; ++n)
      for (int t = 0; t < 50; ++t) {
        const AlcovePoint p = random_alcove_point(family, n, rng);
        CHECK(alcove_contains(family, n, p));
      }
}

TEST_CASE("density factorization is proportional across the alcove") {
  std::mt19937_64 rng(11);
  for (Family family : {Family::a_even, Family::a_odd, Family::d_series, Family::a_untwisted}) {
    const int n = 3;
    const FoldedRootData d = build_folded_roots(family, n);
    const AlcovePoint p0 = random_alcove_point(family, n, rng);
    const double c0 = density_sqrt(d, p0) /
                      density_sqrt_folded_product(d, std::span<const double>(p0.q));
    for (int t = 0; t < 50; ++t) {
      const AlcovePoint p = random_alcove_point(family, n, rng);
      const double ds = density_sqrt(d, p);
      const double dp = density_sqrt_folded_product(d, std::span<const double>(p.q));
      CHECK(std::abs(ds - c0 * dp) <= 1e-12 * std::abs(ds) + 1e-300);
    }
  }
}

TEST_CASE("measure-factor identity holds at random points") {
  std::mt19937_64 rng(13);
  struct Case {
    Family family;
    int n;
  };
  for (const Case c : {Case{Family::a_even, 1}, Case{Family::a_even, 2}, Case{Family::a_odd, 2},
                       Case{Family::d_series, 2}, Case{Family::d_series, 3},
                       Case{Family::a_untwisted, 3}}) {
    const FoldedRootData d = build_folded_roots(c.family, c.n);
    const TraceForm form = trace_form(c.family, c.n);
    for (int t = 0; t < 20; ++t) {
      const AlcovePoint p = random_alcove_point(c.family, c.n, rng);
      CHECK(laplace_identity_residual(d, form, p, 1e-3) <= 1e-5);
    }
  }
}

TEST_CASE("identity residual shrinks at second order in h") {
  std::mt19937_64 rng(17);
  const FoldedRootData d = build_folded_roots(Family::a_odd, 2);
  const TraceForm form = trace_form(Family::a_odd, 2);
  const AlcovePoint p = random_alcove_point(Family::a_odd, 2, rng, 0.3);
  const double r1 = laplace_identity_residual(d, form, p, 2e-2);
  const double r2 = laplace_identity_residual(d, form, p, 1e-2);
  CHECK(r1 / r2 == Catch::Approx(4.0).epsilon(0.05));
}

TEST_CASE("identity residual rejects wall-adjacent points") {
  const FoldedRootData d = build_folded_roots(Family::a_even, 1);
  const TraceForm form = trace_form(Family::a_even, 1);
  AlcovePoint p;
  p.q = {1e-4};
  CHECK_THROWS_AS(laplace_identity_residual(d, form, p, 1e-3), std::domain_error);
  p.q = {-0.5};
  CHECK_THROWS_AS(laplace_identity_residual(d, form, p, 1e-3), std::domain_error);
}

TEST_CASE("rank preconditions") {
  CHECK_THROWS_AS(build_folded_roots(Family::a_even, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_folded_roots(Family::d_series, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_folded_roots(Family::a_untwisted, 1), std::invalid_argument);
  CHECK_NOTHROW(build_folded_roots(Family::a_odd, 1));
}
