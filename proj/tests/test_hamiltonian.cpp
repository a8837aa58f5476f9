#include "spinsuth/fdsolve.hpp"  // symmetric_eigenvalues for semidefiniteness checks
#include "spinsuth/hamiltonian.hpp"
#include "spinsuth/json_io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <fstream>
#include <numbers>

using namespace spinsuth;

TEST_CASE("twisted su(3) level 1 assembles to the scalar well") {
  for (const HamiltonianSpec& spec : {assemble_closed_form(3, 1), assemble_generic(3, 1)}) {
    CHECK(spec.dim() == 1);
    CHECK(spec.coords == 1);
    CHECK(spec.kinetic_coefficient == rat(1, 2));
    CHECK(spec.constant_term.at(0, 0) == rat(11, 6));
    CHECK(spec.interval_upper == Catch::Approx(std::numbers::pi / 2));
    REQUIRE(spec.potential_terms.size() == 3);

    const PotentialTerm& s = spec.potential_terms[0];
    CHECK(s.kind == TrigKind::inv_sin_sq);
    CHECK(s.argument == basis_form(1, 1));
    CHECK(s.scale == rat(1, 2));
    CHECK(s.coefficient.at(0, 0) == rat(-1, 4));

    const PotentialTerm& c1 = spec.potential_terms[1];
    CHECK(c1.kind == TrigKind::inv_cos_sq);
    CHECK(c1.argument == basis_form(1, 1));
    CHECK(c1.scale == rat(1, 2));
    CHECK(c1.coefficient.at(0, 0) == rat(-1, 4));

    const PotentialTerm& c2 = spec.potential_terms[2];
    CHECK(c2.kind == TrigKind::inv_cos_sq);
    CHECK(c2.argument == rat(2) * basis_form(1, 1));
    CHECK(c2.scale == rat(1, 2));
    CHECK(c2.coefficient.at(0, 0) == rat(0));
  }
}

TEST_CASE("vacuum spec is the constant") {
  const HamiltonianSpec spec = assemble_closed_form(3, 0);
  CHECK(spec.dim() == 1);
  CHECK(spec.constant_term.at(0, 0) == rat(2));
  for (const auto& t : spec.potential_terms) CHECK(t.coefficient.is_zero());
  std::vector<double> q{0.7};
  CHECK(evaluate_potential(spec, q).at(0, 0) == Catch::Approx(2.0).margin(1e-14));
}

TEST_CASE("twisted su(4) level 2 anchors") {
  const HamiltonianSpec spec = assemble_closed_form(4, 2);
  CHECK(spec.dim() == 2);
  CHECK(spec.coords == 2);
  // Constant: squared Weyl vector 5, kappa^2/(2n) = 1/4, and -1/2 sum n_i^2 = -1/2 per state.
  CHECK(spec.constant_term.at(0, 0) == rat(19, 4));
  CHECK(spec.constant_term.at(1, 1) == rat(19, 4));
  CHECK(spec.constant_term.at(0, 1) == rat(0));
  CHECK(spec.basis_records == std::vector<std::vector<long long>>{{1, 0}, {0, 1}});

  bool found = false;
  for (const auto& t : spec.potential_terms)
    if (t.kind == TrigKind::inv_sin_sq && t.argument == basis_form(2, 1) - basis_form(2, 2)) {
      found = true;
      CHECK(t.scale == rat(1, 2));
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) CHECK(t.coefficient.at(a, b) == rat(-1, 4));
    }
  CHECK(found);
}

TEST_CASE("assembly routes agree") {
  for (const auto& [N, k] : std::vector<std::pair<int, long long>>{{3, 1}, {3, 3}, {4, 2}, {5, 2}}) {
    const auto diff = specs_difference(assemble_generic(N, k), assemble_closed_form(N, k));
    INFO(diff.value_or(""));
    CHECK_FALSE(diff.has_value());
  }
}

TEST_CASE("spec differences are detected and named") {
  const HamiltonianSpec base = assemble_closed_form(4, 2);
  {
    HamiltonianSpec other = base;
    other.potential_terms[0].scale = rat(1);
    CHECK(specs_difference(base, other).has_value());
  }
  {
    HamiltonianSpec other = base;
    other.kinetic_coefficient = rat(1);
    CHECK(specs_difference(base, other).has_value());
  }
  {
    HamiltonianSpec other = base;
    other.constant_term.at(0, 0) += rat(1, 6);
    CHECK(specs_difference(base, other).has_value());
  }
  CHECK_FALSE(specs_difference(base, base).has_value());
}

TEST_CASE("the two Cartan normalizations differ by 1/6 at su(3) level 1") {
  const HamiltonianSpec amended = assemble_closed_form(3, 1, CartanVariant::inverse_2n_plus_1);
  const HamiltonianSpec printed = assemble_closed_form(3, 1, CartanVariant::inverse_2n);
  CHECK(amended.constant_term.at(0, 0) == rat(11, 6));
  CHECK(printed.constant_term.at(0, 0) == rat(2));
  CHECK(specs_difference(amended, printed).has_value());
}

TEST_CASE("potential evaluation matches the grouped closed form") {
  const HamiltonianSpec spec = assemble_closed_form(3, 1);
  {
    std::vector<double> q{std::numbers::pi / 4};
    CHECK(evaluate_potential(spec, q).at(0, 0) ==
          Catch::Approx(11.0 / 6.0 - 2.0).margin(1e-12));
  }
  // Half-angle identity: the three grouped terms sum to 11/6 - 1/sin^2(q).
  for (double q1 : {0.2, 0.5, 0.9, 1.3}) {
    std::vector<double> q{q1};
    const double got = evaluate_potential(spec, q).at(0, 0);
    CHECK(got == Catch::Approx(11.0 / 6.0 - 1.0 / std::pow(std::sin(q1), 2)).margin(1e-10));
  }
}

TEST_CASE("evaluation rejects wall-adjacent points") {
  const HamiltonianSpec spec = assemble_closed_form(3, 1);
  std::vector<double> q{1e-10};
  CHECK_THROWS_AS(evaluate_potential(spec, q), std::domain_error);
  q[0] = std::numbers::pi / 2 - 1e-10;  // zero of the cos(q) argument
  CHECK_THROWS_AS(evaluate_potential(spec, q), std::domain_error);
}

TEST_CASE("all potential coefficients are negative semidefinite") {
  for (const auto& [N, k] :
       std::vector<std::pair<int, long long>>{{3, 1}, {3, 2}, {4, 2}, {5, 2}, {6, 2}, {7, 1}}) {
    const HamiltonianSpec spec = assemble_closed_form(N, k);
    const std::size_t d = spec.dim();
    std::vector<double> w(d);
    for (std::size_t i = 0; i < d; ++i) w[i] = spec.basis_norm2[i].convert_to<double>();
    for (const auto& t : spec.potential_terms) {
      std::vector<double> sym(d * d);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          sym[a * d + b] = rat_to_double(t.coefficient.at(a, b)) * std::sqrt(w[a] / w[b]);
      for (double ev : symmetric_eigenvalues(d, sym, d)) CHECK(ev <= 1e-10);
    }
  }
}

TEST_CASE("empty spin space is rejected with a diagnostic") {
  CHECK_THROWS_WITH(assemble_generic(4, 1),
                    Catch::Matchers::ContainsSubstring("no reduced system at this (N,k)"));
  CHECK_THROWS_WITH(assemble_closed_form(6, 3),
                    Catch::Matchers::ContainsSubstring("no reduced system at this (N,k)"));
}

TEST_CASE("untwisted assemblers") {
  const HamiltonianSpec rel = untwisted_su2_relative(1);
  CHECK(rel.dim() == 1);
  CHECK(rel.coords == 1);
  CHECK(rel.kinetic_coefficient == rat(1, 2));
  CHECK(rel.constant_term.at(0, 0) == rat(1, 2));
  REQUIRE(rel.potential_terms.size() == 1);
  CHECK(rel.potential_terms[0].coefficient.at(0, 0) == rat(-1));
  CHECK(rel.potential_terms[0].scale == rat(1));
  CHECK(rel.interval_upper == Catch::Approx(std::numbers::pi));
  std::vector<double> q{std::numbers::pi / 2};
  CHECK(evaluate_potential(rel, q).at(0, 0) == Catch::Approx(-0.5).margin(1e-12));

  const HamiltonianSpec full = assemble_untwisted_scalar(3, 2);
  CHECK(full.dim() == 1);
  CHECK(full.coords == 3);
  CHECK(full.constant_term.at(0, 0) == rat(2));  // squared Weyl vector of su(3)
  REQUIRE(full.potential_terms.size() == 3);
  for (const auto& t : full.potential_terms) {
    CHECK(t.kind == TrigKind::inv_sin_sq);
    CHECK(t.coefficient.at(0, 0) == rat(-3));  // -gamma(gamma+1)/2
    CHECK(t.scale == rat(1, 2));
  }
  const HamiltonianSpec free3 = assemble_untwisted_scalar(3, 0);
  for (const auto& t : free3.potential_terms) CHECK(t.coefficient.is_zero());
}

TEST_CASE("golden files pin the assembled specs") {
  for (const auto& [name, spec] :
       std::vector<std::pair<std::string, HamiltonianSpec>>{
           {"hamiltonian_su3_k1.json", assemble_closed_form(3, 1)},
           {"hamiltonian_su4_k2.json", assemble_closed_form(4, 2)}}) {
    std::ifstream in(std::string(SPINSUTH_TEST_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    nlohmann::json golden;
    in >> golden;
    const nlohmann::json current = spec;
    INFO(name);
    CHECK(current == golden);
    // Round-trip: the golden file reconstructs an identical spec.
    const HamiltonianSpec parsed = golden.get<HamiltonianSpec>();
    CHECK_FALSE(specs_difference(parsed, spec).has_value());
  }
}
