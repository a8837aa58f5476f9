#include "spinsuth/json_io.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace spinsuth;

TEST_CASE("rationals travel as exact strings") {
  for (const Rat& r : {rat(0), rat(-5, 3), rat(4), Rat("100000000000000000000000000001/7")}) {
    CHECK(rat_from_json(rat_to_json(r)) == r);
  }
  CHECK(rat_to_json(rat(8, 3)).get<std::string>() == "8/3");
  CHECK(rat_to_json(rat(4)).get<std::string>() == "4");
  CHECK(rat_to_json(rat(-1, 6)).get<std::string>() == "-1/6");
}

TEST_CASE("linear forms and dominant weights round-trip") {
  const LinearForm f = rat(2) * basis_form(3, 1) - basis_form(3, 3);
  const json j = f;
  CHECK(j.is_array());
  CHECK(j.get<LinearForm>() == f);

  DominantWeight w;
  w.N = 4;
  w.m = {2, 1, 0};
  const json jw = w;
  CHECK(jw == json({2, 1, 0}));
  const auto back = jw.get<DominantWeight>();
  CHECK(back.N == 4);
  CHECK(back.m == w.m);
}

TEST_CASE("folded root data round-trips") {
  for (Family f : {Family::a_even, Family::a_odd, Family::d_series}) {
    const FoldedRootData d = build_folded_roots(f, 2);
    const json j = d;
    const auto back = j.get<FoldedRootData>();
    CHECK(back.family == d.family);
    CHECK(back.n == d.n);
    CHECK(back.positive_roots == d.positive_roots);
    CHECK(back.positive_weights == d.positive_weights);
    CHECK(back.p_plus == d.p_plus);
  }
}

TEST_CASE("spectrum predictions round-trip with exact eigenvalues") {
  const SpectrumPrediction p = spectrum_twisted_lowest(1, 3, 3);
  const json j = p;
  const auto back = j.get<SpectrumPrediction>();
  REQUIRE(back.entries.size() == p.entries.size());
  CHECK(back.entries[0].value == rat(8, 3));
  CHECK(back.entries[0].multiplicity == 1);
  REQUIRE_FALSE(back.entries[0].sources.empty());
  CHECK(back.entries[0].sources[0].N == 3);
  const json again = back;
  CHECK(again == j);
  CHECK(j.at("entries").at(0).at("eigenvalue").get<std::string>() == "8/3");
}

TEST_CASE("hamiltonian specs round-trip") {
  for (const HamiltonianSpec& spec : {assemble_closed_form(3, 1), assemble_closed_form(4, 2),
                                      untwisted_su2_relative(2)}) {
    const json j = spec;
    const auto back = j.get<HamiltonianSpec>();
    const auto diff = specs_difference(back, spec);
    INFO(diff.value_or(""));
    CHECK_FALSE(diff.has_value());
    CHECK(back.basis_norm2 == spec.basis_norm2);
    CHECK(back.interval_upper == spec.interval_upper);
    const json again = back;
    CHECK(again == j);
  }
  const json j31 = assemble_closed_form(3, 1);
  CHECK(j31.at("constant_term").at(0).at(0).get<std::string>() == "11/6");
  CHECK(j31.at("potential_terms").size() == 3);
}

TEST_CASE("group elements round-trip and groups export structure") {
  const TwistedWeylGroup g = build_group(5);
  for (const auto& w : g.elements) {
    const json j = w;
    CHECK(j.get<TwistedWeylElement>() == w);
  }
  const json jg = g;
  CHECK(jg.at("order").get<std::size_t>() == 32);
  CHECK(jg.at("N").get<int>() == 5);
  REQUIRE(jg.at("generators").is_array());
  for (const auto& entry : jg.at("generators")) {
    CHECK(entry.contains("name"));
    CHECK(entry.contains("element"));
  }
}

TEST_CASE("reports serialize completely") {
  const SpectrumReport rep = compare({0.5, 2.0}, spectrum_twisted_lowest(1, 3, 2), 1.0);
  const json j = rep;
  const auto back = j.get<SpectrumReport>();
  CHECK(back.computed == rep.computed);
  CHECK(back.predicted_exact == rep.predicted_exact);
  CHECK(back.pass == rep.pass);
  CHECK(back.mean_offset == rep.mean_offset);

  RichardsonResult r;
  r.values = {1.0};
  r.per_grid = {{1.1}, {1.02}};
  r.error_estimate = {0.02};
  const json jr = r;
  CHECK(jr.at("values").size() == 1);
  CHECK(jr.at("monotone").get<bool>());

  InvarianceCheck c;
  c.pass = false;
  c.trials = 7;
  c.witness = "x";
  const json jc = c;
  CHECK(jc.at("trials").get<int>() == 7);
  CHECK_FALSE(jc.at("pass").get<bool>());
}
