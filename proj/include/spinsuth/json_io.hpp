#ifndef SPINSUTH_JSON_IO_HPP
#define SPINSUTH_JSON_IO_HPP

// JSON encodings for the library types. Exact quantities travel as strings
// ("p/q" rationals, decimal big integers); floating-point data only appears
// in finite-difference reports. All encodings round-trip.

#include "spinsuth/fdsolve.hpp"
#include "spinsuth/fock.hpp"
#include "spinsuth/hamiltonian.hpp"
#include "spinsuth/pieri.hpp"
#include "spinsuth/rootfold.hpp"
#include "spinsuth/spectrum.hpp"
#include "spinsuth/spinops.hpp"
#include "spinsuth/weights.hpp"
#include "spinsuth/weyl.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace spinsuth {

using nlohmann::json;

inline json rat_to_json(const Rat& r) { return json(rat_to_string(r)); }
inline Rat rat_from_json(const json& j) { return rat_from_string(j.get<std::string>()); }

inline json ratmat_to_json(const RatMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t jx = 0; jx < m.cols(); ++jx) row.push_back(rat_to_string(m.at(i, jx)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline RatMat ratmat_from_json(const json& j) {
  const std::size_t r = j.size();
  const std::size_t c = r ? j.at(0).size() : 0;
  RatMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t jx = 0; jx < c; ++jx)
      m.at(i, jx) = rat_from_string(j.at(i).at(jx).get<std::string>());
  return m;
}

inline void to_json(json& j, const LinearForm& f) {
  j = json::array();
  for (const auto& c : f.c) j.push_back(rat_to_string(c));
}

inline void from_json(const json& j, LinearForm& f) {
  f.c.clear();
  for (const auto& e : j) f.c.push_back(rat_from_string(e.get<std::string>()));
}

inline void to_json(json& j, const DominantWeight& w) { j = w.m; }

inline void from_json(const json& j, DominantWeight& w) {
  w.m = j.get<std::vector<long long>>();
  w.N = static_cast<int>(w.m.size()) + 1;
}

inline void to_json(json& j, const FoldedRootData& d) {
  j = json{{"family", family_name(d.family)},
           {"n", d.n},
           {"positive_roots", d.positive_roots},
           {"positive_weights", d.positive_weights},
           {"p_plus", d.p_plus}};
}

inline void from_json(const json& j, FoldedRootData& d) {
  d.family = family_from_string(j.at("family").get<std::string>());
  d.n = j.at("n").get<int>();
  j.at("positive_roots").get_to(d.positive_roots);
  j.at("positive_weights").get_to(d.positive_weights);
  j.at("p_plus").get_to(d.p_plus);
}

inline void to_json(json& j, const SpectrumEntry& e) {
  j = json{{"eigenvalue", rat_to_string(e.value)},
           {"multiplicity", e.multiplicity},
           {"weights", e.sources}};
}

inline void from_json(const json& j, SpectrumEntry& e) {
  e.value = rat_from_string(j.at("eigenvalue").get<std::string>());
  e.multiplicity = j.at("multiplicity").get<int>();
  j.at("weights").get_to(e.sources);
}

inline void to_json(json& j, const SpectrumPrediction& p) { j = json{{"entries", p.entries}}; }

inline void from_json(const json& j, SpectrumPrediction& p) { j.at("entries").get_to(p.entries); }

inline void to_json(json& j, const FockState& s) { j = s.occ; }

inline void from_json(const json& j, FockState& s) { s.occ = j.get<std::vector<long long>>(); }

inline void to_json(json& j, const InvariantFockBasis& b) {
  std::vector<std::string> norms;
  for (std::size_t i = 0; i < b.dim(); ++i) norms.push_back(b.norm2(i).str());
  j = json{{"N", b.N}, {"k", b.k}, {"records", b.records}, {"norm2", norms}};
}

inline void to_json(json& j, const SpinOperator& op) {
  std::vector<std::string> norms;
  for (const auto& w : op.norm2) norms.push_back(w.str());
  j = json{{"label", op.label.text()}, {"matrix", ratmat_to_json(op.matrix)}, {"norm2", norms}};
}

inline void to_json(json& j, const PotentialTerm& t) {
  j = json{{"coefficient", ratmat_to_json(t.coefficient)},
           {"kind", trig_kind_name(t.kind)},
           {"argument", t.argument},
           {"scale", rat_to_string(t.scale)}};
}

inline void from_json(const json& j, PotentialTerm& t) {
  t.coefficient = ratmat_from_json(j.at("coefficient"));
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "inv_sin_sq")
    t.kind = TrigKind::inv_sin_sq;
  else if (kind == "inv_cos_sq")
    t.kind = TrigKind::inv_cos_sq;
  else
    throw std::invalid_argument("unknown potential term kind: " + kind);
  j.at("argument").get_to(t.argument);
  t.scale = rat_from_string(j.at("scale").get<std::string>());
}

inline void to_json(json& j, const HamiltonianSpec& s) {
  std::vector<std::string> norms;
  for (const auto& w : s.basis_norm2) norms.push_back(w.str());
  j = json{{"family", family_name(s.family)},
           {"N", s.N},
           {"k", s.k},
           {"gamma", s.gamma},
           {"coords", s.coords},
           {"kinetic_coefficient", rat_to_string(s.kinetic_coefficient)},
           {"constant_term", ratmat_to_json(s.constant_term)},
           {"potential_terms", s.potential_terms},
           {"basis_records", s.basis_records},
           {"basis_norm2", norms},
           {"interval_upper", s.interval_upper}};
}

inline void from_json(const json& j, HamiltonianSpec& s) {
  s.family = family_from_string(j.at("family").get<std::string>());
  s.N = j.at("N").get<int>();
  s.k = j.at("k").get<long long>();
  s.gamma = j.at("gamma").get<long long>();
  s.coords = j.at("coords").get<int>();
  s.kinetic_coefficient = rat_from_string(j.at("kinetic_coefficient").get<std::string>());
  s.constant_term = ratmat_from_json(j.at("constant_term"));
  j.at("potential_terms").get_to(s.potential_terms);
  j.at("basis_records").get_to(s.basis_records);
  s.basis_norm2.clear();
  for (const auto& e : j.at("basis_norm2")) s.basis_norm2.emplace_back(e.get<std::string>());
  s.interval_upper = j.at("interval_upper").get<double>();
}

inline void to_json(json& j, const TwistedWeylElement& w) {
  j = json{{"perm", w.perm}, {"eps", w.eps}, {"sigma", w.sigma}};
}

inline void from_json(const json& j, TwistedWeylElement& w) {
  j.at("perm").get_to(w.perm);
  j.at("eps").get_to(w.eps);
  j.at("sigma").get_to(w.sigma);
}

inline void to_json(json& j, const TwistedWeylGroup& g) {
  json gens = json::array();
  for (const auto& [name, el] : g.generators) gens.push_back(json{{"name", name}, {"element", el}});
  j = json{{"N", g.N}, {"n", g.n}, {"order", g.order()}, {"generators", std::move(gens)}};
}

inline void to_json(json& j, const InvarianceCheck& c) {
  j = json{{"pass", c.pass}, {"trials", c.trials}, {"witness", c.witness}};
}

inline void to_json(json& j, const SpectrumReport& r) {
  j = json{{"computed", r.computed},
           {"predicted", r.predicted},
           {"predicted_exact", r.predicted_exact},
           {"relative_errors", r.relative_errors},
           {"tolerance", r.tolerance},
           {"max_relative_error", r.max_relative_error},
           {"mean_offset", r.mean_offset},
           {"pass", r.pass},
           {"note", r.note}};
}

inline void from_json(const json& j, SpectrumReport& r) {
  j.at("computed").get_to(r.computed);
  j.at("predicted").get_to(r.predicted);
  j.at("predicted_exact").get_to(r.predicted_exact);
  j.at("relative_errors").get_to(r.relative_errors);
  r.tolerance = j.at("tolerance").get<double>();
  r.max_relative_error = j.at("max_relative_error").get<double>();
  r.mean_offset = j.at("mean_offset").get<double>();
  r.pass = j.at("pass").get<bool>();
  r.note = j.at("note").get<std::string>();
}

inline void to_json(json& j, const RichardsonResult& r) {
  j = json{{"values", r.values},
           {"per_grid", r.per_grid},
           {"error_estimate", r.error_estimate},
           {"monotone", r.monotone}};
}

}  // namespace spinsuth

#endif
