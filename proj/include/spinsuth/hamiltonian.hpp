#ifndef SPINSUTH_HAMILTONIAN_HPP
#define SPINSUTH_HAMILTONIAN_HPP

// Assembly of the reduced Laplacian
//
//   D = c * sum_i d^2/dq_i^2 + constant_term + sum over potential terms
//       coefficient / trig^2(scale * argument(q)),
//
// on the invariant spin space, by two independent routes:
//
//   assemble_generic      works from the defining-representation root and
//                         weight vectors: each inverse-trig coefficient is
//                         -1/4 of the restricted anticommutator
//                         rho'(X_phi) rho'(X_-phi) + rho'(X_-phi) rho'(X_phi),
//                         and the residual Cartan contribution lands in the
//                         constant term;
//   assemble_closed_form  uses the grouped A/B/C/D operator formulas.
//
// Both must agree term by term; the comparison is a primary test.
//
// Matrices are stored in the unnormalized monomial basis (integer entries,
// weighted-symmetric); basis_norm2 carries the weights needed to pass to the
// orthonormal basis, where evaluation produces genuinely symmetric matrices.
//
// Physical spectra belong to -D.

#include "spinsuth/fock.hpp"
#include "spinsuth/linform.hpp"
#include "spinsuth/ratmat.hpp"
#include "spinsuth/rootfold.hpp"
#include "spinsuth/spinops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinsuth {

enum class TrigKind { inv_sin_sq, inv_cos_sq };

inline const char* trig_kind_name(TrigKind k) {
  return k == TrigKind::inv_sin_sq ? "inv_sin_sq" : "inv_cos_sq";
}

struct PotentialTerm {
  RatMat coefficient;  // monomial basis, weighted-symmetric
  TrigKind kind{};
  LinearForm argument;
  Rat scale;  // 1/2 or 1

  std::string describe() const {
    std::ostringstream os;
    os << (kind == TrigKind::inv_sin_sq ? "1/sin^2(" : "1/cos^2(") << rat_to_string(scale)
       << " * [";
    for (std::size_t i = 0; i < argument.c.size(); ++i) {
      if (i) os << ",";
      os << rat_to_string(argument.c[i]);
    }
    os << "])";
    return os.str();
  }
};

// Variant switch for the square-of-the-sum Cartan coefficient at odd N; the
// dual-basis rederivation gives 1/(2n+1), the grouped formula as printed in
// the source derivation reads 1/(2n). The spectral check arbitrates.
enum class CartanVariant { inverse_2n_plus_1, inverse_2n };

inline const char* cartan_variant_name(CartanVariant v) {
  return v == CartanVariant::inverse_2n_plus_1 ? "inv-2n1" : "inv-2n";
}

struct HamiltonianSpec {
  Family family{};
  int N = 0;
  long long k = -1;      // Fock level (twisted); -1 when not applicable
  long long gamma = -1;  // coupling parameter (untwisted); -1 when not applicable
  int coords = 0;        // number of configuration coordinates
  Rat kinetic_coefficient;
  RatMat constant_term;
  std::vector<PotentialTerm> potential_terms;
  std::vector<std::vector<long long>> basis_records;  // invariant-basis labels
  std::vector<Int> basis_norm2;
  double interval_upper = 0.0;  // (0, upper) interval when coords == 1, else 0

  std::size_t dim() const { return constant_term.rows(); }
};

namespace detail {

enum class FormShape { difference, sum, single, doubled };

struct DecodedForm {
  FormShape shape;
  int k = 0;  // 1-based coordinate indices
  int l = 0;
};

inline DecodedForm decode_form(const LinearForm& f) {
  std::vector<std::pair<int, Rat>> nz;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!f.c[i].is_zero()) nz.emplace_back(static_cast<int>(i) + 1, f.c[i]);
  if (nz.size() == 1) {
    if (nz[0].second == Rat(1)) return {FormShape::single, nz[0].first, 0};
    if (nz[0].second == Rat(2)) return {FormShape::doubled, nz[0].first, 0};
  } else if (nz.size() == 2 && nz[0].second == Rat(1)) {
    if (nz[1].second == Rat(1)) return {FormShape::sum, nz[0].first, nz[1].first};
    if (nz[1].second == Rat(-1)) return {FormShape::difference, nz[0].first, nz[1].first};
  }
  throw std::logic_error("unsupported root form");
}

// Defining-representation root/weight vector times sqrt(2)^pow, so all
// entries are integers; pow is 0 or 1.
struct ScaledGenerator {
  RatMat mat;
  int inv_sqrt2_pow = 0;
};

inline RatMat unit_matrix_entry(int N, int r, int c, const Rat& v) {
  RatMat m(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
  m.at(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)) = v;
  return m;
}

inline int parity(int e) { return (e % 2 == 0) ? 1 : -1; }

// plus_space selects the theta-eigenspace: true for the vectors entering the
// inverse-sine terms, false for the inverse-cosine ones.
inline ScaledGenerator root_vector(int N, const DecodedForm& d, bool plus_space) {
  const int n = N / 2;
  const bool odd_N = (N % 2 == 1);
  const int mirror = N + 1;  // slot i pairs with mirror - i
  const int kk = d.k, ll = d.l;
  switch (d.shape) {
    case FormShape::doubled: {
      // Even N: fixed-space root vector; odd N: weight vector. No 1/sqrt(2).
      if (odd_N == plus_space)
        throw std::logic_error("doubled form requested in the wrong eigenspace");
      return {unit_matrix_entry(N, kk, mirror - kk, rat(1)), 0};
    }
    case FormShape::single: {
      if (!odd_N) throw std::logic_error("single form exists for odd N only");
      const int s = parity(kk + n) * (plus_space ? 1 : -1);
      RatMat m = unit_matrix_entry(N, kk, n + 1, rat(1));
      m += unit_matrix_entry(N, n + 1, mirror - kk, rat(s));
      return {std::move(m), 1};
    }
    case FormShape::difference: {
      const int s = parity(kk + ll) * (plus_space ? -1 : 1);
      RatMat m = unit_matrix_entry(N, kk, ll, rat(1));
      m += unit_matrix_entry(N, mirror - ll, mirror - kk, rat(s));
      return {std::move(m), 1};
    }
    case FormShape::sum: {
      // The relative sign differs between the parities of N.
      const int base = odd_N ? -1 : 1;
      const int s = parity(kk + ll) * (plus_space ? base : -base);
      RatMat m = unit_matrix_entry(N, kk, mirror - ll, rat(1));
      m += unit_matrix_entry(N, ll, mirror - kk, rat(s));
      return {std::move(m), 1};
    }
  }
  throw std::logic_error("unreachable form shape");
}

// -1/4 [rho'(X_phi) rho'(X_-phi) + rho'(X_-phi) rho'(X_phi)] restricted; the
// anticommutator equals -(rho'(Y)^2 + rho'(Z)^2) for the orthonormal pair
// built from X_phi, X_-phi, so this is the inverse-trig coefficient.
inline RatMat pair_coefficient(const FockSpace& sp, const InvariantFockBasis& basis,
                               const ScaledGenerator& g) {
  const RatMat P = generator_matrix(sp, g.mat);
  const RatMat M = generator_matrix(sp, g.mat.transpose());
  RatMat anti = P * M + M * P;
  Rat factor = rat(-1, 4);
  if (g.inv_sqrt2_pow == 1) factor /= 2;
  anti *= factor;
  return restrict_to_invariant(sp, basis, anti);
}

// Diagonal theta-odd Cartan generators of the defining representation.
inline std::vector<RatMat> cartan_odd_generators(int N) {
  const int n = N / 2;
  std::vector<RatMat> out;
  if (N % 2 == 0) {
    // j-th vector: sum of the first j mirror pairs minus j times the next pair.
    for (int j = 1; j <= n - 1; ++j) {
      RatMat m(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
      for (int i = 1; i <= j; ++i) {
        m += unit_matrix_entry(N, i, i, rat(1));
        m += unit_matrix_entry(N, N + 1 - i, N + 1 - i, rat(1));
      }
      m += unit_matrix_entry(N, j + 1, j + 1, rat(-j));
      m += unit_matrix_entry(N, N - j, N - j, rat(-j));
      out.push_back(std::move(m));
    }
  } else {
    for (int j = 1; j <= n; ++j) {
      RatMat m = unit_matrix_entry(N, j, j, rat(1));
      m += unit_matrix_entry(N, N + 1 - j, N + 1 - j, rat(1));
      m += unit_matrix_entry(N, n + 1, n + 1, rat(-2));
      out.push_back(std::move(m));
    }
  }
  return out;
}

// Exact residual Cartan contribution to the constant term, from the dual
// bases of the theta-odd Cartan directions.
inline RatMat cartan_constant(const FockSpace& sp, const InvariantFockBasis& basis) {
  const int N = sp.N;
  const int n = N / 2;
  const auto gens = cartan_odd_generators(N);
  RatMat total(sp.dim(), sp.dim());
  if (N % 2 == 0) {
    // Orthonormal directions are gens[j] / sqrt(2 j (j+1)).
    for (int j = 1; j <= n - 1; ++j) {
      RatMat g = generator_matrix(sp, gens[static_cast<std::size_t>(j - 1)]);
      RatMat sq = g * g;
      sq *= rat(-1, 8LL * j * (j + 1));
      total += sq;
    }
  } else {
    // Dual pairing of gens[j] with gens[j]/2 - (sum of gens)/(2n+1).
    RatMat sum_g(sp.dim(), sp.dim());
    for (int j = 1; j <= n; ++j) {
      RatMat g = generator_matrix(sp, gens[static_cast<std::size_t>(j - 1)]);
      RatMat sq = g * g;
      sq *= rat(-1, 8);
      total += sq;
      sum_g += g;
    }
    RatMat sum_sq = sum_g * sum_g;
    sum_sq *= rat(1, 4LL * (2 * n + 1));
    total += sum_sq;
  }
  return restrict_to_invariant(sp, basis, total);
}

inline void require_nonempty(const InvariantFockBasis& basis) {
  if (basis.dim() == 0) {
    std::ostringstream os;
    os << "no reduced system at this (N,k): N=" << basis.N << ", k=" << basis.k;
    throw std::invalid_argument(os.str());
  }
}

inline void finish_twisted_spec(HamiltonianSpec& spec, const FoldedRootData& folded,
                                const InvariantFockBasis& basis) {
  const TraceForm form = trace_form(folded.family, folded.n);
  const Rat rho_sq = rho_theta_norm(folded, form);
  for (std::size_t i = 0; i < spec.constant_term.rows(); ++i)
    spec.constant_term.at(i, i) += rho_sq;
  spec.kinetic_coefficient = rat(1, 2);
  spec.coords = folded.n;
  spec.basis_records = basis.records;
  spec.basis_norm2 = basis.norm2_all();
  if (folded.n == 1)
    spec.interval_upper =
        (folded.family == Family::a_even) ? std::numbers::pi / 2 : std::numbers::pi;
}

}  // namespace detail

inline HamiltonianSpec assemble_generic(int N, long long k) {
  const Family family = twisted_family_for(N);
  const int n = N / 2;
  const InvariantFockBasis basis = invariant_basis(N, k);
  detail::require_nonempty(basis);
  const FockSpace sp = fock_space(N, k);
  const FoldedRootData folded = build_folded_roots(family, n);

  HamiltonianSpec spec;
  spec.family = family;
  spec.N = N;
  spec.k = k;
  spec.constant_term = detail::cartan_constant(sp, basis);
  for (const auto& alpha : folded.positive_roots) {
    PotentialTerm t;
    t.kind = TrigKind::inv_sin_sq;
    t.argument = alpha;
    t.scale = rat(1, 2);
    t.coefficient = detail::pair_coefficient(sp, basis, detail::root_vector(N, detail::decode_form(alpha), true));
    spec.potential_terms.push_back(std::move(t));
  }
  for (const auto& lambda : folded.positive_weights) {
    PotentialTerm t;
    t.kind = TrigKind::inv_cos_sq;
    t.argument = lambda;
    t.scale = rat(1, 2);
    t.coefficient = detail::pair_coefficient(sp, basis, detail::root_vector(N, detail::decode_form(lambda), false));
    spec.potential_terms.push_back(std::move(t));
  }
  detail::finish_twisted_spec(spec, folded, basis);
  return spec;
}

inline HamiltonianSpec assemble_closed_form(
    int N, long long k, CartanVariant variant = CartanVariant::inverse_2n_plus_1) {
  const Family family = twisted_family_for(N);
  const int n = N / 2;
  const bool odd_N = (N % 2 == 1);
  const InvariantFockBasis basis = invariant_basis(N, k);
  detail::require_nonempty(basis);
  const FoldedRootData folded = build_folded_roots(family, n);
  const std::size_t d = basis.dim();
  const std::size_t off = odd_N ? 1 : 0;

  HamiltonianSpec spec;
  spec.family = family;
  spec.N = N;
  spec.k = k;
  spec.constant_term = RatMat(d, d);
  if (odd_N) {
    const Rat sum_sq_coeff =
        (variant == CartanVariant::inverse_2n_plus_1) ? rat(1, 2 * n + 1) : rat(1, 2 * n);
    for (std::size_t s = 0; s < d; ++s) {
      const auto& r = basis.records[s];
      Rat v = 0;
      long long total = 0;
      for (int i = 0; i < n; ++i) {
        const long long diff = r[off + static_cast<std::size_t>(i)] - r[0];
        v -= rat(diff * diff, 2);
        total += diff;
      }
      v += sum_sq_coeff * rat(total * total);
      spec.constant_term.at(s, s) = v;
    }
  } else {
    const long long kappa = k / 2;
    for (std::size_t s = 0; s < d; ++s) {
      const auto& r = basis.records[s];
      Rat v = rat(kappa * kappa, 2 * n);
      for (int i = 0; i < n; ++i) {
        const long long ni = r[static_cast<std::size_t>(i)];
        v -= rat(ni * ni, 2);
      }
      spec.constant_term.at(s, s) = v;
    }
  }

  auto a_op = [&](int i, int j) { return spin_operator(basis, {SpinOpKind::a, i, j}).matrix; };
  auto b_op = [&](int i, int j) { return spin_operator(basis, {SpinOpKind::b, i, j}).matrix; };
  auto c_op = [&](int i) { return spin_operator(basis, {SpinOpKind::c, i, 0}).matrix; };
  auto d_op = [&](int i) { return spin_operator(basis, {SpinOpKind::d, i, 0}).matrix; };

  auto coefficient_for = [&](const detail::DecodedForm& f, bool sin_side) -> RatMat {
    RatMat m(d, d);
    switch (f.shape) {
      case detail::FormShape::difference: {
        m = a_op(f.k, f.l);
        RatMat b = b_op(f.k, f.l);
        if (sin_side)
          m -= b;  // difference roots pair with A - B under the sine
        else
          m += b;
        break;
      }
      case detail::FormShape::sum: {
        m = a_op(f.k, f.l);
        RatMat b = b_op(f.k, f.l);
        // For even N the sum roots swap the sine/cosine pairing of B.
        const bool plus_b = odd_N ? !sin_side : sin_side;
        if (plus_b)
          m += b;
        else
          m -= b;
        break;
      }
      case detail::FormShape::single: {
        m = c_op(f.k);
        RatMat dd = d_op(f.k);
        if (sin_side)
          m += dd;
        else
          m -= dd;
        break;
      }
      case detail::FormShape::doubled: {
        m = a_op(f.k, f.k);
        break;
      }
    }
    m *= rat(-1, 4);
    return m;
  };

  for (const auto& alpha : folded.positive_roots) {
    PotentialTerm t;
    t.kind = TrigKind::inv_sin_sq;
    t.argument = alpha;
    t.scale = rat(1, 2);
    t.coefficient = coefficient_for(detail::decode_form(alpha), true);
    spec.potential_terms.push_back(std::move(t));
  }
  for (const auto& lambda : folded.positive_weights) {
    PotentialTerm t;
    t.kind = TrigKind::inv_cos_sq;
    t.argument = lambda;
    t.scale = rat(1, 2);
    t.coefficient = coefficient_for(detail::decode_form(lambda), false);
    spec.potential_terms.push_back(std::move(t));
  }
  detail::finish_twisted_spec(spec, folded, basis);
  return spec;
}

// Spinless model on the full configuration torus of su(N): coupling
// gamma(gamma+1)/2 on every root, scalar spin space.
inline HamiltonianSpec assemble_untwisted_scalar(int N, long long gamma) {
  if (gamma < 0) throw std::invalid_argument("gamma must be nonnegative");
  const FoldedRootData folded = build_folded_roots(Family::a_untwisted, N);
  const TraceForm form = trace_form(Family::a_untwisted, N);
  HamiltonianSpec spec;
  spec.family = Family::a_untwisted;
  spec.N = N;
  spec.gamma = gamma;
  spec.coords = N;
  spec.kinetic_coefficient = rat(1);
  spec.constant_term = RatMat(1, 1);
  spec.constant_term.at(0, 0) = rho_theta_norm(folded, form);
  spec.basis_norm2 = {Int(1)};
  for (const auto& alpha : folded.positive_roots) {
    PotentialTerm t;
    t.kind = TrigKind::inv_sin_sq;
    t.argument = alpha;
    t.scale = rat(1, 2);
    t.coefficient = RatMat(1, 1);
    t.coefficient.at(0, 0) = rat(-gamma * (gamma + 1), 2);
    spec.potential_terms.push_back(std::move(t));
  }
  return spec;
}

// The N=2 model reduced to the relative coordinate y = (q_1 - q_2)/2 on
// (0, pi): D = (1/2) d^2/dy^2 + 1/2 - (gamma(gamma+1)/2) / sin^2(y).
inline HamiltonianSpec untwisted_su2_relative(long long gamma) {
  if (gamma < 0) throw std::invalid_argument("gamma must be nonnegative");
  HamiltonianSpec spec;
  spec.family = Family::a_untwisted;
  spec.N = 2;
  spec.gamma = gamma;
  spec.coords = 1;
  spec.kinetic_coefficient = rat(1, 2);
  spec.constant_term = RatMat(1, 1);
  spec.constant_term.at(0, 0) = rat(1, 2);
  spec.basis_norm2 = {Int(1)};
  spec.interval_upper = std::numbers::pi;
  PotentialTerm t;
  t.kind = TrigKind::inv_sin_sq;
  t.argument = basis_form(1, 1);
  t.scale = rat(1);
  t.coefficient = RatMat(1, 1);
  t.coefficient.at(0, 0) = rat(-gamma * (gamma + 1), 2);
  spec.potential_terms.push_back(std::move(t));
  return spec;
}

struct EvalMatrix {
  std::size_t dim = 0;
  std::vector<double> a;  // row-major, symmetric

  double at(std::size_t i, std::size_t j) const { return a[i * dim + j]; }
};

// Orthonormal-basis value of constant + potential at a configuration point.
// Rejects points where any trig argument sits within 1e-8 of a zero of its
// trig function (catastrophic cancellation next to a singular wall).
inline EvalMatrix evaluate_potential(const HamiltonianSpec& spec, std::span<const double> q) {
  if (static_cast<int>(q.size()) != spec.coords)
    throw std::invalid_argument("configuration point has the wrong number of coordinates");
  const std::size_t d = spec.dim();
  std::vector<double> total(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) total[i * d + j] = rat_to_double(spec.constant_term.at(i, j));
  const double pi = std::numbers::pi;
  for (const auto& term : spec.potential_terms) {
    const double u = rat_to_double(term.scale) * term.argument.eval(q);
    double trig, wall_dist;
    if (term.kind == TrigKind::inv_sin_sq) {
      trig = std::sin(u);
      wall_dist = std::abs(std::remainder(u, pi));
    } else {
      trig = std::cos(u);
      wall_dist = std::abs(std::remainder(u - pi / 2, pi));
    }
    if (wall_dist < 1e-8)
      throw std::domain_error("configuration point is on a singular wall of term " +
                              term.describe());
    const double f = 1.0 / (trig * trig);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        total[i * d + j] += rat_to_double(term.coefficient.at(i, j)) * f;
  }
  std::vector<double> sw(d);
  for (std::size_t i = 0; i < d; ++i) sw[i] = std::sqrt(spec.basis_norm2[i].convert_to<double>());
  EvalMatrix out;
  out.dim = d;
  out.a.resize(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out.a[i * d + j] = total[i * d + j] * sw[i] / sw[j];
  double scale = 1.0;
  for (double v : out.a) scale = std::max(scale, std::abs(v));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      if (std::abs(out.a[i * d + j] - out.a[j * d + i]) > 1e-12 * scale)
        throw std::logic_error("evaluated potential is not symmetric");
      const double avg = 0.5 * (out.a[i * d + j] + out.a[j * d + i]);
      out.a[i * d + j] = avg;
      out.a[j * d + i] = avg;
    }
  return out;
}

inline EvalMatrix evaluate_potential(const HamiltonianSpec& spec, const AlcovePoint& p) {
  return evaluate_potential(spec, std::span<const double>(p.q));
}

// Exact term-by-term comparison; returns a description of the first
// difference, or nothing when the specs agree.
inline std::optional<std::string> specs_difference(const HamiltonianSpec& a,
                                                   const HamiltonianSpec& b) {
  if (a.family != b.family || a.N != b.N || a.k != b.k) return "model parameters differ";
  if (a.kinetic_coefficient != b.kinetic_coefficient) return "kinetic coefficients differ";
  if (!(a.constant_term == b.constant_term)) return "constant terms differ";
  if (a.potential_terms.size() != b.potential_terms.size()) return "term counts differ";
  auto key_less = [](const PotentialTerm& x, const PotentialTerm& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    if (x.argument < y.argument) return true;
    if (y.argument < x.argument) return false;
    return x.scale < y.scale;
  };
  auto sa = a.potential_terms;
  auto sb = b.potential_terms;
  std::stable_sort(sa.begin(), sa.end(), key_less);
  std::stable_sort(sb.begin(), sb.end(), key_less);
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (sa[i].kind != sb[i].kind || !(sa[i].argument == sb[i].argument) ||
        sa[i].scale != sb[i].scale)
      return "term lists differ at " + sa[i].describe();
    if (!(sa[i].coefficient == sb[i].coefficient))
      return "coefficient mismatch in term " + sa[i].describe();
  }
  return std::nullopt;
}

}  // namespace spinsuth

#endif
