#ifndef SPINSUTH_ROOTFOLD_HPP
#define SPINSUTH_ROOTFOLD_HPP

// Folded root/weight data of su(N) under the involutive diagram automorphism,
// plus the untwisted su(N) root data and the so(2n+2) folding. Supplies the
// twisted Weyl vector, the density function on the alcove, and the
// finite-difference check of the measure-factor identity
//   Laplacian(density_sqrt) = -<rho, rho> * density_sqrt
// in orthonormal Cartan coordinates.

#include "spinsuth/linform.hpp"
#include "spinsuth/ratmat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinsuth {

enum class Family {
  a_even,       // su(2n+1), folded system B_n
  a_odd,        // su(2n),  folded system C_n
  d_series,     // so(2n+2), folded system B_n (root data and density only)
  a_untwisted,  // su(N), trivial automorphism; n holds the coordinate count N
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::a_even: return "a-even";
    case Family::a_odd: return "a-odd";
    case Family::d_series: return "d";
    case Family::a_untwisted: return "untwisted";
  }
  throw std::logic_error("unreachable family");
}

inline Family family_from_string(const std::string& s) {
  if (s == "a-even") return Family::a_even;
  if (s == "a-odd") return Family::a_odd;
  if (s == "d") return Family::d_series;
  if (s == "untwisted") return Family::a_untwisted;
  throw std::invalid_argument("unknown family: " + s + " (expected a-even, a-odd, d, untwisted)");
}

// Family of the twisted su(N) model, N >= 3.
inline Family twisted_family_for(int N) {
  if (N < 3) throw std::invalid_argument("twisted su(N) requires N >= 3");
  return (N % 2 == 0) ? Family::a_odd : Family::a_even;
}

struct AlcovePoint {
  std::vector<double> q;
};

struct FoldedRootData {
  Family family{};
  int n = 0;  // coordinate count; folded rank for the twisted families
  std::vector<LinearForm> positive_roots;    // sin factors of the density
  std::vector<LinearForm> positive_weights;  // cos factors of the density
  std::vector<LinearForm> p_plus;            // rewriting as a plain sine product

  // Size of the underlying group's defining representation.
  int group_size() const {
    switch (family) {
      case Family::a_even: return 2 * n + 1;
      case Family::a_odd: return 2 * n;
      case Family::d_series: return 2 * n + 2;
      case Family::a_untwisted: return n;
    }
    throw std::logic_error("unreachable family");
  }
};

namespace detail {

inline void append_pair_forms(std::vector<LinearForm>& out, int n) {
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) {
      out.push_back(basis_form(n, k) - basis_form(n, l));
      out.push_back(basis_form(n, k) + basis_form(n, l));
    }
}

// Positive roots of B_n: e_k +- e_l (k < l) and e_m.
inline std::vector<LinearForm> b_series_positive(int n) {
  std::vector<LinearForm> r;
  append_pair_forms(r, n);
  for (int m = 1; m <= n; ++m) r.push_back(basis_form(n, m));
  return r;
}

// Positive roots of C_n: e_k +- e_l (k < l) and 2 e_m.
inline std::vector<LinearForm> c_series_positive(int n) {
  std::vector<LinearForm> r;
  append_pair_forms(r, n);
  for (int m = 1; m <= n; ++m) r.push_back(rat(2) * basis_form(n, m));
  return r;
}

}  // namespace detail

inline FoldedRootData build_folded_roots(Family family, int n) {
  FoldedRootData d;
  d.family = family;
  d.n = n;
  switch (family) {
    case Family::a_even: {
      if (n < 1) throw std::invalid_argument("a-even requires n >= 1");
      d.positive_roots = detail::b_series_positive(n);
      detail::append_pair_forms(d.positive_weights, n);
      for (int m = 1; m <= n; ++m) {
        d.positive_weights.push_back(basis_form(n, m));
        d.positive_weights.push_back(rat(2) * basis_form(n, m));
      }
      for (const auto& f : detail::c_series_positive(n)) d.p_plus.push_back(rat(2) * f);
      break;
    }
    case Family::a_odd: {
      if (n < 1) throw std::invalid_argument("a-odd requires n >= 1");
      d.positive_roots = detail::c_series_positive(n);
      detail::append_pair_forms(d.positive_weights, n);
      for (const auto& f : detail::b_series_positive(n)) d.p_plus.push_back(rat(2) * f);
      break;
    }
    case Family::d_series: {
      if (n < 2) throw std::invalid_argument("d requires n >= 2");
      d.positive_roots = detail::b_series_positive(n);
      for (int m = 1; m <= n; ++m) d.positive_weights.push_back(basis_form(n, m));
      d.p_plus = detail::c_series_positive(n);
      break;
    }
    case Family::a_untwisted: {
      if (n < 2) throw std::invalid_argument("untwisted requires N >= 2");
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          d.positive_roots.push_back(basis_form(n, k) - basis_form(n, l));
      d.p_plus = d.positive_roots;
      break;
    }
  }
  return d;
}

// Half sum over roots plus half sum over weights; exactly equals half the sum
// over p_plus (tested as an identity, not assumed).
inline LinearForm rho_theta(const FoldedRootData& d) {
  LinearForm s(static_cast<std::size_t>(d.n));
  for (const auto& f : d.positive_roots) s = s + f;
  for (const auto& f : d.positive_weights) s = s + f;
  return rat(1, 2) * s;
}

// Gram matrix of the coordinate functionals e_m under the trace form of the
// defining matrix realization. The diagonal realizations
//   su(N) twisted: q = diag(q_1,..,q_n, [0], -q_n,..,-q_1)   -> tr(q^2) = 2 sum q_i^2
//   so(2n+2):      q = diag(q_1,..,q_n, 0, 0, -q_n,..,-q_1)  -> tr(q^2) = 2 sum q_i^2
//   su(N) untwisted: q = diag(q_1,..,q_N)                    -> tr(q^2) =   sum q_i^2
// give <e_i, e_j> = (1/2) delta_ij for the folded families and delta_ij for
// the untwisted one. Orthonormal coordinates are sqrt(2) q_i resp. q_i.
struct TraceForm {
  int n = 0;
  RatMat gram;  // diagonal in all supported realizations

  Rat pairing(const LinearForm& a, const LinearForm& b) const {
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
      throw std::invalid_argument("form rank mismatch");
    Rat s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Rat& g = gram.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        if (!g.is_zero()) s += a.c[static_cast<std::size_t>(i)] * g * b.c[static_cast<std::size_t>(j)];
      }
    return s;
  }

  // Coefficient c in Laplacian_orthonormal = c * sum_i d^2/dq_i^2 (diagonal gram).
  Rat laplace_coefficient() const { return gram.at(0, 0); }
};

inline TraceForm trace_form(Family family, int n) {
  TraceForm t;
  t.n = n;
  t.gram = RatMat(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  const Rat g = (family == Family::a_untwisted) ? rat(1) : rat(1, 2);
  for (int i = 0; i < n; ++i)
    t.gram.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = g;
  return t;
}

inline Rat rho_theta_norm(const FoldedRootData& d, const TraceForm& form) {
  const LinearForm r = rho_theta(d);
  return form.pairing(r, r);
}

inline bool alcove_contains(Family family, int n, std::span<const double> q) {
  if (static_cast<int>(q.size()) != n) return false;
  const double pi = std::numbers::pi;
  auto strictly_decreasing_positive = [&](double upper) {
    double prev = upper;
    for (int i = 0; i < n; ++i) {
      if (!(q[static_cast<std::size_t>(i)] < prev)) return false;
      prev = q[static_cast<std::size_t>(i)];
    }
    return prev > 0.0;
  };
  switch (family) {
    case Family::a_even:
      return strictly_decreasing_positive(pi / 2);
    case Family::a_odd:
      return strictly_decreasing_positive(pi) && (n < 2 || q[0] + q[1] < pi);
    case Family::d_series:
      return strictly_decreasing_positive(pi);
    case Family::a_untwisted: {
      for (int i = 0; i + 1 < n; ++i)
        if (!(q[static_cast<std::size_t>(i)] > q[static_cast<std::size_t>(i) + 1])) return false;
      return n < 2 || q[0] - q[static_cast<std::size_t>(n - 1)] < 2 * pi;
    }
  }
  return false;
}

inline bool alcove_contains(Family family, int n, const AlcovePoint& p) {
  return alcove_contains(family, n, std::span<const double>(p.q));
}

inline double density_sqrt(const FoldedRootData& d, std::span<const double> q) {
  double v = 1.0;
  for (const auto& f : d.positive_roots) v *= std::sin(f.eval(q) / 2.0);
  for (const auto& f : d.positive_weights) v *= std::cos(f.eval(q) / 2.0);
  return v;
}

inline double density_sqrt(const FoldedRootData& d, const AlcovePoint& p) {
  return density_sqrt(d, std::span<const double>(p.q));
}

// Plain sine product over p_plus; proportional to density_sqrt with a fitted
// constant (the proportionality constant is not pinned down by the data).
inline double density_sqrt_folded_product(const FoldedRootData& d, std::span<const double> q) {
  double v = 1.0;
  for (const auto& f : d.p_plus) v *= std::sin(f.eval(q) / 2.0);
  return v;
}

// Relative residual of the measure-factor identity at an interior point,
// with the Laplacian taken by second-order central differences in the
// orthonormal coordinates of the trace form.  The stencil cancels roughly
// seven leading digits at h = 1e-4, so the density is evaluated in extended
// precision to keep cancellation noise below the h^2 truncation term.
inline double laplace_identity_residual(const FoldedRootData& d, const TraceForm& form,
                                        const AlcovePoint& p, double h) {
  if (!alcove_contains(d.family, d.n, p)) throw std::domain_error("point outside the alcove");
  // Step h along each ORTHONORMAL coordinate of the trace form; for the
  // diagonal gram <e_i,e_i> = g this is a step h*sqrt(g) in q_i, and
  // g * (central difference in q with that step) / (g h^2) = 1/h^2.
  const double step = h * std::sqrt(rat_to_double(form.laplace_coefficient()));
  std::vector<double> q = p.q;
  for (int i = 0; i < d.n; ++i) {
    for (double s : {-step, step}) {
      q[static_cast<std::size_t>(i)] = p.q[static_cast<std::size_t>(i)] + s;
      if (!alcove_contains(d.family, d.n, q))
        throw std::domain_error("point too close to an alcove wall for step h");
      q[static_cast<std::size_t>(i)] = p.q[static_cast<std::size_t>(i)];
    }
  }
  // Mirrors density_sqrt in extended precision; the form coefficients are
  // small dyadic rationals, so the double conversion is exact.
  const auto density_ext = [&d](const std::vector<long double>& x) {
    long double v = 1.0L;
    const auto half_arg = [&x](const LinearForm& f) {
      long double s = 0.0L;
      for (std::size_t i = 0; i < x.size(); ++i)
        s += static_cast<long double>(rat_to_double(f.c[i])) * x[i];
      return s / 2.0L;
    };
    for (const auto& f : d.positive_roots) v *= std::sin(half_arg(f));
    for (const auto& f : d.positive_weights) v *= std::cos(half_arg(f));
    return v;
  };
  std::vector<long double> xq(p.q.begin(), p.q.end());
  const long double lstep = static_cast<long double>(step);
  const long double h2 = static_cast<long double>(h) * static_cast<long double>(h);
  const long double center = density_ext(xq);
  if (center == 0.0L) throw std::domain_error("density vanishes at the sample point");
  long double lap = 0.0L;
  for (int i = 0; i < d.n; ++i) {
    auto& qi = xq[static_cast<std::size_t>(i)];
    const long double q0 = qi;
    qi = q0 + lstep;
    const long double fp = density_ext(xq);
    qi = q0 - lstep;
    const long double fm = density_ext(xq);
    qi = q0;
    lap += (fp - 2.0L * center + fm) / h2;
  }
  const long double norm = static_cast<long double>(rat_to_double(rho_theta_norm(d, form)));
  return static_cast<double>(std::abs(lap + norm * center) / std::abs(center));
}

// Uniform interior sample keeping `margin` away from every alcove wall.
inline AlcovePoint random_alcove_point(Family family, int n, std::mt19937_64& rng,
                                       double margin = 0.1) {
  const double pi = std::numbers::pi;
  const double upper = (family == Family::a_even) ? pi / 2 : pi;
  std::uniform_real_distribution<double> u(margin, upper - margin);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<double> q(static_cast<std::size_t>(n));
    for (auto& x : q) x = u(rng);
    std::sort(q.begin(), q.end(), std::greater<>());
    bool ok = true;
    for (int i = 0; i + 1 < n; ++i)
      if (q[static_cast<std::size_t>(i)] - q[static_cast<std::size_t>(i) + 1] < margin) ok = false;
    if (family == Family::a_odd && n >= 2 && q[0] + q[1] > pi - margin) ok = false;
    if (ok && alcove_contains(family, n, q)) return AlcovePoint{std::move(q)};
  }
  throw std::runtime_error("failed to sample an interior alcove point");
}

}  // namespace spinsuth

#endif
