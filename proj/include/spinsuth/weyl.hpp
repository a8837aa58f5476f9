#ifndef SPINSUTH_WEYL_HPP
#define SPINSUTH_WEYL_HPP

// Residual symmetry group of the twisted reduction: a hyperoctahedral group
// (permutations and sign flips of the alcove coordinates) extended by
// half-period translations. Elements are stored in factored
// (perm, eps, sigma) normal form and composed by the semidirect-product
// rule, so group arithmetic is exact.
//
//   act(w, q)_i = eps_i * q_{perm_i} + pi * [sigma_i = -1]
//
// For even N = 2n the translation data satisfy prod_i sigma_i = +1; for odd
// N = 2n+1 all sign patterns occur. Orders: 2^n n! * 2^(n-1), resp.
// 2^n n! * 2^n. The composition law holds modulo 2 pi per coordinate (the
// configuration variables are angles).
//
// The group's action on the spin space is deliberately not realized;
// invariance of the model is checked through scalars that do not need it:
// the squared density and the eigenvalue multiset of the potential matrix.

#include "spinsuth/fdsolve.hpp"
#include "spinsuth/hamiltonian.hpp"
#include "spinsuth/rootfold.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace spinsuth {

struct TwistedWeylElement {
  std::vector<int> perm;   // 0-based source indices
  std::vector<int> eps;    // +-1 sign flips
  std::vector<int> sigma;  // +-1 translation data

  auto operator<=>(const TwistedWeylElement&) const = default;
};

inline TwistedWeylElement weyl_identity(int n) {
  TwistedWeylElement w;
  w.perm.resize(static_cast<std::size_t>(n));
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.eps.assign(static_cast<std::size_t>(n), 1);
  w.sigma.assign(static_cast<std::size_t>(n), 1);
  return w;
}

// act(compose(w1, w2), q) = act(w1, act(w2, q)) modulo 2 pi.
inline TwistedWeylElement compose(const TwistedWeylElement& w1, const TwistedWeylElement& w2) {
  const std::size_t n = w1.perm.size();
  TwistedWeylElement r;
  r.perm.resize(n);
  r.eps.resize(n);
  r.sigma.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(w1.perm[i]);
    r.perm[i] = w2.perm[j];
    r.eps[i] = w1.eps[i] * w2.eps[j];
    r.sigma[i] = w1.sigma[i] * w2.sigma[j];
  }
  return r;
}

inline TwistedWeylElement inverse(const TwistedWeylElement& w) {
  const std::size_t n = w.perm.size();
  TwistedWeylElement r;
  r.perm.resize(n);
  r.eps.resize(n);
  r.sigma.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.perm[static_cast<std::size_t>(w.perm[i])] = static_cast<int>(i);
  for (std::size_t j = 0; j < n; ++j) {
    const auto i = static_cast<std::size_t>(r.perm[j]);
    r.eps[j] = w.eps[i];
    r.sigma[j] = w.sigma[i];
  }
  return r;
}

inline std::vector<double> act_on_q(const TwistedWeylElement& w, std::span<const double> q) {
  const std::size_t n = w.perm.size();
  if (q.size() != n) throw std::invalid_argument("coordinate count mismatch");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = w.eps[i] * q[static_cast<std::size_t>(w.perm[i])];
    if (w.sigma[i] == -1) out[i] += std::numbers::pi;
  }
  return out;
}

inline std::vector<double> act_on_q(const TwistedWeylElement& w, const std::vector<double>& q) {
  return act_on_q(w, std::span<const double>(q));
}

// Per-coordinate reduction into [0, 2 pi), for orbit and tiling checks.
inline std::vector<double> reduce_mod_2pi(std::vector<double> q) {
  const double period = 2 * std::numbers::pi;
  for (auto& x : q) {
    x = std::fmod(x, period);
    if (x < 0) x += period;
  }
  return q;
}

struct TwistedWeylGroup {
  int N = 0;
  int n = 0;
  std::vector<TwistedWeylElement> elements;
  std::vector<std::pair<std::string, TwistedWeylElement>> generators;

  std::size_t order() const { return elements.size(); }
};

// Order of the group by the closed formula.
inline long long twisted_weyl_order(int N) {
  if (N < 3) throw std::invalid_argument("twisted symmetry group requires N >= 3");
  const int n = N / 2;
  long long hyperoct = 1;
  for (int i = 1; i <= n; ++i) hyperoct *= 2LL * i;  // 2^n n!
  const long long translations = (N % 2 == 0) ? (1LL << (n - 1)) : (1LL << n);
  return hyperoct * translations;
}

inline TwistedWeylGroup build_group(int N) {
  if (N < 3) throw std::invalid_argument("twisted symmetry group requires N >= 3");
  const int n = N / 2;
  const bool even_N = (N % 2 == 0);
  TwistedWeylGroup g;
  g.N = N;
  g.n = n;

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned em = 0; em < (1u << n); ++em)
      for (unsigned sm = 0; sm < (1u << n); ++sm) {
        if (even_N && (std::popcount(sm) % 2 != 0)) continue;
        TwistedWeylElement w;
        w.perm = perm;
        w.eps.resize(static_cast<std::size_t>(n));
        w.sigma.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
          w.eps[static_cast<std::size_t>(i)] = (em >> i) & 1u ? -1 : 1;
          w.sigma[static_cast<std::size_t>(i)] = (sm >> i) & 1u ? -1 : 1;
        }
        g.elements.push_back(std::move(w));
      }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(g.elements.begin(), g.elements.end());
  if (static_cast<long long>(g.elements.size()) != twisted_weyl_order(N))
    throw std::logic_error("enumerated group order disagrees with the closed formula");

  for (int i = 0; i + 1 < n; ++i) {
    TwistedWeylElement w = weyl_identity(n);
    std::swap(w.perm[static_cast<std::size_t>(i)], w.perm[static_cast<std::size_t>(i) + 1]);
    g.generators.emplace_back("swap(" + std::to_string(i + 1) + "," + std::to_string(i + 2) + ")",
                              std::move(w));
  }
  {
    TwistedWeylElement w = weyl_identity(n);
    w.eps[static_cast<std::size_t>(n - 1)] = -1;
    g.generators.emplace_back("flip(" + std::to_string(n) + ")", std::move(w));
  }
  if (even_N) {
    if (n >= 2) {
      TwistedWeylElement w = weyl_identity(n);
      w.sigma[0] = -1;
      w.sigma[1] = -1;
      g.generators.emplace_back("shift(1,2)", std::move(w));
    }
  } else {
    TwistedWeylElement w = weyl_identity(n);
    w.sigma[0] = -1;
    g.generators.emplace_back("shift(1)", std::move(w));
  }
  return g;
}

struct InvarianceCheck {
  bool pass = true;
  int trials = 0;
  std::string witness;  // empty when pass
};

// Random interior points against random group elements: the squared density
// must be preserved to 1e-10 relative, and the potential matrices at q and
// w(q) must have identical eigenvalue multisets to 1e-8.
inline InvarianceCheck check_density_invariance(int N, long long k, int trials,
                                                std::uint64_t seed = 20260814) {
  if (trials < 1) throw std::invalid_argument("at least one trial required");
  const Family family = twisted_family_for(N);
  const int n = N / 2;
  const FoldedRootData folded = build_folded_roots(family, n);
  const HamiltonianSpec spec = assemble_closed_form(N, k);
  const TwistedWeylGroup group = build_group(N);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, group.order() - 1);

  InvarianceCheck result;
  result.trials = trials;
  auto describe = [&](const AlcovePoint& p, const TwistedWeylElement& w, const std::string& what,
                      double got, double want) {
    std::ostringstream os;
    os << what << ": q = (";
    for (std::size_t i = 0; i < p.q.size(); ++i) os << (i ? "," : "") << p.q[i];
    os << "), perm = (";
    for (std::size_t i = 0; i < w.perm.size(); ++i) os << (i ? "," : "") << w.perm[i] + 1;
    os << "), eps = (";
    for (std::size_t i = 0; i < w.eps.size(); ++i) os << (i ? "," : "") << w.eps[i];
    os << "), sigma = (";
    for (std::size_t i = 0; i < w.sigma.size(); ++i) os << (i ? "," : "") << w.sigma[i];
    os << "): " << got << " vs " << want;
    return os.str();
  };

  for (int t = 0; t < trials; ++t) {
    const AlcovePoint p = random_alcove_point(family, n, rng);
    const TwistedWeylElement& w = group.elements[pick(rng)];
    const std::vector<double> y = act_on_q(w, p.q);

    const double d0 = density_sqrt(folded, p);
    const double d1 = density_sqrt(folded, std::span<const double>(y));
    const double dev = std::abs(d1 * d1 - d0 * d0) / std::abs(d0 * d0);
    if (!(dev <= 1e-10)) {
      result.pass = false;
      result.witness = describe(p, w, "squared density changed", d1 * d1, d0 * d0);
      return result;
    }

    const EvalMatrix v0 = evaluate_potential(spec, p);
    const EvalMatrix v1 = evaluate_potential(spec, std::span<const double>(y));
    const std::vector<double> e0 = symmetric_eigenvalues(v0.dim, v0.a, v0.dim);
    const std::vector<double> e1 = symmetric_eigenvalues(v1.dim, v1.a, v1.dim);
    double scale = 1.0;
    for (double v : e0) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < e0.size(); ++i) {
      if (std::abs(e0[i] - e1[i]) > 1e-8 * scale) {
        result.pass = false;
        result.witness =
            describe(p, w, "potential eigenvalue " + std::to_string(i) + " changed", e1[i], e0[i]);
        return result;
      }
    }
  }
  return result;
}

}  // namespace spinsuth

#endif
