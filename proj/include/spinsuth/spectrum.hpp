#ifndef SPINSUTH_SPECTRUM_HPP
#define SPINSUTH_SPECTRUM_HPP

// Admissible-weight enumeration and closed-form spectra.
//
// Twisted model at level k: admissible Lambda = mu + chi with mu
// self-conjugate dominant and chi = sum_i C^{i+1} lambda_i for a palindromic
// capacity vector C (C^{N+1-i} = C^i, sum C = k). The pair (mu, chi) is
// unique for each Lambda, so every admissible weight contributes once; the
// eigenvalue of the reduced Laplacian is casimir(Lambda).
//
// Untwisted model at integer coupling parameter gamma: admissible
// Lambda = gamma*rho + mu over dominant mu; the conventional Hamiltonian
// carries eigenvalues 2<mu + g rho, mu + g rho> with g = gamma + 1.
//
// Enumerations are cut off by Casimir value. The Casimir strictly increases
// when any dominant weight is added (the Gram entries are positive), so a
// depth-first scan over the free parameters with prune-on-exceed is complete
// below the cutoff.

#include "spinsuth/pieri.hpp"
#include "spinsuth/weights.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace spinsuth {

struct SpectrumEntry {
  Rat value;
  int multiplicity = 0;
  std::vector<DominantWeight> sources;
};

struct SpectrumPrediction {
  std::vector<SpectrumEntry> entries;  // strictly increasing in value
};

// All palindromic capacity vectors of total k; empty when N is even and k is
// odd (the palindrome forces an even total).
inline std::vector<PieriCapacities> palindromic_capacities(int N, long long k) {
  if (N < 3) throw std::invalid_argument("twisted model requires N >= 3");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const int half = N / 2;
  const bool odd = (N % 2 == 1);
  std::vector<PieriCapacities> out;
  std::vector<long long> C(static_cast<std::size_t>(N), 0);
  std::function<void(int, long long)> rec = [&](int i, long long used) {
    if (i == half) {
      const long long rest = k - used;
      if (odd) {
        C[static_cast<std::size_t>(half)] = rest;  // middle entry soaks up the remainder
      } else if (rest != 0) {
        return;
      }
      out.push_back(PieriCapacities{C});
      return;
    }
    for (long long c = 0; used + 2 * c <= k; ++c) {
      C[static_cast<std::size_t>(i)] = c;
      C[static_cast<std::size_t>(N - 1 - i)] = c;
      rec(i + 1, used + 2 * c);
    }
    C[static_cast<std::size_t>(i)] = 0;
    C[static_cast<std::size_t>(N - 1 - i)] = 0;
  };
  rec(0, 0);
  return out;
}

inline DominantWeight chi_from_capacities(int N, const PieriCapacities& cap) {
  DominantWeight chi = zero_weight(N);
  for (int i = 1; i < N; ++i)
    chi.m[static_cast<std::size_t>(i - 1)] = cap.C[static_cast<std::size_t>(i)];
  return chi;
}

inline std::vector<DominantWeight> twisted_chi_set(int N, long long k) {
  std::vector<DominantWeight> out;
  for (const auto& cap : palindromic_capacities(N, k)) out.push_back(chi_from_capacities(N, cap));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

// Enumerate base + sum v_i * step_i over nonnegative v with
// casimir(result) <= cutoff; each step is dominant and nonzero, so the
// Casimir grows strictly along every axis and pruning is sound.
inline void enumerate_cone(const DominantWeight& base, const std::vector<DominantWeight>& steps,
                           const Rat& cutoff, std::vector<DominantWeight>& out) {
  std::function<void(std::size_t, const DominantWeight&)> rec =
      [&](std::size_t axis, const DominantWeight& cur) {
        if (casimir(cur) > cutoff) return;
        if (axis == steps.size()) {
          out.push_back(cur);
          return;
        }
        DominantWeight next = cur;
        while (true) {
          rec(axis + 1, next);
          for (std::size_t j = 0; j < next.m.size(); ++j)
            next.m[j] += steps[axis].m[j];
          if (casimir(next) > cutoff) break;
        }
      };
  rec(0, base);
}

// Steps spanning the self-conjugate dominant weights: lambda_i + lambda_{N-i}
// paired, plus the middle fundamental weight when N is even.
inline std::vector<DominantWeight> self_conjugate_steps(int N) {
  std::vector<DominantWeight> steps;
  for (int i = 1; 2 * i <= N - 1; ++i) {
    DominantWeight s = zero_weight(N);
    s.m[static_cast<std::size_t>(i - 1)] += 1;
    s.m[static_cast<std::size_t>(N - 1 - i)] += 1;
    steps.push_back(std::move(s));
  }
  if (N % 2 == 0) {
    DominantWeight s = zero_weight(N);
    s.m[static_cast<std::size_t>(N / 2 - 1)] = 1;
    steps.push_back(std::move(s));
  }
  return steps;
}

inline void sort_by_casimir(std::vector<DominantWeight>& v) {
  std::sort(v.begin(), v.end(), [](const DominantWeight& a, const DominantWeight& b) {
    const Rat ca = casimir(a), cb = casimir(b);
    if (ca != cb) return ca < cb;
    return a.m < b.m;
  });
}

}  // namespace detail

inline std::vector<DominantWeight> admissible_twisted(long long k, int N, const Rat& cutoff) {
  if (N < 3) throw std::invalid_argument("twisted model requires N >= 3");
  std::vector<DominantWeight> out;
  const auto steps = detail::self_conjugate_steps(N);
  for (const auto& cap : palindromic_capacities(N, k))
    detail::enumerate_cone(chi_from_capacities(N, cap), steps, cutoff, out);
  // (mu, chi) -> mu + chi is injective, so no deduplication is needed; sort
  // for determinism and catch a violation loudly rather than silently merge.
  detail::sort_by_casimir(out);
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] == out[i - 1]) throw std::logic_error("admissible weight produced twice");
  return out;
}

inline std::vector<DominantWeight> admissible_untwisted(long long gamma, int N, const Rat& cutoff) {
  if (gamma < 0) throw std::invalid_argument("gamma must be nonnegative");
  if (N < 2) throw std::invalid_argument("untwisted model requires N >= 2");
  DominantWeight base = weyl_vector(N);
  for (auto& c : base.m) c *= gamma;
  std::vector<DominantWeight> steps;
  for (int i = 1; i < N; ++i) {
    DominantWeight s = zero_weight(N);
    s.m[static_cast<std::size_t>(i - 1)] = 1;
    steps.push_back(std::move(s));
  }
  std::vector<DominantWeight> out;
  detail::enumerate_cone(base, steps, cutoff, out);
  for (const auto& w : out)
    if (!pieri_contains(w, gamma * N, w))
      throw std::logic_error("candidate weight fails the tensor membership test");
  detail::sort_by_casimir(out);
  return out;
}

namespace detail {

inline SpectrumPrediction merge_by_value(std::map<Rat, std::vector<DominantWeight>>&& groups) {
  SpectrumPrediction p;
  for (auto& [value, sources] : groups) {
    SpectrumEntry e;
    e.value = value;
    e.multiplicity = static_cast<int>(sources.size());
    e.sources = std::move(sources);
    p.entries.push_back(std::move(e));
  }
  return p;
}

}  // namespace detail

// Spectrum of the reduced Laplacian (negated) in the twisted model.
inline SpectrumPrediction spectrum_twisted(long long k, int N, const Rat& cutoff) {
  std::map<Rat, std::vector<DominantWeight>> groups;
  for (auto& w : admissible_twisted(k, N, cutoff)) groups[casimir(w)].push_back(std::move(w));
  return detail::merge_by_value(std::move(groups));
}

// Spectrum of the conventional Hamiltonian at coupling g = gamma + 1:
// 2 <mu + g rho, mu + g rho> over dominant mu, equivalently
// casimir(gamma rho + mu) + 2 <g rho, g rho> - ... kept in the shifted form
// below so the relation to the reduced Laplacian stays a one-line identity.
inline SpectrumPrediction spectrum_standard(long long gamma, int N, const Rat& cutoff) {
  // The cutoff bounds the reported eigenvalue 2<w + rho, w + rho>, which
  // equals 2 casimir(w) + 2 <rho, rho>; convert it to an exact Casimir bound
  // so the cone enumeration stays complete below the cutoff.
  const DominantWeight rho = weyl_vector(N);
  const Rat casimir_cut = cutoff / rat(2) - weight_pairing(rho, rho);
  std::map<Rat, std::vector<DominantWeight>> groups;
  for (auto& w : admissible_untwisted(gamma, N, casimir_cut)) {
    // w = gamma rho + mu, so mu + g rho = w + rho.
    DominantWeight shifted = w;
    for (auto& c : shifted.m) c += 1;
    groups[rat(2) * weight_pairing(shifted, shifted)].push_back(std::move(w));
  }
  return detail::merge_by_value(std::move(groups));
}

// Lowest `count` entries, growing the Casimir cutoff until the prediction is
// complete that far (completeness below a cutoff is guaranteed, so once more
// than `count` entries fit under it, the lowest `count` are final).
template <class SpectrumFn>
inline SpectrumPrediction lowest_entries(SpectrumFn&& fn, int count) {
  if (count <= 0) throw std::invalid_argument("count must be positive");
  Rat cutoff = 16;
  for (int round = 0; round < 64; ++round) {
    SpectrumPrediction p = fn(cutoff);
    if (static_cast<int>(p.entries.size()) >= count) {
      p.entries.resize(static_cast<std::size_t>(count));
      return p;
    }
    cutoff *= 4;
  }
  throw std::runtime_error("spectrum cutoff growth did not reach the requested count");
}

inline SpectrumPrediction spectrum_twisted_lowest(long long k, int N, int count) {
  // An empty spin sector has no levels at any cutoff; do not grow the cutoff.
  if (twisted_chi_set(N, k).empty()) return {};
  return lowest_entries([&](const Rat& c) { return spectrum_twisted(k, N, c); }, count);
}

inline SpectrumPrediction spectrum_standard_lowest(long long gamma, int N, int count) {
  return lowest_entries([&](const Rat& c) { return spectrum_standard(gamma, N, c); }, count);
}

}  // namespace spinsuth

#endif
