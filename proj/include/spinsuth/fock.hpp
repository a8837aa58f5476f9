#ifndef SPINSUTH_FOCK_HPP
#define SPINSUTH_FOCK_HPP

// Bosonic Fock space carrying the symmetric power V_{k lambda_1} of su(N) in
// N oscillators, and the subspace annihilated by the theta-fixed Cartan
// subalgebra. The latter is spanned by the reflection-symmetric occupation
// monomials: (n_1..n_n, n_n..n_1) for N = 2n, and (n_1..n_n, m, n_n..n_1)
// for N = 2n+1.
//
// States are unnormalized monomials prod (a_i^dag)^{c_i} |0>, with squared
// norm prod c_i!. Operator matrices on this basis have integer entries and
// are symmetric in the weighted sense M[t][s] * w_t = M[s][t] * w_s; the
// orthonormal-basis matrix is recovered by a diag(sqrt(w)) conjugation.

#include "spinsuth/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace spinsuth {

struct FockState {
  std::vector<long long> occ;  // one occupation number per oscillator

  auto operator<=>(const FockState&) const = default;
  long long total() const {
    long long s = 0;
    for (long long c : occ) s += c;
    return s;
  }
};

inline Int state_norm2(const FockState& s) {
  Int w = 1;
  for (long long c : s.occ) w *= factorial(static_cast<unsigned>(c));
  return w;
}

// All occupation vectors with given total, ordered lexicographically
// descending; the ordering is part of the file-format contract.
inline std::vector<FockState> fock_states(int N, long long k) {
  if (N < 1 || k < 0) throw std::invalid_argument("fock_states requires N >= 1, k >= 0");
  std::vector<FockState> out;
  std::vector<long long> occ(static_cast<std::size_t>(N), 0);
  auto rec = [&](auto&& self, int i, long long rest) -> void {
    if (i == N - 1) {
      occ[static_cast<std::size_t>(i)] = rest;
      out.push_back(FockState{occ});
      return;
    }
    for (long long c = rest; c >= 0; --c) {
      occ[static_cast<std::size_t>(i)] = c;
      self(self, i + 1, rest - c);
    }
  };
  rec(rec, 0, k);
  return out;
}

struct FockSpace {
  int N = 0;
  long long k = 0;
  std::vector<FockState> states;
  std::map<std::vector<long long>, std::size_t> index;

  std::size_t dim() const { return states.size(); }
  std::size_t index_of(const FockState& s) const {
    auto it = index.find(s.occ);
    if (it == index.end()) throw std::invalid_argument("state not in this Fock level");
    return it->second;
  }
};

inline FockSpace fock_space(int N, long long k, std::size_t dim_budget = 100000) {
  const Int d = binomial(k + N - 1, N - 1);
  if (d > Int(dim_budget))
    throw std::invalid_argument("Fock level dimension exceeds the combinatorial budget");
  FockSpace sp;
  sp.N = N;
  sp.k = k;
  sp.states = fock_states(N, k);
  for (std::size_t i = 0; i < sp.states.size(); ++i) sp.index[sp.states[i].occ] = i;
  return sp;
}

// Invariant basis records: (n_1..n_n) for even N, (m, n_1..n_n) for odd N.
struct InvariantFockBasis {
  int N = 0;
  long long k = 0;
  int n = 0;
  bool odd = false;
  std::vector<std::vector<long long>> records;  // lexicographically descending

  std::size_t dim() const { return records.size(); }

  FockState full_state(std::size_t idx) const {
    const auto& r = records.at(idx);
    std::vector<long long> occ(static_cast<std::size_t>(N), 0);
    const std::size_t off = odd ? 1 : 0;
    for (int i = 0; i < n; ++i) {
      occ[static_cast<std::size_t>(i)] = r[off + static_cast<std::size_t>(i)];
      occ[static_cast<std::size_t>(N - 1 - i)] = r[off + static_cast<std::size_t>(i)];
    }
    if (odd) occ[static_cast<std::size_t>(n)] = r[0];
    return FockState{std::move(occ)};
  }

  Int norm2(std::size_t idx) const { return state_norm2(full_state(idx)); }

  std::vector<Int> norm2_all() const {
    std::vector<Int> w(dim());
    for (std::size_t i = 0; i < dim(); ++i) w[i] = norm2(i);
    return w;
  }
};

inline InvariantFockBasis invariant_basis(int N, long long k) {
  if (N < 3 || k < 0) throw std::invalid_argument("invariant_basis requires N >= 3, k >= 0");
  InvariantFockBasis b;
  b.N = N;
  b.k = k;
  b.odd = (N % 2 == 1);
  b.n = N / 2;
  std::vector<long long> rec(static_cast<std::size_t>(b.n) + (b.odd ? 1 : 0), 0);
  const std::size_t off = b.odd ? 1 : 0;
  auto emit_pairs = [&](auto&& self, int i, long long rest) -> void {
    // rest counts remaining PAIRS of quanta to distribute over n_i..n_n.
    if (i == b.n - 1) {
      rec[off + static_cast<std::size_t>(i)] = rest;
      b.records.push_back(rec);
      return;
    }
    for (long long c = rest; c >= 0; --c) {
      rec[off + static_cast<std::size_t>(i)] = c;
      self(self, i + 1, rest - c);
    }
  };
  if (b.odd) {
    for (long long m = k; m >= 0; --m) {
      if ((k - m) % 2 != 0) continue;
      rec[0] = m;
      emit_pairs(emit_pairs, 0, (k - m) / 2);
    }
  } else {
    if (k % 2 == 0) emit_pairs(emit_pairs, 0, k / 2);
  }
  return b;
}

inline Int dim_invariant(int N, long long k) {
  if (N < 3 || k < 0) throw std::invalid_argument("dim_invariant requires N >= 3, k >= 0");
  const int n = N / 2;
  if (N % 2 == 0) {
    if (k % 2 != 0) return 0;
    return binomial(k / 2 + n - 1, n - 1);
  }
  Int d = 0;
  for (long long kappa = 0; kappa <= k / 2; ++kappa) d += binomial(kappa + n - 1, n - 1);
  return d;
}

}  // namespace spinsuth

#endif
