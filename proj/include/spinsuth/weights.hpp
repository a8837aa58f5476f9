#ifndef SPINSUTH_WEIGHTS_HPP
#define SPINSUTH_WEIGHTS_HPP

// Dominant su(N) weights in the fundamental-weight basis, the inner product
// induced by the trace form of the defining representation, the quadratic
// Casimir eigenvalue, and conjugation (coefficient reversal).

#include "spinsuth/rational.hpp"

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <vector>

namespace spinsuth {

struct DominantWeight {
  int N = 0;                 // rank + 1
  std::vector<long long> m;  // N-1 nonnegative coefficients on the fundamental weights

  auto operator<=>(const DominantWeight&) const = default;
};

inline void check_weight(const DominantWeight& w) {
  if (w.N < 2) throw std::invalid_argument("weight requires N >= 2");
  if (static_cast<int>(w.m.size()) != w.N - 1)
    throw std::invalid_argument("weight needs N-1 coefficients");
  for (long long c : w.m)
    if (c < 0) throw std::invalid_argument("dominant weight coefficients must be nonnegative");
}

inline DominantWeight zero_weight(int N) {
  return DominantWeight{N, std::vector<long long>(static_cast<std::size_t>(N - 1), 0)};
}

// <lambda_i, lambda_j> = min(i,j) - i*j/N for the fundamental weights, in the
// normalization where the roots have squared length 2.
inline Rat fundamental_gram(int N, int i, int j) {
  if (i < 1 || j < 1 || i >= N || j >= N) throw std::invalid_argument("fundamental index out of range");
  return rat(std::min(i, j)) - rat(static_cast<long long>(i) * j, N);
}

inline Rat weight_pairing(const DominantWeight& a, const DominantWeight& b) {
  if (a.N != b.N) throw std::invalid_argument("weights of different su(N)");
  Rat s = 0;
  for (int i = 1; i < a.N; ++i) {
    const long long ai = a.m[static_cast<std::size_t>(i - 1)];
    if (ai == 0) continue;
    for (int j = 1; j < b.N; ++j) {
      const long long bj = b.m[static_cast<std::size_t>(j - 1)];
      if (bj == 0) continue;
      s += rat(ai) * fundamental_gram(a.N, i, j) * rat(bj);
    }
  }
  return s;
}

// Sum of the fundamental weights.
inline DominantWeight weyl_vector(int N) {
  return DominantWeight{N, std::vector<long long>(static_cast<std::size_t>(N - 1), 1)};
}

// Eigenvalue <Lambda + 2 rho, Lambda> of the quadratic Casimir.
inline Rat casimir(const DominantWeight& w) {
  check_weight(w);
  DominantWeight shifted = w;
  for (auto& c : shifted.m) c += 2;
  return weight_pairing(shifted, w);
}

// Highest weight of the conjugate representation: coefficient reversal.
inline DominantWeight conjugate(const DominantWeight& w) {
  DominantWeight r = w;
  std::reverse(r.m.begin(), r.m.end());
  return r;
}

inline bool is_self_conjugate(const DominantWeight& w) { return conjugate(w) == w; }

}  // namespace spinsuth

#endif
