#ifndef SPINSUTH_PIERI_HPP
#define SPINSUTH_PIERI_HPP

// Decomposition of V(M) tensor S^k(C^N) for su(N). Two independent routes:
//
//   pieri_decompose  enumerates capacity vectors C with sum(C) = k,
//                    C^{i+1} <= M^i, and emits m^i = M^i + C^i - C^{i+1};
//   pieri_oracle     converts M to a partition and enumerates horizontal
//                    strips of size k, the textbook Pieri rule.
//
// The capacity C is recoverable from (M, m) by telescoping, so the
// decomposition is multiplicity free; pieri_contains solves for C directly.

#include "spinsuth/weights.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace spinsuth {

struct PieriCapacities {
  std::vector<long long> C;  // N entries, nonnegative, summing to k

  auto operator<=>(const PieriCapacities&) const = default;
};

struct PieriTerm {
  DominantWeight weight;
  PieriCapacities capacities;
};

// Solve m^i = M^i + C^i - C^{i+1} for C given sum(C) = k; the unique
// candidate either satisfies all bounds or the weight does not occur.
inline std::optional<PieriCapacities> pieri_contains(const DominantWeight& M, long long k,
                                                     const DominantWeight& m) {
  check_weight(M);
  check_weight(m);
  if (M.N != m.N) throw std::invalid_argument("weights of different su(N)");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const int N = M.N;
  // C^{i+1} = C^1 + sum_{j<=i} (M^j - m^j); sum over all C pins N*C^1.
  long long weighted = 0;
  for (int i = 1; i < N; ++i)
    weighted += static_cast<long long>(N - i) *
                (M.m[static_cast<std::size_t>(i - 1)] - m.m[static_cast<std::size_t>(i - 1)]);
  const long long numer = k - weighted;
  if (numer % N != 0) return std::nullopt;
  const long long c1 = numer / N;
  if (c1 < 0 || c1 > k) return std::nullopt;
  PieriCapacities cap;
  cap.C.assign(static_cast<std::size_t>(N), 0);
  cap.C[0] = c1;
  long long run = c1;
  for (int i = 1; i < N; ++i) {
    run += M.m[static_cast<std::size_t>(i - 1)] - m.m[static_cast<std::size_t>(i - 1)];
    if (run < 0 || run > M.m[static_cast<std::size_t>(i - 1)]) return std::nullopt;
    cap.C[static_cast<std::size_t>(i)] = run;
  }
  return cap;
}

inline std::vector<PieriTerm> pieri_decompose(const DominantWeight& M, long long k) {
  check_weight(M);
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const int N = M.N;
  std::vector<PieriTerm> out;
  std::vector<long long> C(static_cast<std::size_t>(N), 0);
  // Choose C^2..C^N within their caps; the remainder is C^1.
  std::function<void(int, long long)> rec = [&](int i, long long used) {
    if (i == N) {
      C[0] = k - used;
      if (C[0] < 0) return;
      DominantWeight m = zero_weight(N);
      for (int j = 1; j < N; ++j)
        m.m[static_cast<std::size_t>(j - 1)] = M.m[static_cast<std::size_t>(j - 1)] +
                                               C[static_cast<std::size_t>(j - 1)] -
                                               C[static_cast<std::size_t>(j)];
      out.push_back(PieriTerm{std::move(m), PieriCapacities{C}});
      return;
    }
    const long long cap = M.m[static_cast<std::size_t>(i - 1)];
    for (long long c = 0; c <= cap && used + c <= k; ++c) {
      C[static_cast<std::size_t>(i)] = c;
      rec(i + 1, used + c);
    }
    C[static_cast<std::size_t>(i)] = 0;
  };
  rec(1, 0);
  return out;
}

// Textbook route: represent M as a partition l_i = sum_{j>=i} M^j and grow it
// by a horizontal strip of size k (no two added boxes in one column), then
// read the result back off as consecutive row differences. Kept deliberately
// naive; the budget keeps the enumeration honest and fast.
inline std::vector<DominantWeight> pieri_oracle(const DominantWeight& M, long long k) {
  check_weight(M);
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const int N = M.N;
  if (N > 8) throw std::invalid_argument("pieri_oracle budget: N <= 8");
  if (k > 10) throw std::invalid_argument("pieri_oracle budget: k <= 10");
  for (long long c : M.m)
    if (c > 8) throw std::invalid_argument("pieri_oracle budget: coefficients <= 8");
  std::vector<long long> l(static_cast<std::size_t>(N), 0);
  for (int i = N - 1; i >= 1; --i)
    l[static_cast<std::size_t>(i - 1)] =
        l[static_cast<std::size_t>(i)] + M.m[static_cast<std::size_t>(i - 1)];
  std::vector<DominantWeight> out;
  std::vector<long long> nu(static_cast<std::size_t>(N), 0);
  // Row i of the grown shape lies in [l_i, l_{i-1}] (row 1 in [l_1, l_1+k]).
  std::function<void(int, long long)> rec = [&](int i, long long added) {
    if (i == N) {
      if (added != k) return;
      DominantWeight m = zero_weight(N);
      for (int j = 0; j + 1 < N; ++j)
        m.m[static_cast<std::size_t>(j)] =
            nu[static_cast<std::size_t>(j)] - nu[static_cast<std::size_t>(j + 1)];
      out.push_back(std::move(m));
      return;
    }
    const long long lo = l[static_cast<std::size_t>(i)];
    const long long hi = (i == 0) ? l[0] + k : l[static_cast<std::size_t>(i - 1)];
    for (long long v = lo; v <= hi && added + (v - lo) <= k; ++v) {
      nu[static_cast<std::size_t>(i)] = v;
      rec(i + 1, added + (v - lo));
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace spinsuth

#endif
