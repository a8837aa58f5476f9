#ifndef SPINSUTH_SPINOPS_HPP
#define SPINSUTH_SPINOPS_HPP

// Matrices of the interaction operators on the invariant Fock subspace, and
// of arbitrary gl(N) elements on a full Fock level. With 1 <= i <= j <= n,
// m the middle occupation (odd N only) and bars denoting number operators:
//
//   A_ij = 2 n_i n_j + n_i + n_j                                  (diagonal)
//   B_ij = (-1)^{i+j} (a_i+ a_{N+1-i}+ a_j a_{N+1-j} + reverse),  i < j
//   C_i  = 2 n_i m + m + n_i                                      (diagonal)
//   D_i  = (-1)^{i+n} (a_i+ a_{N+1-i}+ c c + a_i a_{N+1-i} c+ c+)
//
// All words here move quanta between mirror-paired slots, so they preserve
// the invariant subspace and can be evaluated directly on its records.
// Matrices are in the unnormalized monomial basis: annihilation of a slot
// holding c quanta contributes a factor c, creation a factor 1.

#include "spinsuth/fock.hpp"
#include "spinsuth/ratmat.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinsuth {

enum class SpinOpKind { a, b, c, d };

struct SpinOpLabel {
  SpinOpKind kind;
  int i = 0;
  int j = 0;  // unused for kinds c, d

  std::string text() const {
    switch (kind) {
      case SpinOpKind::a: return "A[" + std::to_string(i) + "," + std::to_string(j) + "]";
      case SpinOpKind::b: return "B[" + std::to_string(i) + "," + std::to_string(j) + "]";
      case SpinOpKind::c: return "C[" + std::to_string(i) + "]";
      case SpinOpKind::d: return "D[" + std::to_string(i) + "]";
    }
    throw std::logic_error("unreachable label kind");
  }
};

struct SpinOperator {
  SpinOpLabel label{};
  RatMat matrix;            // monomial basis, integer entries
  std::vector<Int> norm2;   // squared norms of the basis states

  // M[t][s] * w_t == M[s][t] * w_s is the self-adjointness condition in the
  // weighted inner product of the monomial basis.
  bool weighted_symmetric() const {
    for (std::size_t t = 0; t < matrix.rows(); ++t)
      for (std::size_t s = 0; s < t; ++s)
        if (matrix.at(t, s) * Rat(norm2[t]) != matrix.at(s, t) * Rat(norm2[s])) return false;
    return true;
  }

  // Orthonormal-basis matrix; entries can be irrational, hence double.
  std::vector<double> symmetrized() const {
    const std::size_t d = matrix.rows();
    std::vector<double> w(d);
    for (std::size_t i = 0; i < d; ++i) w[i] = norm2[i].convert_to<double>();
    std::vector<double> out(d * d);
    for (std::size_t t = 0; t < d; ++t)
      for (std::size_t s = 0; s < d; ++s)
        out[t * d + s] = rat_to_double(matrix.at(t, s)) * std::sqrt(w[t] / w[s]);
    return out;
  }
};

namespace detail {

inline int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

struct InvariantIndex {
  const InvariantFockBasis& basis;
  std::map<std::vector<long long>, std::size_t> pos;

  explicit InvariantIndex(const InvariantFockBasis& b) : basis(b) {
    for (std::size_t i = 0; i < b.records.size(); ++i) pos[b.records[i]] = i;
  }
  std::size_t at(const std::vector<long long>& rec) const {
    auto it = pos.find(rec);
    if (it == pos.end()) throw std::logic_error("operator left the invariant subspace");
    return it->second;
  }
};

}  // namespace detail

inline SpinOperator spin_operator(const InvariantFockBasis& basis, const SpinOpLabel& label) {
  const int n = basis.n;
  const bool odd = basis.odd;
  const std::size_t off = odd ? 1 : 0;
  auto check_range = [&](int idx) {
    if (idx < 1 || idx > n) throw std::invalid_argument("spin operator index out of range");
  };
  SpinOperator op;
  op.label = label;
  op.norm2 = basis.norm2_all();
  op.matrix = RatMat(basis.dim(), basis.dim());
  const detail::InvariantIndex lookup(basis);

  switch (label.kind) {
    case SpinOpKind::a: {
      check_range(label.i);
      check_range(label.j);
      if (label.i > label.j) throw std::invalid_argument("A requires i <= j");
      for (std::size_t s = 0; s < basis.dim(); ++s) {
        const auto& r = basis.records[s];
        const long long ni = r[off + static_cast<std::size_t>(label.i - 1)];
        const long long nj = r[off + static_cast<std::size_t>(label.j - 1)];
        op.matrix.at(s, s) = rat(2 * ni * nj + ni + nj);
      }
      break;
    }
    case SpinOpKind::b: {
      check_range(label.i);
      check_range(label.j);
      if (label.i >= label.j) throw std::invalid_argument("B requires i < j");
      const int sign = detail::parity_sign(label.i + label.j);
      for (std::size_t s = 0; s < basis.dim(); ++s) {
        const auto& r = basis.records[s];
        const std::size_t pi = off + static_cast<std::size_t>(label.i - 1);
        const std::size_t pj = off + static_cast<std::size_t>(label.j - 1);
        // a_i+ a_{N+1-i}+ a_j a_{N+1-j}: pair j -> pair i, factor n_j^2.
        if (r[pj] >= 1) {
          auto t = r;
          t[pi] += 1;
          t[pj] -= 1;
          op.matrix.at(lookup.at(t), s) += rat(sign * r[pj] * r[pj]);
        }
        // reverse word: pair i -> pair j, factor n_i^2.
        if (r[pi] >= 1) {
          auto t = r;
          t[pj] += 1;
          t[pi] -= 1;
          op.matrix.at(lookup.at(t), s) += rat(sign * r[pi] * r[pi]);
        }
      }
      break;
    }
    case SpinOpKind::c: {
      if (!odd) throw std::invalid_argument("C is defined for odd N only");
      check_range(label.i);
      for (std::size_t s = 0; s < basis.dim(); ++s) {
        const auto& r = basis.records[s];
        const long long m = r[0];
        const long long ni = r[off + static_cast<std::size_t>(label.i - 1)];
        op.matrix.at(s, s) = rat(2 * ni * m + m + ni);
      }
      break;
    }
    case SpinOpKind::d: {
      if (!odd) throw std::invalid_argument("D is defined for odd N only");
      check_range(label.i);
      const int sign = detail::parity_sign(label.i + n);
      for (std::size_t s = 0; s < basis.dim(); ++s) {
        const auto& r = basis.records[s];
        const std::size_t pi = off + static_cast<std::size_t>(label.i - 1);
        // a_i+ a_{N+1-i}+ c c: two middle quanta become a mirror pair.
        if (r[0] >= 2) {
          auto t = r;
          t[0] -= 2;
          t[pi] += 1;
          op.matrix.at(lookup.at(t), s) += rat(sign * r[0] * (r[0] - 1));
        }
        // a_i a_{N+1-i} c+ c+: a mirror pair becomes two middle quanta.
        if (r[pi] >= 1) {
          auto t = r;
          t[0] += 2;
          t[pi] -= 1;
          op.matrix.at(lookup.at(t), s) += rat(sign * r[pi] * r[pi]);
        }
      }
      break;
    }
  }
  return op;
}

// rho'(X) = sum_ij X_ij a_i^dag a_j on a full Fock level.
inline RatMat generator_matrix(const FockSpace& sp, const RatMat& X) {
  const int N = sp.N;
  if (X.rows() != static_cast<std::size_t>(N) || X.cols() != static_cast<std::size_t>(N))
    throw std::invalid_argument("generator must be an N x N matrix");
  RatMat M(sp.dim(), sp.dim());
  for (std::size_t s = 0; s < sp.dim(); ++s) {
    const auto& occ = sp.states[s].occ;
    for (int j = 0; j < N; ++j) {
      const long long nj = occ[static_cast<std::size_t>(j)];
      if (nj == 0) continue;
      for (int i = 0; i < N; ++i) {
        const Rat& x = X.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        if (x.is_zero()) continue;
        auto t = occ;
        t[static_cast<std::size_t>(j)] -= 1;
        t[static_cast<std::size_t>(i)] += 1;
        M.at(sp.index.at(t), s) += x * rat(nj);
      }
    }
  }
  return M;
}

struct RestrictionFailure : std::runtime_error {
  FockState witness_source;
  FockState witness_target;
  RestrictionFailure(std::string msg, FockState src, FockState tgt)
      : std::runtime_error(std::move(msg)),
        witness_source(std::move(src)),
        witness_target(std::move(tgt)) {}
};

// Submatrix of a full-level operator on the invariant basis; throws with a
// witness pair when a column leaks outside the subspace.
inline RatMat restrict_to_invariant(const FockSpace& sp, const InvariantFockBasis& basis,
                                    const RatMat& M) {
  if (sp.N != basis.N || sp.k != basis.k)
    throw std::invalid_argument("Fock level and invariant basis disagree");
  std::vector<std::size_t> embed(basis.dim());
  std::vector<long long> member(sp.dim(), -1);
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    embed[i] = sp.index_of(basis.full_state(i));
    member[embed[i]] = static_cast<long long>(i);
  }
  for (std::size_t i = 0; i < basis.dim(); ++i)
    for (std::size_t t = 0; t < sp.dim(); ++t)
      if (member[t] < 0 && !M.at(t, embed[i]).is_zero())
        throw RestrictionFailure("operator does not preserve the invariant subspace",
                                 sp.states[embed[i]], sp.states[t]);
  RatMat R(basis.dim(), basis.dim());
  for (std::size_t a = 0; a < basis.dim(); ++a)
    for (std::size_t b = 0; b < basis.dim(); ++b) R.at(a, b) = M.at(embed[a], embed[b]);
  return R;
}

}  // namespace spinsuth

#endif
