#ifndef SPINSUTH_RATMAT_HPP
#define SPINSUTH_RATMAT_HPP

// Small dense matrices over exact rationals. Dimensions here are bounded by
// the Fock-space dimension C(k+N-1, N-1) of the worst configured case, so a
// plain row-major vector is adequate; multiplication skips structural zeros
// because the generator matrices are extremely sparse.

#include "spinsuth/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace spinsuth {

class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMat identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatMat& operator+=(const RatMat& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  RatMat& operator-=(const RatMat& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  RatMat& operator*=(const Rat& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }

  friend RatMat operator+(RatMat a, const RatMat& b) { return a += b; }
  friend RatMat operator-(RatMat a, const RatMat& b) { return a -= b; }
  friend RatMat operator*(RatMat a, const Rat& s) { return a *= s; }
  friend RatMat operator*(const Rat& s, RatMat a) { return a *= s; }

  friend RatMat operator*(const RatMat& a, const RatMat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RatMat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const Rat& ail = a.at(i, l);
        if (ail.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Rat& blj = b.at(l, j);
          if (blj.is_zero()) continue;
          c.at(i, j) += ail * blj;
        }
      }
    return c;
  }

  friend bool operator==(const RatMat& a, const RatMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  RatMat transpose() const {
    RatMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && !at(i, j).is_zero()) return false;
    return true;
  }
  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

 private:
  void require_same_shape(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

}  // namespace spinsuth

#endif
