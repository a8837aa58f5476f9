#ifndef SPINSUTH_LINFORM_HPP
#define SPINSUTH_LINFORM_HPP

// Linear functionals on the flat Cartan coordinates q_1..q_n, written over
// the coordinate functionals e_m (q -> q_m). Roots, folded weights and the
// trigonometric arguments of potential terms are all values of this type.

#include "spinsuth/rational.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace spinsuth {

struct LinearForm {
  std::vector<Rat> c;  // coefficient of e_m at index m-1

  LinearForm() = default;
  explicit LinearForm(std::size_t n) : c(n) {}
  LinearForm(std::initializer_list<Rat> init) : c(init) {}

  std::size_t size() const { return c.size(); }

  bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }

  double eval(std::span<const double> q) const {
    if (q.size() != c.size()) throw std::invalid_argument("form/point dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) s += rat_to_double(c[i]) * q[i];
    return s;
  }

  friend LinearForm operator+(const LinearForm& a, const LinearForm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("form dimension mismatch");
    LinearForm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend LinearForm operator-(const LinearForm& a, const LinearForm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("form dimension mismatch");
    LinearForm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend LinearForm operator*(const Rat& s, const LinearForm& a) {
    LinearForm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.c[i] = s * a.c[i];
    return r;
  }

  friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.c == b.c; }
  friend bool operator<(const LinearForm& a, const LinearForm& b) { return a.c < b.c; }
};

// e_m as a form on n coordinates (1-based m).
inline LinearForm basis_form(std::size_t n, std::size_t m) {
  LinearForm f(n);
  f.c.at(m - 1) = 1;
  return f;
}

}  // namespace spinsuth

#endif
