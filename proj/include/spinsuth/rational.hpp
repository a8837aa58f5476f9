#ifndef SPINSUTH_RATIONAL_HPP
#define SPINSUTH_RATIONAL_HPP

// Exact integer/rational scalars used throughout the representation-theory
// layers. Floating point enters only in the finite-difference and evaluation
// code, never here.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinsuth {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rat(Int(num), Int(den));
}

// Canonical text form: "p" for integers, "p/q" otherwise (q > 0).
inline std::string rat_to_string(const Rat& r) { return r.str(); }

inline Rat rat_from_string(std::string_view s) {
  try {
    return Rat(std::string(s));
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational literal: " + std::string(s));
  }
}

inline double rat_to_double(const Rat& r) { return r.template convert_to<double>(); }

inline Int factorial(unsigned n) {
  Int f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Int binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  Int b = 1;
  for (long long i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return b;
}

}  // namespace spinsuth

#endif
