#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mubar {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// C(e, k) for arbitrary integer e (generalized binomial, always an integer).
inline Int binomial_int(long e, int k) {
  Int num = 1;
  Int den = 1;
  for (int j = 0; j < k; ++j) {
    num *= Int(e - j);
    den *= Int(j + 1);
  }
  return num / den;
}

// C(a, k) for rational a.
inline Rational binomial_rat(const Rational& a, int k) {
  Rational r = 1;
  for (int j = 0; j < k; ++j) r *= (a - j) / Rational(j + 1);
  return r;
}

}  // namespace mubar
