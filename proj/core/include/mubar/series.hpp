#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mubar/rational.hpp"

namespace mubar {

class Word;

// Truncated power series in one variable with exact rational coefficients.
// Every operation requires matching truncation degrees; mixing is an error.
class Series1 {
 public:
  explicit Series1(int q) : q_(q), c_(q + 1) {
    if (q < 0) throw std::invalid_argument("Series1: q must be >= 0");
  }

  static Series1 constant(int q, const Rational& v) {
    Series1 s(q);
    s.c_[0] = v;
    return s;
  }
  static Series1 variable(int q) {
    if (q < 1) throw std::invalid_argument("Series1::variable: q must be >= 1");
    Series1 s(q);
    s.c_[1] = 1;
    return s;
  }
  // (1+u)^e, truncated.
  static Series1 binomial_pow(const Rational& e, int q) {
    Series1 s(q);
    for (int k = 0; k <= q; ++k) s.c_[k] = binomial_rat(e, k);
    return s;
  }

  int q() const { return q_; }
  const Rational& operator[](int k) const { return c_.at(k); }
  void set(int k, const Rational& v) { c_.at(k) = v; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (v != 0) return false;
    return true;
  }
  // Lowest degree with nonzero coefficient, or -1 for the zero series.
  int lowest_degree() const {
    for (int k = 0; k <= q_; ++k)
      if (c_[k] != 0) return k;
    return -1;
  }

  Series1 operator+(const Series1& o) const;
  Series1 operator-(const Series1& o) const;
  Series1 operator*(const Series1& o) const;
  Series1 operator*(const Rational& v) const;
  Series1 operator-() const;
  bool operator==(const Series1& o) const { return q_ == o.q_ && c_ == o.c_; }

  // Multiplicative inverse; constant term must be nonzero.
  Series1 inverse() const;
  // this(inner); inner must have zero constant term.
  Series1 compose(const Series1& inner) const;
  // Compositional inverse; requires zero constant term and nonzero linear term.
  Series1 reverse() const;
  // Multiply by u^k, dropping what truncates away.
  Series1 shift(int k) const;

  std::string str(const std::string& var = "u") const;

 private:
  void check(const Series1& o) const {
    if (q_ != o.q_) throw std::invalid_argument("Series1: truncation degree mismatch");
  }
  int q_;
  std::vector<Rational> c_;
};

using USeries = Series1;  // series in u
using ZSeries = Series1;  // series in z

// (1+u)^{1/2} truncated.
Series1 sqrt_one_plus(int q);
// u(z) solving u = z*sqrt(1+u), by fixed-point iteration.
Series1 u_of_z(int q);
// z(u) = u*(1+u)^{-1/2}.
Series1 z_of_u(int q);

// Truncated power series in m non-commuting variables u_1..u_m with exact
// integer coefficients (all Magnus-ring computations stay in Z).  Keys pack a
// word over 1..m into nibbles of a uint64, low nibble first; a zero nibble
// terminates.  Limits: m <= 15, q <= 15.
class NCSeries {
 public:
  NCSeries(int m, int q);

  static std::uint64_t pack(const std::vector<int>& word);
  static std::vector<int> unpack(std::uint64_t key);
  static int key_length(std::uint64_t key);

  static NCSeries constant(int m, int q, const Int& v);
  // theta(x_i) = 1 + u_i, or its inverse 1 - u_i + u_i^2 - ... for sign < 0.
  static NCSeries generator_factor(int m, int q, int i, int sign);

  int m() const { return m_; }
  int q() const { return q_; }
  Int coeff(const std::vector<int>& word) const;
  const std::unordered_map<std::uint64_t, Int>& terms() const { return t_; }

  void add_term(std::uint64_t key, const Int& v);

  NCSeries operator+(const NCSeries& o) const;
  NCSeries operator-(const NCSeries& o) const;
  NCSeries operator*(const NCSeries& o) const;
  bool operator==(const NCSeries& o) const;

  // Multiplicative inverse; constant term must be +-1.
  NCSeries inverse() const;
  // u_i -> u for every i.
  Series1 collapse() const;

 private:
  void check(const NCSeries& o) const {
    if (m_ != o.m_ || q_ != o.q_) throw std::invalid_argument("NCSeries: ring mismatch");
  }
  int m_, q_;
  std::unordered_map<std::uint64_t, Int> t_;
};

// theta(w) with theta(x_i) = 1 + u_i, truncated at degree q.
NCSeries magnus_expand(const Word& w, int m, int q);

// Truncated power series in m commuting variables v_1..v_m, rational
// coefficients, keyed by multidegree.
class MultiSeries {
 public:
  MultiSeries(int m, int q);

  static MultiSeries constant(int m, int q, const Rational& v);
  static MultiSeries variable(int m, int q, int i);
  // (1+v_i)^e for any integer e, truncated.
  static MultiSeries one_plus_v_pow(int m, int q, int i, long e);

  int m() const { return m_; }
  int q() const { return q_; }
  Rational coeff(const std::vector<int>& deg) const;
  const std::map<std::vector<int>, Rational>& terms() const { return t_; }
  void add_term(const std::vector<int>& deg, const Rational& v);

  MultiSeries operator+(const MultiSeries& o) const;
  MultiSeries operator-(const MultiSeries& o) const;
  MultiSeries operator*(const MultiSeries& o) const;
  MultiSeries operator*(const Rational& v) const;
  MultiSeries operator-() const;
  bool operator==(const MultiSeries& o) const;

  MultiSeries inverse() const;  // constant term must be nonzero
  bool is_zero() const { return t_.empty(); }
  // v_i -> u for every i.
  Series1 specialize_u(int qu) const;
  int lowest_total_degree() const;  // -1 for zero

  std::string str() const;

 private:
  void check(const MultiSeries& o) const {
    if (m_ != o.m_ || q_ != o.q_) throw std::invalid_argument("MultiSeries: ring mismatch");
  }
  int m_, q_;
  std::map<std::vector<int>, Rational> t_;
};

// Z[t, t^-1], exact.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly t_pow(int e, const Int& c = 1) {
    LaurentPoly p;
    if (c != 0) p.t_[e] = c;
    return p;
  }
  static LaurentPoly constant(const Int& c) { return t_pow(0, c); }

  Int coeff(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Int(0) : it->second;
  }
  const std::map<int, Int>& terms() const { return t_; }
  void add_term(int e, const Int& v);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }
  bool is_zero() const { return t_.empty(); }
  int max_exponent() const;  // throws on zero

  // Substitute t = 1+u, truncated at degree q (integer coefficients, kept
  // rational for uniformity downstream).
  Series1 to_series(int q) const;

  std::string str() const;

 private:
  std::map<int, Int> t_;
};

// Z[t_1^{+-1}, ..., t_m^{+-1}], exact, keyed by exponent vector.
class MultiLaurent {
 public:
  explicit MultiLaurent(int m) : m_(m) {}
  static MultiLaurent monomial(int m, const std::vector<int>& e, const Int& c = 1);
  static MultiLaurent constant(int m, const Int& c);

  int m() const { return m_; }
  const std::map<std::vector<int>, Int>& terms() const { return t_; }
  void add_term(const std::vector<int>& e, const Int& v);

  MultiLaurent operator+(const MultiLaurent& o) const;
  MultiLaurent operator-(const MultiLaurent& o) const;
  MultiLaurent operator*(const MultiLaurent& o) const;
  MultiLaurent operator-() const;
  bool is_zero() const { return t_.empty(); }

  // Substitute t_i = 1+v_i, truncated at total degree q.
  MultiSeries to_series(int q) const;

 private:
  void check(const MultiLaurent& o) const {
    if (m_ != o.m_) throw std::invalid_argument("MultiLaurent: variable count mismatch");
  }
  int m_;
  std::map<std::vector<int>, Int> t_;
};

// Conway polynomial: exact integer coefficients of z^0..z^d.
class ConwayPoly {
 public:
  ConwayPoly() = default;
  explicit ConwayPoly(std::vector<Int> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Int coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Int(0);
  }
  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  ConwayPoly operator+(const ConwayPoly& o) const;
  ConwayPoly operator-(const ConwayPoly& o) const;
  ConwayPoly operator*(const ConwayPoly& o) const;
  bool operator==(const ConwayPoly& o) const { return c_ == o.c_; }

  static ConwayPoly one() { return ConwayPoly({Int(1)}); }
  static ConwayPoly z(const Int& c = 1) { return ConwayPoly({Int(0), c}); }

  Series1 to_series(int q) const;
  // Substitute z = t - t^-1.
  LaurentPoly to_laurent() const;

  std::string str() const;

 private:
  void trim();
  std::vector<Int> c_;
};

// Solve Omega(t) = nabla(t - t^-1) for nabla by leading-term elimination.
// Throws std::domain_error if Omega is not a polynomial in t - t^-1.
ConwayPoly conway_from_laurent(const LaurentPoly& omega);

}  // namespace mubar
