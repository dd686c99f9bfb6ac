#include <doctest.h>

#include <random>

#include "mubar/series.hpp"
#include "mubar/words.hpp"

using namespace mubar;

namespace {

Rational rat(long p, long q = 1) { return Rational(p) / Rational(q); }

}  // namespace

TEST_CASE("Series1 arithmetic basics") {
  Series1 a(4), b(4);
  a.set(0, 1);
  a.set(2, rat(3, 2));
  b.set(1, 2);
  b.set(4, -1);
  Series1 s = a + b;
  CHECK(s[0] == 1);
  CHECK(s[1] == 2);
  CHECK(s[2] == rat(3, 2));
  CHECK(s[4] == -1);
  Series1 p = a * b;
  CHECK(p[1] == 2);
  CHECK(p[3] == 3);
  CHECK(p[4] == -1);
  CHECK((a - a).is_zero());
  CHECK_THROWS_AS(a + Series1(5), std::invalid_argument);
}

TEST_CASE("Series1 inverse and composition") {
  Series1 a(6);
  a.set(0, 1);
  a.set(1, -3);
  a.set(4, rat(7, 5));
  Series1 prod = a * a.inverse();
  CHECK(prod == Series1::constant(6, 1));

  Series1 inner(6);
  inner.set(1, 1);
  inner.set(2, 1);
  Series1 rev = inner.reverse();
  Series1 round = inner.compose(rev);
  CHECK(round == Series1::variable(6));
}

TEST_CASE("sqrt(1+u) frozen coefficients") {
  // 1, 1/2, -1/8, 1/16, -5/128, 7/256 (binomial series for exponent 1/2)
  Series1 s = sqrt_one_plus(5);
  CHECK(s[0] == 1);
  CHECK(s[1] == rat(1, 2));
  CHECK(s[2] == rat(-1, 8));
  CHECK(s[3] == rat(1, 16));
  CHECK(s[4] == rat(-5, 128));
  CHECK(s[5] == rat(7, 256));
  CHECK(s == Series1::binomial_pow(rat(1, 2), 5));
}

TEST_CASE("u(z) frozen coefficients and mutual inversion") {
  // u = z*sqrt(1+u):  z + z^2/2 + z^3/8 - z^5/128 + z^7/1024 - 5z^9/32768
  Series1 u = u_of_z(9);
  CHECK(u[0] == 0);
  CHECK(u[1] == 1);
  CHECK(u[2] == rat(1, 2));
  CHECK(u[3] == rat(1, 8));
  CHECK(u[4] == 0);
  CHECK(u[5] == rat(-1, 128));
  CHECK(u[6] == 0);
  CHECK(u[7] == rat(1, 1024));
  CHECK(u[8] == 0);
  CHECK(u[9] == rat(-5, 32768));

  // z(u(z)) = z and u(z(u)) = u through degree 10
  Series1 u10 = u_of_z(10);
  Series1 z10 = z_of_u(10);
  CHECK(z10.compose(u10) == Series1::variable(10));
  CHECK(u10.compose(z10) == Series1::variable(10));
  // the defining equation u = z*sqrt(1+u)
  Series1 lhs = Series1::variable(10) * sqrt_one_plus(10).compose(u10);
  CHECK(lhs == u10);
}

TEST_CASE("NCSeries Magnus ring") {
  // theta(x y x^-1 y^-1) = 1 + (uv - vu) + higher
  Word w = Word::from_letters({1, 2, -1, -2});
  NCSeries t = magnus_expand(w, 2, 3);
  CHECK(t.coeff({}) == 1);
  CHECK(t.coeff({1}) == 0);
  CHECK(t.coeff({2}) == 0);
  CHECK(t.coeff({1, 2}) == 1);
  CHECK(t.coeff({2, 1}) == -1);
  NCSeries ti = magnus_expand(w.inverse(), 2, 3);
  CHECK(t * ti == NCSeries::constant(2, 3, 1));
}

TEST_CASE("MultiSeries ring") {
  MultiSeries a = MultiSeries::one_plus_v_pow(2, 4, 1, -2);
  MultiSeries b = MultiSeries::one_plus_v_pow(2, 4, 1, 2);
  CHECK(a * b == MultiSeries::constant(2, 4, 1));
  CHECK(a.coeff({1, 0}) == -2);
  CHECK(a.coeff({2, 0}) == 3);
  MultiSeries v1 = MultiSeries::variable(2, 4, 1);
  MultiSeries v2 = MultiSeries::variable(2, 4, 2);
  CHECK(v1 * v2 == v2 * v1);
  Series1 sp = (v1 * v2).specialize_u(4);
  CHECK(sp[2] == 1);
}

TEST_CASE("LaurentPoly and Conway round trip") {
  // z = t - t^-1
  ConwayPoly p({Int(1), Int(0), Int(3), Int(1)});  // 1 + 3z^2 + z^3
  LaurentPoly lp = p.to_laurent();
  CHECK(conway_from_laurent(lp) == p);
  // not a polynomial in t - t^-1
  LaurentPoly bad = LaurentPoly::t_pow(1);
  CHECK_THROWS_AS(conway_from_laurent(bad), std::domain_error);
}

TEST_CASE("randomized series inverses agree with multiplication") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coin(-4, 4);
  for (int it = 0; it < 200; ++it) {
    Series1 a(7);
    a.set(0, 1);
    for (int k = 1; k <= 7; ++k) a.set(k, rat(coin(rng), 1 + it % 3));
    CHECK(a * a.inverse() == Series1::constant(7, 1));
  }
}
