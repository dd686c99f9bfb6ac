#pragma once

#include <utility>
#include <vector>

#include "mubar/milnor.hpp"
#include "mubar/series.hpp"

namespace mubar {

// Division-free determinant (cofactor expansion) of an n x n row-major
// matrix over any commutative ring; `zero` fixes the ring for empty sums.
template <class T>
T determinant(const std::vector<T>& a, int n, const T& zero) {
  if (static_cast<int>(a.size()) != n * n)
    throw std::invalid_argument("determinant: matrix size mismatch");
  if (n == 0) throw std::invalid_argument("determinant: empty matrix");
  if (n == 1) return a[0];
  T det = zero;
  std::vector<T> minor_m;
  minor_m.reserve((n - 1) * (n - 1));
  for (int col = 0; col < n; ++col) {
    minor_m.clear();
    for (int r = 1; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (c != col) minor_m.push_back(a[r * n + c]);
    T term = a[col] * determinant(minor_m, n - 1, zero);
    if (col % 2 == 0)
      det = det + term;
    else
      det = det - term;
  }
  return det;
}

// Gamma_S from the mu-bar table:
//   Gamma = (1+u)^{e/2} det(lambda_{ij})_{1<=i,j<=m-1},  lambda_{ij} = u c_{ij},
// with e = 0 for m odd, 1 for m even, then z = u (1+u)^{-1/2}.
// Series are exact through degree q-1, where q is the table's order.
struct GammaResult {
  int m = 0;
  int e = 0;
  Series1 det_u;    // det(lambda_{ij}) in u
  Series1 gamma_u;  // (1+u)^{e/2} det_u
  Series1 gamma_z;  // gamma_u with u = u(z)

  GammaResult() : det_u(0), gamma_u(0), gamma_z(0) {}
};

GammaResult gamma(const MuTable& t);

// Gamma depends on the longitudes only through the conjugation gauge: replacing
// lambda_1 by x_1^k lambda_1 x_1^{-k} multiplies gamma_u by a unit of Z[[u]].
// Exactly one representative of the orbit satisfies the parity law
// Gamma(-z) = (-1)^{m-1} Gamma(z); this selects it.
GammaResult gamma_gauge_fixed(const std::vector<Word>& longitudes, int q);

// Structural facts about Gamma when all linking numbers vanish: parity of the
// powers of z, divisibility by z^{2(m-1)}, and squareness of the coefficient
// of z^{2(m-1)}.  Checked to the truncation of gamma_z.
struct GammaChecks {
  bool applicable = false;  // linking numbers all zero
  bool parity_ok = false;
  bool divisibility_ok = false;
  bool leading_square_ok = false;
};

GammaChecks gamma_checks(const GammaResult& g, const LinkingData& lk);

// Phi_S(u) = u^{m-1} det(c_{ij}(u))_{1<=i,j<=m-1}; exact through degree
// (q-2) + (m-1).
Series1 phi_u(const MuTable& t);

// Multivariable Phi_S(v_1..v_m) = det(v_i chat_{ij} - delta_{ij}(tau_i - 1))
// over 1<=i,j<=m-1; exact through total degree q-1.
MultiSeries phi_multi(const MuTable& t);

// Lowest nonzero term of a truncated series: (degree, coefficient);
// degree -1 for a series that vanishes to truncation.
std::pair<int, Rational> lowest_coefficient(const Series1& s);

// Homogeneous part of lowest total degree; zero series for zero input.
MultiSeries multi_lowest(const MultiSeries& s);

// If the mu-bar invariants vanish below order k, the coefficient of
// z^{(k-1)(m-1)} in nabla_L is det(a_{ij}) with
// a_{ij} = sum_{|w|=k-2} mu(w, j, i); requires 2 <= k <= q.
Int first_coeff_det(const MuTable& t, int k);

// Seifert pairing matrix; potential(t) = det(t A - t^-1 A^t), and the Conway
// polynomial solves nabla(t - t^-1) = potential(t).
struct SeifertMatrix {
  int n = 0;
  std::vector<Int> a;  // row-major

  SeifertMatrix() = default;
  SeifertMatrix(int n_, std::vector<Int> entries);
  Int at(int i, int j) const { return a[i * n + j]; }

  LaurentPoly potential() const;
  ConwayPoly conway() const;
  // det(A - A^t) = +-1 exactly when the surface comes from a knot.
  bool unimodular_pairing() const;
};

}  // namespace mubar
