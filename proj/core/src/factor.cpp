#include "mubar/factor.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace mubar {

namespace {

// Re-truncate, keeping min(q, s.q()) coefficients.
Series1 retrunc(const Series1& s, int q) {
  Series1 r(q);
  for (int k = 0; k <= q && k <= s.q(); ++k) r.set(k, s[k]);
  return r;
}

bool is_perfect_square(const Int& v) {
  if (v < 0) return false;
  Int r = boost::multiprecision::sqrt(v);
  return r * r == v;
}

}  // namespace

GammaResult gamma(const MuTable& t) {
  const int m = t.m();
  if (m < 2) throw std::invalid_argument("gamma: need at least two strands");
  if (t.q() < 2) throw std::invalid_argument("gamma: need q >= 2");
  const int Q = t.q() - 1;

  CMatrix c = c_matrix_from_mu(t);
  const int n = m - 1;
  std::vector<Series1> lam;
  lam.reserve(n * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      lam.push_back(retrunc(c.at(i, j), Q).shift(1));

  GammaResult g;
  g.m = m;
  g.e = m % 2 == 0 ? 1 : 0;
  g.det_u = determinant(lam, n, Series1(Q));
  g.gamma_u = g.e == 0 ? g.det_u : g.det_u * Series1::binomial_pow(Rational(1, 2), Q);
  g.gamma_z = g.gamma_u.compose(u_of_z(Q));
  return g;
}

namespace {

bool parity_pure(const Series1& g, int m) {
  const int want = (m - 1) % 2;
  for (int d = 0; d <= g.q(); ++d)
    if (d % 2 != want && g[d] != 0) return false;
  return true;
}

}  // namespace

GammaResult gamma_gauge_fixed(const std::vector<Word>& longitudes, int q) {
  const int m = static_cast<int>(longitudes.size());
  for (int a = 0; a <= 4 * q; ++a) {
    const int k = a % 2 == 0 ? a / 2 : -(a + 1) / 2;  // 0, -1, 1, -2, 2, ...
    std::vector<Word> lam = longitudes;
    const Word g = Word::generator(1).pow(k);
    lam[0] = g * lam[0] * g.inverse();
    GammaResult r = gamma(mu_table(lam, q));
    if (parity_pure(r.gamma_z, m)) return r;
  }
  throw std::logic_error("gamma_gauge_fixed: no parity-pure representative found");
}

GammaChecks gamma_checks(const GammaResult& g, const LinkingData& lk) {
  GammaChecks ch;
  ch.applicable = lk.algebraically_split();
  if (!ch.applicable) return ch;

  const Series1& gz = g.gamma_z;
  const int want = g.m % 2 == 1 ? 0 : 1;  // parity of the allowed z-powers
  ch.parity_ok = true;
  for (int k = 0; k <= gz.q(); ++k)
    if (k % 2 != want && gz[k] != 0) ch.parity_ok = false;

  const int d = gz.lowest_degree();
  ch.divisibility_ok = d == -1 || d >= 2 * (g.m - 1);

  if (2 * (g.m - 1) > gz.q()) {
    ch.leading_square_ok = true;  // coefficient not visible at this truncation
  } else {
    Rational lead = ch.divisibility_ok ? gz[2 * (g.m - 1)] : Rational(0);
    ch.leading_square_ok = ch.divisibility_ok &&
                           is_perfect_square(numerator(lead)) &&
                           is_perfect_square(denominator(lead));
  }
  return ch;
}

Series1 phi_u(const MuTable& t) {
  const int m = t.m();
  if (m < 2) throw std::invalid_argument("phi_u: need at least two strands");
  CMatrix c = c_matrix_from_mu(t);
  const int n = m - 1, qc = c.q();
  std::vector<Series1> sub;
  sub.reserve(n * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) sub.push_back(c.at(i, j));
  Series1 det = determinant(sub, n, Series1(qc));
  // multiply by u^{m-1}, widening so nothing computed is dropped
  Series1 phi(qc + n);
  for (int k = 0; k <= qc; ++k) phi.set(k + n, det[k]);
  return phi;
}

MultiSeries phi_multi(const MuTable& t) {
  const int m = t.m();
  if (m < 2) throw std::invalid_argument("phi_multi: need at least two strands");
  const int q = t.q() - 1;
  CHatMatrix chat = chat_matrix_from_mu(t, q);
  LinkingData lk = LinkingData::from_mu(t);
  const int n = m - 1;
  std::vector<MultiSeries> p;
  p.reserve(n * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      MultiSeries e = MultiSeries::variable(m, q, i) * chat.at(i, j);
      if (i == j) {
        MultiSeries tau = MultiSeries::constant(m, q, 1);
        const auto& le = lk.tau_exponents(i);
        for (int r = 1; r <= m; ++r)
          if (le[r - 1] != 0)
            tau = tau * MultiSeries::one_plus_v_pow(m, q, r, le[r - 1]);
        e = e - (tau - MultiSeries::constant(m, q, 1));
      }
      p.push_back(e);
    }
  return determinant(p, n, MultiSeries(m, q));
}

std::pair<int, Rational> lowest_coefficient(const Series1& s) {
  const int d = s.lowest_degree();
  return {d, d < 0 ? Rational(0) : s[d]};
}

MultiSeries multi_lowest(const MultiSeries& s) {
  MultiSeries r(s.m(), s.q());
  const int d = s.lowest_total_degree();
  if (d < 0) return r;
  for (const auto& [deg, v] : s.terms()) {
    int total = 0;
    for (int e : deg) total += e;
    if (total == d) r.add_term(deg, v);
  }
  return r;
}

Int first_coeff_det(const MuTable& t, int k) {
  const int m = t.m();
  if (k < 2 || k > t.q()) throw std::invalid_argument("first_coeff_det: need 2 <= k <= q");
  if (!t.all_zero_below_length(k))
    throw std::invalid_argument("first_coeff_det: mu-bar invariants of order < k are nonzero");
  const int n = m - 1;
  if (n == 0) return Int(1);
  std::vector<Int> a(n * n, Int(0));
  for (const auto& [idx, v] : t.entries()) {
    if (static_cast<int>(idx.size()) != k) continue;
    const int i = idx[k - 1], j = idx[k - 2];
    if (i <= n && j <= n) a[(i - 1) * n + (j - 1)] += v;
  }
  return determinant(a, n, Int(0));
}

SeifertMatrix::SeifertMatrix(int n_, std::vector<Int> entries) : n(n_), a(std::move(entries)) {
  if (static_cast<int>(a.size()) != n * n)
    throw std::invalid_argument("SeifertMatrix: matrix size mismatch");
}

LaurentPoly SeifertMatrix::potential() const {
  if (n == 0) return LaurentPoly::constant(1);  // empty surface: nabla = 1
  std::vector<LaurentPoly> p(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      p[i * n + j] = LaurentPoly::t_pow(1, at(i, j)) - LaurentPoly::t_pow(-1, at(j, i));
  return determinant(p, n, LaurentPoly());
}

ConwayPoly SeifertMatrix::conway() const { return conway_from_laurent(potential()); }

bool SeifertMatrix::unimodular_pairing() const {
  if (n == 0) return true;
  std::vector<Int> d(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d[i * n + j] = at(i, j) - at(j, i);
  Int det = determinant(d, n, Int(0));
  return det == 1 || det == -1;
}

}  // namespace mubar
