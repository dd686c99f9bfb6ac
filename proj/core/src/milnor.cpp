#include "mubar/milnor.hpp"

#include <stdexcept>

namespace mubar {

bool MuTable::all_zero_below_length(int k) const {
  for (const auto& [idx, v] : e_)
    if (static_cast<int>(idx.size()) < k && v != 0) return false;
  return true;
}

MuTable mu_table(const std::vector<Word>& longitudes, int q) {
  const int m = static_cast<int>(longitudes.size());
  if (m < 1) throw std::invalid_argument("mu_table: need at least one longitude");
  if (q < 1) throw std::invalid_argument("mu_table: q must be >= 1");
  MuTable t(m, q);
  for (int i = 1; i <= m; ++i) {
    const Word& lam = longitudes[i - 1];
    if (lam.max_generator() > m)
      throw std::invalid_argument("mu_table: longitude uses generator beyond x_m");
    if (lam.exponent_sum() != 0)
      throw std::invalid_argument("mu_table: longitude " + std::to_string(i) +
                                  " is not normalized (nonzero total exponent)");
    NCSeries th = magnus_expand(lam, m, q - 1);
    for (const auto& [key, v] : th.terms()) {
      if (key == 0) continue;  // constant term is 1 by normalization
      std::vector<int> idx = NCSeries::unpack(key);
      idx.push_back(i);
      t.set(idx, v);
    }
  }
  return t;
}

CMatrix c_matrix_from_mu(const MuTable& t) {
  if (t.q() < 2) throw std::invalid_argument("c_matrix_from_mu: need q >= 2");
  const int qc = t.q() - 2;
  CMatrix c(t.m(), qc);
  for (const auto& [idx, v] : t.entries()) {
    const int k = static_cast<int>(idx.size());
    if (k < 2) continue;
    const int i = idx[k - 1], j = idx[k - 2], deg = k - 2;
    if (deg > qc) continue;
    auto& s = c.at(i, j);
    s.set(deg, s[deg] + Rational(v));
  }
  return c;
}

namespace {

// Fox derivatives of w: the row vector (D_1(w), ..., D_m(w)) over Z[t,t^-1]
// with every generator abelianized to t.  D(gh) = eta(g) D(h) + D(g).
std::vector<LaurentPoly> fox_row(const Word& w, int m) {
  std::vector<LaurentPoly> d(m);
  int e = 0;  // exponent sum of the processed prefix
  for (int letter : w.letters()) {
    const int j = letter > 0 ? letter : -letter;
    if (j > m) throw std::invalid_argument("fox_row: generator out of range");
    if (letter > 0)
      d[j - 1] = d[j - 1] + LaurentPoly::t_pow(e);
    else
      d[j - 1] = d[j - 1] - LaurentPoly::t_pow(e - 1);
    e += letter > 0 ? 1 : -1;
  }
  return d;
}

// Multivariable version, eta(x_j) = t_j.
std::vector<MultiLaurent> fox_row_multi(const Word& w, int m) {
  std::vector<MultiLaurent> d(m, MultiLaurent(m));
  std::vector<int> e(m, 0);
  for (int letter : w.letters()) {
    const int j = letter > 0 ? letter : -letter;
    if (j > m) throw std::invalid_argument("fox_row_multi: generator out of range");
    if (letter > 0) {
      d[j - 1] = d[j - 1] + MultiLaurent::monomial(m, e);
      e[j - 1] += 1;
    } else {
      e[j - 1] -= 1;
      d[j - 1] = d[j - 1] - MultiLaurent::monomial(m, e);
    }
  }
  return d;
}

}  // namespace

CMatrix c_matrix_from_fox(const std::vector<Word>& longitudes, int q) {
  const int m = static_cast<int>(longitudes.size());
  CMatrix c(m, q);
  for (int i = 1; i <= m; ++i) {
    auto row = fox_row(longitudes[i - 1], m);
    for (int j = 1; j <= m; ++j) c.at(i, j) = row[j - 1].to_series(q);
  }
  return c;
}

CHatMatrix chat_matrix(const std::vector<Word>& longitudes, int q) {
  const int m = static_cast<int>(longitudes.size());
  CHatMatrix c(m, q);
  for (int i = 1; i <= m; ++i) {
    auto row = fox_row_multi(longitudes[i - 1], m);
    for (int j = 1; j <= m; ++j) c.at(i, j) = row[j - 1].to_series(q);
  }
  return c;
}

CHatMatrix chat_matrix_from_mu(const MuTable& t, int q) {
  const int m = t.m();
  CHatMatrix c(m, q);
  for (const auto& [idx, v] : t.entries()) {
    const int k = static_cast<int>(idx.size());
    if (k < 2) continue;
    const int i = idx[k - 1], j = idx[k - 2];
    if (k - 2 > q) continue;
    std::vector<int> deg(m, 0);
    for (int p = 0; p < k - 2; ++p) deg[idx[p] - 1] += 1;
    c.at(i, j).add_term(deg, Rational(v));
  }
  return c;
}

LinkingData LinkingData::from_matrix(std::vector<std::vector<int>> offdiag) {
  LinkingData d;
  d.m = static_cast<int>(offdiag.size());
  d.l = std::move(offdiag);
  for (int i = 0; i < d.m; ++i) {
    if (static_cast<int>(d.l[i].size()) != d.m)
      throw std::invalid_argument("LinkingData: matrix must be square");
    int s = 0;
    for (int j = 0; j < d.m; ++j)
      if (j != i) s += d.l[i][j];
    d.l[i][i] = -s;  // total linking number of each longitude is zero
  }
  return d;
}

LinkingData LinkingData::from_mu(const MuTable& t) {
  std::vector<std::vector<int>> l(t.m(), std::vector<int>(t.m(), 0));
  for (int i = 1; i <= t.m(); ++i)
    for (int j = 1; j <= t.m(); ++j) {
      if (i == j) continue;
      l[i - 1][j - 1] = t.value({j, i}).convert_to<int>();
    }
  return from_matrix(std::move(l));
}

bool LinkingData::algebraically_split() const {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && l[i][j] != 0) return false;
  return true;
}

namespace {

MultiSeries tau_series(const LinkingData& lk, int m, int q, int i, int sign) {
  MultiSeries s = MultiSeries::constant(m, q, 1);
  const auto& e = lk.tau_exponents(i);
  for (int j = 1; j <= m; ++j)
    if (e[j - 1] != 0) s = s * MultiSeries::one_plus_v_pow(m, q, j, sign * e[j - 1]);
  return s;
}

}  // namespace

DegeneracyReport degeneracy_check(const CMatrix& c, const CHatMatrix& chat,
                                  const LinkingData& lk) {
  const int m = c.m;
  if (chat.m != m || lk.m != m)
    throw std::invalid_argument("degeneracy_check: size mismatch");
  const int qc = c.q(), qh = chat.q();
  DegeneracyReport rep;

  for (int j = 1; j <= m; ++j) {
    Series1 s(qc);
    for (int i = 1; i <= m; ++i) s = s + c.at(i, j);
    rep.row_sums.push_back(s);
  }
  for (int i = 1; i <= m; ++i) {
    Series1 s(qc);
    for (int j = 1; j <= m; ++j) s = s + c.at(i, j);
    rep.col_sums.push_back(s);
  }
  rep.rows_cols_zero = true;
  for (const auto& s : rep.row_sums) rep.rows_cols_zero = rep.rows_cols_zero && s.is_zero();
  for (const auto& s : rep.col_sums) rep.rows_cols_zero = rep.rows_cols_zero && s.is_zero();

  // tau_i - 1 = sum_j (t_j - 1) chat_{ij}, with t_j = 1 + v_j.
  for (int i = 1; i <= m; ++i) {
    MultiSeries r = tau_series(lk, m, qh, i, +1) - MultiSeries::constant(m, qh, 1);
    for (int j = 1; j <= m; ++j)
      r = r - MultiSeries::variable(m, qh, j) * chat.at(i, j);
    rep.first.push_back(r);
  }
  rep.first_zero = true;
  for (const auto& r : rep.first) rep.first_zero = rep.first_zero && r.is_zero();

  // a_j (tau_j - 1) = sum_i a_i (t_i - 1) chat_{ij}, with the units
  // a_i = b_i * prod_{r odd < i} t_r^-1 * prod_{r even < i} t_r,
  // b_i = 1 (i even) or tau_i^-1 t_i^-1 (i odd).
  std::vector<MultiSeries> a;
  for (int i = 1; i <= m; ++i) {
    MultiSeries ai = (i % 2 == 0)
                         ? MultiSeries::constant(m, qh, 1)
                         : tau_series(lk, m, qh, i, -1) *
                               MultiSeries::one_plus_v_pow(m, qh, i, -1);
    for (int r = 1; r < i; ++r)
      ai = ai * MultiSeries::one_plus_v_pow(m, qh, r, r % 2 == 1 ? -1 : 1);
    a.push_back(ai);
  }
  for (int j = 1; j <= m; ++j) {
    MultiSeries r =
        a[j - 1] * (tau_series(lk, m, qh, j, +1) - MultiSeries::constant(m, qh, 1));
    for (int i = 1; i <= m; ++i)
      r = r - a[i - 1] * MultiSeries::variable(m, qh, i) * chat.at(i, j);
    rep.second.push_back(r);
  }
  rep.second_zero = true;
  for (const auto& r : rep.second) rep.second_zero = rep.second_zero && r.is_zero();

  return rep;
}

}  // namespace mubar
