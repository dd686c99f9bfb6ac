#pragma once

#include <map>
#include <vector>

#include "mubar/series.hpp"
#include "mubar/words.hpp"

namespace mubar {

// Table of mu-bar invariants: index sequence (i_1,...,i_r,i) -> integer,
// where i names the longitude and r+1 <= q.  Absent key means 0.
class MuTable {
 public:
  MuTable(int m, int q) : m_(m), q_(q) {}

  int m() const { return m_; }
  int q() const { return q_; }
  Int value(const std::vector<int>& idx) const {
    auto it = e_.find(idx);
    return it == e_.end() ? Int(0) : it->second;
  }
  void set(const std::vector<int>& idx, const Int& v) {
    if (v != 0) e_[idx] = v;
  }
  const std::map<std::vector<int>, Int>& entries() const { return e_; }
  bool all_zero_below_length(int k) const;

 private:
  int m_, q_;
  std::map<std::vector<int>, Int> e_;
};

// mu-bar table from normalized longitudes (exponent sum 0 is enforced).
MuTable mu_table(const std::vector<Word>& longitudes, int q);

// Longitudinal matrix c_{ij}(u), full m x m.
struct CMatrix {
  int m = 0;
  std::vector<Series1> entries;  // row-major

  CMatrix(int m_, int q) : m(m_), entries(m_ * m_, Series1(q)) {}
  Series1& at(int i, int j) { return entries[(i - 1) * m + (j - 1)]; }
  const Series1& at(int i, int j) const { return entries[(i - 1) * m + (j - 1)]; }
  int q() const { return entries.empty() ? 0 : entries[0].q(); }
};

// Multivariable longitudinal matrix c-hat_{ij}(v_1..v_m).
struct CHatMatrix {
  int m = 0;
  std::vector<MultiSeries> entries;

  CHatMatrix(int m_, int q) : m(m_), entries(m_ * m_, MultiSeries(m_, q)) {}
  MultiSeries& at(int i, int j) { return entries[(i - 1) * m + (j - 1)]; }
  const MultiSeries& at(int i, int j) const { return entries[(i - 1) * m + (j - 1)]; }
  int q() const { return entries.empty() ? 0 : entries[0].q(); }
};

// c_{ijk} = sum over length-k prefixes of mu(i_1..i_k, j, i); entries reach
// degree table.q() - 2.
CMatrix c_matrix_from_mu(const MuTable& t);

// Independent route: Fox free differential calculus, exact in Z[t,t^-1],
// expanded at t = 1+u to degree q.
CMatrix c_matrix_from_fox(const std::vector<Word>& longitudes, int q);

// Multivariable Fox route with eta(x_j) = t_j, t_j = 1+v_j.
CHatMatrix chat_matrix(const std::vector<Word>& longitudes, int q);
// Generating-function route straight from the mu-bar table (the other side of
// the defining identity); truncation q.
CHatMatrix chat_matrix_from_mu(const MuTable& t, int q);

// Linking numbers l_{ij} with the row-sum-zero diagonal, plus the tau
// exponent vectors tau_i = prod_j t_j^{l_ij}.
struct LinkingData {
  int m = 0;
  std::vector<std::vector<int>> l;  // m x m

  static LinkingData from_matrix(std::vector<std::vector<int>> offdiag);
  // l_{ij} = mu(j, i) for i != j.
  static LinkingData from_mu(const MuTable& t);

  bool algebraically_split() const;
  const std::vector<int>& tau_exponents(int i) const { return l[i - 1]; }
};

// Residuals of the degeneracy lemmas; all series are expected to vanish to
// truncation (row/column sums only when the link is algebraically split).
struct DegeneracyReport {
  std::vector<Series1> row_sums;     // sum_i c_{ij}, one per j
  std::vector<Series1> col_sums;     // sum_j c_{ij}, one per i
  std::vector<MultiSeries> first;    // tau_i - 1 - sum_j (t_j - 1) chat_{ij}
  std::vector<MultiSeries> second;   // a_j(tau_j - 1) - sum_i a_i(t_i - 1) chat_{ij}
  bool rows_cols_zero = false;
  bool first_zero = false;
  bool second_zero = false;
};

DegeneracyReport degeneracy_check(const CMatrix& c, const CHatMatrix& chat,
                                  const LinkingData& linking);

}  // namespace mubar
