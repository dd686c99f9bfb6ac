#include <doctest.h>

#include <random>

#include "mubar/milnor.hpp"
#include "mubar/words.hpp"

using namespace mubar;

namespace {

std::vector<Word> braid_longitudes(const Braid& b) {
  auto raw = longitudes_from_braid(b);
  std::vector<Word> lams;
  for (int i = 1; i <= b.strands; ++i)
    lams.push_back(normalize_longitude(raw[i - 1], i));
  return lams;
}

}  // namespace

TEST_CASE("golden two-strand example: mu-bar of sigma_1^2") {
  Braid b(2, {1, 1});
  MuTable t = mu_table(braid_longitudes(b), 8);
  // mu(1,...,1,1) with r leading 1s equals (-1)^(r+1)
  for (int r = 1; r <= 6; ++r) {
    std::vector<int> idx(r + 1, 1);
    CHECK(t.value(idx) == Int(r % 2 == 1 ? 1 : -1));
  }
  // linking number mu(2,1) = mu(1,2) = 1
  CHECK(t.value({2, 1}) == 1);
  CHECK(t.value({1, 2}) == 1);
}

TEST_CASE("golden two-strand example: lambda_11 = -u/(1+u)") {
  Braid b(2, {1, 1});
  MuTable t = mu_table(braid_longitudes(b), 9);
  CMatrix c = c_matrix_from_mu(t);
  // lambda_11 = u*c_11 should equal -u/(1+u) = -u + u^2 - u^3 + ...
  Series1 lam = c.at(1, 1).shift(1);
  for (int k = 1; k <= 8; ++k) CHECK(lam[k] == Rational(k % 2 == 1 ? -1 : 1));
  CHECK(lam[0] == 0);
}

TEST_CASE("first-order mu-bar equals the linking numbers") {
  // sigma_1^2 sigma_2^-2: lk(1,2) = 1, lk(2,3) = -1, lk(1,3) = 0
  Braid b(3, {1, 1, -2, -2});
  MuTable t = mu_table(braid_longitudes(b), 4);
  LinkingData lk = LinkingData::from_mu(t);
  CHECK(lk.l[0][1] == 1);
  CHECK(lk.l[1][2] == -1);
  CHECK(lk.l[0][2] == 0);
  // the diagonal makes every row sum to zero
  for (int i = 0; i < 3; ++i) {
    int s = 0;
    for (int j = 0; j < 3; ++j) s += lk.l[i][j];
    CHECK(s == 0);
  }
}

TEST_CASE("Borromean braid has vanishing linking but mu(ijk) = +-1") {
  Braid b(3, {1, -2, 1, -2, 1, -2});
  MuTable t = mu_table(braid_longitudes(b), 4);
  LinkingData lk = LinkingData::from_mu(t);
  CHECK(lk.algebraically_split());
  // the triple invariants of the Borromean rings are +-1 and antisymmetric
  Int m123 = t.value({1, 2, 3});
  CHECK((m123 == 1 || m123 == -1));
  CHECK(t.value({2, 1, 3}) == -m123);
}

TEST_CASE("Fox and mu-bar routes to the c-matrix agree") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> bl(1, 2);
  std::uniform_int_distribution<int> bs(0, 1);
  int tested = 0;
  for (int it = 0; it < 300 && tested < 40; ++it) {
    std::vector<int> bw;
    for (int i = 0; i < 5; ++i) bw.push_back(bs(rng) ? bl(rng) : -bl(rng));
    Braid b(3, bw);
    if (!b.is_pure()) continue;
    ++tested;
    auto lams = braid_longitudes(b);
    MuTable t = mu_table(lams, 7);
    CMatrix from_mu = c_matrix_from_mu(t);
    CMatrix from_fox = c_matrix_from_fox(lams, 7);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) CHECK(from_mu.at(i, j) == from_fox.at(i, j));
  }
  CHECK(tested >= 30);
}

TEST_CASE("multivariable c-hat routes agree") {
  Braid b(3, {1, 1, 2, -1, -2, 2});
  if (!b.is_pure()) return;
  auto lams = braid_longitudes(b);
  MuTable t = mu_table(lams, 6);
  CHatMatrix a = chat_matrix(lams, 6);
  CHatMatrix c = chat_matrix_from_mu(t, 6);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(a.at(i, j) == c.at(i, j));
}

TEST_CASE("degeneracy residuals vanish") {
  std::mt19937 rng(555);
  std::uniform_int_distribution<int> bl(1, 2);
  std::uniform_int_distribution<int> bs(0, 1);
  int tested = 0;
  for (int it = 0; it < 200 && tested < 20; ++it) {
    std::vector<int> bw;
    for (int i = 0; i < 6; ++i) bw.push_back(bs(rng) ? bl(rng) : -bl(rng));
    Braid b(3, bw);
    if (!b.is_pure()) continue;
    ++tested;
    auto lams = braid_longitudes(b);
    MuTable t = mu_table(lams, 6);
    CMatrix c = c_matrix_from_mu(t);
    CHatMatrix ch = chat_matrix(lams, 6);
    LinkingData lk = LinkingData::from_mu(t);
    DegeneracyReport rep = degeneracy_check(c, ch, lk);
    CHECK(rep.first_zero);
    CHECK(rep.second_zero);
    if (lk.algebraically_split()) CHECK(rep.rows_cols_zero);
  }
  CHECK(tested >= 15);
}

TEST_CASE("mu table rejects unnormalized longitudes") {
  std::vector<Word> lams = {Word::from_letters({2}), Word::from_letters({1, -1})};
  // X2 has exponent sum 1, which is fine; X1 alone on strand 1 is not
  lams[1] = Word::from_letters({1});
  CHECK_THROWS(mu_table(lams, 4));
}
