#include "mubar/series.hpp"

#include <algorithm>
#include <sstream>

#include "mubar/words.hpp"

namespace mubar {

Series1 Series1::operator+(const Series1& o) const {
  check(o);
  Series1 r(q_);
  for (int k = 0; k <= q_; ++k) r.c_[k] = c_[k] + o.c_[k];
  return r;
}

Series1 Series1::operator-(const Series1& o) const {
  check(o);
  Series1 r(q_);
  for (int k = 0; k <= q_; ++k) r.c_[k] = c_[k] - o.c_[k];
  return r;
}

Series1 Series1::operator*(const Series1& o) const {
  check(o);
  Series1 r(q_);
  for (int a = 0; a <= q_; ++a) {
    if (c_[a] == 0) continue;
    for (int b = 0; a + b <= q_; ++b) {
      if (o.c_[b] == 0) continue;
      r.c_[a + b] += c_[a] * o.c_[b];
    }
  }
  return r;
}

Series1 Series1::operator*(const Rational& v) const {
  Series1 r(q_);
  for (int k = 0; k <= q_; ++k) r.c_[k] = c_[k] * v;
  return r;
}

Series1 Series1::operator-() const {
  Series1 r(q_);
  for (int k = 0; k <= q_; ++k) r.c_[k] = -c_[k];
  return r;
}

Series1 Series1::inverse() const {
  if (c_[0] == 0) throw std::domain_error("Series1::inverse: constant term is zero");
  Series1 r(q_);
  r.c_[0] = 1 / c_[0];
  for (int k = 1; k <= q_; ++k) {
    Rational s = 0;
    for (int j = 1; j <= k; ++j) s += c_[j] * r.c_[k - j];
    r.c_[k] = -s / c_[0];
  }
  return r;
}

Series1 Series1::compose(const Series1& inner) const {
  check(inner);
  if (inner.c_[0] != 0)
    throw std::domain_error("Series1::compose: inner constant term must be zero");
  Series1 r = Series1::constant(q_, c_[q_]);
  for (int k = q_ - 1; k >= 0; --k) r = r * inner + Series1::constant(q_, c_[k]);
  return r;
}

Series1 Series1::reverse() const {
  if (c_[0] != 0 || c_[1] == 0)
    throw std::domain_error("Series1::reverse: need zero constant and nonzero linear term");
  Series1 g(q_);
  g.set(1, 1 / c_[1]);
  for (int k = 2; k <= q_; ++k) {
    Series1 h = compose(g);
    g.c_[k] -= h.c_[k] / c_[1];
  }
  return g;
}

Series1 Series1::shift(int k) const {
  Series1 r(q_);
  for (int j = 0; j + k <= q_; ++j) r.c_[j + k] = c_[j];
  return r;
}

std::string Series1::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= q_; ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    os << c_[k];
    if (k > 0) os << "*" << var << "^" << k;
    first = false;
  }
  if (first) os << "0";
  os << " + O(" << var << "^" << q_ + 1 << ")";
  return os.str();
}

Series1 sqrt_one_plus(int q) { return Series1::binomial_pow(Rational(1, 2), q); }

Series1 u_of_z(int q) {
  Series1 z = Series1::variable(q);
  Series1 u = z;
  Series1 root = sqrt_one_plus(q);
  for (int it = 0; it < q; ++it) u = z * root.compose(u);
  return u;
}

Series1 z_of_u(int q) {
  return Series1::variable(q) * Series1::binomial_pow(Rational(-1, 2), q);
}

// ---------------------------------------------------------------------------
// NCSeries

NCSeries::NCSeries(int m, int q) : m_(m), q_(q) {
  if (m < 1 || m > 15) throw std::invalid_argument("NCSeries: need 1 <= m <= 15");
  if (q < 0 || q > 15) throw std::invalid_argument("NCSeries: need 0 <= q <= 15");
}

std::uint64_t NCSeries::pack(const std::vector<int>& word) {
  if (word.size() > 15) throw std::invalid_argument("NCSeries::pack: word too long");
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 1 || word[i] > 15) throw std::invalid_argument("NCSeries::pack: bad letter");
    k |= static_cast<std::uint64_t>(word[i]) << (4 * i);
  }
  return k;
}

std::vector<int> NCSeries::unpack(std::uint64_t key) {
  std::vector<int> w;
  while (key) {
    w.push_back(static_cast<int>(key & 0xf));
    key >>= 4;
  }
  return w;
}

int NCSeries::key_length(std::uint64_t key) {
  int n = 0;
  while (key) {
    ++n;
    key >>= 4;
  }
  return n;
}

NCSeries NCSeries::constant(int m, int q, const Int& v) {
  NCSeries s(m, q);
  if (v != 0) s.t_[0] = v;
  return s;
}

NCSeries NCSeries::generator_factor(int m, int q, int i, int sign) {
  if (i < 1 || i > m) throw std::invalid_argument("NCSeries: generator out of range");
  NCSeries s(m, q);
  if (sign > 0) {
    s.t_[0] = 1;
    if (q >= 1) s.t_[static_cast<std::uint64_t>(i)] = 1;
  } else {
    // (1+u_i)^{-1} = 1 - u_i + u_i^2 - ...
    std::uint64_t key = 0;
    Int c = 1;
    for (int k = 0; k <= q; ++k) {
      s.t_[key] = c;
      key = (key << 4) | static_cast<std::uint64_t>(i);
      c = -c;
    }
  }
  return s;
}

Int NCSeries::coeff(const std::vector<int>& word) const {
  auto it = t_.find(pack(word));
  return it == t_.end() ? Int(0) : it->second;
}

void NCSeries::add_term(std::uint64_t key, const Int& v) {
  if (key_length(key) > q_) return;
  auto [it, inserted] = t_.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) t_.erase(it);
  } else if (v == 0) {
    t_.erase(it);
  }
}

NCSeries NCSeries::operator+(const NCSeries& o) const {
  check(o);
  NCSeries r = *this;
  for (const auto& [k, v] : o.t_) r.add_term(k, v);
  return r;
}

NCSeries NCSeries::operator-(const NCSeries& o) const {
  check(o);
  NCSeries r = *this;
  for (const auto& [k, v] : o.t_) r.add_term(k, -v);
  return r;
}

NCSeries NCSeries::operator*(const NCSeries& o) const {
  check(o);
  NCSeries r(m_, q_);
  for (const auto& [ka, va] : t_) {
    int la = key_length(ka);
    for (const auto& [kb, vb] : o.t_) {
      if (la + key_length(kb) > q_) continue;
      r.add_term(ka | (kb << (4 * la)), va * vb);
    }
  }
  return r;
}

bool NCSeries::operator==(const NCSeries& o) const {
  return m_ == o.m_ && q_ == o.q_ && t_ == o.t_;
}

NCSeries NCSeries::inverse() const {
  auto it = t_.find(0);
  if (it == t_.end() || (it->second != 1 && it->second != -1))
    throw std::domain_error("NCSeries::inverse: constant term must be +-1");
  Int c0 = it->second;
  NCSeries n = *this;  // n = c0*series - 1, zero constant term
  if (c0 == -1) {
    NCSeries neg(m_, q_);
    for (const auto& [k, v] : n.t_) neg.t_[k] = -v;
    n = neg;
  }
  n.add_term(0, Int(-1));
  // (1+n)^{-1} = sum (-n)^k
  NCSeries r = NCSeries::constant(m_, q_, 1);
  NCSeries pw = NCSeries::constant(m_, q_, 1);
  for (int k = 1; k <= q_; ++k) {
    pw = pw * n;
    if (pw.t_.empty()) break;
    if (k % 2 == 1) {
      r = r - pw;
    } else {
      r = r + pw;
    }
  }
  if (c0 == -1) {
    NCSeries neg(m_, q_);
    for (const auto& [k, v] : r.t_) neg.t_[k] = -v;
    r = neg;
  }
  return r;
}

Series1 NCSeries::collapse() const {
  Series1 s(q_);
  std::vector<Rational> acc(q_ + 1);
  for (const auto& [k, v] : t_) acc[key_length(k)] += Rational(v);
  for (int d = 0; d <= q_; ++d) s.set(d, acc[d]);
  return s;
}

NCSeries magnus_expand(const Word& w, int m, int q) {
  NCSeries r = NCSeries::constant(m, q, 1);
  for (int letter : w.letters()) {
    int g = letter > 0 ? letter : -letter;
    if (g > m) throw std::invalid_argument("magnus_expand: generator out of range");
    r = r * NCSeries::generator_factor(m, q, g, letter > 0 ? 1 : -1);
  }
  return r;
}

// ---------------------------------------------------------------------------
// MultiSeries

MultiSeries::MultiSeries(int m, int q) : m_(m), q_(q) {
  if (m < 1) throw std::invalid_argument("MultiSeries: need m >= 1");
  if (q < 0) throw std::invalid_argument("MultiSeries: need q >= 0");
}

MultiSeries MultiSeries::constant(int m, int q, const Rational& v) {
  MultiSeries s(m, q);
  if (v != 0) s.t_[std::vector<int>(m, 0)] = v;
  return s;
}

MultiSeries MultiSeries::variable(int m, int q, int i) {
  if (i < 1 || i > m) throw std::invalid_argument("MultiSeries::variable: index out of range");
  MultiSeries s(m, q);
  if (q >= 1) {
    std::vector<int> d(m, 0);
    d[i - 1] = 1;
    s.t_[d] = 1;
  }
  return s;
}

MultiSeries MultiSeries::one_plus_v_pow(int m, int q, int i, long e) {
  if (i < 1 || i > m) throw std::invalid_argument("MultiSeries::one_plus_v_pow: index");
  MultiSeries s(m, q);
  for (int k = 0; k <= q; ++k) {
    Int c = binomial_int(e, k);
    if (c == 0) continue;
    std::vector<int> d(m, 0);
    d[i - 1] = k;
    s.t_[d] = Rational(c);
  }
  return s;
}

Rational MultiSeries::coeff(const std::vector<int>& deg) const {
  auto it = t_.find(deg);
  return it == t_.end() ? Rational(0) : it->second;
}

void MultiSeries::add_term(const std::vector<int>& deg, const Rational& v) {
  int tot = 0;
  for (int d : deg) tot += d;
  if (tot > q_) return;
  auto [it, inserted] = t_.try_emplace(deg, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) t_.erase(it);
  } else if (v == 0) {
    t_.erase(it);
  }
}

MultiSeries MultiSeries::operator+(const MultiSeries& o) const {
  check(o);
  MultiSeries r = *this;
  for (const auto& [k, v] : o.t_) r.add_term(k, v);
  return r;
}

MultiSeries MultiSeries::operator-(const MultiSeries& o) const {
  check(o);
  MultiSeries r = *this;
  for (const auto& [k, v] : o.t_) r.add_term(k, -v);
  return r;
}

MultiSeries MultiSeries::operator*(const MultiSeries& o) const {
  check(o);
  MultiSeries r(m_, q_);
  std::vector<int> d(m_);
  for (const auto& [ka, va] : t_) {
    for (const auto& [kb, vb] : o.t_) {
      for (int i = 0; i < m_; ++i) d[i] = ka[i] + kb[i];
      r.add_term(d, va * vb);
    }
  }
  return r;
}

MultiSeries MultiSeries::operator*(const Rational& v) const {
  MultiSeries r(m_, q_);
  if (v == 0) return r;
  for (const auto& [k, c] : t_) r.t_[k] = c * v;
  return r;
}

MultiSeries MultiSeries::operator-() const { return *this * Rational(-1); }

bool MultiSeries::operator==(const MultiSeries& o) const {
  return m_ == o.m_ && q_ == o.q_ && t_ == o.t_;
}

MultiSeries MultiSeries::inverse() const {
  Rational c0 = coeff(std::vector<int>(m_, 0));
  if (c0 == 0) throw std::domain_error("MultiSeries::inverse: constant term is zero");
  MultiSeries n = *this * (1 / c0);
  n.add_term(std::vector<int>(m_, 0), Rational(-1));
  MultiSeries r = MultiSeries::constant(m_, q_, 1);
  MultiSeries pw = MultiSeries::constant(m_, q_, 1);
  for (int k = 1; k <= q_; ++k) {
    pw = pw * n;
    if (pw.is_zero()) break;
    r = (k % 2 == 1) ? r - pw : r + pw;
  }
  return r * (1 / c0);
}

Series1 MultiSeries::specialize_u(int qu) const {
  Series1 s(qu);
  std::vector<Rational> acc(qu + 1);
  for (const auto& [k, v] : t_) {
    int tot = 0;
    for (int d : k) tot += d;
    if (tot <= qu) acc[tot] += v;
  }
  for (int d = 0; d <= qu; ++d) s.set(d, acc[d]);
  return s;
}

int MultiSeries::lowest_total_degree() const {
  int best = -1;
  for (const auto& [k, v] : t_) {
    int tot = 0;
    for (int d : k) tot += d;
    if (best < 0 || tot < best) best = tot;
  }
  return best;
}

std::string MultiSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : t_) {
    if (!first) os << " + ";
    os << v;
    for (int i = 0; i < m_; ++i)
      if (k[i] > 0) os << "*v" << i + 1 << "^" << k[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// LaurentPoly

void LaurentPoly::add_term(int e, const Int& v) {
  auto [it, inserted] = t_.try_emplace(e, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) t_.erase(it);
  } else if (v == 0) {
    t_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, v] : o.t_) r.add_term(e, v);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, v] : o.t_) r.add_term(e, -v);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [ea, va] : t_)
    for (const auto& [eb, vb] : o.t_) r.add_term(ea + eb, va * vb);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, v] : t_) r.t_[e] = -v;
  return r;
}

int LaurentPoly::max_exponent() const {
  if (t_.empty()) throw std::domain_error("LaurentPoly::max_exponent: zero polynomial");
  return t_.rbegin()->first;
}

Series1 LaurentPoly::to_series(int q) const {
  Series1 s(q);
  for (const auto& [e, v] : t_) {
    for (int k = 0; k <= q; ++k) {
      Int b = binomial_int(e, k);
      if (b != 0) s.set(k, s[k] + Rational(v * b));
    }
  }
  return s;
}

std::string LaurentPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : t_) {
    if (!first) os << " + ";
    os << v;
    if (e != 0) os << "*t^" << e;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// MultiLaurent

MultiLaurent MultiLaurent::monomial(int m, const std::vector<int>& e, const Int& c) {
  if (static_cast<int>(e.size()) != m)
    throw std::invalid_argument("MultiLaurent::monomial: exponent size mismatch");
  MultiLaurent p(m);
  if (c != 0) p.t_[e] = c;
  return p;
}

MultiLaurent MultiLaurent::constant(int m, const Int& c) {
  return monomial(m, std::vector<int>(m, 0), c);
}

void MultiLaurent::add_term(const std::vector<int>& e, const Int& v) {
  auto [it, inserted] = t_.try_emplace(e, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) t_.erase(it);
  } else if (v == 0) {
    t_.erase(it);
  }
}

MultiLaurent MultiLaurent::operator+(const MultiLaurent& o) const {
  check(o);
  MultiLaurent r = *this;
  for (const auto& [e, v] : o.t_) r.add_term(e, v);
  return r;
}

MultiLaurent MultiLaurent::operator-(const MultiLaurent& o) const {
  check(o);
  MultiLaurent r = *this;
  for (const auto& [e, v] : o.t_) r.add_term(e, -v);
  return r;
}

MultiLaurent MultiLaurent::operator*(const MultiLaurent& o) const {
  check(o);
  MultiLaurent r(m_);
  std::vector<int> e(m_);
  for (const auto& [ea, va] : t_)
    for (const auto& [eb, vb] : o.t_) {
      for (int i = 0; i < m_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, va * vb);
    }
  return r;
}

MultiLaurent MultiLaurent::operator-() const {
  MultiLaurent r(m_);
  for (const auto& [e, v] : t_) r.t_[e] = -v;
  return r;
}

MultiSeries MultiLaurent::to_series(int q) const {
  MultiSeries s(m_, q);
  for (const auto& [e, v] : t_) {
    MultiSeries mono = MultiSeries::constant(m_, q, Rational(v));
    for (int i = 0; i < m_; ++i)
      if (e[i] != 0) mono = mono * MultiSeries::one_plus_v_pow(m_, q, i + 1, e[i]);
    s = s + mono;
  }
  return s;
}

// ---------------------------------------------------------------------------
// ConwayPoly

ConwayPoly::ConwayPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void ConwayPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ConwayPoly ConwayPoly::operator+(const ConwayPoly& o) const {
  std::vector<Int> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
  return ConwayPoly(std::move(c));
}

ConwayPoly ConwayPoly::operator-(const ConwayPoly& o) const {
  std::vector<Int> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(static_cast<int>(k)) - o.coeff(static_cast<int>(k));
  return ConwayPoly(std::move(c));
}

ConwayPoly ConwayPoly::operator*(const ConwayPoly& o) const {
  if (is_zero() || o.is_zero()) return ConwayPoly();
  std::vector<Int> c(c_.size() + o.c_.size() - 1);
  for (std::size_t a = 0; a < c_.size(); ++a)
    for (std::size_t b = 0; b < o.c_.size(); ++b) c[a + b] += c_[a] * o.c_[b];
  return ConwayPoly(std::move(c));
}

Series1 ConwayPoly::to_series(int q) const {
  Series1 s(q);
  for (int k = 0; k <= q && k < static_cast<int>(c_.size()); ++k) s.set(k, Rational(c_[k]));
  return s;
}

LaurentPoly ConwayPoly::to_laurent() const {
  LaurentPoly z = LaurentPoly::t_pow(1) - LaurentPoly::t_pow(-1);
  LaurentPoly r;
  LaurentPoly pw = LaurentPoly::constant(1);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0) r = r + pw * LaurentPoly::constant(c_[k]);
    pw = pw * z;
  }
  return r;
}

std::string ConwayPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    os << c_[k];
    if (k > 0) os << "*z^" << k;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

ConwayPoly conway_from_laurent(const LaurentPoly& omega) {
  LaurentPoly rem = omega;
  std::map<int, Int> zc;
  while (!rem.is_zero()) {
    int d = rem.max_exponent();
    if (d < 0) throw std::domain_error("conway_from_laurent: not a polynomial in t - t^-1");
    Int c = rem.coeff(d);
    zc[d] = c;
    LaurentPoly zd = LaurentPoly::constant(1);
    LaurentPoly z = LaurentPoly::t_pow(1) - LaurentPoly::t_pow(-1);
    for (int k = 0; k < d; ++k) zd = zd * z;
    rem = rem - zd * LaurentPoly::constant(c);
    if (!rem.is_zero() && rem.max_exponent() >= d)
      throw std::domain_error("conway_from_laurent: elimination failed to reduce degree");
  }
  std::vector<Int> coeffs;
  for (const auto& [d, c] : zc) {
    if (static_cast<int>(coeffs.size()) <= d) coeffs.resize(d + 1);
    coeffs[d] = c;
  }
  return ConwayPoly(std::move(coeffs));
}

}  // namespace mubar
