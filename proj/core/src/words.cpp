#include "mubar/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mubar {

Word reduce(const std::vector<int>& raw) { return Word::from_letters(raw); }

Word Word::from_letters(const std::vector<int>& raw) {
  Word w;
  for (int l : raw) {
    if (l == 0) throw std::invalid_argument("Word: zero letter");
    if (!w.ls_.empty() && w.ls_.back() == -l) {
      w.ls_.pop_back();
    } else {
      w.ls_.push_back(l);
    }
  }
  return w;
}

Word Word::generator(int i, int sign) {
  if (i < 1) throw std::invalid_argument("Word::generator: index must be positive");
  Word w;
  w.ls_.push_back(sign >= 0 ? i : -i);
  return w;
}

Word Word::operator*(const Word& o) const {
  std::vector<int> raw = ls_;
  raw.insert(raw.end(), o.ls_.begin(), o.ls_.end());
  return from_letters(raw);
}

Word Word::inverse() const {
  Word w;
  w.ls_.reserve(ls_.size());
  for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) w.ls_.push_back(-*it);
  return w;
}

Word Word::reversed() const {
  Word w;
  w.ls_.assign(ls_.rbegin(), ls_.rend());
  return w;  // a reduced word stays reduced under reversal
}

Word Word::pow(int e) const {
  Word r;
  Word base = e >= 0 ? *this : inverse();
  for (int k = 0; k < std::abs(e); ++k) r = r * base;
  return r;
}

int Word::exponent_sum() const {
  int s = 0;
  for (int l : ls_) s += l > 0 ? 1 : -1;
  return s;
}

int Word::exponent_sum(int gen) const {
  int s = 0;
  for (int l : ls_) {
    if (l == gen) ++s;
    if (l == -gen) --s;
  }
  return s;
}

int Word::max_generator() const {
  int m = 0;
  for (int l : ls_) m = std::max(m, std::abs(l));
  return m;
}

Word Word::parse(const std::string& text) {
  std::istringstream is(text);
  std::vector<int> raw;
  std::string tok;
  while (is >> tok) {
    if (tok[0] != 'X' && tok[0] != 'x')
      throw std::invalid_argument("Word::parse: bad token '" + tok + "'");
    std::size_t caret = tok.find('^');
    int gen = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
    int exp = 1;
    if (caret != std::string::npos) exp = std::stoi(tok.substr(caret + 1));
    if (gen < 1) throw std::invalid_argument("Word::parse: bad generator in '" + tok + "'");
    for (int k = 0; k < std::abs(exp); ++k) raw.push_back(exp >= 0 ? gen : -gen);
  }
  return from_letters(raw);
}

std::string Word::str() const {
  if (ls_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < ls_.size(); ++k) {
    if (k) os << ' ';
    os << 'X' << std::abs(ls_[k]);
    if (ls_[k] < 0) os << "^-1";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Braid

Braid::Braid(int m, std::vector<int> w) : strands(m), word(std::move(w)) {
  if (m < 1) throw std::invalid_argument("Braid: need at least one strand");
  for (int l : word)
    if (l == 0 || std::abs(l) > m - 1)
      throw std::invalid_argument("Braid: generator index out of range");
}

std::vector<int> Braid::permutation() const {
  std::vector<int> pos(strands);  // pos[p-1] = strand currently at position p
  std::iota(pos.begin(), pos.end(), 1);
  for (int l : word) std::swap(pos[std::abs(l) - 1], pos[std::abs(l)]);
  return pos;
}

bool Braid::is_pure() const {
  auto p = permutation();
  for (int k = 0; k < strands; ++k)
    if (p[k] != k + 1) return false;
  return true;
}

Braid Braid::inverse() const {
  std::vector<int> w(word.rbegin(), word.rend());
  for (int& l : w) l = -l;
  return Braid(strands, std::move(w));
}

namespace {

// One Artin generator applied to a word.
Word apply_letter(int letter, int strands, const Word& w) {
  int k = std::abs(letter);
  std::vector<int> raw;
  raw.reserve(3 * w.size());
  for (int l : w.letters()) {
    int g = std::abs(l);
    int s = l > 0 ? 1 : -1;
    auto emit = [&](std::initializer_list<int> img) {
      if (s > 0) {
        raw.insert(raw.end(), img.begin(), img.end());
      } else {
        for (auto it = std::rbegin(img); it != std::rend(img); ++it) raw.push_back(-*it);
      }
    };
    if (letter > 0) {
      if (g == k) {
        emit({k, k + 1, -k});
      } else if (g == k + 1) {
        emit({k});
      } else {
        raw.push_back(l);
      }
    } else {
      if (g == k) {
        emit({k + 1});
      } else if (g == k + 1) {
        emit({-(k + 1), k, k + 1});
      } else {
        raw.push_back(l);
      }
    }
  }
  return Word::from_letters(raw);
}

}  // namespace

Word artin_apply(const Braid& b, const Word& w) {
  if (w.max_generator() > b.strands)
    throw std::invalid_argument("artin_apply: word uses generators beyond strand count");
  // The automorphism of the whole braid is built from the top letter inward,
  // so that the top arcs of the braid carry the images of the bottom
  // meridians (matches the Wirtinger route).
  Word r = w;
  for (auto it = b.word.rbegin(); it != b.word.rend(); ++it)
    r = apply_letter(*it, b.strands, r);
  return r;
}

namespace {

// image must be the reduced form of A x_i A^{-1}; returns the unique shortest
// conjugator (which never ends in x_i^{+-1}).
Word strip_frame(const Word& image, int i) {
  const auto& ls = image.letters();
  std::size_t n = ls.size();
  if (n % 2 == 0 || ls[n / 2] != i)
    throw std::logic_error("strip_frame: image is not a framed conjugate of the meridian");
  for (std::size_t j = 0; j < n / 2; ++j)
    if (ls[j] != -ls[n - 1 - j])
      throw std::logic_error("strip_frame: conjugation frame mismatch");
  return Word::from_letters({ls.begin(), ls.begin() + n / 2});
}

}  // namespace

std::vector<Word> braid_conjugators(const Braid& b) {
  if (!b.is_pure()) throw std::invalid_argument("braid_conjugators: braid is not pure");
  std::vector<Word> out;
  out.reserve(b.strands);
  for (int i = 1; i <= b.strands; ++i)
    out.push_back(strip_frame(artin_apply(b, Word::generator(i)), i));
  return out;
}

std::vector<std::vector<Word>> underpass_factors(const Braid& b) {
  if (!b.is_pure()) throw std::invalid_argument("underpass_factors: braid is not pure");
  const int m = b.strands;
  std::vector<Word> arc(m + 1);
  std::vector<int> strand(m + 1);
  for (int p = 1; p <= m; ++p) {
    arc[p] = Word::generator(p);
    strand[p] = p;
  }
  std::vector<std::vector<Word>> factors(m + 1);
  for (int letter : b.word) {
    const int k = letter > 0 ? letter : -letter;
    if (k < 1 || k + 1 > m) throw std::invalid_argument("underpass_factors: letter out of range");
    const int over = letter > 0 ? k : k + 1, under = letter > 0 ? k + 1 : k;
    const int sign = letter > 0 ? 1 : -1;
    Word w = arc[over].pow(sign);
    factors[strand[under]].push_back(w);
    arc[under] = w * arc[under] * w.inverse();
    std::swap(arc[k], arc[k + 1]);
    std::swap(strand[k], strand[k + 1]);
  }
  return {factors.begin() + 1, factors.end()};
}

namespace {

// Rewrite a word from the braid's bottom meridians into the meridians of the
// string link: even strands run downward, so their meridians appear with the
// opposite sign.
Word alternate_meridians(const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int l : w.letters()) {
    const int j = l > 0 ? l : -l;
    out.push_back(j % 2 == 0 ? -l : l);
  }
  return Word::from_letters(out);
}

}  // namespace

std::vector<Word> longitudes_from_braid(const Braid& b) {
  auto factors = underpass_factors(b);
  std::vector<Word> out;
  out.reserve(b.strands);
  for (int i = 1; i <= b.strands; ++i) {
    // compose the under-pass factors from the top of the braid downward
    Word ell;
    for (auto it = factors[i - 1].rbegin(); it != factors[i - 1].rend(); ++it)
      ell = ell * *it;
    // even strands are traversed against the braid's upward reading
    if (i % 2 == 0) ell = ell.inverse();
    out.push_back(alternate_meridians(ell));
  }
  return out;
}

Word normalize_longitude(const Word& raw, int i) {
  return Word::generator(i).pow(-raw.exponent_sum()) * raw;
}

// ---------------------------------------------------------------------------
// Wirtinger

WirtingerPresentation WirtingerPresentation::from_braid(const Braid& b) {
  WirtingerPresentation p;
  int m = b.strands;
  std::vector<int> arc_at(m);  // current arc at each position (1-based arcs)
  std::iota(arc_at.begin(), arc_at.end(), 1);
  int next_arc = m + 1;
  p.meridian_arcs = arc_at;
  for (int l : b.word) {
    int k = std::abs(l);
    int sign = l > 0 ? 1 : -1;
    int over_pos = sign > 0 ? k : k + 1;  // position of the overpass strand
    int under_pos = sign > 0 ? k + 1 : k;
    Relation r;
    r.over = arc_at[over_pos - 1];
    r.in = arc_at[under_pos - 1];
    r.out = next_arc++;
    r.sign = sign;
    p.relations.push_back(r);
    // The strands swap positions; the over strand keeps its arc.
    int over_arc = arc_at[over_pos - 1];
    arc_at[k - 1] = sign > 0 ? r.out : over_arc;
    arc_at[k] = sign > 0 ? over_arc : r.out;
  }
  p.generators = next_arc - 1;
  p.validate();
  return p;
}

void WirtingerPresentation::validate() const {
  int m = static_cast<int>(meridian_arcs.size());
  if (generators < m || static_cast<int>(relations.size()) != generators - m)
    throw std::invalid_argument("WirtingerPresentation: deficiency is not m");
  auto in_range = [&](int a) { return a >= 1 && a <= generators; };
  for (const auto& r : relations)
    if (!in_range(r.out) || !in_range(r.in) || !in_range(r.over) || std::abs(r.sign) != 1)
      throw std::invalid_argument("WirtingerPresentation: relation references missing generator");
  for (int a : meridian_arcs)
    if (!in_range(a)) throw std::invalid_argument("WirtingerPresentation: bad meridian arc");
}

std::vector<Word> nilpotent_longitudes(const WirtingerPresentation& p, int q) {
  if (q < 1) throw std::invalid_argument("nilpotent_longitudes: q must be >= 1");
  p.validate();
  int m = static_cast<int>(p.meridian_arcs.size());

  // Strand membership: follow the relation chain from each 0-end meridian.
  std::vector<int> strand_of(p.generators + 1, 0);
  std::vector<int> end_arc(m + 1, 0);
  std::vector<int> out_of_in(p.generators + 1, 0);
  for (const auto& r : p.relations) {
    if (out_of_in[r.in] != 0)
      throw std::invalid_argument("nilpotent_longitudes: arc breaks at two crossings");
    out_of_in[r.in] = r.out;
  }
  for (int i = 1; i <= m; ++i) {
    int a = p.meridian_arcs[i - 1];
    while (a != 0) {
      if (strand_of[a] != 0)
        throw std::invalid_argument("nilpotent_longitudes: strand chains intersect");
      strand_of[a] = i;
      end_arc[i] = a;
      a = out_of_in[a];
    }
  }
  for (int a = 1; a <= p.generators; ++a)
    if (strand_of[a] == 0)
      throw std::invalid_argument("nilpotent_longitudes: arc unreachable from any meridian");

  // Iterated substitution: arcs start as their strand meridian (correct mod
  // F_2); each full round improves correctness one lower-central step.
  std::vector<Word> arc(p.generators + 1);
  for (int a = 1; a <= p.generators; ++a) arc[a] = Word::generator(strand_of[a]);
  for (int round = 0; round < q; ++round) {
    bool changed = false;
    for (const auto& r : p.relations) {
      Word w = arc[r.over].pow(r.sign) * arc[r.in] * arc[r.over].pow(-r.sign);
      if (!(w == arc[r.out])) {
        arc[r.out] = w;
        changed = true;
      }
    }
    if (!changed) break;
  }

  std::vector<Word> out;
  out.reserve(m);
  for (int i = 1; i <= m; ++i) out.push_back(strip_frame(arc[end_arc[i]], i));
  return out;
}

}  // namespace mubar
