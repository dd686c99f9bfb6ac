#pragma once

#include <string>
#include <vector>

#include "mubar/rational.hpp"

namespace mubar {

// Reduced word in free-group generators x_1..x_m.  Letters are signed
// generator indices: +i for x_i, -i for x_i^{-1}.  Always stored reduced.
class Word {
 public:
  Word() = default;
  static Word from_letters(const std::vector<int>& raw);
  static Word generator(int i, int sign = 1);

  const std::vector<int>& letters() const { return ls_; }
  bool is_identity() const { return ls_.empty(); }
  std::size_t size() const { return ls_.size(); }

  Word operator*(const Word& o) const;
  Word inverse() const;
  Word pow(int e) const;
  // letters in the opposite order (the opposite-composition image)
  Word reversed() const;
  bool operator==(const Word& o) const { return ls_ == o.ls_; }

  int exponent_sum() const;
  int exponent_sum(int gen) const;
  int max_generator() const;  // 0 for the identity

  // Token format: "X1 X2^-1", space separated.
  static Word parse(const std::string& text);
  std::string str() const;

 private:
  std::vector<int> ls_;
};

// Free reduction of a raw letter sequence; idempotent.
Word reduce(const std::vector<int>& raw);

// Braid on `strands` strands; the word lists sigma_k as +k, sigma_k^{-1} as
// -k, read bottom to top.
struct Braid {
  int strands = 1;
  std::vector<int> word;

  Braid() = default;
  Braid(int m, std::vector<int> w);

  // Image of each bottom position under the induced permutation.
  std::vector<int> permutation() const;
  bool is_pure() const;
  Braid inverse() const;
};

// Image of w under the free-group automorphism induced by b:
// sigma_k: x_k -> x_k x_{k+1} x_k^{-1}, x_{k+1} -> x_k.
Word artin_apply(const Braid& b, const Word& w);

// The over-arc factors (over-arc^sign, written in the bottom meridians) met
// by each strand of a pure braid at its under-passes, bottom to top.
std::vector<std::vector<Word>> underpass_factors(const Braid& b);

// Raw longitudes of the string link obtained from a pure braid by reversing
// the even strands (odd strands run up, even strands down).  Each longitude is
// the product of the strand's under-pass factors read along the strand's own
// orientation, written in the string link's bottom meridians; see the
// longitude notes in the README.
std::vector<Word> longitudes_from_braid(const Braid& b);

// Shortest conjugator A_i with artin_apply(b, x_i) = A_i x_i A_i^{-1}
// (A_i never ends in x_i^{+-1}); agrees with the raw longitude up to a power
// of x_i.
std::vector<Word> braid_conjugators(const Braid& b);

// x_i^{-e} * raw, where e is the total exponent sum of raw.
Word normalize_longitude(const Word& raw, int i);

// Wirtinger presentation of deficiency m: n arc generators, n-m relations,
// each expressing one arc as a conjugate of another by an overpass arc.
struct WirtingerPresentation {
  struct Relation {
    int out;   // arc defined by this relation
    int in;    // arc entering the crossing
    int over;  // overpass arc
    int sign;  // crossing sign
  };
  int generators = 0;
  std::vector<Relation> relations;
  std::vector<int> meridian_arcs;  // 0-end arc of each strand, in strand order

  static WirtingerPresentation from_braid(const Braid& b);
  void validate() const;
};

// Raw longitudes (shortest conjugators, as for longitudes_from_braid) solved
// from a Wirtinger presentation by iterated substitution from the 0-end
// meridians; correct modulo the (q+1)-st lower central series term.
std::vector<Word> nilpotent_longitudes(const WirtingerPresentation& p, int q);

}  // namespace mubar
