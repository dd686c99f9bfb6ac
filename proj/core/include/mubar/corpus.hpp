#pragma once

#include <cstddef>
#include <vector>

#include "mubar/diagrams.hpp"
#include "mubar/words.hpp"

namespace mubar {

// All pure braids on `strands` strands with word length <= max_letters, in a
// fixed deterministic order: by length, then lexicographically with the
// letter order +1, -1, +2, -2, ...
std::vector<Braid> enumerate_pure_braids(int strands, int max_letters);

struct CorpusStats {
  int total = 0;
  int matched = 0;
  std::vector<std::size_t> failures;  // indices into the enumeration
};

// Factorization check over the whole enumeration.
CorpusStats run_corpus(int strands, int max_letters, int q, int max_crossings);

}  // namespace mubar
