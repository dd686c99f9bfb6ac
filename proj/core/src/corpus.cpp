#include "mubar/corpus.hpp"

#include <stdexcept>

namespace mubar {

namespace {

// letter order +1, -1, +2, -2, ...
int letter_at(int index, int gens) {
  const int g = index / 2 + 1;
  if (g > gens) throw std::out_of_range("letter_at");
  return index % 2 == 0 ? g : -g;
}

void enumerate_rec(int strands, int max_letters, std::vector<int>& word,
                   std::vector<Braid>& out) {
  Braid b(strands, word);
  if (b.is_pure()) out.push_back(b);
  if (static_cast<int>(word.size()) == max_letters) return;
  for (int li = 0; li < 2 * (strands - 1); ++li) {
    word.push_back(letter_at(li, strands - 1));
    enumerate_rec(strands, max_letters, word, out);
    word.pop_back();
  }
}

}  // namespace

std::vector<Braid> enumerate_pure_braids(int strands, int max_letters) {
  if (strands < 2) throw std::invalid_argument("enumerate_pure_braids: need >= 2 strands");
  // depth-first emission is by prefix; re-bucket by length to get the
  // documented order
  std::vector<Braid> raw;
  std::vector<int> word;
  enumerate_rec(strands, max_letters, word, raw);
  std::vector<Braid> out;
  for (int len = 0; len <= max_letters; ++len)
    for (const auto& b : raw)
      if (static_cast<int>(b.word.size()) == len) out.push_back(b);
  return out;
}

CorpusStats run_corpus(int strands, int max_letters, int q, int max_crossings) {
  CorpusStats st;
  auto braids = enumerate_pure_braids(strands, max_letters);
  st.total = static_cast<int>(braids.size());
  for (std::size_t i = 0; i < braids.size(); ++i) {
    VerifyResult r = verify_factorization(braids[i], q, max_crossings);
    if (r.matched)
      st.matched += 1;
    else
      st.failures.push_back(i);
  }
  return st;
}

}  // namespace mubar
