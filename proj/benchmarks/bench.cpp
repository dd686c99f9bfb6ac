#include <benchmark/benchmark.h>

#include "mubar/diagrams.hpp"
#include "mubar/factor.hpp"
#include "mubar/milnor.hpp"
#include "mubar/words.hpp"

namespace {

std::vector<mubar::Word> longitudes(const mubar::Braid& b) {
  auto raw = mubar::longitudes_from_braid(b);
  std::vector<mubar::Word> lams;
  for (int i = 1; i <= b.strands; ++i)
    lams.push_back(mubar::normalize_longitude(raw[i - 1], i));
  return lams;
}

const mubar::Braid kBraid{3, {1, 1, 2, 2, -1, 2}};

void BM_MagnusTable(benchmark::State& state) {
  auto lams = longitudes(kBraid);
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mubar::mu_table(lams, q));
}
BENCHMARK(BM_MagnusTable)->Arg(5)->Arg(7)->Arg(9);

void BM_Gamma(benchmark::State& state) {
  mubar::MuTable t = mubar::mu_table(longitudes(kBraid), 9);
  for (auto _ : state) benchmark::DoNotOptimize(mubar::gamma(t));
}
BENCHMARK(BM_Gamma);

void BM_SkeinLink(benchmark::State& state) {
  mubar::LinkDiagram d = mubar::close_link(kBraid);
  for (auto _ : state) benchmark::DoNotOptimize(mubar::conway_skein(d, 18));
}
BENCHMARK(BM_SkeinLink);

void BM_VerifyItem(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mubar::verify_factorization(kBraid, 7, 18));
}
BENCHMARK(BM_VerifyItem);

}  // namespace

BENCHMARK_MAIN();
