#include <benchmark/benchmark.h>

#include "scottrep/generate.hpp"
#include "scottrep/karoubi.hpp"
#include "scottrep/normalize.hpp"
#include "scottrep/retracts.hpp"
#include "scottrep/rewrite.hpp"
#include "scottrep/syntax.hpp"

using namespace scottrep;

namespace {

const Term& example() {
  static const Term t = parse_scoped("\\.x5 (x1 x2 (x4 x3)) [x1,x2,x3,x1] @3");
  return t;
}

std::vector<Term> corpus(std::size_t count) {
  Rng rng(99);
  std::vector<Term> out;
  TermGenOptions opt;
  opt.allow_self_application = false;
  while (out.size() < count) {
    if (auto t = random_normalizing_term(rng, rng.between(0, 3), opt)) out.push_back(*t);
  }
  return out;
}

void BM_PropagateExample(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(propagate_subst(example()));
}
BENCHMARK(BM_PropagateExample);

void BM_NormalizeExample(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(normalize(example()));
}
BENCHMARK(BM_NormalizeExample);

void BM_NormalizeCorpus(benchmark::State& state) {
  const auto terms = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const Term& t : terms) benchmark::DoNotOptimize(normalize(t));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NormalizeCorpus)->Arg(100)->Arg(1000);

void BM_PropagateCorpus(benchmark::State& state) {
  const auto terms = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const Term& t : terms) benchmark::DoNotOptimize(propagate_subst(t));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PropagateCorpus)->Arg(100);

void BM_BetaEqCorpus(benchmark::State& state) {
  const auto terms = corpus(200);
  for (auto _ : state) {
    for (std::size_t k = 0; k + 1 < terms.size(); k += 2) {
      if (terms[k].scope() == terms[k + 1].scope()) benchmark::DoNotOptimize(beta_eq(terms[k], terms[k + 1]));
    }
  }
}
BENCHMARK(BM_BetaEqCorpus);

void BM_KaroubiEnvelopeFixture(benchmark::State& state) {
  const FinCategory c = three_object_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(set_karoubi(c));
}
BENCHMARK(BM_KaroubiEnvelopeFixture);

void BM_KaroubiCheckFixture(benchmark::State& state) {
  const FinCategory c = three_object_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(karoubi_check(c, "fixture"));
}
BENCHMARK(BM_KaroubiCheckFixture);

void BM_ScottRoundtrip(benchmark::State& state) {
  SampleOptions opt;
  opt.samples = 10;
  for (auto _ : state) benchmark::DoNotOptimize(scott_roundtrip(static_cast<std::size_t>(state.range(0)), opt));
}
BENCHMARK(BM_ScottRoundtrip)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
