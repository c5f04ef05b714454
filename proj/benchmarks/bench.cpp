// Microbenchmarks for the hot paths: derivative accumulation, matrix
// construction, character evaluation ranks, and both Betti computations.

#include <benchmark/benchmark.h>

#include "alexstrat/covers.hpp"
#include "alexstrat/strata.hpp"

using namespace alexstrat;

namespace {

const char* kTrefoil = "gens: x, y\nrels: x y x y^-1 x^-1 y^-1\n";

// Rank-6 presentation whose two relators are products of conjugates of one
// common base word; its derivative matrix rows are scalar multiples of the
// base gradient.
const char* kPencil =
    "gens: x1, x2, x3, x4, x5, x6\n"
    "rels:\n"
    "  x1 x1 x4 x1^-1 x4^-1 x2 x5 x2^-1 x5^-1 x3 x6 x3^-1 x6^-1 x1^-1 "
    "  x2 x1 x4 x1^-1 x4^-1 x2 x5 x2^-1 x5^-1 x3 x6 x3^-1 x6^-1 x2^-1 "
    "  x3 x1 x4 x1^-1 x4^-1 x2 x5 x2^-1 x5^-1 x3 x6 x3^-1 x6^-1 x3^-1 ;\n"
    "  x4 x1 x4 x1^-1 x4^-1 x2 x5 x2^-1 x5^-1 x3 x6 x3^-1 x6^-1 x4^-1 "
    "  x5 x1 x4 x1^-1 x4^-1 x2 x5 x2^-1 x5^-1 x3 x6 x3^-1 x6^-1 x5^-1 "
    "  x6 x1 x4 x1^-1 x4^-1 x2 x5 x2^-1 x5^-1 x3 x6 x3^-1 x6^-1 x6^-1\n";

void BM_FoxGradient(benchmark::State& state) {
  const Presentation pres = parse_presentation(kPencil);
  const Word& w = pres.relators[1];
  for (auto _ : state) benchmark::DoNotOptimize(fox_gradient(w, pres.rank()));
}
BENCHMARK(BM_FoxGradient);

void BM_AlexanderMatrix(benchmark::State& state) {
  const Presentation pres = parse_presentation(kPencil);
  for (auto _ : state) benchmark::DoNotOptimize(alexander_matrix(pres));
}
BENCHMARK(BM_AlexanderMatrix);

void BM_SmithNormalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  IntMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Int((i * 31 + j * 17) % 23 - 11);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8);

void BM_RankAtCharacter(benchmark::State& state) {
  const Presentation pres = parse_presentation(kTrefoil);
  const StrataContext ctx{pres};
  const TorsionCharacter chi(2, 6, {1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(ctx.matrix_rank_at(chi));
}
BENCHMARK(BM_RankAtCharacter);

void BM_TorsionScan(benchmark::State& state) {
  const Presentation pres = parse_presentation(kTrefoil);
  for (auto _ : state)
    benchmark::DoNotOptimize(torsion_scan(pres, 1, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TorsionScan)->Arg(6)->Arg(12);

void BM_BettiFormula(benchmark::State& state) {
  const Presentation pres = parse_presentation(kTrefoil);
  const StrataContext ctx{pres};
  const Epimorphism epi = validate_epimorphism(
      pres, FiniteAbelianGroup{{static_cast<int>(state.range(0))}}, {{1}, {1}});
  for (auto _ : state) benchmark::DoNotOptimize(betti_cover_formula(ctx, epi));
}
BENCHMARK(BM_BettiFormula)->Arg(6)->Arg(12);

void BM_BettiOracle(benchmark::State& state) {
  const Presentation pres = parse_presentation(kTrefoil);
  const AlexanderMatrix m = alexander_matrix(pres);
  const Epimorphism epi = validate_epimorphism(
      pres, FiniteAbelianGroup{{static_cast<int>(state.range(0))}}, {{1}, {1}});
  for (auto _ : state) benchmark::DoNotOptimize(betti_cover_oracle(m, epi));
}
BENCHMARK(BM_BettiOracle)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
