#include <benchmark/benchmark.h>

#include <random>

#include "airy/chevalley.hpp"
#include "airy/expsum.hpp"
#include "airy/lie_structure.hpp"
#include "airy/loopmodel.hpp"

using namespace airy;

static void BM_AiryTable(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  auto params = make_character_params(4, FqField(p, 1), std::vector<std::int64_t>{1, 0});
  auto f = f_poly(params);
  ExpsumOptions opt;
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(airy_trace_table(params.field, f, opt));
}
BENCHMARK(BM_AiryTable)->Arg(7)->Arg(11)->Arg(31)->Unit(benchmark::kMicrosecond);

static void BM_HeckeBrute(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  auto params = make_character_params(4, FqField(p, 1), std::vector<std::int64_t>{2, 3});
  ExpsumOptions opt;
  opt.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(hecke_table_bruteforce(params, opt));
}
BENCHMARK(BM_HeckeBrute)->Args({11, 1})->Args({31, 1})->Args({31, 4})->Unit(benchmark::kMillisecond);

static void BM_Decomposition(benchmark::State& state) {
  const auto series = static_cast<Series>(state.range(0));
  const int rank = static_cast<int>(state.range(1));
  ChevalleyAlgebra<RationalField> alg(make_lie_structure(series, rank, Form::Adjoint));
  auto mus = minuscule_coweights(alg.rd());
  for (auto _ : state)
    for (const auto& mu : mus) {
      auto lift = wP_representative(alg, mu);
      for (int r = 1; r < alg.h(); ++r) benchmark::DoNotOptimize(decomposition_check(alg, lift, centralizer_piece(alg, r)));
    }
}
BENCHMARK(BM_Decomposition)
    ->Args({static_cast<long>(Series::A), 4})
    ->Args({static_cast<long>(Series::D), 4})
    ->Args({static_cast<long>(Series::F), 4})
    ->Unit(benchmark::kMillisecond);

static void BM_Factorization(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GLLoopModel m(n, 7, Coweight{IVec(n, 0)});
  std::mt19937_64 rng(42);
  for (auto _ : state) {
    auto g = m.random_I1(rng);
    benchmark::DoNotOptimize(m.factorize_I1(g));
  }
}
BENCHMARK(BM_Factorization)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
