#include <benchmark/benchmark.h>

#include "jetmod/category_j.hpp"
#include "jetmod/jets.hpp"
#include "jetmod/lie.hpp"
#include "jetmod/polynomiality.hpp"
#include "jetmod/representation.hpp"

using namespace jetmod;

static void BM_JacobiWn(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto basis = wn_window(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_check({AlgebraKind::Wn, n, nullptr}, basis));
}
BENCHMARK(BM_JacobiWn)->Arg(1)->Arg(2);

static void BM_RepCheckTruncated(benchmark::State& state) {
  const FiniteRep R = tensor_module_truncated(gln_natural(2), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rep_check_exhaustive(R));
}
BENCHMARK(BM_RepCheckTruncated)->Arg(1)->Arg(2);

static void BM_Rank1Detection(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const CategoryJModule M = tensor_truncation_module(JetModuleSpec::tensor_type(1, N, 0, 0));
  const int hi = std::max(10, static_cast<int>(lemma2_bound(M.dim())) + 1);
  std::vector<LatticeVector> window;
  for (int s = -4; s <= hi; ++s) window.push_back(LatticeVector{s});
  const OperatorFamilyWindow f = extract_D(M, 0, window);
  for (auto _ : state) benchmark::DoNotOptimize(detect_polynomial_rank1(f, M.dim()));
}
BENCHMARK(BM_Rank1Detection)->Arg(1)->Arg(2)->Arg(3);

static void BM_JetTable(benchmark::State& state) {
  const auto spec = JetModuleSpec::tensor_type(2, static_cast<int>(state.range(0)), 0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(jet_coefficient_table(spec, 1));
}
BENCHMARK(BM_JetTable)->Arg(1)->Arg(2);
BENCHMARK_MAIN();
