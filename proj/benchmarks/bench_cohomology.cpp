#include <benchmark/benchmark.h>

#include "liecoh/closed_forms.hpp"
#include "liecoh/cochain.hpp"
#include "liecoh/families.hpp"
#include "liecoh/quadratic.hpp"

using namespace liecoh;

namespace {

void BM_ProfileHeisenbergExt(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  auto g = direct_sum(heisenberg(m), abelian(n - 2 * m - 1));
  for (auto _ : state) benchmark::DoNotOptimize(betti_profile(g));
}
BENCHMARK(BM_ProfileHeisenbergExt)->Args({1, 6})->Args({2, 8})->Args({3, 10})->Unit(benchmark::kMillisecond);

void BM_DiamondB2(benchmark::State& state) {
  std::vector<Scalar> lambda;
  for (int i = 0; i < state.range(0); ++i) lambda.push_back(i % 2 ? Scalar::parse("1+i") : Scalar(i + 1));
  auto g = diamond(lambda).first;
  for (auto _ : state) benchmark::DoNotOptimize(betti(g, 2));
}
BENCHMARK(BM_DiamondB2)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_MiddleRank(benchmark::State& state) {
  auto g = diamond({Scalar(1), Scalar(-1), Scalar(2), Scalar::parse("1/2+1/3i")}).first;
  auto m = coboundary_matrix(g, 4);
  for (auto _ : state) benchmark::DoNotOptimize(rank_exact(m));
}
BENCHMARK(BM_MiddleRank)->Unit(benchmark::kMillisecond);

void BM_PoissonCoboundary(benchmark::State& state) {
  auto q = diamond({Scalar(1), Scalar(2), Scalar(3)}).second;
  const int dim = q.algebra().dim();
  const auto monomials = basis(dim, 3);
  for (auto _ : state)
    for (auto idx : monomials) benchmark::DoNotOptimize(coboundary_via_poisson(q, ExteriorForm::monomial(dim, idx)));
}
BENCHMARK(BM_PoissonCoboundary)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
