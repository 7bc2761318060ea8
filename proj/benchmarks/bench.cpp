#include <benchmark/benchmark.h>

#include <random>

#include "ftqft/chartable.hpp"
#include "ftqft/fields.hpp"
#include "ftqft/rarita.hpp"
#include "ftqft/tqft2.hpp"
#include "ftqft/verlinde.hpp"

using namespace ftqft;

namespace {

void BM_CyclotomicProduct(benchmark::State& state) {
  auto a = Cyclotomic::zeta(24, 5) + Cyclotomic::zeta(24, 7).scaled(Rat(3, 2));
  auto b = Cyclotomic::zeta(24, 11) - Cyclotomic(Rat(1, 3));
  for (auto _ : state) {
    auto c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CyclotomicProduct);

void BM_CharacterTableS4(benchmark::State& state) {
  auto g = symmetric_group(4);
  for (auto _ : state) {
    auto t = character_table(g);
    benchmark::DoNotOptimize(t.degrees.data());
  }
}
BENCHMARK(BM_CharacterTableS4);

void BM_SurfaceDirectS4Genus3(benchmark::State& state) {
  auto pt = GSet::point(symmetric_group(4));
  for (auto _ : state) {
    auto z = z_surface_direct(pt, nullptr, 3);
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_SurfaceDirectS4Genus3);

void BM_FrobeniusAlgebraS4(benchmark::State& state) {
  auto pt = GSet::point(symmetric_group(4));
  for (auto _ : state) {
    auto f = frobenius_algebra(pt);
    benchmark::DoNotOptimize(f.dimension());
  }
}
BENCHMARK(BM_FrobeniusAlgebraS4);

void BM_ModularDataS3(benchmark::State& state) {
  auto g = symmetric_group(3);
  Cochain zero(g, 3);
  for (auto _ : state) {
    auto m = modular_data(g, zero);
    auto ring = fusion(m);
    benchmark::DoNotOptimize(ring.rank);
  }
}
BENCHMARK(BM_ModularDataS3);

void BM_FiberReportNonNull(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto m = build_clifford(n);
  std::mt19937_64 rng(7);
  Covector k(n);
  do {
    for (int mu = 0; mu < n; ++mu) k[mu] = Rat(static_cast<long>(rng() % 19) - 9);
  } while (covector_norm_sq(m, k) == 0);
  for (auto _ : state) {
    auto rep = fiber_report(m, k);
    benchmark::DoNotOptimize(rep.rank_b);
  }
}
BENCHMARK(BM_FiberReportNonNull)->Arg(4)->Arg(6)->Arg(10)->Arg(11);

void BM_FiberReportCanonicalNull(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto m = build_clifford(n);
  for (auto _ : state) {
    auto rep = fiber_report(m, canonical_null(n));
    benchmark::DoNotOptimize(rep.dim_r_prime);
  }
}
BENCHMARK(BM_FiberReportCanonicalNull)->Arg(4)->Arg(10)->Arg(11);

}  // namespace

BENCHMARK_MAIN();
