// Microbenchmarks for the dense linear-algebra hot paths.

#include <benchmark/benchmark.h>

#include <random>

#include "modwedge/fock.hpp"
#include "modwedge/lie_algebra.hpp"
#include "modwedge/modular.hpp"
#include "modwedge/verify.hpp"

namespace mw = modwedge;

static void BM_ModularPair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const auto v = mw::verify::random_standard_subspace(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mw::modular::modular_pair(v));
}
BENCHMARK(BM_ModularPair)->Arg(4)->Arg(8)->Arg(16);

static void BM_StandardFromPair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const auto pair = mw::verify::random_modular_pair(n, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(mw::modular::standard_from_pair(pair));
}
BENCHMARK(BM_StandardFromPair)->Arg(4)->Arg(8)->Arg(16);

static void BM_RealIntersect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  const auto v = mw::verify::random_standard_subspace(n, rng);
  const auto w = v.apply(mw::verify::random_unitary(n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(mw::hilbert::real_intersect(v, w));
}
BENCHMARK(BM_RealIntersect)->Arg(4)->Arg(8)->Arg(16);

static void BM_EulerCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = mw::liealg::make_sl(n);
  const auto h = mw::liealg::sl_euler_element(g, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(mw::liealg::euler_check(g, h));
}
BENCHMARK(BM_EulerCheck)->Arg(3)->Arg(4)->Arg(6);

static void BM_WeylMatrix(benchmark::State& state) {
  const mw::fock::TruncatedFock f(1, static_cast<int>(state.range(0)));
  Eigen::VectorXcd x(1);
  x << std::complex<double>(0.4, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(f.weyl_matrix(x));
}
BENCHMARK(BM_WeylMatrix)->Arg(12)->Arg(20)->Arg(32);

BENCHMARK_MAIN();
