#include <benchmark/benchmark.h>

#include "coulomb/asympt.hpp"
#include "coulomb/radii.hpp"
#include "coulomb/rayleigh.hpp"
#include "coulomb/specfun.hpp"
#include "coulomb/verify.hpp"

using coulomb::cplx;

static void BM_EvalG(benchmark::State& state) {
  const double r = static_cast<double>(state.range(0));
  const coulomb::CoulombParams p{cplx(1.5, 0.0), -1.0};
  for (auto _ : state) benchmark::DoNotOptimize(coulomb::specfun::eval_g(p, cplx(r, 0.5 * r)));
}
BENCHMARK(BM_EvalG)->Arg(1)->Arg(10)->Arg(40);

static void BM_RadiusF(benchmark::State& state) {
  const double L = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coulomb::radii::radius_f(L, -1.0, 0.0));
}
BENCHMARK(BM_RadiusF)->Arg(0)->Arg(5)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_RadiusPhi(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(coulomb::radii::radius_phi(1.0, 0.0, 0.5));
}
BENCHMARK(BM_RadiusPhi)->Unit(benchmark::kMicrosecond);

static void BM_ZetaTable(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coulomb::rayleigh::ZetaTable(k, k / 2 + 2));
}
BENCHMARK(BM_ZetaTable)->Arg(6)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_RayleighZtildeExact(benchmark::State& state) {
  using coulomb::exact::Rational;
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coulomb::rayleigh::rayleigh_Ztilde(Rational(5, 2), Rational(-1), k));
}
BENCHMARK(BM_RayleighZtildeExact)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_EpsilonCoeffs(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coulomb::asympt::epsilon_coeffs(N));
}
BENCHMARK(BM_EpsilonCoeffs)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

static void BM_StarlikeScan(benchmark::State& state) {
  const auto p = coulomb::verify::FamilyParams::coulomb(2.0, -1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(coulomb::verify::starlike_scan(coulomb::radii::Family::F_POWER, p, 2.0, 1024));
}
BENCHMARK(BM_StarlikeScan)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
