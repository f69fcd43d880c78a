#include <benchmark/benchmark.h>

#include <random>

#include "halfint/bundled_forms.hpp"
#include "halfint/group_words.hpp"
#include "halfint/kr_comparison.hpp"
#include "halfint/lift_solver.hpp"
#include "halfint/period_polynomials.hpp"

using namespace halfint;

namespace {

const FourierExpansion& form_f() {
  static const FourierExpansion f = bundled_form("f13");
  return f;
}

KernelParams kernel(Rational a) {
  KernelParams p;
  p.a = a;
  return p;
}

void BM_IncompleteGamma(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(incomplete_gamma_upper(6.5, x));
    x = x < 20.0 ? x * 1.1 : 0.1;
  }
}
BENCHMARK(BM_IncompleteGamma);

void BM_GammaHalfRemainder(benchmark::State& state) {
  const Complex w(3.0, -40.0);
  for (auto _ : state) benchmark::DoNotOptimize(scaled_gamma_half_remainder(w));
}
BENCHMARK(BM_GammaHalfRemainder);

void BM_EtaExpansion(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(eta_expansion(half_integral_quotient(), int(state.range(0))));
}
BENCHMARK(BM_EtaExpansion)->Arg(100)->Arg(300)->Arg(1000);

void BM_CompletedLambda(benchmark::State& state) {
  for (auto _ : state) {
    LSeriesEvaluator ev(form_f());
    benchmark::DoNotOptimize(ev.lambda(2.0).value);
  }
}
BENCHMARK(BM_CompletedLambda);

void BM_PeriodPolynomial(benchmark::State& state) {
  const LSeriesEvaluator ev(form_f());
  for (auto _ : state) benchmark::DoNotOptimize(period_polynomial_from_lvalues(ev, kernel({17, 4})));
}
BENCHMARK(BM_PeriodPolynomial);

void BM_PeriodByQuadrature(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(period_polynomial_by_quadrature(form_f(), kernel({9, 2})));
}
BENCHMARK(BM_PeriodByQuadrature)->Unit(benchmark::kMillisecond);

void BM_WordDecomposition(benchmark::State& state) {
  std::mt19937_64 rng(0);
  for (auto _ : state) {
    state.PauseTiming();
    const GroupElement g = random_element(GroupTag::PSL2Z, int(state.range(0)), rng);
    state.ResumeTiming();
    benchmark::DoNotOptimize(decompose_psl2z(g));
  }
}
BENCHMARK(BM_WordDecomposition)->Arg(8)->Arg(32);

void BM_KrEichlerSeries(benchmark::State& state) {
  const KREvaluator kr(LSeriesEvaluator(form_f()), int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kr_eichler(kr, Complex(1.0 / 3.0, 1.0)).value);
}
BENCHMARK(BM_KrEichlerSeries)->Arg(150)->Arg(300);

void BM_KrIntegralRepresentation(benchmark::State& state) {
  const KREvaluator kr(LSeriesEvaluator(form_f()), 300);
  for (auto _ : state) benchmark::DoNotOptimize(kr_integral_representation(kr, Complex(0.0, 1.0), 1e-4));
}
BENCHMARK(BM_KrIntegralRepresentation)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
