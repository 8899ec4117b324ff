#include <benchmark/benchmark.h>

#include <complex>

#include "polyherm/bchp.hpp"
#include "polyherm/generating.hpp"
#include "polyherm/orthogonality.hpp"
#include "polyherm/quadrature.hpp"
#include "polyherm/uchp.hpp"
#include "polyherm/wigner.hpp"

namespace {

using namespace polyherm;
using cd = std::complex<double>;

// Exact construction, bypassing the table cache.
void BM_BuildCompose(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  const MultiIndex4 M{k, k, k, k};
  for (auto _ : state) benchmark::DoNotOptimize(bchp::build(M, bchp::Route::compose));
}
BENCHMARK(BM_BuildCompose)->DenseRange(1, 4);

void BM_BuildBinomial(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  const MultiIndex4 M{k, k, k, k};
  for (auto _ : state) benchmark::DoNotOptimize(bchp::build(M, bchp::Route::binomial));
}
BENCHMARK(BM_BuildBinomial)->DenseRange(1, 4);

void BM_EvalPoly(benchmark::State& state) {
  const Poly4& p = bchp::table({3, 2, 3, 2});
  const cd z(0.3, -0.2), w(-0.1, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(p.eval({z, std::conj(z), w, std::conj(w)}));
}
BENCHMARK(BM_EvalPoly);

void BM_ComplexRule(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  // gauss_hermite caches; complex_rule rebuilds the product grid every call.
  for (auto _ : state) benchmark::DoNotOptimize(quad::complex_rule(n));
}
BENCHMARK(BM_ComplexRule)->Arg(10)->Arg(30)->Arg(60);

void BM_BchpGram(benchmark::State& state) {
  const auto idx = indices_with_total_le(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ortho::bchp_gram(idx, 30));
  state.SetLabel(std::to_string(idx.size()) + " indices");
}
BENCHMARK(BM_BchpGram)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_WignerComplex(benchmark::State& state) {
  const MultiIndex4 M{2, 1, 1, 2};
  const cd z(0.4, 0.1), w(-0.3, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(wigner::bchp_via_complex(M, z, w));
}
BENCHMARK(BM_WignerComplex)->Unit(benchmark::kMicrosecond);

void BM_SeriesG4(benchmark::State& state) {
  gen::Args a;
  a.z = cd(0.2, 0.1);
  a.w = cd(-0.1, 0.3);
  a.u = cd(0.1, 0.2);
  a.v = cd(-0.2, 0.1);
  a.up = cd(0.15, -0.1);
  a.vp = cd(0.05, 0.25);
  const unsigned trunc = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gen::series(gen::Kernel::g4, a, trunc));
}
BENCHMARK(BM_SeriesG4)->Arg(10)->Arg(25)->Unit(benchmark::kMicrosecond);

void BM_UchpNumericTable(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const cd z(0.7, -0.4);
  for (auto _ : state) benchmark::DoNotOptimize(uchp::NumericTable(z, std::conj(z), n, n));
}
BENCHMARK(BM_UchpNumericTable)->Arg(25)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
