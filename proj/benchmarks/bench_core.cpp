#include <benchmark/benchmark.h>

#include "ellpl/dvariant_sections.hpp"
#include "ellpl/eisenstein_modular.hpp"
#include "ellpl/jacobi_kronecker.hpp"
#include "ellpl/weierstrass_theta.hpp"

using namespace ellpl;

namespace {

const UpperHalfPoint kTau(0.1, 1.1);
const Complex kZ(0.21, 0.13);

void BM_ThetaShared(benchmark::State& state) {
    const TauData td(kTau);
    for (auto _ : state) benchmark::DoNotOptimize(td.theta(kZ));
}
BENCHMARK(BM_ThetaShared);

void BM_ThetaElementary(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(theta_elementary(kZ, kTau));
}
BENCHMARK(BM_ThetaElementary);

void BM_JacobiJ(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(jacobi_J({kZ, Complex(-0.17, 0.34), kTau}));
}
BENCHMARK(BM_JacobiJ);

void BM_SDAll(benchmark::State& state) {
    const int K = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(s_D_all(K, 2, kZ, kTau));
}
BENCHMARK(BM_SDAll)->Arg(2)->Arg(4)->Arg(6);

void BM_ModularF(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        clear_eisenstein_cache();
        benchmark::DoNotOptimize(modular_F(4, 1, 0, N, kTau));
    }
}
BENCHMARK(BM_ModularF)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_DeRhamDefect(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SectionEvaluator p = build_p(n, 2);
    const Complex z = 0.21 * kTau.value() + 0.42;
    for (auto _ : state) benchmark::DoNotOptimize(apply_deRham1(n, p, z, kTau));
}
BENCHMARK(BM_DeRhamDefect)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
