#include <benchmark/benchmark.h>

#include "ofrac/fractional_ops.hpp"
#include "ofrac/inequality.hpp"
#include "ofrac/quadrature.hpp"

namespace {

using namespace ofrac;

const Interval kUnit{0.0, 1.0};

void BM_SingularIntegral(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto phi = [](double t) { return (1.0 - t) * (1.0 - t) * std::sqrt(1.0 - t); };
    for (auto _ : state) {
        QuadResult r = singular_integral(phi, 0.0, 1.0, 0.5, n);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_SingularIntegral)->Arg(128)->Arg(512)->Arg(2048);

void BM_CaputoQuadrature(benchmark::State& state) {
    const ModelFunction f = make_power_at_b(1.0, 2.5, kUnit);
    const FractionalSetup setup = FractionalSetup::make(0.5);
    const OpOptions opts{static_cast<int>(state.range(0)), false};
    for (auto _ : state) {
        FractionalEvaluation e = caputo_right(f, setup, 0.25, opts);
        benchmark::DoNotOptimize(e.value);
    }
}
BENCHMARK(BM_CaputoQuadrature)->Arg(128)->Arg(512);

void BM_CaputoClosedForm(benchmark::State& state) {
    const ModelFunction f = make_power_at_b(1.0, 2.5, kUnit);
    const FractionalSetup setup = FractionalSetup::make(0.5);
    for (auto _ : state) {
        FractionalEvaluation e = caputo_right(f, setup, 0.25);
        benchmark::DoNotOptimize(e.value);
    }
}
BENCHMARK(BM_CaputoClosedForm);

void BM_ProductTheoremA(benchmark::State& state) {
    const FractionalSetup setup = FractionalSetup::make(0.5);
    const auto corpus = sample_corpus(setup, kUnit, 2, 42);
    for (auto _ : state) {
        InequalityReport r =
            eval_product_theorem(corpus[0], corpus[1], setup, TheoremId::A);
        benchmark::DoNotOptimize(r.rhs);
    }
}
BENCHMARK(BM_ProductTheoremA);

} // namespace

BENCHMARK_MAIN();
