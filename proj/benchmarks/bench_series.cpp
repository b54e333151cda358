// Throughput of the hot paths: coefficient-table generation at the orders
// the late-order fits consume, the fits themselves, one full asymptotic
// evaluation, and direct lattice iteration.

#include <benchmark/benchmark.h>

#include "dp1asym/evaluator.hpp"
#include "dp1asym/lateorder.hpp"
#include "dp1asym/lattice.hpp"
#include "dp1asym/series.hpp"

using namespace dp1;

namespace {

Params params_a(const Context& ctx) {
    return Params(Complex(ctx, -1), Complex(ctx, 1), Complex(ctx));
}

Params params_b(const Context& ctx) {
    return Params(Complex(ctx, 3), Complex(ctx, 1), Complex(ctx));
}

void BM_coefficients_family_a(benchmark::State& state) {
    const Context ctx(512);
    const Params params = params_a(ctx);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            compute_coefficients(params, Family::TypeA, SignBranch::Plus, state.range(0)));
    }
}
BENCHMARK(BM_coefficients_family_a)->Arg(100)->Arg(250);

void BM_coefficients_family_b(benchmark::State& state) {
    const Context ctx(512);
    const Params params = params_b(ctx);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            compute_coefficients(params, Family::TypeB, SignBranch::Plus, state.range(0)));
    }
}
BENCHMARK(BM_coefficients_family_b)->Arg(250)->Arg(500);

void BM_lambda_fit_family_a(benchmark::State& state) {
    const Context ctx(512);
    const CoefficientTable table =
        compute_coefficients(params_a(ctx), Family::TypeA, SignBranch::Plus, 251);
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_lambda_type_a(table, 250));
    }
}
BENCHMARK(BM_lambda_fit_family_a);

void BM_lambda_fit_family_b(benchmark::State& state) {
    const Context ctx(512);
    const CoefficientTable table =
        compute_coefficients(params_b(ctx), Family::TypeB, SignBranch::Plus, 500);
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_lambda_type_b(table));
    }
}
BENCHMARK(BM_lambda_fit_family_b);

void BM_evaluate_optimal(benchmark::State& state) {
    const Context ctx(512);
    const Params params = params_a(ctx);
    const CoefficientTable table =
        compute_coefficients(params, Family::TypeA, SignBranch::Minus, 320);
    const LateOrderModel model = estimate_lambda_type_a(table, 320);
    const RemainderSpec spec = RemainderSpec::type_a(ctx);
    const Real n(ctx, 100);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(params, Family::TypeA, table, model, spec, n));
    }
}
BENCHMARK(BM_evaluate_optimal);

void BM_iterate_forward(benchmark::State& state) {
    const Context ctx(512);
    const Params params = params_a(ctx);
    const Complex w0(Real(ctx, "0.52040002437809947"));
    const Complex w1(Real(ctx, "0.55549107871097876"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(iterate_forward(params, w0, w1, state.range(0)));
    }
}
BENCHMARK(BM_iterate_forward)->Arg(120)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
