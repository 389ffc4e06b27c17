#include <benchmark/benchmark.h>

#include <cmath>

#include "mcurves/curve_spec.hpp"
#include "mcurves/exporters.hpp"
#include "mcurves/expression.hpp"
#include "mcurves/frenet.hpp"
#include "mcurves/indicatrix.hpp"

using namespace mcurves;

static void BM_frenet_apparatus(benchmark::State& state) {
    const auto curve = make_curve(builtin_spec("example_3_1_7"));
    double s = -2.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(frenet_apparatus(*curve, s));
        s = s < 2.0 ? s + 1e-3 : -2.0;
    }
}
BENCHMARK(BM_frenet_apparatus);

static void BM_frenet_apparatus_fd(benchmark::State& state) {
    CurveSpec spec = builtin_spec("example_3_1_7");
    spec.fd_derivatives = true;
    const auto curve = make_curve(spec);
    double s = -2.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(frenet_apparatus(*curve, s));
        s = s < 2.0 ? s + 1e-3 : -2.0;
    }
}
BENCHMARK(BM_frenet_apparatus_fd);

static void BM_expression_eval(benchmark::State& state) {
    const Expression e = Expression::parse("sinh(s) * cosh(s) + sqrt(2) * s - exp(-s * s)");
    const Expression d = e.derivative();
    double s = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(d.eval(s));
        s += 1e-3;
        if (s > 3.0) s = 0.0;
    }
}
BENCHMARK(BM_expression_eval);

static void BM_integrate_spray_1k(benchmark::State& state) {
    const TangentBundlePoint v0{{0, 1, 0}, {1, 0, 0}, ModelSphere::S12};
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate_spray(v0, 1.0, 1000));
}
BENCHMARK(BM_integrate_spray_1k);

static void BM_indicatrix_export(benchmark::State& state) {
    const CurveSpec spec = builtin_spec("example_3_1_7");
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_indicatrix_export(spec, 2.0, InvoluteOffset::Signed,
                                                         IndicatrixKind::Tangent, 101));
    }
}
BENCHMARK(BM_indicatrix_export);

BENCHMARK_MAIN();
