#include "mpeda/analysis.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace mpeda;

template <Scalar T>
void BM_TraceQuadrant(benchmark::State& state) {
    EllipseSpec<T> ellipse{T(8), T(6)};
    GridStep<T> step{T(1) / T(state.range(0))};
    for (auto _ : state) {
        auto trace = trace_quadrant(ellipse, step);
        benchmark::DoNotOptimize(trace.steps.data());
    }
    state.SetItemsProcessed(state.iterations() * iteration_count(trace_quadrant(ellipse, step)).total());
}
BENCHMARK_TEMPLATE(BM_TraceQuadrant, double)->Arg(1)->Arg(10)->Arg(100);
BENCHMARK_TEMPLATE(BM_TraceQuadrant, Rational)->Arg(1)->Arg(10)->Arg(100);

void BM_NearestDistance(benchmark::State& state) {
    double x = 7.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nearest_ellipse_distance(8.0, 6.0, x, 3.0));
    }
}
BENCHMARK(BM_NearestDistance);

void BM_ErrorReport(benchmark::State& state) {
    auto trace = trace_quadrant(EllipseSpec<double>{8, 6}, GridStep<double>{0.1});
    for (auto _ : state) {
        auto report = error_report(trace);
        benchmark::DoNotOptimize(report.mean_geometric);
    }
}
BENCHMARK(BM_ErrorReport);

}  // namespace

BENCHMARK_MAIN();
