#include "mpeda/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>

namespace mpeda {

namespace {

constexpr int kSamples = 4096;
constexpr double kAngleTolerance = 1e-12;

double distance_sq(double a, double b, double x, double y, double t) {
    double dx = a * std::cos(t) - x;
    double dy = b * std::sin(t) - y;
    return dx * dx + dy * dy;
}

// Golden-section minimisation of distance_sq on [lo, hi].
double refine(double a, double b, double x, double y, double lo, double hi) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = distance_sq(a, b, x, y, c);
    double fd = distance_sq(a, b, x, y, d);
    while (hi - lo > kAngleTolerance) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = distance_sq(a, b, x, y, c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = distance_sq(a, b, x, y, d);
        }
    }
    return std::min({fc, fd, distance_sq(a, b, x, y, 0.5 * (lo + hi))});
}

}  // namespace

double nearest_ellipse_distance(double a, double b, double x, double y) {
    const double dt = 2.0 * std::numbers::pi / kSamples;
    std::vector<double> f(kSamples);
    for (int k = 0; k < kSamples; ++k) f[k] = distance_sq(a, b, x, y, k * dt);

    double best = *std::min_element(f.begin(), f.end());
    for (int k = 0; k < kSamples; ++k) {
        double prev = f[(k + kSamples - 1) % kSamples];
        double next = f[(k + 1) % kSamples];
        if (f[k] <= prev && f[k] <= next) {
            best = std::min(best, refine(a, b, x, y, (k - 1) * dt, (k + 1) * dt));
        }
    }
    return std::sqrt(best);
}

template <Scalar T>
PointError<T> point_error(const EllipseSpec<T>& ellipse, const GridPoint<T>& point) {
    T f = eval_implicit(ellipse, point.x, point.y);
    PointError<T> e{point, 0.0, 0.0};
    if (f == 0) return e;
    T scale = ellipse.a2() * ellipse.b2();
    e.algebraic_residual = std::abs(to_double(T(f / scale)));
    e.geometric_distance =
        nearest_ellipse_distance(ellipse, to_double(point.x), to_double(point.y));
    return e;
}

template <Scalar T>
void aggregate(ErrorReport<T>& report) {
    double sum_geo = 0.0;
    double sum_alg = 0.0;
    double max_geo = 0.0;
    double max_alg = 0.0;
    for (const auto& e : report.per_point) {
        sum_geo += e.geometric_distance;
        sum_alg += e.algebraic_residual;
        max_geo = std::max(max_geo, e.geometric_distance);
        max_alg = std::max(max_alg, e.algebraic_residual);
    }
    const double n = report.per_point.empty() ? 1.0 : static_cast<double>(report.per_point.size());
    report.mean_geometric = sum_geo / n;
    report.max_geometric = max_geo;
    report.mean_algebraic = sum_alg / n;
    report.max_algebraic = max_alg;
}

template <Scalar T>
ErrorReport<T> error_report(const QuadrantTrace<T>& trace) {
    ErrorReport<T> report{trace.ellipse, trace.step, {}, 0.0, 0.0, 0.0, 0.0,
                          iteration_count(trace).total()};
    report.per_point.reserve(trace.points.size());
    for (const auto& p : trace.points) report.per_point.push_back(point_error(trace.ellipse, p));
    aggregate(report);
    return report;
}

template <Scalar T>
std::vector<ErrorReport<T>> compare_steps(const EllipseSpec<T>& ellipse,
                                          std::span<const GridStep<T>> steps,
                                          TraceOptions options) {
    if (steps.empty()) throw std::invalid_argument("compare_steps needs at least one grid step");

    std::vector<std::future<ErrorReport<T>>> pending;
    pending.reserve(steps.size());
    for (const auto& step : steps) {
        pending.push_back(std::async(std::launch::async, [&ellipse, step, options] {
            return error_report(trace_quadrant(ellipse, step, options));
        }));
    }

    std::vector<ErrorReport<T>> reports;
    reports.reserve(steps.size());
    for (std::size_t k = 0; k < pending.size(); ++k) {
        try {
            reports.push_back(pending[k].get());
        } catch (const std::exception& e) {
            // Remaining futures join in their destructors.
            throw StepFailure(k, format_number(steps[k].h()), e.what());
        }
    }
    return reports;
}

template <Scalar T>
TradeoffSummary summarize_tradeoff(std::span<const ErrorReport<T>> reports) {
    std::vector<const ErrorReport<T>*> order;
    for (const auto& r : reports) order.push_back(&r);
    std::stable_sort(order.begin(), order.end(),
                     [](const auto* l, const auto* r) { return l->step.h() > r->step.h(); });

    TradeoffSummary s{true, true, true};
    for (std::size_t k = 1; k < order.size(); ++k) {
        const auto& coarse = *order[k - 1];
        const auto& fine = *order[k];
        if (!(fine.step.h() < coarse.step.h())) {
            s = {false, false, false};  // repeated h: no strict ordering to claim
            break;
        }
        s.iterations_increase &= fine.total_iterations > coarse.total_iterations;
        s.mean_error_decreases &= fine.mean_geometric < coarse.mean_geometric;
        s.max_error_decreases &= fine.max_geometric < coarse.max_geometric;
    }
    return s;
}

#define MPEDA_INSTANTIATE_ANALYSIS(T)                                                     \
    template PointError<T> point_error<T>(const EllipseSpec<T>&, const GridPoint<T>&);    \
    template void aggregate<T>(ErrorReport<T>&);                                          \
    template ErrorReport<T> error_report<T>(const QuadrantTrace<T>&);                     \
    template std::vector<ErrorReport<T>> compare_steps<T>(                                \
        const EllipseSpec<T>&, std::span<const GridStep<T>>, TraceOptions);             \
    template TradeoffSummary summarize_tradeoff<T>(std::span<const ErrorReport<T>>);

MPEDA_INSTANTIATE_ANALYSIS(double)
MPEDA_INSTANTIATE_ANALYSIS(Rational)

#undef MPEDA_INSTANTIATE_ANALYSIS

}  // namespace mpeda
