#pragma once

// Error between emitted lattice points and the exact ellipse.

#include "mpeda/tracer.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpeda {

/// Euclidean distance from (x, y) to the ellipse (a cos t, b sin t).
///
/// Samples t densely (4096 points over the full turn), then refines every
/// sampled local minimum by golden-section search on the squared distance
/// until the bracket is below 1e-12 rad. Works for any a, b > 0.
double nearest_ellipse_distance(double a, double b, double x, double y);

template <Scalar T>
double nearest_ellipse_distance(const EllipseSpec<T>& ellipse, double x, double y) {
    return nearest_ellipse_distance(to_double(ellipse.a()), to_double(ellipse.b()), x, y);
}

template <Scalar T>
struct PointError {
    GridPoint<T> point;
    double algebraic_residual = 0.0;  // |f(x, y)| / (a^2 b^2)
    double geometric_distance = 0.0;  // to the nearest point of the exact ellipse
};

template <Scalar T>
struct ErrorReport {
    EllipseSpec<T> ellipse;
    GridStep<T> step;
    std::vector<PointError<T>> per_point;  // first-quadrant emitted points, in order
    double mean_geometric = 0.0;
    double max_geometric = 0.0;
    double mean_algebraic = 0.0;
    double max_algebraic = 0.0;
    std::size_t total_iterations = 0;
};

template <Scalar T>
PointError<T> point_error(const EllipseSpec<T>& ellipse, const GridPoint<T>& point);

/// Per-point errors of every emitted point plus their aggregates.
template <Scalar T>
ErrorReport<T> error_report(const QuadrantTrace<T>& trace);

/// Aggregates recomputed from `per_point`; used to build reports and to
/// check them.
template <Scalar T>
void aggregate(ErrorReport<T>& report);

/// Failure while tracing one of several grid steps.
class StepFailure : public std::runtime_error {
public:
    StepFailure(std::size_t index, std::string h, const std::string& reason)
        : std::runtime_error("step #" + std::to_string(index) + " (h=" + h + "): " + reason),
          index_(index),
          h_(std::move(h)) {}

    std::size_t index() const noexcept { return index_; }
    const std::string& h() const noexcept { return h_; }

private:
    std::size_t index_;
    std::string h_;
};

/// One independent report per step, in input order. Throws
/// std::invalid_argument on an empty list and StepFailure naming the
/// offending step otherwise.
template <Scalar T>
std::vector<ErrorReport<T>> compare_steps(const EllipseSpec<T>& ellipse,
                                          std::span<const GridStep<T>> steps,
                                          TraceOptions options = {});

/// Ordering check of the iteration/error trade-off over several grid steps,
/// taken in order of decreasing h.
struct TradeoffSummary {
    bool iterations_increase = false;
    bool mean_error_decreases = false;
    bool max_error_decreases = false;
    bool holds() const noexcept {
        return iterations_increase && mean_error_decreases && max_error_decreases;
    }
};

template <Scalar T>
TradeoffSummary summarize_tradeoff(std::span<const ErrorReport<T>> reports);

}  // namespace mpeda
