#include "mpeda/tracer.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace mpeda {

namespace {

template <Scalar T>
std::int64_t ceil_ratio(const T& num, const T& den) {
    if constexpr (std::same_as<T, double>) {
        return static_cast<std::int64_t>(std::ceil(num / den));
    } else {
        Rational q = num / den;
        BigInt n = boost::multiprecision::numerator(q);
        BigInt d = boost::multiprecision::denominator(q);
        BigInt c = n / d + (n % d != 0 ? 1 : 0);
        return c.convert_to<std::int64_t>();
    }
}

template <Scalar T>
TraceStep<T> make_step(const EllipseSpec<T>& ellipse, const DecisionState<T>& from,
                       const DecisionState<T>& to) {
    return {from.point,
            from.region,
            from.p,
            to.point,
            to.p,
            2 * ellipse.b2() * to.point.x,
            2 * ellipse.a2() * to.point.y};
}

}  // namespace

template <Scalar T>
std::size_t max_trace_steps(const EllipseSpec<T>& ellipse, const GridStep<T>& step) {
    return static_cast<std::size_t>(ceil_ratio(ellipse.a(), step.h()) +
                                    ceil_ratio(ellipse.b(), step.h()) + 2);
}

template <Scalar T>
QuadrantTrace<T> trace_quadrant(const EllipseSpec<T>& ellipse, const GridStep<T>& step,
                                TraceOptions options) {
    check_compatible(ellipse, step);

    QuadrantTrace<T> trace{ellipse, step, {}, 0, {}, options.r2_seed};
    const std::size_t budget = max_trace_steps(ellipse, step);
    const std::int64_t bottom = last_row(ellipse, step);

    auto record = [&](const DecisionState<T>& from, const DecisionState<T>& to) {
        if (trace.steps.size() == budget) {
            throw std::logic_error("midpoint trace exceeded its step bound");
        }
        trace.steps.push_back(make_step(ellipse, from, to));
        trace.points.push_back(to.point);
    };

    DecisionState<T> state = initial_p1(ellipse, step);
    trace.points.push_back(state.point);

    // R1: x advances every step. The handoff point is the first after-point
    // past the slope -1 line; the lattice bottom ends R1 as a fallback.
    for (;;) {
        DecisionState<T> next = step_r1(ellipse, step, state);
        record(state, next);
        state = std::move(next);
        if (region_transition(ellipse, state.point) || state.point.j == bottom) break;
    }
    trace.transition_index = trace.steps.size() - 1;

    GridPoint<T> seed = state.point;
    if (options.r2_seed == SeedPolicy::kOneRowBelow && seed.j < bottom) {
        seed = GridPoint<T>::at(ellipse, step, seed.i, seed.j + 1);
        trace.points.push_back(seed);
    }

    // R2: y drops one row per step until the lowest non-negative row.
    state = initial_p2(ellipse, step, seed);
    while (state.point.j < bottom) {
        DecisionState<T> next = step_r2(ellipse, step, state);
        record(state, next);
        state = std::move(next);
    }
    return trace;
}

template <Scalar T>
IterationCount iteration_count(const QuadrantTrace<T>& trace) {
    IterationCount count;
    for (const auto& s : trace.steps) {
        (s.region == Region::kR1 ? count.r1_steps : count.r2_steps) += 1;
    }
    return count;
}

template <Scalar T>
EllipsePointSet<T> reflect_four_quadrants(const QuadrantTrace<T>& trace) {
    // Table order: (x, y), (x, -y), (-x, -y), (-x, y).
    constexpr std::pair<int, int> kSigns[] = {{1, 1}, {1, -1}, {-1, -1}, {-1, 1}};

    EllipsePointSet<T> set;
    set.points.reserve(trace.points.size() * 4);
    std::set<PlanePoint<T>> seen;
    for (const auto& p : trace.points) {
        for (auto [sx, sy] : kSigns) {
            PlanePoint<T> q{p, p.on_minor_axis() ? 1 : sx, p.on_major_axis ? 1 : sy};
            if (seen.insert(q).second) set.points.push_back(q);
        }
    }
    return set;
}

template <Scalar T>
EllipsePointSet<T> reflect(const EllipsePointSet<T>& set, Reflection r) {
    EllipsePointSet<T> out{{}, set.duplicates};
    out.points.reserve(set.points.size());
    for (const auto& p : set.points) {
        PlanePoint<T> q = p;
        if (r.flip_x && !p.source.on_minor_axis()) q.x_sign = -q.x_sign;
        if (r.flip_y && !p.source.on_major_axis) q.y_sign = -q.y_sign;
        out.points.push_back(q);
    }
    return out;
}

#define MPEDA_INSTANTIATE_TRACER(T)                                                            \
    template std::size_t max_trace_steps<T>(const EllipseSpec<T>&, const GridStep<T>&);        \
    template QuadrantTrace<T> trace_quadrant<T>(const EllipseSpec<T>&, const GridStep<T>&,     \
                                                TraceOptions);                                 \
    template IterationCount iteration_count<T>(const QuadrantTrace<T>&);                       \
    template EllipsePointSet<T> reflect_four_quadrants<T>(const QuadrantTrace<T>&);            \
    template EllipsePointSet<T> reflect<T>(const EllipsePointSet<T>&, Reflection);

MPEDA_INSTANTIATE_TRACER(double)
MPEDA_INSTANTIATE_TRACER(Rational)

#undef MPEDA_INSTANTIATE_TRACER

}  // namespace mpeda
