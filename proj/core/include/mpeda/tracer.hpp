#pragma once

// First-quadrant driver for the two-region midpoint loop, plus the
// four-quadrant expansion by sign reflection.

#include "mpeda/geometry.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <tuple>
#include <vector>

namespace mpeda {

template <Scalar T>
struct TraceStep {
    GridPoint<T> before;
    Region region = Region::kR1;
    T p_before{};
    GridPoint<T> after;
    T p_after{};
    T lhs{};  // 2 b^2 x of `after`
    T rhs{};  // 2 a^2 y of `after`
};

/// Where region R2 is seeded once the transition fires.
enum class SeedPolicy : std::uint8_t {
    kLastR1Point,  // the point that triggered the transition
    kOneRowBelow,  // one lattice row lower; matches the published h = 0.5 R2 table
};

struct TraceOptions {
    SeedPolicy r2_seed = SeedPolicy::kLastR1Point;
};

template <Scalar T>
struct QuadrantTrace {
    EllipseSpec<T> ellipse;
    GridStep<T> step;
    std::vector<TraceStep<T>> steps;
    std::size_t transition_index = 0;  // last R1 step; later steps are R2
    /// Emitted pixels: (0, b), then every after-point. Under kOneRowBelow the
    /// R2 seed is emitted too, between the last R1 point and the first R2 move.
    std::vector<GridPoint<T>> points;
    SeedPolicy seed_policy = SeedPolicy::kLastR1Point;
};

/// Runs R1 from (0, b) until the transition predicate fires, re-seeds R2,
/// and steps R2 down to the lowest lattice row.
template <Scalar T>
QuadrantTrace<T> trace_quadrant(const EllipseSpec<T>& ellipse, const GridStep<T>& step,
                                TraceOptions options = {});

struct IterationCount {
    std::size_t r1_steps = 0;
    std::size_t r2_steps = 0;
    std::size_t total() const noexcept { return r1_steps + r2_steps; }

    friend bool operator==(const IterationCount&, const IterationCount&) = default;
};

template <Scalar T>
IterationCount iteration_count(const QuadrantTrace<T>& trace);

/// Upper bound on trace length: ceil(a/h) + ceil(b/h) + 2.
template <Scalar T>
std::size_t max_trace_steps(const EllipseSpec<T>& ellipse, const GridStep<T>& step);

// ---------------------------------------------------------------------------
// Four-quadrant expansion

struct Reflection {
    bool flip_x = false;
    bool flip_y = false;
};

/// A first-quadrant lattice point mapped into one quadrant. Axis points keep
/// a canonical +1 sign on the axis coordinate so that (0, y) and (x, 0) each
/// have a single representation.
template <Scalar T>
struct PlanePoint {
    GridPoint<T> source;
    int x_sign = 1;
    int y_sign = 1;

    T x() const { return x_sign < 0 ? T(-source.x) : source.x; }
    T y() const { return y_sign < 0 ? T(-source.y) : source.y; }

    friend bool operator==(const PlanePoint& l, const PlanePoint& r) {
        return l.source == r.source && l.x_sign == r.x_sign && l.y_sign == r.y_sign;
    }
    friend auto operator<=>(const PlanePoint& l, const PlanePoint& r) {
        return std::tuple(l.x_sign * l.source.i, l.y_sign, l.source.j) <=>
               std::tuple(r.x_sign * r.source.i, r.y_sign, r.source.j);
    }
};

enum class DuplicatePolicy : std::uint8_t { kAxisPointsOnce };

template <Scalar T>
struct EllipsePointSet {
    std::vector<PlanePoint<T>> points;  // quadrant I, II, III, IV images per source point
    DuplicatePolicy duplicates = DuplicatePolicy::kAxisPointsOnce;
};

/// Emits (x, y), (x, -y), (-x, -y), (-x, y) for every emitted point, once
/// per distinct lattice position.
template <Scalar T>
EllipsePointSet<T> reflect_four_quadrants(const QuadrantTrace<T>& trace);

/// Applies one reflection to every point, keeping order.
template <Scalar T>
EllipsePointSet<T> reflect(const EllipsePointSet<T>& set, Reflection r);

}  // namespace mpeda
