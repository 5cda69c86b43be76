#pragma once

// Ellipse model and the two midpoint decision-parameter recurrences.
//
// The ellipse is x^2/a^2 + y^2/b^2 = 1 with a > b, traversed clockwise from
// (0, b) on a lattice of spacing h. Region R1 advances x every step and
// region R2 lowers y every step. Every operation here is a pure function
// templated on the arithmetic (double or exact Rational).

#include "mpeda/errors.hpp"
#include "mpeda/scalar.hpp"

#include <cstdint>
#include <utility>

namespace mpeda {

enum class Region : std::uint8_t { kR1, kR2 };

std::string_view to_string(Region region);

template <Scalar T>
class EllipseSpec {
public:
    /// Throws ValidationError unless a > b > 0 and both are finite.
    EllipseSpec(T a, T b);

    const T& a() const noexcept { return a_; }
    const T& b() const noexcept { return b_; }
    T a2() const { return a_ * a_; }
    T b2() const { return b_ * b_; }

    friend bool operator==(const EllipseSpec&, const EllipseSpec&) = default;

private:
    T a_;
    T b_;
};

template <Scalar T>
class GridStep {
public:
    /// Throws ValidationError unless h is finite and positive.
    explicit GridStep(T h);

    /// Exact-mode constructor from an unreduced fraction; rejects fractions
    /// that are not in lowest terms or not positive.
    static GridStep from_fraction(const BigInt& numerator, const BigInt& denominator)
        requires std::same_as<T, Rational>;

    const T& h() const noexcept { return h_; }
    static constexpr ArithmeticMode mode() { return mode_of<T>(); }

    friend bool operator==(const GridStep&, const GridStep&) = default;

private:
    T h_;
};

/// Throws ValidationError(kStepExceedsMinorAxis) when h > b.
template <Scalar T>
void check_compatible(const EllipseSpec<T>& ellipse, const GridStep<T>& step);

/// Index of the lowest lattice row, i.e. the largest j with b - j*h >= 0.
template <Scalar T>
std::int64_t last_row(const EllipseSpec<T>& ellipse, const GridStep<T>& step);

/// Lattice point (i*h, b - j*h). Coordinates are rebuilt from the indices on
/// every construction and never accumulated.
template <Scalar T>
struct GridPoint {
    std::int64_t i = 0;
    std::int64_t j = 0;
    T x{};
    T y{};
    bool on_major_axis = false;  // y == 0, decided from the indices

    static GridPoint at(const EllipseSpec<T>& ellipse, const GridStep<T>& step, std::int64_t i,
                        std::int64_t j);

    bool on_minor_axis() const noexcept { return i == 0; }

    friend bool operator==(const GridPoint& lhs, const GridPoint& rhs) {
        return lhs.i == rhs.i && lhs.j == rhs.j;
    }
};

template <Scalar T>
struct DecisionState {
    GridPoint<T> point;
    Region region = Region::kR1;
    T p{};  // implicit function at the region's candidate midpoint
};

/// b^2 x^2 + a^2 y^2 - a^2 b^2: negative inside, zero on, positive outside.
template <Scalar T>
T eval_implicit(const EllipseSpec<T>& ellipse, const T& x, const T& y);

/// Start of R1 at (0, b) with p = (4b^2 + a^2) h^2 / 4 - a^2 b h.
template <Scalar T>
DecisionState<T> initial_p1(const EllipseSpec<T>& ellipse, const GridStep<T>& step);

/// One R1 move: (x+h, y-h) when p >= 0, otherwise (x+h, y).
template <Scalar T>
DecisionState<T> step_r1(const EllipseSpec<T>& ellipse, const GridStep<T>& step,
                         const DecisionState<T>& state);

/// Seeds R2 at `point` with p = b^2 (x + h/2)^2 + a^2 (y - h)^2 - a^2 b^2.
template <Scalar T>
DecisionState<T> initial_p2(const EllipseSpec<T>& ellipse, const GridStep<T>& step,
                            const GridPoint<T>& point);

/// One R2 move: (x, y-h) when p >= 0, otherwise (x+h, y-h).
template <Scalar T>
DecisionState<T> step_r2(const EllipseSpec<T>& ellipse, const GridStep<T>& step,
                         const DecisionState<T>& state);

/// 2 b^2 x > 2 a^2 y. Strict: equality stays in R1. In float mode the two
/// sides count as equal when they agree to 1e-12 relative.
template <Scalar T>
bool region_transition(const EllipseSpec<T>& ellipse, const GridPoint<T>& point);

/// Candidate midpoint the state's parameter is measured at:
/// (x + h, y - h/2) in R1, (x + h/2, y - h) in R2.
template <Scalar T>
std::pair<T, T> decision_midpoint(const GridStep<T>& step, const DecisionState<T>& state);

/// eval_implicit at decision_midpoint, i.e. the parameter recomputed from scratch.
template <Scalar T>
T direct_parameter(const EllipseSpec<T>& ellipse, const GridStep<T>& step,
                   const DecisionState<T>& state);

/// Allowed |recurrence - direct| gap: zero for Rational, 1e-6 a^2 b^2 for double.
template <Scalar T>
T consistency_tolerance(const EllipseSpec<T>& ellipse);

template <Scalar T>
bool is_consistent(const EllipseSpec<T>& ellipse, const GridStep<T>& step,
                   const DecisionState<T>& state);

}  // namespace mpeda
