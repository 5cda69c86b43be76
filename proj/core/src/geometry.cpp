#include "mpeda/geometry.hpp"

#include <boost/multiprecision/number.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace mpeda {

namespace {

// Float64 admits a row whose y lands a hair below zero from rounding in
// b - j*h; such a row is the x-axis row and its y is reported as 0.
constexpr double kAxisSnap = 1e-9;

template <Scalar T>
bool is_finite(const T& v) {
    if constexpr (std::same_as<T, double>) {
        return std::isfinite(v);
    } else {
        return true;
    }
}

template <Scalar T>
std::string describe(const T& v) {
    return format_number(v);
}

template <Scalar T>
T abs_value(const T& v) {
    return v < 0 ? T(-v) : v;
}

// y for row j, or nothing when the row lies below the x-axis.
template <Scalar T>
std::optional<std::pair<T, bool>> row_height(const EllipseSpec<T>& ellipse, const GridStep<T>& step,
                                             std::int64_t j) {
    const T& h = step.h();
    T y = ellipse.b() - T(j) * h;
    if constexpr (std::same_as<T, double>) {
        double snap = kAxisSnap * h;
        if (std::abs(y) <= snap) return std::pair<T, bool>{0.0, true};
        if (y < 0) return std::nullopt;
        return std::pair<T, bool>{y, false};
    } else {
        if (y < 0) return std::nullopt;
        return std::pair<T, bool>{y, y == 0};
    }
}

}  // namespace

std::string_view to_string(ValidationCode code) {
    switch (code) {
        case ValidationCode::kNonFinite: return "non-finite";
        case ValidationCode::kNonPositiveMajorAxis: return "a-not-positive";
        case ValidationCode::kNonPositiveMinorAxis: return "b-not-positive";
        case ValidationCode::kAxesNotOrdered: return "a-not-greater-than-b";
        case ValidationCode::kNonPositiveStep: return "h-not-positive";
        case ValidationCode::kStepExceedsMinorAxis: return "h-exceeds-b";
        case ValidationCode::kStepNotInLowestTerms: return "h-not-reduced";
    }
    return "unknown";
}

std::string_view to_string(Region region) { return region == Region::kR1 ? "R1" : "R2"; }

template <Scalar T>
EllipseSpec<T>::EllipseSpec(T a, T b) : a_(std::move(a)), b_(std::move(b)) {
    if (!is_finite(a_) || !is_finite(b_)) {
        throw ValidationError(ValidationCode::kNonFinite, "semi-axes must be finite numbers");
    }
    if (!(a_ > 0)) {
        throw ValidationError(ValidationCode::kNonPositiveMajorAxis,
                              "semi-major axis a must be positive (got " + describe(a_) + ")");
    }
    if (!(b_ > 0)) {
        throw ValidationError(ValidationCode::kNonPositiveMinorAxis,
                              "semi-minor axis b must be positive (got " + describe(b_) + ")");
    }
    if (!(a_ > b_)) {
        throw ValidationError(ValidationCode::kAxesNotOrdered,
                              "the algorithm assumes a > b, i.e. the major axis lies along x (got a=" +
                                  describe(a_) + ", b=" + describe(b_) + ")");
    }
}

template <Scalar T>
GridStep<T>::GridStep(T h) : h_(std::move(h)) {
    if (!is_finite(h_)) {
        throw ValidationError(ValidationCode::kNonFinite, "grid step h must be a finite number");
    }
    if (!(h_ > 0)) {
        throw ValidationError(ValidationCode::kNonPositiveStep,
                              "grid step h must be positive (got " + describe(h_) + ")");
    }
}

template <Scalar T>
GridStep<T> GridStep<T>::from_fraction(const BigInt& numerator, const BigInt& denominator)
    requires std::same_as<T, Rational>
{
    if (numerator <= 0 || denominator <= 0) {
        throw ValidationError(ValidationCode::kNonPositiveStep,
                              "grid step fraction needs a positive numerator and denominator (got " +
                                  numerator.str() + "/" + denominator.str() + ")");
    }
    if (boost::multiprecision::gcd(numerator, denominator) != 1) {
        throw ValidationError(ValidationCode::kStepNotInLowestTerms,
                              "grid step fraction must be in lowest terms (got " + numerator.str() +
                                  "/" + denominator.str() + ")");
    }
    return GridStep(Rational(numerator, denominator));
}

template <Scalar T>
void check_compatible(const EllipseSpec<T>& ellipse, const GridStep<T>& step) {
    if (step.h() > ellipse.b()) {
        throw ValidationError(ValidationCode::kStepExceedsMinorAxis,
                              "grid step h must not exceed the semi-minor axis b (got h=" +
                                  describe(step.h()) + ", b=" + describe(ellipse.b()) + ")");
    }
}

template <Scalar T>
std::int64_t last_row(const EllipseSpec<T>& ellipse, const GridStep<T>& step) {
    std::int64_t j = 0;
    if constexpr (std::same_as<T, double>) {
        j = static_cast<std::int64_t>(std::floor(ellipse.b() / step.h()));
    } else {
        Rational q = ellipse.b() / step.h();
        BigInt whole = boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q);
        j = whole.convert_to<std::int64_t>();
    }
    while (row_height(ellipse, step, j + 1)) ++j;
    while (j > 0 && !row_height(ellipse, step, j)) --j;
    return j;
}

template <Scalar T>
GridPoint<T> GridPoint<T>::at(const EllipseSpec<T>& ellipse, const GridStep<T>& step,
                              std::int64_t i, std::int64_t j) {
    if (i < 0 || j < 0) throw std::out_of_range("grid indices must be non-negative");
    auto row = row_height(ellipse, step, j);
    if (!row) throw std::out_of_range("grid row " + std::to_string(j) + " lies below the x-axis");
    GridPoint p;
    p.i = i;
    p.j = j;
    p.x = T(i) * step.h();
    p.y = std::move(row->first);
    p.on_major_axis = row->second;
    return p;
}

template <Scalar T>
T eval_implicit(const EllipseSpec<T>& ellipse, const T& x, const T& y) {
    return ellipse.b2() * x * x + ellipse.a2() * y * y - ellipse.a2() * ellipse.b2();
}

template <Scalar T>
DecisionState<T> initial_p1(const EllipseSpec<T>& ellipse, const GridStep<T>& step) {
    check_compatible(ellipse, step);
    const T& h = step.h();
    T p = (4 * ellipse.b2() + ellipse.a2()) * h * h / 4 - ellipse.a2() * ellipse.b() * h;
    return {GridPoint<T>::at(ellipse, step, 0, 0), Region::kR1, std::move(p)};
}

template <Scalar T>
DecisionState<T> step_r1(const EllipseSpec<T>& ellipse, const GridStep<T>& step,
                         const DecisionState<T>& state) {
    if (state.region != Region::kR1) throw RegionMismatch("step_r1 called on an R2 state");
    const T& h = step.h();
    const GridPoint<T>& at = state.point;
    T p = state.p + ellipse.b2() * h * h + 2 * ellipse.b2() * h * (at.x + h);
    std::int64_t next_j = at.j;
    if (state.p >= 0) {
        p -= 2 * ellipse.a2() * h * (at.y - h);
        ++next_j;
    }
    return {GridPoint<T>::at(ellipse, step, at.i + 1, next_j), Region::kR1, std::move(p)};
}

template <Scalar T>
DecisionState<T> initial_p2(const EllipseSpec<T>& ellipse, const GridStep<T>& step,
                            const GridPoint<T>& point) {
    const T& h = step.h();
    T mx = point.x + h / 2;
    T my = point.y - h;
    T p = ellipse.b2() * mx * mx + ellipse.a2() * my * my - ellipse.a2() * ellipse.b2();
    return {point, Region::kR2, std::move(p)};
}

template <Scalar T>
DecisionState<T> step_r2(const EllipseSpec<T>& ellipse, const GridStep<T>& step,
                         const DecisionState<T>& state) {
    if (state.region != Region::kR2) throw RegionMismatch("step_r2 called on an R1 state");
    const T& h = step.h();
    const GridPoint<T>& at = state.point;
    T p = state.p + ellipse.a2() * h * h - 2 * ellipse.a2() * h * (at.y - h);
    std::int64_t next_i = at.i;
    if (state.p < 0) {
        p += ellipse.b2() * h * h + 2 * ellipse.b2() * h * (at.x + h / 2);
        ++next_i;
    }
    return {GridPoint<T>::at(ellipse, step, next_i, at.j + 1), Region::kR2, std::move(p)};
}

constexpr double kTransitionRelTol = 1e-12;

template <Scalar T>
bool region_transition(const EllipseSpec<T>& ellipse, const GridPoint<T>& point) {
    const T lhs = 2 * ellipse.b2() * point.x;
    const T rhs = 2 * ellipse.a2() * point.y;
    if constexpr (std::same_as<T, double>) {
        // 72 * 6.4 and 128 * 3.6 differ by one ulp in binary floating point.
        return lhs - rhs > kTransitionRelTol * (std::abs(lhs) + std::abs(rhs));
    } else {
        return lhs > rhs;
    }
}

template <Scalar T>
std::pair<T, T> decision_midpoint(const GridStep<T>& step, const DecisionState<T>& state) {
    const T& h = step.h();
    if (state.region == Region::kR1) return {state.point.x + h, state.point.y - h / 2};
    return {state.point.x + h / 2, state.point.y - h};
}

template <Scalar T>
T direct_parameter(const EllipseSpec<T>& ellipse, const GridStep<T>& step,
                   const DecisionState<T>& state) {
    auto [mx, my] = decision_midpoint(step, state);
    return eval_implicit(ellipse, mx, my);
}

template <Scalar T>
T consistency_tolerance(const EllipseSpec<T>& ellipse) {
    if constexpr (std::same_as<T, double>) {
        return 1e-6 * ellipse.a2() * ellipse.b2();
    } else {
        return T(0);
    }
}

template <Scalar T>
bool is_consistent(const EllipseSpec<T>& ellipse, const GridStep<T>& step,
                   const DecisionState<T>& state) {
    return abs_value(T(state.p - direct_parameter(ellipse, step, state))) <=
           consistency_tolerance(ellipse);
}

#define MPEDA_INSTANTIATE_GEOMETRY(T)                                                           \
    template class EllipseSpec<T>;                                                              \
    template class GridStep<T>;                                                                 \
    template struct GridPoint<T>;                                                               \
    template void check_compatible<T>(const EllipseSpec<T>&, const GridStep<T>&);               \
    template std::int64_t last_row<T>(const EllipseSpec<T>&, const GridStep<T>&);               \
    template T eval_implicit<T>(const EllipseSpec<T>&, const T&, const T&);                     \
    template DecisionState<T> initial_p1<T>(const EllipseSpec<T>&, const GridStep<T>&);         \
    template DecisionState<T> step_r1<T>(const EllipseSpec<T>&, const GridStep<T>&,             \
                                         const DecisionState<T>&);                              \
    template DecisionState<T> initial_p2<T>(const EllipseSpec<T>&, const GridStep<T>&,          \
                                            const GridPoint<T>&);                               \
    template DecisionState<T> step_r2<T>(const EllipseSpec<T>&, const GridStep<T>&,             \
                                         const DecisionState<T>&);                              \
    template bool region_transition<T>(const EllipseSpec<T>&, const GridPoint<T>&);             \
    template std::pair<T, T> decision_midpoint<T>(const GridStep<T>&, const DecisionState<T>&); \
    template T direct_parameter<T>(const EllipseSpec<T>&, const GridStep<T>&,                   \
                                   const DecisionState<T>&);                                    \
    template T consistency_tolerance<T>(const EllipseSpec<T>&);                                 \
    template bool is_consistent<T>(const EllipseSpec<T>&, const GridStep<T>&,                   \
                                   const DecisionState<T>&);

MPEDA_INSTANTIATE_GEOMETRY(double)
MPEDA_INSTANTIATE_GEOMETRY(Rational)

#undef MPEDA_INSTANTIATE_GEOMETRY

}  // namespace mpeda
