#pragma once

#include "golden_tables.hpp"
#include "oracles.hpp"

#include "mpeda/io.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace mpeda::testing {

template <Scalar T>
T from_hundredths(std::int64_t v) {
    if constexpr (std::same_as<T, Rational>) {
        return Rational(v, 100);
    } else {
        return static_cast<double>(v) / 100.0;
    }
}

template <Scalar T>
EllipseSpec<T> ellipse_of(const RandomCase& c) {
    return EllipseSpec<T>(from_hundredths<T>(c.a_hundredths), from_hundredths<T>(c.b_hundredths));
}

template <Scalar T>
GridStep<T> step_of(const RandomCase& c) {
    return GridStep<T>(from_hundredths<T>(c.h_hundredths));
}

template <Scalar T>
T num(std::string_view text) {
    return parse_number<T>(text);
}

template <Scalar T>
EllipseSpec<T> reference_ellipse() {
    return EllipseSpec<T>(T(8), T(6));
}

template <Scalar T>
GridStep<T> reference_step(std::string_view h) {
    return GridStep<T>(parse_number<T>(h));
}

/// |got - want| <= tol, with the golden value parsed in the same arithmetic.
template <Scalar T>
bool close(const T& got, std::string_view want, double tol) {
    T w = parse_number<T>(want);
    if constexpr (std::same_as<T, Rational>) {
        return got == w;
    } else {
        return std::abs(got - w) <= tol;
    }
}

/// Every column of `step` against a transcribed table row. Returns the index
/// of the first mismatching column, or -1.
template <Scalar T>
int mismatch(const TraceStep<T>& step, const GoldenRow& row, double tol) {
    const T* cols[] = {&step.before.x, &step.before.y, &step.p_before, &step.after.x,
                       &step.after.y,  &step.p_after,  &step.lhs,      &step.rhs};
    for (int k = 0; k < 8; ++k) {
        if (!close(*cols[k], row[k], tol)) return k;
    }
    return -1;
}

template <Scalar T>
std::string csv_of(const QuadrantTrace<T>& trace, TableOptions options = {}) {
    std::ostringstream out;
    emit_trace_table(trace, TableFormat::kCsv, out, options);
    return out.str();
}

}  // namespace mpeda::testing
