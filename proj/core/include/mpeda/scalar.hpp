#pragma once

// Scalar types the ellipse kernel is instantiated for.
//
// Float64 runs everything in IEEE double. ExactRational runs the same code
// over arbitrary-precision rationals so that decimal grid steps such as 0.1
// reproduce published decision-parameter tables without rounding.

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mpeda {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

enum class ArithmeticMode : std::uint8_t { kFloat64, kExactRational };

template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

template <Scalar T>
constexpr ArithmeticMode mode_of() {
    if constexpr (std::same_as<T, double>) {
        return ArithmeticMode::kFloat64;
    } else {
        return ArithmeticMode::kExactRational;
    }
}

std::string_view to_string(ArithmeticMode mode);

inline double to_double(double v) { return v; }
double to_double(const Rational& v);

/// Shortest decimal string that parses back to the same double.
std::string format_number(double v);

/// Exact decimal expansion when the reduced denominator has only factors 2
/// and 5; otherwise "num/den".
std::string format_number(const Rational& v);

/// Parses a decimal literal ("-12.5", "3", "1e-1") or a fraction ("1/10").
/// Throws std::invalid_argument on malformed or non-finite input.
template <Scalar T>
T parse_number(std::string_view text);

template <>
double parse_number<double>(std::string_view text);
template <>
Rational parse_number<Rational>(std::string_view text);

struct FractionLiteral {
    BigInt numerator;
    BigInt denominator;
};

/// Splits "num/den" into its integer parts without reducing them. Returns
/// nothing when `text` is not a fraction literal.
std::optional<FractionLiteral> parse_fraction_literal(std::string_view text);

}  // namespace mpeda
