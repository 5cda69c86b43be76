#include "mpeda/scalar.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace mpeda {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

BigInt pow10(unsigned n) {
    BigInt r = 1;
    for (unsigned k = 0; k < n; ++k) r *= 10;
    return r;
}

[[noreturn]] void bad_number(std::string_view text) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
}

// Decimal literal [+-]digits[.digits][(e|E)[+-]digits] as an exact rational.
// cpp_int reads a leading zero as an octal prefix.
BigInt decimal_digits(std::string digits) {
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    return BigInt{digits};
}

Rational parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = s.substr(e + 1);
        s = s.substr(0, e);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!is_digits(exp_text) || exp_text.size() > 4) bad_number(text);
        exponent = std::stol(std::string(exp_text));
        if (exp_negative) exponent = -exponent;
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) bad_number(text);
    if (!int_part.empty() && !is_digits(int_part)) bad_number(text);
    if (!frac_part.empty() && !is_digits(frac_part)) bad_number(text);

    BigInt mantissa = decimal_digits(std::string(int_part) + std::string(frac_part));
    exponent -= static_cast<long>(frac_part.size());
    Rational value = exponent >= 0
                         ? Rational(mantissa * pow10(static_cast<unsigned>(exponent)))
                         : Rational(mantissa, pow10(static_cast<unsigned>(-exponent)));
    return negative ? Rational(-value) : value;
}

}  // namespace

std::string_view to_string(ArithmeticMode mode) {
    return mode == ArithmeticMode::kFloat64 ? "float" : "exact";
}

double to_double(const Rational& v) { return v.convert_to<double>(); }

std::string format_number(double v) {
    if (v == 0.0) return "0";  // folds -0
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf.data(), end);
}

std::string format_number(const Rational& v) {
    BigInt num = boost::multiprecision::numerator(v);
    BigInt den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();

    BigInt rest = den;
    unsigned twos = 0;
    unsigned fives = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1) return num.str() + "/" + den.str();

    unsigned digits = std::max(twos, fives);
    bool negative = num < 0;
    BigInt scaled = (negative ? BigInt(-num) : num) * pow10(digits) / den;
    std::string s = scaled.str();
    if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
    s.insert(s.size() - digits, 1, '.');
    return negative ? "-" + s : s;
}

std::optional<FractionLiteral> parse_fraction_literal(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return std::nullopt;
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
        num_digits.remove_prefix(1);
    }
    if (!is_digits(num_digits) || !is_digits(den)) bad_number(text);
    BigInt n = decimal_digits(std::string(num_digits));
    if (!num.empty() && num.front() == '-') n = -n;
    return FractionLiteral{n, decimal_digits(std::string(den))};
}

template <>
Rational parse_number<Rational>(std::string_view text) {
    if (auto frac = parse_fraction_literal(text)) {
        if (frac->denominator == 0) bad_number(text);
        return Rational(frac->numerator, frac->denominator);
    }
    return parse_decimal(text);
}

template <>
double parse_number<double>(std::string_view text) {
    if (parse_fraction_literal(text)) return to_double(parse_number<Rational>(text));
    std::string_view s = text;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) bad_number(text);
    return v;
}

}  // namespace mpeda
