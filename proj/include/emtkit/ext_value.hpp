#pragma once

/**
 * @file ext_value.hpp
 * @brief Exact extended nonnegative reals: rationals in [0, +inf) plus +inf.
 *
 * Every distance in the library lives here. Arithmetic is exact, so all
 * identities between distances are checked with operator==.
 */

#include "emtkit/error.hpp"

#include <boost/rational.hpp>

#include <charconv>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace emtkit {

class ExtValue {
public:
    using Rational = boost::rational<std::int64_t>;

    // Zero.
    ExtValue() = default;

    ExtValue(std::int64_t integer) : ExtValue(Rational(integer)) {}

    ExtValue(std::int64_t numerator, std::int64_t denominator)
        : ExtValue(make_rational(numerator, denominator)) {}

    explicit ExtValue(Rational r) : value_(r) {
        if (r.numerator() < 0) throw InvalidInput("ExtValue must be nonnegative");
    }

    static ExtValue infinity() {
        ExtValue v;
        v.infinite_ = true;
        v.value_ = 0;
        return v;
    }

    bool is_infinite() const noexcept { return infinite_; }
    bool is_finite() const noexcept { return !infinite_; }
    bool is_zero() const noexcept { return !infinite_ && value_.numerator() == 0; }

    // Rational payload; only meaningful for finite values.
    const Rational& rational() const {
        if (infinite_) throw InvalidInput("infinite ExtValue has no rational payload");
        return value_;
    }

    std::int64_t numerator() const { return rational().numerator(); }
    std::int64_t denominator() const { return rational().denominator(); }

    friend bool operator==(const ExtValue& a, const ExtValue& b) noexcept {
        return a.infinite_ == b.infinite_ && a.value_ == b.value_;
    }

    friend std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) noexcept {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "p/q", "p" when q == 1, "inf" for infinity.
    std::string to_string() const {
        if (infinite_) return "inf";
        std::string s = std::to_string(value_.numerator());
        if (value_.denominator() != 1) s += "/" + std::to_string(value_.denominator());
        return s;
    }

    // Inverse of to_string. Accepts non-reduced fractions and reduces them;
    // rejects signs, zero denominators and trailing garbage.
    static ExtValue parse(std::string_view text) {
        if (text == "inf") return infinity();
        auto slash = text.find('/');
        auto num_text = text.substr(0, slash);
        auto num = parse_natural(num_text, text);
        std::int64_t den = 1;
        if (slash != std::string_view::npos) {
            den = parse_natural(text.substr(slash + 1), text);
            if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
        }
        return ExtValue(Rational(num, den));
    }

private:
    static Rational make_rational(std::int64_t n, std::int64_t d) {
        if (d == 0) throw InvalidInput("zero denominator");
        return Rational(n, d);
    }

    static std::int64_t parse_natural(std::string_view digits, std::string_view whole) {
        std::int64_t out = 0;
        if (digits.empty() || digits.front() == '-' || digits.front() == '+')
            throw ParseError("not a nonnegative rational: \"" + std::string(whole) + "\"");
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            throw ParseError("not a nonnegative rational: \"" + std::string(whole) + "\"");
        return out;
    }

    Rational value_{0};
    bool infinite_ = false;
};

inline std::ostream& operator<<(std::ostream& os, const ExtValue& v) { return os << v.to_string(); }

// Addition saturating at +inf.
inline ExtValue saturating_sum(const ExtValue& a, const ExtValue& b) {
    if (a.is_infinite() || b.is_infinite()) return ExtValue::infinity();
    return ExtValue(a.rational() + b.rational());
}

inline ExtValue minimum(const ExtValue& a, const ExtValue& b) { return b < a ? b : a; }
inline ExtValue maximum(const ExtValue& a, const ExtValue& b) { return a < b ? b : a; }

// a - b when the result is a well-defined ExtValue (a finite and a >= b, or a = inf and b finite).
inline std::optional<ExtValue> difference(const ExtValue& a, const ExtValue& b) {
    if (b.is_infinite()) return std::nullopt;
    if (a.is_infinite()) return ExtValue::infinity();
    if (a < b) return std::nullopt;
    return ExtValue(a.rational() - b.rational());
}

} // namespace emtkit
