#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace mideal {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational &q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational &q) { return boost::multiprecision::denominator(q); }

inline Integer floor(const Rational &q)
{
    Integer n = numerator(q);
    Integer d = denominator(q);
    Integer f = n / d; // truncates toward zero
    if (n < 0 && f * d != n) {
        --f;
    }
    return f;
}

inline Integer ceil(const Rational &q) { return -floor(-q); }

inline bool is_integer(const Rational &q) { return denominator(q) == 1; }

/// Narrowing conversion; throws std::overflow_error when out of range.
inline std::int64_t to_int64(const Integer &z)
{
    if (z > Integer(INT64_MAX) || z < Integer(INT64_MIN)) {
        throw std::overflow_error("integer " + z.str() + " exceeds 64-bit range");
    }
    return z.convert_to<std::int64_t>();
}

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational &q)
{
    if (is_integer(q)) {
        return numerator(q).str();
    }
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p", "-p" or "p/q" (no whitespace, no decimals).
inline Rational parse_rational(std::string_view text)
{
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
            s.remove_prefix(1);
        }
        if (s.empty() || s.size() > 200) {
            return false;
        }
        for (char ch : s) {
            if (ch < '0' || ch > '9') {
                return false;
            }
        }
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.front() == '-') {
        throw InputError("malformed rational '" + std::string(text) + "' (expected p or p/q)");
    }
    Integer n(std::string(num.front() == '+' ? num.substr(1) : num));
    Integer d(std::string(den.front() == '+' ? den.substr(1) : den));
    if (d == 0) {
        throw InputError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(n, d);
}

/// A rational number or +infinity; the value of lct and min-ratio queries.
class ExtendedRational {
public:
    ExtendedRational() = default;
    ExtendedRational(Rational value) : value_(std::move(value)) {}

    static ExtendedRational infinity()
    {
        ExtendedRational r;
        r.infinite_ = true;
        return r;
    }

    [[nodiscard]] bool is_infinite() const { return infinite_; }

    /// Throws InputError when infinite.
    [[nodiscard]] const Rational &value() const
    {
        if (infinite_) {
            throw InputError("value is +infinity");
        }
        return value_;
    }

    friend bool operator==(const ExtendedRational &a, const ExtendedRational &b)
    {
        if (a.infinite_ || b.infinite_) {
            return a.infinite_ == b.infinite_;
        }
        return a.value_ == b.value_;
    }

    friend std::strong_ordering operator<=>(const ExtendedRational &a, const ExtendedRational &b)
    {
        if (a.infinite_ || b.infinite_) {
            return a.infinite_ <=> b.infinite_;
        }
        if (a.value_ < b.value_) {
            return std::strong_ordering::less;
        }
        if (b.value_ < a.value_) {
            return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

private:
    Rational value_{0};
    bool infinite_ = false;
};

inline std::string to_string(const ExtendedRational &q)
{
    return q.is_infinite() ? std::string("inf") : to_string(q.value());
}

inline std::ostream &operator<<(std::ostream &os, const ExtendedRational &q) { return os << to_string(q); }

} // namespace mideal
