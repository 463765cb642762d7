#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace mideal::detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("64-bit overflow in exponent arithmetic");
    }
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("64-bit overflow in exponent arithmetic");
    }
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("64-bit overflow in exponent arithmetic");
    }
    return r;
}

inline std::int64_t narrow(__int128 v)
{
    if (v > INT64_MAX || v < INT64_MIN) {
        throw std::overflow_error("64-bit overflow in exponent arithmetic");
    }
    return static_cast<std::int64_t>(v);
}

/// floor(a / b) for b > 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && (a < 0)) {
        --q;
    }
    return q;
}

/// ceil(a / b) for b > 0.
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

} // namespace mideal::detail
