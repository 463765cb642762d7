#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "detail/checked.hpp"
#include "error.hpp"

namespace mideal {

/// A point of the exponent lattice with nonnegative entries; x^m for m in N^n.
class ExponentVector {
public:
    using value_type = std::int64_t;

    ExponentVector() = default;

    explicit ExponentVector(std::vector<value_type> entries) : entries_(std::move(entries))
    {
        for (auto e : entries_) {
            if (e < 0) {
                throw InputError("exponent vectors must have nonnegative entries");
            }
        }
    }

    ExponentVector(std::initializer_list<value_type> entries) : ExponentVector(std::vector<value_type>(entries)) {}

    static ExponentVector zero(std::size_t n) { return ExponentVector(std::vector<value_type>(n, 0)); }

    static ExponentVector unit(std::size_t n, std::size_t i)
    {
        std::vector<value_type> v(n, 0);
        v.at(i) = 1;
        return ExponentVector(std::move(v));
    }

    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] value_type operator[](std::size_t i) const { return entries_[i]; }
    [[nodiscard]] std::span<const value_type> entries() const { return entries_; }
    [[nodiscard]] auto begin() const { return entries_.begin(); }
    [[nodiscard]] auto end() const { return entries_.end(); }

    [[nodiscard]] value_type degree() const
    {
        value_type d = 0;
        for (auto e : entries_) {
            d = detail::checked_add(d, e);
        }
        return d;
    }

    [[nodiscard]] bool is_zero() const
    {
        return std::all_of(entries_.begin(), entries_.end(), [](value_type e) { return e == 0; });
    }

    /// Componentwise <=, i.e. x^this divides x^other.
    [[nodiscard]] bool divides(const ExponentVector &other) const
    {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i] > other.entries_[i]) {
                return false;
            }
        }
        return true;
    }

    /// True iff the support lies inside the given index mask.
    [[nodiscard]] bool supported_in(const std::vector<bool> &mask) const
    {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i] != 0 && !mask[i]) {
                return false;
            }
        }
        return true;
    }

    friend ExponentVector operator+(const ExponentVector &a, const ExponentVector &b)
    {
        std::vector<value_type> r(a.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = detail::checked_add(a[i], b[i]);
        }
        return ExponentVector(std::move(r));
    }

    friend ExponentVector operator*(value_type k, const ExponentVector &a)
    {
        std::vector<value_type> r(a.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = detail::checked_mul(k, a[i]);
        }
        return ExponentVector(std::move(r));
    }

    friend ExponentVector lcm(const ExponentVector &a, const ExponentVector &b)
    {
        std::vector<value_type> r(a.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = std::max(a[i], b[i]);
        }
        return ExponentVector(std::move(r));
    }

    friend bool operator==(const ExponentVector &, const ExponentVector &) = default;

private:
    std::vector<value_type> entries_;
};

/// Graded lexicographic order: total degree first, then x_1 > x_2 > ... so
/// that x^2 < xy < y^2 in listing order.
struct GrlexLess {
    bool operator()(const ExponentVector &a, const ExponentVector &b) const
    {
        auto da = a.degree();
        auto db = b.degree();
        if (da != db) {
            return da < db;
        }
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

inline std::string to_string(const ExponentVector &v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) {
            s += ",";
        }
        s += std::to_string(v[i]);
    }
    return s + "]";
}

} // namespace mideal
