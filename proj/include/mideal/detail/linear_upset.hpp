#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "../error.hpp"
#include "../exponent_vector.hpp"
#include "checked.hpp"

namespace mideal::detail {

/// The inequality <normal, m> >= rhs with normal >= 0.
struct LinearBound {
    std::vector<std::int64_t> normal;
    std::int64_t rhs = 0;
};

/// Upper limit on the number of enumerated prefix points.
inline constexpr std::size_t kMaxSearchBox = 20'000'000;

/// Minimal elements of {m in N^n : <a_f, m> >= b_f for all f}.
///
/// The solution set is an up-set, so its minimal elements generate a monomial
/// ideal. Every minimal element satisfies m_i <= V_i = max_f ceil(b_f / a_fi)
/// (otherwise m - e_i is still a solution). We enumerate that box on all
/// coordinates but one and solve the remaining coordinate exactly; the
/// resulting staircase L(prefix) is nonincreasing, so a candidate is minimal
/// iff stepping down any positive prefix coordinate strictly raises L.
///
/// Returns an empty list when infeasible (the zero ideal) and {0} when every
/// bound is trivially satisfied.
inline std::vector<ExponentVector> minimal_solutions(std::size_t n, std::span<const LinearBound> bounds)
{
    std::vector<const LinearBound *> active;
    for (const auto &b : bounds) {
        ensure(b.normal.size() == n, "bound dimension");
        if (b.rhs <= 0) {
            continue;
        }
        if (std::all_of(b.normal.begin(), b.normal.end(), [](std::int64_t a) { return a == 0; })) {
            return {};
        }
        active.push_back(&b);
    }
    if (active.empty()) {
        return {ExponentVector::zero(n)};
    }

    std::vector<std::int64_t> box(n, 0);
    for (const auto *b : active) {
        for (std::size_t i = 0; i < n; ++i) {
            if (b->normal[i] > 0) {
                box[i] = std::max(box[i], ceil_div(b->rhs, b->normal[i]));
            }
        }
    }

    std::size_t last = static_cast<std::size_t>(std::max_element(box.begin(), box.end()) - box.begin());
    std::vector<std::size_t> prefix;
    for (std::size_t i = 0; i < n; ++i) {
        if (i != last) {
            prefix.push_back(i);
        }
    }

    std::vector<std::size_t> stride(prefix.size());
    std::size_t total = 1;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
        stride[k] = total;
        auto extent = static_cast<std::size_t>(box[prefix[k]]) + 1;
        if (total > kMaxSearchBox / extent) {
            throw InputError("generator search box exceeds desk-scale limits");
        }
        total *= extent;
    }

    constexpr std::int64_t kInfeasible = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> staircase(total);
    std::vector<std::int64_t> point(n, 0);
    std::vector<ExponentVector> result;

    for (std::size_t idx = 0; idx < total; ++idx) {
        if (idx != 0) {
            // mixed-radix increment, first prefix coordinate fastest
            for (std::size_t k = 0; k < prefix.size(); ++k) {
                auto &c = point[prefix[k]];
                if (c < box[prefix[k]]) {
                    ++c;
                    break;
                }
                c = 0;
            }
        }

        std::int64_t need = 0;
        for (const auto *b : active) {
            std::int64_t s = 0;
            for (auto i : prefix) {
                s = checked_add(s, checked_mul(b->normal[i], point[i]));
            }
            std::int64_t rest = checked_sub(b->rhs, s);
            if (rest <= 0) {
                continue;
            }
            if (b->normal[last] == 0) {
                need = kInfeasible;
                break;
            }
            need = std::max(need, ceil_div(rest, b->normal[last]));
        }
        staircase[idx] = need;
        if (need == kInfeasible) {
            continue;
        }

        bool minimal = true;
        for (std::size_t k = 0; k < prefix.size() && minimal; ++k) {
            if (point[prefix[k]] > 0 && staircase[idx - stride[k]] <= need) {
                minimal = false;
            }
        }
        if (minimal) {
            std::vector<std::int64_t> m = point;
            m[last] = need;
            result.emplace_back(std::move(m));
        }
    }
    return result;
}

} // namespace mideal::detail
