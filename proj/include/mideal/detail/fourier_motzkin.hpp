#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "../rational.hpp"

namespace mideal::detail {

/// coeffs · x <= rhs, with the set of original rows it was derived from.
struct FmRow {
    std::vector<Integer> coeffs;
    Integer rhs;
    boost::dynamic_bitset<> history;
};

inline void fm_normalize(FmRow &row)
{
    Integer g = 0;
    for (const auto &c : row.coeffs) {
        g = boost::multiprecision::gcd(g, c);
    }
    if (g == 0) {
        return;
    }
    g = boost::multiprecision::gcd(g, row.rhs);
    if (g > 1) {
        for (auto &c : row.coeffs) {
            c /= g;
        }
        row.rhs /= g;
    }
}

/// Decides whether {x : A x <= b} is nonempty over the rationals by
/// Fourier–Motzkin elimination. Chernikov's rule discards combinations whose
/// history exceeds (#eliminated + 1) original rows; among rows with identical
/// left-hand sides only the tightest (then the one with the smallest history)
/// is kept.
inline bool fm_feasible(std::vector<FmRow> rows, std::size_t nvars)
{
    const std::size_t original = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].history.resize(original);
        rows[i].history.set(i);
        fm_normalize(rows[i]);
    }

    auto is_zero_row = [](const FmRow &r) {
        return std::all_of(r.coeffs.begin(), r.coeffs.end(), [](const Integer &c) { return c == 0; });
    };

    // Drop trivial rows, detect contradictions, keep the tightest row per lhs.
    auto prune = [&](std::vector<FmRow> &rs) -> bool {
        std::map<std::vector<Integer>, std::size_t> best;
        std::vector<FmRow> kept;
        for (auto &r : rs) {
            if (is_zero_row(r)) {
                if (r.rhs < 0) {
                    return false;
                }
                continue;
            }
            auto it = best.find(r.coeffs);
            if (it == best.end()) {
                best.emplace(r.coeffs, kept.size());
                kept.push_back(std::move(r));
                continue;
            }
            FmRow &other = kept[it->second];
            if (r.rhs < other.rhs || (r.rhs == other.rhs && r.history.count() < other.history.count())) {
                other = std::move(r);
            }
        }
        rs = std::move(kept);
        return true;
    };

    if (!prune(rows)) {
        return false;
    }

    std::vector<bool> eliminated(nvars, false);
    for (std::size_t step = 1; step <= nvars; ++step) {
        // pick the variable with the fewest generated combinations
        std::size_t var = nvars;
        std::size_t best_cost = 0;
        for (std::size_t j = 0; j < nvars; ++j) {
            if (eliminated[j]) {
                continue;
            }
            std::size_t pos = 0;
            std::size_t neg = 0;
            for (const auto &r : rows) {
                if (r.coeffs[j] > 0) {
                    ++pos;
                } else if (r.coeffs[j] < 0) {
                    ++neg;
                }
            }
            std::size_t cost = pos * neg;
            if (var == nvars || cost < best_cost) {
                var = j;
                best_cost = cost;
            }
        }
        eliminated[var] = true;

        std::vector<const FmRow *> pos;
        std::vector<const FmRow *> neg;
        std::vector<FmRow> next;
        for (const auto &r : rows) {
            if (r.coeffs[var] > 0) {
                pos.push_back(&r);
            } else if (r.coeffs[var] < 0) {
                neg.push_back(&r);
            } else {
                next.push_back(r);
            }
        }
        for (const auto *p : pos) {
            for (const auto *q : neg) {
                auto history = p->history | q->history;
                if (history.count() > step + 1) {
                    continue;
                }
                const Integer &pa = p->coeffs[var];
                Integer qa = -q->coeffs[var];
                FmRow combo;
                combo.coeffs.resize(nvars);
                for (std::size_t j = 0; j < nvars; ++j) {
                    combo.coeffs[j] = p->coeffs[j] * qa + q->coeffs[j] * pa;
                }
                combo.coeffs[var] = 0;
                combo.rhs = p->rhs * qa + q->rhs * pa;
                combo.history = std::move(history);
                fm_normalize(combo);
                next.push_back(std::move(combo));
            }
        }
        rows = std::move(next);
        if (!prune(rows)) {
            return false;
        }
    }
    return true;
}

} // namespace mideal::detail
