#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "detail/linear_upset.hpp"
#include "error.hpp"
#include "exponent_vector.hpp"

namespace mideal {

/// Largest supported number of variables.
inline constexpr std::size_t kMaxAmbientDim = 8;
/// Largest exponent accepted from user input.
inline constexpr std::int64_t kMaxInputExponent = 64;

/// Sorted, duplicate-free variable indices.
using VariableSubset = std::vector<std::size_t>;

/// A monomial ideal in k[x_1..x_n], stored by its minimal generators in
/// graded-lex order. Structural equality is ideal equality.
///
/// The zero ideal has no generators; the unit ideal is generated by 0.
class MonomialIdeal {
public:
    MonomialIdeal() : MonomialIdeal(1, {}) {}

    /// Minimalizes and sorts `generators`. Throws InputError on length mismatch.
    MonomialIdeal(std::size_t n, std::vector<ExponentVector> generators) : n_(n)
    {
        if (n == 0 || n > kMaxAmbientDim) {
            throw InputError("ambient dimension must be in [1, " + std::to_string(kMaxAmbientDim) + "], got " +
                             std::to_string(n));
        }
        for (const auto &g : generators) {
            if (g.size() != n) {
                throw InputError("generator " + to_string(g) + " does not have length " + std::to_string(n));
            }
        }
        std::sort(generators.begin(), generators.end(), GrlexLess{});
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        // a proper divisor has strictly smaller degree, so it is already kept
        for (auto &g : generators) {
            bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector &k) { return k.divides(g); });
            if (!redundant) {
                gens_.push_back(std::move(g));
            }
        }
    }

    static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n, {}); }
    static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {ExponentVector::zero(n)}); }
    static MonomialIdeal principal(const ExponentVector &v) { return MonomialIdeal(v.size(), {v}); }

    /// The ideal (x_i : i in subset).
    static MonomialIdeal variables(std::size_t n, const VariableSubset &subset)
    {
        std::vector<ExponentVector> gens;
        for (auto i : subset) {
            if (i >= n) {
                throw InputError("variable index out of range");
            }
            gens.push_back(ExponentVector::unit(n, i));
        }
        return MonomialIdeal(n, std::move(gens));
    }

    static MonomialIdeal maximal(std::size_t n)
    {
        VariableSubset all(n);
        for (std::size_t i = 0; i < n; ++i) {
            all[i] = i;
        }
        return variables(n, all);
    }

    [[nodiscard]] std::size_t ambient_dim() const { return n_; }
    [[nodiscard]] const std::vector<ExponentVector> &generators() const { return gens_; }
    [[nodiscard]] std::size_t size() const { return gens_.size(); }
    [[nodiscard]] bool is_zero() const { return gens_.empty(); }
    [[nodiscard]] bool is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }

    [[nodiscard]] const std::optional<std::vector<std::string>> &variable_names() const { return names_; }

    [[nodiscard]] MonomialIdeal with_variable_names(std::vector<std::string> names) const
    {
        if (names.size() != n_) {
            throw InputError("variable name count does not match ambient dimension");
        }
        MonomialIdeal r = *this;
        r.names_ = std::move(names);
        return r;
    }

    friend bool operator==(const MonomialIdeal &a, const MonomialIdeal &b)
    {
        return a.n_ == b.n_ && a.gens_ == b.gens_;
    }

private:
    std::size_t n_;
    std::vector<ExponentVector> gens_;
    std::optional<std::vector<std::string>> names_;
};

inline MonomialIdeal minimalize(std::vector<ExponentVector> gens, std::size_t n)
{
    return MonomialIdeal(n, std::move(gens));
}

namespace detail {

inline void require_same_dim(const MonomialIdeal &a, const MonomialIdeal &b)
{
    if (a.ambient_dim() != b.ambient_dim()) {
        throw InputError("ideals live in different ambient dimensions (" + std::to_string(a.ambient_dim()) + " vs " +
                         std::to_string(b.ambient_dim()) + ")");
    }
}

inline void require_nonzero(const MonomialIdeal &I)
{
    if (I.is_zero()) {
        throw InputError("the zero ideal is not allowed here");
    }
}

inline std::vector<bool> subset_mask(std::size_t n, const VariableSubset &keep)
{
    std::vector<bool> mask(n, false);
    for (auto i : keep) {
        if (i >= n) {
            throw InputError("variable index " + std::to_string(i) + " out of range");
        }
        if (mask[i]) {
            throw InputError("duplicate variable index " + std::to_string(i));
        }
        mask[i] = true;
    }
    return mask;
}

} // namespace detail

[[nodiscard]] inline bool contains(const MonomialIdeal &I, const ExponentVector &m)
{
    if (m.size() != I.ambient_dim()) {
        throw InputError("monomial " + to_string(m) + " does not match ambient dimension " +
                         std::to_string(I.ambient_dim()));
    }
    return std::any_of(I.generators().begin(), I.generators().end(),
                       [&](const ExponentVector &g) { return g.divides(m); });
}

/// A generator of J lying outside I, if any.
[[nodiscard]] inline std::optional<ExponentVector> find_uncontained(const MonomialIdeal &I, const MonomialIdeal &J)
{
    detail::require_same_dim(I, J);
    for (const auto &g : J.generators()) {
        if (!contains(I, g)) {
            return g;
        }
    }
    return std::nullopt;
}

/// J ⊆ I.
[[nodiscard]] inline bool contains(const MonomialIdeal &I, const MonomialIdeal &J)
{
    return !find_uncontained(I, J).has_value();
}

[[nodiscard]] inline MonomialIdeal multiply(const MonomialIdeal &I, const MonomialIdeal &J)
{
    detail::require_same_dim(I, J);
    std::vector<ExponentVector> gens;
    gens.reserve(I.size() * J.size());
    for (const auto &a : I.generators()) {
        for (const auto &b : J.generators()) {
            gens.push_back(a + b);
        }
    }
    return MonomialIdeal(I.ambient_dim(), std::move(gens));
}

[[nodiscard]] inline MonomialIdeal power(const MonomialIdeal &I, std::int64_t k)
{
    if (k < 0) {
        throw InputError("ideal power must be nonnegative");
    }
    MonomialIdeal result = MonomialIdeal::unit(I.ambient_dim());
    for (std::int64_t i = 0; i < k; ++i) {
        result = multiply(result, I);
    }
    return result;
}

[[nodiscard]] inline MonomialIdeal sum(const MonomialIdeal &I, const MonomialIdeal &J)
{
    detail::require_same_dim(I, J);
    std::vector<ExponentVector> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return MonomialIdeal(I.ambient_dim(), std::move(gens));
}

[[nodiscard]] inline MonomialIdeal intersect(const MonomialIdeal &I, const MonomialIdeal &J)
{
    detail::require_same_dim(I, J);
    std::vector<ExponentVector> gens;
    gens.reserve(I.size() * J.size());
    for (const auto &a : I.generators()) {
        for (const auto &b : J.generators()) {
            gens.push_back(lcm(a, b));
        }
    }
    return MonomialIdeal(I.ambient_dim(), std::move(gens));
}

/// Image of I under x_i -> 0 for i not in `keep`, re-indexed to |keep| variables.
[[nodiscard]] inline MonomialIdeal restrict(const MonomialIdeal &I, const VariableSubset &keep)
{
    if (keep.empty()) {
        throw InputError("restriction needs at least one kept variable");
    }
    auto mask = detail::subset_mask(I.ambient_dim(), keep);
    VariableSubset order = keep;
    std::sort(order.begin(), order.end());
    std::vector<ExponentVector> gens;
    for (const auto &g : I.generators()) {
        if (!g.supported_in(mask)) {
            continue;
        }
        std::vector<std::int64_t> v;
        v.reserve(order.size());
        for (auto i : order) {
            v.push_back(g[i]);
        }
        gens.emplace_back(std::move(v));
    }
    return MonomialIdeal(order.size(), std::move(gens));
}

[[nodiscard]] inline bool is_squarefree(const MonomialIdeal &I)
{
    return std::all_of(I.generators().begin(), I.generators().end(), [](const ExponentVector &g) {
        return std::all_of(g.begin(), g.end(), [](std::int64_t e) { return e <= 1; });
    });
}

namespace detail {

inline void require_nontrivial_squarefree(const MonomialIdeal &q)
{
    if (!is_squarefree(q)) {
        throw InputError("ideal is not squarefree");
    }
    if (q.is_zero() || q.is_unit()) {
        throw InputError("ideal must be proper and nonzero");
    }
}

} // namespace detail

/// Minimal vertex covers of the generator supports, i.e. the minimal primes
/// (x_i : i in S) of a squarefree monomial ideal. Ordered by size, then lex.
[[nodiscard]] inline std::vector<VariableSubset> minimal_primes(const MonomialIdeal &q)
{
    detail::require_nontrivial_squarefree(q);
    const std::size_t n = q.ambient_dim();
    std::vector<std::uint32_t> supports;
    for (const auto &g : q.generators()) {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (g[i] != 0) {
                s |= 1u << i;
            }
        }
        supports.push_back(s);
    }

    std::vector<std::uint32_t> masks(std::size_t{1} << n);
    for (std::uint32_t m = 0; m < masks.size(); ++m) {
        masks[m] = m;
    }
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });

    std::vector<std::uint32_t> covers;
    for (auto m : masks) {
        bool covers_all = std::all_of(supports.begin(), supports.end(), [m](std::uint32_t s) { return (s & m) != 0; });
        if (!covers_all) {
            continue;
        }
        bool minimal = std::none_of(covers.begin(), covers.end(), [m](std::uint32_t c) { return (c & m) == c; });
        if (minimal) {
            covers.push_back(m);
        }
    }

    std::vector<VariableSubset> result;
    for (auto c : covers) {
        VariableSubset s;
        for (std::size_t i = 0; i < n; ++i) {
            if (c & (1u << i)) {
                s.push_back(i);
            }
        }
        result.push_back(std::move(s));
    }
    std::sort(result.begin(), result.end(), [](const VariableSubset &a, const VariableSubset &b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return result;
}

/// q^(k) = {m : sum_{i in S} m_i >= k for every minimal prime S}.
[[nodiscard]] inline MonomialIdeal symbolic_power(const MonomialIdeal &q, std::int64_t k)
{
    if (k < 1) {
        throw InputError("symbolic power exponent must be positive");
    }
    const std::size_t n = q.ambient_dim();
    std::vector<detail::LinearBound> bounds;
    for (const auto &S : minimal_primes(q)) {
        detail::LinearBound b{std::vector<std::int64_t>(n, 0), k};
        for (auto i : S) {
            b.normal[i] = 1;
        }
        bounds.push_back(std::move(b));
    }
    return MonomialIdeal(n, detail::minimal_solutions(n, bounds));
}

/// Rejects inputs beyond the supported desk scale (n <= 8, exponents <= 64).
inline void validate_desk_scale(const MonomialIdeal &I)
{
    for (const auto &g : I.generators()) {
        for (auto e : g) {
            if (e > kMaxInputExponent) {
                throw InputError("exponent " + std::to_string(e) + " exceeds the supported maximum " +
                                 std::to_string(kMaxInputExponent));
            }
        }
    }
}

} // namespace mideal
