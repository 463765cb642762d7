#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "detail/linear_upset.hpp"
#include "error.hpp"
#include "monomial_ideal.hpp"
#include "multiplier.hpp"
#include "rational.hpp"
#include "verdict.hpp"

namespace mideal {

namespace detail {

/// lcm of the denominators of the vertices of {x >= 0 : sum_{i in S} x_i >= 1 for each S}.
inline Integer cover_vertex_period(std::size_t n, const std::vector<VariableSubset> &subsets)
{
    struct Row {
        std::vector<Rational> a;
        Rational b;
    };
    std::vector<Row> rows;
    for (const auto &S : subsets) {
        Row r{std::vector<Rational>(n), Rational(1)};
        for (auto i : S) {
            r.a[i] = 1;
        }
        rows.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < n; ++i) {
        Row r{std::vector<Rational>(n), Rational(0)};
        r.a[i] = 1;
        rows.push_back(std::move(r));
    }

    Integer period = 1;
    std::vector<std::size_t> pick;
    auto visit_basis = [&] {
        // Gauss-Jordan on the n x (n+1) system of the picked rows
        std::vector<std::vector<Rational>> m;
        for (auto k : pick) {
            auto row = rows[k].a;
            row.push_back(rows[k].b);
            m.push_back(std::move(row));
        }
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && m[piv][col] == 0) {
                ++piv;
            }
            if (piv == n) {
                return;
            }
            std::swap(m[piv], m[col]);
            for (std::size_t r = 0; r < n; ++r) {
                if (r != col && m[r][col] != 0) {
                    Rational f = m[r][col] / m[col][col];
                    for (std::size_t j = col; j <= n; ++j) {
                        m[r][j] -= f * m[col][j];
                    }
                }
            }
        }
        std::vector<Rational> x(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = m[i][n] / m[i][i];
        }
        for (const auto &r : rows) {
            Rational lhs = 0;
            for (std::size_t i = 0; i < n; ++i) {
                lhs += r.a[i] * x[i];
            }
            if (lhs < r.b) {
                return;
            }
        }
        for (const auto &xi : x) {
            period = boost::multiprecision::lcm(period, denominator(xi));
        }
    };
    auto choose = [&](auto &self, std::size_t from) -> void {
        if (pick.size() == n) {
            visit_basis();
            return;
        }
        for (std::size_t k = from; k + (n - pick.size()) <= rows.size(); ++k) {
            pick.push_back(k);
            self(self, k + 1);
            pick.pop_back();
        }
    };
    choose(choose, 0);
    return period;
}

} // namespace detail

/// A graded system of monomial ideals a_1, a_2, ... with a_k · a_l ⊆ a_{k+l}.
class GradedSystem {
public:
    struct Powers {
        MonomialIdeal base;
    };
    struct Symbolic {
        MonomialIdeal q;
    };
    /// a_k = {m : <w, m> >= k}
    struct WeightedValuation {
        std::vector<Rational> weights;
    };
    /// a_k = terms[k - 1]
    struct Explicit {
        std::vector<MonomialIdeal> terms;
    };
    using Kind = std::variant<Powers, Symbolic, WeightedValuation, Explicit>;

    static GradedSystem powers(MonomialIdeal base)
    {
        detail::require_nonzero(base);
        std::size_t n = base.ambient_dim();
        return GradedSystem(Powers{std::move(base)}, n);
    }

    static GradedSystem symbolic(MonomialIdeal q)
    {
        detail::require_nontrivial_squarefree(q);
        std::size_t n = q.ambient_dim();
        return GradedSystem(Symbolic{std::move(q)}, n);
    }

    static GradedSystem weighted_valuation(std::vector<Rational> weights)
    {
        if (weights.empty() || weights.size() > kMaxAmbientDim) {
            throw InputError("weight vector length must be in [1, " + std::to_string(kMaxAmbientDim) + "]");
        }
        bool positive = false;
        for (const auto &w : weights) {
            if (w < 0) {
                throw InputError("valuation weights must be nonnegative");
            }
            positive = positive || w > 0;
        }
        if (!positive) {
            throw InputError("valuation weights must not all vanish");
        }
        std::size_t n = weights.size();
        return GradedSystem(WeightedValuation{std::move(weights)}, n);
    }

    /// Validates nonvanishing and superadditivity over the stored range.
    static GradedSystem explicit_terms(std::vector<MonomialIdeal> terms)
    {
        if (terms.empty()) {
            throw InputError("explicit graded system needs at least one term");
        }
        for (const auto &t : terms) {
            detail::require_same_dim(terms.front(), t);
            detail::require_nonzero(t);
        }
        for (std::size_t k = 1; k <= terms.size(); ++k) {
            for (std::size_t l = k; k + l <= terms.size(); ++l) {
                if (!contains(terms[k + l - 1], multiply(terms[k - 1], terms[l - 1]))) {
                    throw InputError("explicit terms are not superadditive at (" + std::to_string(k) + ", " +
                                     std::to_string(l) + ")");
                }
            }
        }
        std::size_t n = terms.front().ambient_dim();
        return GradedSystem(Explicit{std::move(terms)}, n);
    }

    [[nodiscard]] const Kind &kind() const { return kind_; }
    [[nodiscard]] std::size_t ambient_dim() const { return n_; }

    /// Largest valid index, or INT64_MAX for unbounded systems.
    [[nodiscard]] std::int64_t max_index() const
    {
        if (const auto *e = std::get_if<Explicit>(&kind_)) {
            return static_cast<std::int64_t>(e->terms.size());
        }
        return INT64_MAX;
    }

    /// Smallest d such that the Newton polyhedron of a_{dk} is exactly k times
    /// that of a_d for every k (1 for powers and explicit systems).
    [[nodiscard]] std::int64_t period() const
    {
        if (const auto *w = std::get_if<WeightedValuation>(&kind_)) {
            Integer d = 1;
            for (const auto &x : w->weights) {
                if (x > 0) {
                    d = boost::multiprecision::lcm(d, numerator(x));
                }
            }
            return to_int64(d);
        }
        if (const auto *s = std::get_if<Symbolic>(&kind_)) {
            return to_int64(detail::cover_vertex_period(n_, minimal_primes(s->q)));
        }
        return 1;
    }

    [[nodiscard]] MonomialIdeal term(std::int64_t k) const
    {
        if (k < 1 || k > max_index()) {
            throw InputError("graded system index " + std::to_string(k) + " out of range");
        }
        return std::visit(
            [&](const auto &s) -> MonomialIdeal {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, Powers>) {
                    return power(s.base, k);
                } else if constexpr (std::is_same_v<T, Symbolic>) {
                    return symbolic_power(s.q, k);
                } else if constexpr (std::is_same_v<T, WeightedValuation>) {
                    return valuation_ideal(s.weights, k);
                } else {
                    return s.terms[static_cast<std::size_t>(k - 1)];
                }
            },
            kind_);
    }

private:
    GradedSystem(Kind kind, std::size_t n) : kind_(std::move(kind)), n_(n) {}

    static MonomialIdeal valuation_ideal(const std::vector<Rational> &w, std::int64_t k)
    {
        const std::size_t n = w.size();
        Integer common = 1;
        for (const auto &x : w) {
            common = boost::multiprecision::lcm(common, denominator(x));
        }
        detail::LinearBound bound{std::vector<std::int64_t>(n), to_int64(common * k)};
        for (std::size_t i = 0; i < n; ++i) {
            bound.normal[i] = to_int64(numerator(w[i] * common));
        }
        return MonomialIdeal(n, detail::minimal_solutions(n, std::span(&bound, 1)));
    }

    Kind kind_;
    std::size_t n_;
};

struct StabilizationStep {
    std::int64_t p;
    MonomialIdeal ideal; // J(a_p^{c/p})
};

/// Thrown when J(a_p^{c/p}) does not repeat within the allowed range of p.
class NonStabilizationError : public std::runtime_error {
public:
    NonStabilizationError(const std::string &what, std::vector<StabilizationStep> chain)
        : std::runtime_error(what), chain_(std::move(chain))
    {
    }
    [[nodiscard]] const std::vector<StabilizationStep> &chain() const { return chain_; }

private:
    std::vector<StabilizationStep> chain_;
};

struct AsymptoticResult {
    MonomialIdeal ideal;
    std::int64_t p_used;
    std::vector<StabilizationStep> chain;
};

inline constexpr std::int64_t kDefaultPMax = 64;

/// J(a_•^c): evaluates J(a_p^{c/p}) for p = d, 2d, 4d, ... with d = S.period()
/// and returns the first value that repeats. The chain is nondecreasing; a
/// decrease is a bug. Starting at d matters: for weights like (2, 5/7) the
/// powers of two never see an exact Newton polyhedron and repeat too early.
[[nodiscard]] inline AsymptoticResult asymptotic_multiplier_ideal(const GradedSystem &S, const Rational &c,
                                                                  std::int64_t p_max = kDefaultPMax)
{
    if (c <= 0) {
        throw InputError("asymptotic multiplier ideal exponent must be positive");
    }
    if (p_max < 1) {
        throw InputError("p_max must be at least 1");
    }
    const std::int64_t limit = std::min(p_max, S.max_index());
    std::vector<StabilizationStep> chain;
    for (std::int64_t p = S.period(); p <= limit; p *= 2) {
        MonomialIdeal J = multiplier_ideal(S.term(p), c / p);
        if (!chain.empty()) {
            const MonomialIdeal &prev = chain.back().ideal;
            if (!contains(J, prev)) {
                detail::invariant_failed("asymptotic chain J(a_p^{c/p}) ⊆ J(a_2p^{c/2p}) broken at p = " +
                                         std::to_string(p));
            }
            if (J == prev) {
                chain.push_back({p, J});
                return {std::move(J), p, std::move(chain)};
            }
        }
        chain.push_back({p, std::move(J)});
        if (p > limit / 2) {
            break;
        }
    }
    throw NonStabilizationError("J(a_p^{c/p}) did not stabilize for p <= " + std::to_string(limit) + " (period " +
                                    std::to_string(S.period()) + ")",
                                std::move(chain));
}

/// a_l^m ⊆ a_{lm} ⊆ J(a_•^{lm}) ⊆ J(a_•^l)^m
[[nodiscard]] inline Verdict growth_chain_check(const GradedSystem &S, std::int64_t l, std::int64_t m,
                                                std::int64_t p_max = kDefaultPMax)
{
    if (l < 1 || m < 1) {
        throw InputError("growth chain indices must be positive");
    }
    Verdict v("growth_chain", {{"l", std::to_string(l)}, {"m", std::to_string(m)}});
    MonomialIdeal a_l = S.term(l);
    MonomialIdeal a_lm = S.term(l * m);
    MonomialIdeal asym_lm = asymptotic_multiplier_ideal(S, Rational(l * m), p_max).ideal;
    MonomialIdeal asym_l = asymptotic_multiplier_ideal(S, Rational(l), p_max).ideal;
    v.check_subset("a_l^m in a_lm", power(a_l, m), a_lm);
    v.check_subset("a_lm in J(a^lm)", a_lm, asym_lm);
    v.check_subset("J(a^lm) in J(a^l)^m", asym_lm, power(asym_l, m));
    return v;
}

/// q^(e·m) ⊆ q^m where e is the largest codimension of a component of V(q).
[[nodiscard]] inline Verdict symbolic_power_theorem_check(const MonomialIdeal &q, std::int64_t m)
{
    if (m < 1) {
        throw InputError("symbolic power theorem check needs m >= 1");
    }
    std::size_t e = 0;
    for (const auto &S : minimal_primes(q)) {
        e = std::max(e, S.size());
    }
    auto em = static_cast<std::int64_t>(e) * m;
    Verdict v("symbolic_power", {{"m", std::to_string(m)}, {"e", std::to_string(e)}});
    v.check_subset("q^(em) in q^m", symbolic_power(q, em), power(q, m));
    return v;
}

} // namespace mideal
