#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "detail/checked.hpp"
#include "detail/linear_upset.hpp"
#include "error.hpp"
#include "monomial_ideal.hpp"
#include "newton_polytope.hpp"
#include "rational.hpp"

namespace mideal {

/// Multiplier ideal of the scaled polyhedron c·P: monomials x^m with m + 1
/// in the interior of (c·scale)·Newt. Coordinate facets hold strictly at
/// m + 1 automatically, so only positive-offset facets constrain m:
/// <a, m> > t·b - |a|, i.e. <a, m> >= floor(t·b) - |a| + 1.
[[nodiscard]] inline MonomialIdeal multiplier_ideal(const NewtonPolytope &P, const Rational &c)
{
    if (c < 0) {
        throw InputError("multiplier ideal exponent must be nonnegative, got " + to_string(c));
    }
    const std::size_t n = P.ambient_dim();
    const Rational t = c * P.scale();
    std::vector<detail::LinearBound> bounds;
    for (const auto &f : P.facets()) {
        if (f.offset == 0) {
            continue;
        }
        std::int64_t weight = 0;
        for (auto a : f.normal) {
            weight = detail::checked_add(weight, a);
        }
        std::int64_t rhs = detail::checked_add(detail::checked_sub(to_int64(floor(t * f.offset)), weight), 1);
        bounds.push_back({f.normal, rhs});
    }
    return MonomialIdeal(n, detail::minimal_solutions(n, bounds));
}

/// J(I^c) by Howald's formula.
[[nodiscard]] inline MonomialIdeal multiplier_ideal(const MonomialIdeal &I, const Rational &c)
{
    detail::require_nonzero(I);
    if (c < 0) {
        throw InputError("multiplier ideal exponent must be nonnegative, got " + to_string(c));
    }
    if (c == 0) {
        return MonomialIdeal::unit(I.ambient_dim());
    }
    return multiplier_ideal(NewtonPolytope::build(I), c);
}

struct MixedTerm {
    MonomialIdeal ideal;
    Rational exponent;
};

/// J(I_1^{c_1} ··· I_t^{c_t}). With c_i = p_i / r over a common denominator
/// this is J((I_1^{p_1} ··· I_t^{p_t})^{1/r}).
[[nodiscard]] inline MonomialIdeal mixed_multiplier_ideal(std::span<const MixedTerm> terms)
{
    if (terms.empty()) {
        throw InputError("mixed multiplier ideal needs at least one term");
    }
    const std::size_t n = terms.front().ideal.ambient_dim();
    Integer r = 1;
    for (const auto &term : terms) {
        detail::require_same_dim(terms.front().ideal, term.ideal);
        detail::require_nonzero(term.ideal);
        if (term.exponent < 0) {
            throw InputError("mixed multiplier ideal exponents must be nonnegative");
        }
        r = boost::multiprecision::lcm(r, denominator(term.exponent));
    }
    MonomialIdeal product = MonomialIdeal::unit(n);
    for (const auto &term : terms) {
        product = multiply(product, power(term.ideal, to_int64(numerator(term.exponent * r))));
    }
    return multiplier_ideal(product, Rational(Integer(1), r));
}

[[nodiscard]] inline MonomialIdeal mixed_multiplier_ideal(std::initializer_list<MixedTerm> terms)
{
    return mixed_multiplier_ideal(std::span<const MixedTerm>(terms.begin(), terms.size()));
}

/// Log canonical threshold: the largest t with (1,...,1) ∈ t·Newt(I);
/// +infinity for the unit ideal.
[[nodiscard]] inline ExtendedRational lct(const MonomialIdeal &I)
{
    detail::require_nonzero(I);
    RationalVector ones(I.ambient_dim(), Rational(1));
    return min_ratio(NewtonPolytope::build(I), ones);
}

struct Jump {
    Rational value;
    ExponentVector witness;
};

/// Jumping numbers of an ideal up to a bound, each with the exponent v of
/// smallest total degree (then grlex) whose min-facet-ratio at v + 1 is the jump.
struct JumpingSpectrum {
    MonomialIdeal ideal;
    Rational bound;
    std::vector<Jump> jumps;

    [[nodiscard]] std::vector<Rational> values() const
    {
        std::vector<Rational> v;
        for (const auto &j : jumps) {
            v.push_back(j.value);
        }
        return v;
    }

    [[nodiscard]] bool contains(const Rational &xi) const
    {
        return std::any_of(jumps.begin(), jumps.end(), [&](const Jump &j) { return j.value == xi; });
    }
};

namespace detail {

/// num/den with den > 0, compared exactly.
struct SmallFraction {
    std::int64_t num;
    std::int64_t den;

    friend bool operator<(const SmallFraction &a, const SmallFraction &b)
    {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
};

} // namespace detail

[[nodiscard]] inline JumpingSpectrum jumping_numbers(const MonomialIdeal &I, const Rational &bound)
{
    detail::require_nonzero(I);
    if (I.is_unit()) {
        throw InputError("the unit ideal has no jumping numbers");
    }
    if (bound <= 0) {
        throw InputError("jumping number bound must be positive");
    }
    const std::size_t n = I.ambient_dim();
    const NewtonPolytope P = NewtonPolytope::build(I);
    std::vector<const Facet *> active;
    for (const auto &f : P.facets()) {
        if (f.offset > 0) {
            active.push_back(&f);
        }
    }

    const std::int64_t bnum = to_int64(numerator(bound));
    const std::int64_t bden = to_int64(denominator(bound));
    const detail::SmallFraction limit{bnum, bden};

    // v_i beyond ceil(bound·b/a_i) cannot change ξ(v) when ξ(v) <= bound
    std::vector<std::int64_t> box(n, 0);
    for (const auto *f : active) {
        for (std::size_t i = 0; i < n; ++i) {
            if (f->normal[i] > 0) {
                std::int64_t need = detail::ceil_div(detail::checked_mul(bnum, f->offset),
                                                     detail::checked_mul(bden, f->normal[i]));
                box[i] = std::max(box[i], need);
            }
        }
    }

    auto xi = [&](const std::vector<std::int64_t> &v) {
        detail::SmallFraction best{0, 0};
        for (const auto *f : active) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < n; ++i) {
                s = detail::checked_add(s, detail::checked_mul(f->normal[i], v[i] + 1));
            }
            detail::SmallFraction r{s, f->offset};
            if (best.den == 0 || r < best) {
                best = r;
            }
        }
        return best;
    };

    std::map<detail::SmallFraction, ExponentVector> found;
    std::vector<std::int64_t> v(n, 0);
    // ξ is nondecreasing in each coordinate, so each coordinate scan stops at
    // the first value exceeding the bound
    auto visit = [&](auto &&self, std::size_t depth) -> void {
        for (v[depth] = 0; v[depth] <= box[depth]; ++v[depth]) {
            auto value = xi(v);
            if (limit < value) {
                break;
            }
            if (depth + 1 < n) {
                self(self, depth + 1);
                continue;
            }
            ExponentVector w(v);
            auto it = found.find(value);
            if (it == found.end()) {
                found.emplace(value, std::move(w));
            } else if (GrlexLess{}(w, it->second)) {
                it->second = std::move(w);
            }
        }
        v[depth] = 0;
    };
    visit(visit, 0);

    JumpingSpectrum spectrum{I, bound, {}};
    for (auto &[value, witness] : found) {
        spectrum.jumps.push_back({Rational(value.num, value.den), witness});
    }
    return spectrum;
}

/// Number of jumping numbers <= 1 of the principal ideal (x^v).
[[nodiscard]] inline std::int64_t jumping_length(const ExponentVector &v)
{
    if (v.size() == 0 || v.is_zero()) {
        throw InputError("jumping length needs a nonconstant monomial");
    }
    auto spectrum = jumping_numbers(MonomialIdeal::principal(v), Rational(1));
    detail::ensure(!spectrum.jumps.empty() && spectrum.jumps.back().value == 1, "1 is a jumping number of (f)");
    return static_cast<std::int64_t>(spectrum.jumps.size());
}

/// Integral closure: the ideal of lattice points of Newt(I).
[[nodiscard]] inline MonomialIdeal integral_closure(const MonomialIdeal &I)
{
    detail::require_nonzero(I);
    const std::size_t n = I.ambient_dim();
    const NewtonPolytope P = NewtonPolytope::build(I);
    std::vector<detail::LinearBound> bounds;
    for (const auto &f : P.facets()) {
        bounds.push_back({f.normal, f.offset});
    }
    return MonomialIdeal(n, detail::minimal_solutions(n, bounds));
}

} // namespace mideal
