#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "asymptotic.hpp"
#include "error.hpp"
#include "monomial_ideal.hpp"
#include "multiplier.hpp"
#include "rational.hpp"
#include "verdict.hpp"

namespace mideal {

namespace detail {

inline std::string subset_string(const VariableSubset &s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i ? "," : "") + std::to_string(s[i]);
    }
    return out + "}";
}

inline void require_nonzero_nonunit(const MonomialIdeal &a)
{
    require_nonzero(a);
    if (a.is_unit()) {
        throw PreconditionError("the ideal must be proper");
    }
}

} // namespace detail

/// Skoda I: J(b^j) = b · J(b^{j-1}) for every n <= j <= m.
[[nodiscard]] inline Verdict check_skoda_I(const MonomialIdeal &b, std::int64_t m)
{
    detail::require_nonzero(b);
    const auto n = static_cast<std::int64_t>(b.ambient_dim());
    if (m < n) {
        throw PreconditionError("Skoda's theorem needs m >= n = " + std::to_string(n));
    }
    Verdict v("skoda_I", {{"m", std::to_string(m)}});
    auto P = NewtonPolytope::build(b);
    MonomialIdeal previous = multiplier_ideal(P, Rational(n - 1));
    for (std::int64_t j = n; j <= m; ++j) {
        MonomialIdeal current = multiplier_ideal(P, Rational(j));
        v.check_equal("J(b^" + std::to_string(j) + ") = b J(b^" + std::to_string(j - 1) + ")", current,
                      multiply(b, previous));
        previous = std::move(current);
    }
    return v;
}

/// Skoda II: J(a1^c a2^d) = a1^{c-(n-1)} J(a1^{n-1} a2^d) for integer c >= n.
[[nodiscard]] inline Verdict check_skoda_II(const MonomialIdeal &a1, const MonomialIdeal &a2, std::int64_t c,
                                            const Rational &d)
{
    detail::require_same_dim(a1, a2);
    const auto n = static_cast<std::int64_t>(a1.ambient_dim());
    if (c < n) {
        throw PreconditionError("Skoda II needs c >= n = " + std::to_string(n));
    }
    if (d <= 0) {
        throw PreconditionError("Skoda II needs d > 0");
    }
    Verdict v("skoda_II", {{"c", std::to_string(c)}, {"d", to_string(d)}});
    MonomialIdeal lhs = mixed_multiplier_ideal({{a1, Rational(c)}, {a2, d}});
    MonomialIdeal rhs = multiply(power(a1, c - (n - 1)), mixed_multiplier_ideal({{a1, Rational(n - 1)}, {a2, d}}));
    v.check_equal("J(a1^c a2^d) = a1^(c-n+1) J(a1^(n-1) a2^d)", lhs, rhs);
    return v;
}

/// Briançon–Skoda: closure(b^m) ⊆ J(b^m) ⊆ b^{m+1-n}.
[[nodiscard]] inline Verdict check_briancon_skoda(const MonomialIdeal &b, std::int64_t m)
{
    detail::require_nonzero(b);
    const auto n = static_cast<std::int64_t>(b.ambient_dim());
    if (m < n) {
        throw PreconditionError("Briançon–Skoda needs m >= n = " + std::to_string(n));
    }
    Verdict v("briancon_skoda", {{"m", std::to_string(m)}});
    MonomialIdeal closure = integral_closure(power(b, m));
    MonomialIdeal J = multiplier_ideal(b, Rational(m));
    v.check_subset("closure(b^m) in J(b^m)", closure, J);
    v.check_subset("J(b^m) in b^(m+1-n)", J, power(b, m + 1 - n));
    return v;
}

/// Subadditivity: J(a^c b^d) ⊆ J(a^c) J(b^d), and J(a^{cm}) ⊆ J(a^c)^m for
/// the supplied power m (skipped when m = 0).
[[nodiscard]] inline Verdict check_subadditivity(const MonomialIdeal &a, const MonomialIdeal &b, const Rational &c,
                                                 const Rational &d, std::int64_t m = 2)
{
    detail::require_same_dim(a, b);
    detail::require_nonzero(a);
    detail::require_nonzero(b);
    if (c <= 0 || d <= 0) {
        throw PreconditionError("subadditivity needs c, d > 0");
    }
    if (m < 0) {
        throw PreconditionError("subadditivity power must be nonnegative");
    }
    Verdict v("subadditivity", {{"c", to_string(c)}, {"d", to_string(d)}, {"m", std::to_string(m)}});
    MonomialIdeal mixed = mixed_multiplier_ideal({{a, c}, {b, d}});
    v.check_subset("J(a^c b^d) in J(a^c) J(b^d)", mixed, multiply(multiplier_ideal(a, c), multiplier_ideal(b, d)));
    if (m > 0) {
        v.check_subset("J(a^cm) in J(a^c)^m", multiplier_ideal(a, c * m), power(multiplier_ideal(a, c), m));
    }
    return v;
}

/// Restriction to the coordinate subspace Y spanned by `keep`:
/// J(Y, (b·k[Y])^c) ⊆ J(X, b^c)·k[Y]. Records whether the inclusion is strict.
[[nodiscard]] inline Verdict check_restriction(const MonomialIdeal &b, const VariableSubset &keep, const Rational &c)
{
    detail::require_nonzero(b);
    if (c < 0) {
        throw PreconditionError("restriction needs c >= 0");
    }
    MonomialIdeal restricted = restrict(b, keep);
    if (restricted.is_zero()) {
        throw PreconditionError("the subspace lies in the zero locus of b");
    }
    Verdict v("restriction", {{"keep", detail::subset_string(keep)}, {"c", to_string(c)}});
    MonomialIdeal lhs = multiplier_ideal(restricted, c);
    MonomialIdeal rhs = restrict(multiplier_ideal(b, c), keep);
    v.check_subset("J(b|Y ^c) in J(b^c)|Y", lhs, rhs);
    v.strict = lhs != rhs;
    return v;
}

/// For consecutive jumping numbers ξ < ξ' of a up to n:
/// b^m J(a^ξ) ∩ J(a^ξ') ⊆ b^{m-n} J(a^ξ').
[[nodiscard]] inline Verdict check_jump_lemma(const MonomialIdeal &a, const MonomialIdeal &b, std::int64_t m)
{
    detail::require_same_dim(a, b);
    detail::require_nonzero_nonunit(a);
    detail::require_nonzero(b);
    const auto n = static_cast<std::int64_t>(a.ambient_dim());
    if (m <= n) {
        throw PreconditionError("the jumping lemma needs m > n = " + std::to_string(n));
    }
    Verdict v("jump_lemma", {{"m", std::to_string(m)}});
    auto P = NewtonPolytope::build(a);
    auto spectrum = jumping_numbers(a, Rational(n));
    MonomialIdeal bm = power(b, m);
    MonomialIdeal bmn = power(b, m - n);
    for (std::size_t i = 0; i + 1 < spectrum.jumps.size(); ++i) {
        const Rational &xi = spectrum.jumps[i].value;
        const Rational &next = spectrum.jumps[i + 1].value;
        MonomialIdeal J_next = multiplier_ideal(P, next);
        MonomialIdeal lhs = intersect(multiply(bm, multiplier_ideal(P, xi)), J_next);
        v.check_subset("xi = " + to_string(xi) + ", xi' = " + to_string(next), lhs, multiply(bmn, J_next));
    }
    return v;
}

/// Uniform Artin–Rees with k = ℓ(f)·n: b^m ∩ (f) ⊆ b^{m-k}·(f) for f = x^v.
[[nodiscard]] inline Verdict check_uniform_artin_rees(const ExponentVector &f, const MonomialIdeal &b, std::int64_t m)
{
    detail::require_nonzero(b);
    if (f.size() != b.ambient_dim()) {
        throw InputError("f and b live in different ambient dimensions");
    }
    const auto n = static_cast<std::int64_t>(b.ambient_dim());
    const std::int64_t k = jumping_length(f) * n;
    if (m < k) {
        throw PreconditionError("Artin–Rees check needs m >= k = " + std::to_string(k));
    }
    Verdict v("uniform_artin_rees", {{"f", to_string(f)}, {"k", std::to_string(k)}, {"m", std::to_string(m)}});
    MonomialIdeal principal = MonomialIdeal::principal(f);
    v.check_subset("b^m ∩ (f) in b^(m-k) (f)", intersect(power(b, m), principal),
                   multiply(power(b, m - k), principal));
    return v;
}

/// Jumping numbers ξ >= n-1 are periodic with period 1: ξ in [n-1, n-1+w]
/// is a jump iff ξ + 1 is. Failing values are reported via the verdict.
[[nodiscard]] inline Verdict check_periodicity(const MonomialIdeal &a, const Rational &window)
{
    detail::require_nonzero_nonunit(a);
    if (window <= 0) {
        throw PreconditionError("periodicity window must be positive");
    }
    const auto n = static_cast<std::int64_t>(a.ambient_dim());
    const Rational start(n - 1);
    Verdict v("periodicity", {{"window", to_string(window)}});
    auto spectrum = jumping_numbers(a, start + 2 * window);
    const Jump *unpaired = nullptr;
    Rational partner;
    for (const auto &j : spectrum.jumps) {
        if (j.value >= start && j.value <= start + window && !spectrum.contains(j.value + 1)) {
            unpaired = &j;
            partner = j.value + 1;
            break;
        }
        // converse only above n-1: at c = n-1 itself Skoda does not reach below
        if (j.value > start + 1 && j.value <= start + 1 + window && !spectrum.contains(j.value - 1)) {
            unpaired = &j;
            partner = j.value - 1;
            break;
        }
    }
    v.steps.push_back({"jumps in [n-1, n-1+w] recur at +1", unpaired == nullptr});
    v.lhs = a;
    v.rhs = a;
    if (unpaired != nullptr) {
        // lhs is the witness monomial of the unpaired jump; it has no partner
        v.holds = false;
        v.lhs = MonomialIdeal::principal(unpaired->witness);
        v.rhs = MonomialIdeal::zero(a.ambient_dim());
        v.counterexample = unpaired->witness;
        v.failed_step = to_string(unpaired->value) + " is a jump but " + to_string(partner) + " is not";
    }
    return v;
}

/// Random instance distribution and selected checks for run_suite.
struct SuiteConfig {
    std::uint64_t seed = 42;
    std::int64_t cases = 100;
    std::vector<std::size_t> dims{2, 3};
    std::int64_t max_gens = 5;
    std::int64_t max_exp = 8;
    std::vector<std::string> checks; // empty = all
};

inline const std::vector<std::string> &suite_check_names()
{
    static const std::vector<std::string> names{"skoda_I",     "skoda_II",   "briancon_skoda",
                                                "subadditivity", "restriction", "jump_lemma",
                                                "uniform_artin_rees", "periodicity"};
    return names;
}

struct CheckSummary {
    std::string name;
    std::int64_t run = 0;
    std::int64_t held = 0;
    std::int64_t strict = 0; // restriction only
};

struct CaseFailure {
    std::int64_t case_index;
    std::size_t dim;
    std::vector<std::pair<std::string, MonomialIdeal>> inputs;
    Verdict verdict;
};

struct RestrictionWitness {
    std::int64_t case_index;
    MonomialIdeal ideal;
    Verdict verdict;
};

struct Report {
    SuiteConfig config;
    std::vector<CheckSummary> summaries;
    std::vector<CaseFailure> failures;
    std::optional<RestrictionWitness> strict_restriction;

    [[nodiscard]] bool all_hold() const { return failures.empty(); }
};

namespace detail {

/// Uniform generator count in [1, max_gens], exponents uniform in [0, max_exp].
class IdealSampler {
public:
    IdealSampler(std::uint64_t seed, std::int64_t max_gens, std::int64_t max_exp)
        : rng_(seed), max_gens_(max_gens), max_exp_(max_exp)
    {
    }

    MonomialIdeal ideal(std::size_t n)
    {
        auto count = uniform(1, max_gens_);
        std::vector<ExponentVector> gens;
        for (std::int64_t g = 0; g < count; ++g) {
            gens.push_back(vector(n, max_exp_));
        }
        return MonomialIdeal(n, std::move(gens));
    }

    MonomialIdeal proper_ideal(std::size_t n)
    {
        for (;;) {
            auto I = ideal(n);
            if (!I.is_unit()) {
                return I;
            }
        }
    }

    ExponentVector vector(std::size_t n, std::int64_t max_entry)
    {
        std::vector<std::int64_t> v(n);
        for (auto &e : v) {
            e = uniform(0, max_entry);
        }
        return ExponentVector(std::move(v));
    }

    ExponentVector nonzero_vector(std::size_t n, std::int64_t max_entry)
    {
        for (;;) {
            auto v = vector(n, max_entry);
            if (!v.is_zero()) {
                return v;
            }
        }
    }

    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        // modulo reduction of a 64-bit draw; identical on every platform
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(rng_() % span);
    }

    template <class T> const T &pick(const std::vector<T> &items)
    {
        return items[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(items.size()) - 1))];
    }

private:
    std::mt19937_64 rng_;
    std::int64_t max_gens_;
    std::int64_t max_exp_;
};

inline std::vector<VariableSubset> nonvanishing_subsets(const MonomialIdeal &b, bool proper)
{
    const std::size_t n = b.ambient_dim();
    std::vector<VariableSubset> out;
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (proper && mask == full) {
            continue;
        }
        VariableSubset s;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                s.push_back(i);
            }
        }
        if (!restrict(b, s).is_zero()) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

} // namespace detail

/// Runs the selected checks on `cases` seeded random instances. Each case
/// draws its dimension from `dims` and its ideals from the sampler; results
/// are merged in case order, so the report is a pure function of the config.
[[nodiscard]] inline Report run_suite(const SuiteConfig &config)
{
    if (config.cases < 0 || config.dims.empty() || config.max_gens < 1 || config.max_exp < 0) {
        throw InputError("invalid suite configuration");
    }
    for (auto n : config.dims) {
        if (n < 1 || n > kMaxAmbientDim) {
            throw InputError("suite dimension out of range");
        }
    }
    std::vector<std::string> selected = config.checks.empty() ? suite_check_names() : config.checks;
    for (const auto &name : selected) {
        if (std::find(suite_check_names().begin(), suite_check_names().end(), name) == suite_check_names().end()) {
            throw InputError("unknown check '" + name + "'");
        }
    }

    Report report;
    report.config = config;
    report.config.checks = selected;
    for (const auto &name : selected) {
        report.summaries.push_back({name});
    }

    const std::vector<Rational> halves{Rational(1, 2), Rational(1), Rational(3, 2)};
    const std::vector<Rational> fractions{Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1),
                                          Rational(3, 2), Rational(5, 2)};

    detail::IdealSampler sampler(config.seed, config.max_gens, config.max_exp);
    for (std::int64_t index = 0; index < config.cases; ++index) {
        const std::size_t n = sampler.pick(config.dims);
        const auto ni = static_cast<std::int64_t>(n);
        // every case draws the same instances regardless of the selected checks
        MonomialIdeal a = sampler.proper_ideal(n);
        MonomialIdeal b = sampler.ideal(n);
        ExponentVector f = sampler.nonzero_vector(n, 2);
        const Rational c = sampler.pick(halves);
        const Rational d = sampler.pick(halves);
        const Rational e = sampler.pick(fractions);
        auto subsets = detail::nonvanishing_subsets(b, true);
        if (subsets.empty()) {
            subsets = detail::nonvanishing_subsets(b, false);
        }
        const VariableSubset keep = sampler.pick(subsets);

        for (std::size_t s = 0; s < selected.size(); ++s) {
            const std::string &name = selected[s];
            std::vector<Verdict> verdicts;
            if (name == "skoda_I") {
                for (std::int64_t m = ni; m <= ni + 2; ++m) {
                    verdicts.push_back(check_skoda_I(b, m));
                }
            } else if (name == "skoda_II") {
                verdicts.push_back(check_skoda_II(a, b, ni, e));
            } else if (name == "briancon_skoda") {
                verdicts.push_back(check_briancon_skoda(b, ni));
            } else if (name == "subadditivity") {
                verdicts.push_back(check_subadditivity(a, b, c, d, 2));
            } else if (name == "restriction") {
                verdicts.push_back(check_restriction(b, keep, e));
            } else if (name == "jump_lemma") {
                verdicts.push_back(check_jump_lemma(a, b, ni + 1));
            } else if (name == "uniform_artin_rees") {
                const std::int64_t k = jumping_length(f) * ni;
                verdicts.push_back(check_uniform_artin_rees(f, b, k));
            } else if (name == "periodicity") {
                verdicts.push_back(check_periodicity(a, Rational(1)));
            }

            auto &summary = report.summaries[s];
            for (auto &v : verdicts) {
                ++summary.run;
                if (v.holds) {
                    ++summary.held;
                } else {
                    report.failures.push_back({index, n, {{"a", a}, {"b", b}}, v});
                }
                if (v.strict.value_or(false)) {
                    ++summary.strict;
                    if (!report.strict_restriction) {
                        report.strict_restriction = RestrictionWitness{index, b, v};
                    }
                }
            }
        }
    }
    return report;
}

} // namespace mideal
