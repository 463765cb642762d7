#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monomial_ideal.hpp"

namespace mideal {

using Parameters = std::vector<std::pair<std::string, std::string>>;

struct InclusionStep {
    std::string label;
    bool holds = true;
};

/// Outcome of an exact theorem check. When the check fails, lhs/rhs are the
/// first failing inclusion lhs ⊆ rhs and the counterexample is a generator
/// of lhs outside rhs; otherwise they are the first checked pair.
struct Verdict {
    std::string name;
    bool holds = true;
    MonomialIdeal lhs;
    MonomialIdeal rhs;
    Parameters parameters;
    std::optional<ExponentVector> counterexample;
    std::string failed_step;
    std::vector<InclusionStep> steps;
    /// Set by checks that also report whether an inclusion is strict.
    std::optional<bool> strict;

    Verdict() = default;
    explicit Verdict(std::string check_name, Parameters params = {})
        : name(std::move(check_name)), parameters(std::move(params))
    {
    }

    /// Records lhs ⊆ rhs.
    bool check_subset(std::string label, const MonomialIdeal &sub, const MonomialIdeal &super)
    {
        auto missing = find_uncontained(super, sub);
        if (steps.empty()) {
            lhs = sub;
            rhs = super;
        }
        steps.push_back({std::move(label), !missing.has_value()});
        if (missing && holds) {
            holds = false;
            lhs = sub;
            rhs = super;
            counterexample = std::move(missing);
            failed_step = steps.back().label;
        }
        return !missing.has_value();
    }

    /// Records a = b as two inclusions.
    bool check_equal(const std::string &label, const MonomialIdeal &a, const MonomialIdeal &b)
    {
        bool forward = check_subset(label + " (forward)", a, b);
        bool backward = check_subset(label + " (backward)", b, a);
        return forward && backward;
    }

    /// Invariant: a failed verdict carries a monomial in lhs but not in rhs.
    [[nodiscard]] bool counterexample_is_valid() const
    {
        if (holds) {
            return !counterexample.has_value();
        }
        return counterexample && contains(lhs, *counterexample) && !contains(rhs, *counterexample);
    }
};

} // namespace mideal
