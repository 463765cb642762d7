#pragma once

#include <string>

#include <json.hpp>

#include "asymptotic.hpp"
#include "io.hpp"
#include "multiplier.hpp"
#include "newton_polytope.hpp"
#include "theorems.hpp"
#include "verdict.hpp"

namespace mideal::json {

using nlohmann::json;

inline constexpr const char *kSchemaVersion = "1";

inline json rational(const Rational &q) { return to_string(q); }

inline json rational(const ExtendedRational &q) { return to_string(q); }

inline json vector(const ExponentVector &v) { return json(std::vector<std::int64_t>(v.begin(), v.end())); }

/// Sorted generator arrays.
inline json ideal(const MonomialIdeal &I)
{
    json gens = json::array();
    for (const auto &g : I.generators()) {
        gens.push_back(vector(g));
    }
    return gens;
}

inline json facets(const NewtonPolytope &P)
{
    json out = json::array();
    for (const auto &f : P.facets()) {
        out.push_back({{"normal", f.normal}, {"offset", f.offset}});
    }
    return out;
}

inline json spectrum(const JumpingSpectrum &s)
{
    json jumps = json::array();
    for (const auto &j : s.jumps) {
        jumps.push_back({{"value", rational(j.value)}, {"witness", vector(j.witness)}});
    }
    return {{"ideal", ideal(s.ideal)}, {"bound", rational(s.bound)}, {"jumps", jumps}};
}

inline json verdict(const Verdict &v)
{
    json params = json::object();
    for (const auto &[k, val] : v.parameters) {
        params[k] = val;
    }
    json steps = json::array();
    for (const auto &s : v.steps) {
        steps.push_back({{"label", s.label}, {"holds", s.holds}});
    }
    json out = {{"name", v.name},
                {"holds", v.holds},
                {"parameters", params},
                {"steps", steps},
                {"lhs", ideal(v.lhs)},
                {"rhs", ideal(v.rhs)},
                {"counterexample", v.counterexample ? vector(*v.counterexample) : json(nullptr)},
                {"failed_step", v.failed_step}};
    out["strict"] = v.strict ? json(*v.strict) : json(nullptr);
    return out;
}

inline json report(const Report &r)
{
    json summary = json::array();
    for (const auto &s : r.summaries) {
        json entry = {{"check", s.name}, {"run", s.run}, {"held", s.held}};
        if (s.name == "restriction") {
            entry["strict"] = s.strict;
        }
        summary.push_back(entry);
    }
    json failures = json::array();
    for (const auto &f : r.failures) {
        json inputs = json::object();
        for (const auto &[name, I] : f.inputs) {
            inputs[name] = ideal(I);
        }
        failures.push_back({{"case", f.case_index}, {"dim", f.dim}, {"inputs", inputs}, {"verdict", verdict(f.verdict)}});
    }
    json witness = nullptr;
    if (r.strict_restriction) {
        witness = {{"case", r.strict_restriction->case_index},
                   {"ideal", ideal(r.strict_restriction->ideal)},
                   {"ideal_text", format_ideal(r.strict_restriction->ideal)},
                   {"verdict", verdict(r.strict_restriction->verdict)}};
    }
    return {{"schema", kSchemaVersion},
            {"seed", r.config.seed},
            {"cases", r.config.cases},
            {"dims", r.config.dims},
            {"max_gens", r.config.max_gens},
            {"max_exp", r.config.max_exp},
            {"checks", r.config.checks},
            {"all_hold", r.all_hold()},
            {"summary", summary},
            {"failures", failures},
            {"strict_restriction", witness}};
}

} // namespace mideal::json
