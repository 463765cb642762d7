// mideal: command-line front end for the multiplier ideal library.
//
// Exit codes: 0 ok, 1 verdict failed, 2 bad input or precondition,
// 3 asymptotic ideal did not stabilize, 4 internal invariant broken.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <mideal/json_io.hpp>
#include <mideal/mideal.hpp>

namespace {

using namespace mideal;
using nlohmann::json;
namespace js = mideal::json;

enum Exit : int { kOk = 0, kVerdictFailed = 1, kBadInput = 2, kNoStabilization = 3, kInternal = 4 };

struct Output {
    bool as_json = false;
    std::ostringstream text;
    json doc = json::object();
    int code = kOk;
};

GradedSystem parse_system(const std::string &spec)
{
    auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw InputError("graded system must be powers:<ideal>, symbolic:<ideal> or weight:<w1,...>");
    }
    std::string kind = spec.substr(0, colon);
    std::string arg = spec.substr(colon + 1);
    if (kind == "powers") {
        return GradedSystem::powers(parse_ideal(arg));
    }
    if (kind == "symbolic") {
        return GradedSystem::symbolic(parse_ideal(arg));
    }
    if (kind == "weight") {
        std::vector<Rational> w;
        std::stringstream in(arg);
        for (std::string item; std::getline(in, item, ',');) {
            w.push_back(parse_rational(item));
        }
        return GradedSystem::weighted_valuation(std::move(w));
    }
    throw InputError("unknown graded system kind '" + kind + "'");
}

VariableSubset parse_subset(const std::string &text)
{
    VariableSubset keep;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 2) {
            throw InputError("malformed variable index '" + item + "'");
        }
        keep.push_back(static_cast<std::size_t>(std::stoul(item)));
    }
    return keep;
}

void emit_ideal(Output &out, const MonomialIdeal &I)
{
    out.text << format_ideal(I) << '\n';
    out.doc["result"] = js::ideal(I);
}

void emit_verdict(Output &out, const Verdict &v)
{
    out.doc["result"] = js::verdict(v);
    out.text << v.name << ": " << (v.holds ? "holds" : "FAILS") << '\n';
    for (const auto &[k, val] : v.parameters) {
        out.text << "  " << k << " = " << val << '\n';
    }
    for (const auto &s : v.steps) {
        out.text << "  [" << (s.holds ? "ok" : "no") << "] " << s.label << '\n';
    }
    if (v.strict) {
        out.text << "  strict: " << (*v.strict ? "yes" : "no") << '\n';
    }
    if (!v.holds) {
        out.text << "  lhs: " << format_ideal(v.lhs) << '\n';
        out.text << "  rhs: " << format_ideal(v.rhs) << '\n';
        out.text << "  counterexample: " << (v.counterexample ? format_monomial(*v.counterexample) : "-") << '\n';
        out.code = kVerdictFailed;
    }
}

struct CheckArgs {
    std::string a_text, b_text, f_text, keep_text, system_text;
    std::string c_text = "1", d_text = "1", w_text = "1";
    std::int64_t m = 0, c_int = 0, l = 1, sub_m = 2, pmax = kDefaultPMax;
};

void add_check_commands(CLI::App &check, CheckArgs &args, Output &out, std::function<void()> &action)
{
    auto &a_text = args.a_text;
    auto &b_text = args.b_text;
    auto &f_text = args.f_text;
    auto &keep_text = args.keep_text;
    auto &system_text = args.system_text;
    auto &c_text = args.c_text;
    auto &d_text = args.d_text;
    auto &w_text = args.w_text;
    auto &m = args.m;
    auto &c_int = args.c_int;
    auto &l = args.l;
    auto &sub_m = args.sub_m;
    auto &pmax = args.pmax;
    check.require_subcommand(1);

    auto *skoda1 = check.add_subcommand("skoda_I", "J(b^j) = b J(b^(j-1)) for n <= j <= m");
    skoda1->add_option("b", b_text)->required();
    skoda1->add_option("--m", m)->required();
    skoda1->callback([&] { action = [&] { emit_verdict(out, check_skoda_I(parse_ideal(b_text), m)); }; });

    auto *skoda2 = check.add_subcommand("skoda_II", "J(a1^c a2^d) = a1 J(a1^(c-1) a2^d)");
    skoda2->add_option("a1", a_text)->required();
    skoda2->add_option("a2", b_text)->required();
    skoda2->add_option("--c", c_int)->required();
    skoda2->add_option("--d", d_text)->required();
    skoda2->callback([&] {
        action = [&] {
            MonomialIdeal a1 = parse_ideal(a_text);
            emit_verdict(out, check_skoda_II(a1, parse_ideal(b_text, a1.ambient_dim()), c_int, parse_rational(d_text)));
        };
    });

    auto *bs = check.add_subcommand("briancon_skoda", "closure(b^m) in b^(m+1-n)");
    bs->add_option("b", b_text)->required();
    bs->add_option("--m", m)->required();
    bs->callback([&] { action = [&] { emit_verdict(out, check_briancon_skoda(parse_ideal(b_text), m)); }; });

    auto *sub = check.add_subcommand("subadditivity", "J(a^c b^d) in J(a^c) J(b^d)");
    sub->add_option("a", a_text)->required();
    sub->add_option("b", b_text)->required();
    sub->add_option("--c", c_text)->required();
    sub->add_option("--d", d_text)->required();
    sub->add_option("--m", sub_m, "power used in J(a^(cm)) in J(a^c)^m")->capture_default_str();
    sub->callback([&] {
        action = [&] {
            MonomialIdeal a = parse_ideal(a_text);
            emit_verdict(out, check_subadditivity(a, parse_ideal(b_text, a.ambient_dim()), parse_rational(c_text),
                                                  parse_rational(d_text), sub_m));
        };
    });

    auto *res = check.add_subcommand("restriction", "J(b|Y ^c) in J(b^c)|Y");
    res->add_option("b", b_text)->required();
    res->add_option("--keep", keep_text, "comma-separated 0-based variable indices")->required();
    res->add_option("--c", c_text)->required();
    res->callback([&] {
        action = [&] {
            emit_verdict(out, check_restriction(parse_ideal(b_text), parse_subset(keep_text), parse_rational(c_text)));
        };
    });

    auto *jl = check.add_subcommand("jump_lemma", "jumping numbers of a and b^m a pair up");
    jl->add_option("a", a_text)->required();
    jl->add_option("b", b_text)->required();
    jl->add_option("--m", m)->required();
    jl->callback([&] {
        action = [&] {
            MonomialIdeal a = parse_ideal(a_text);
            emit_verdict(out, check_jump_lemma(a, parse_ideal(b_text, a.ambient_dim()), m));
        };
    });

    auto *ar = check.add_subcommand("uniform_artin_rees", "b^m ∩ (f) in b^(m-k) (f)");
    ar->add_option("f", f_text, "monomial f")->required();
    ar->add_option("b", b_text)->required();
    ar->add_option("--m", m)->required();
    ar->callback([&] {
        action = [&] {
            MonomialIdeal b = parse_ideal(b_text);
            emit_verdict(out, check_uniform_artin_rees(parse_monomial(f_text, b.ambient_dim()), b, m));
        };
    });

    auto *per = check.add_subcommand("periodicity", "c is a jump iff c+1 is, for c > n-1");
    per->add_option("a", a_text)->required();
    per->add_option("--window", w_text)->capture_default_str();
    per->callback([&] {
        action = [&] { emit_verdict(out, check_periodicity(parse_ideal(a_text), parse_rational(w_text))); };
    });

    auto *growth = check.add_subcommand("growth", "a_l^m in a_lm in J(a^lm) in J(a^l)^m");
    growth->add_option("--system", system_text)->required();
    growth->add_option("--l", l)->required();
    growth->add_option("--m", m)->required();
    growth->add_option("--pmax", pmax)->capture_default_str();
    growth->callback([&] { action = [&] { emit_verdict(out, growth_chain_check(parse_system(system_text), l, m, pmax)); }; });

    auto *sp = check.add_subcommand("symbolic_power", "q^(em) in q^m");
    sp->add_option("q", a_text)->required();
    sp->add_option("--m", m)->required();
    sp->callback([&] { action = [&] { emit_verdict(out, symbolic_power_theorem_check(parse_ideal(a_text), m)); }; });
}

int run(int argc, char **argv)
{
    CLI::App app{"Multiplier ideals of monomial ideals"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    std::string out_path;
    app.add_flag("--json", out.as_json, "machine-readable output");
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    std::function<void()> action;
    std::string ideal_text, c_text, max_text, system_text;
    std::int64_t k = 1;
    std::int64_t pmax = kDefaultPMax;
    std::vector<std::string> terms;

    auto *newton = app.add_subcommand("newton", "facets of the Newton polyhedron");
    newton->add_option("ideal", ideal_text)->required();
    newton->callback([&] {
        action = [&] {
            MonomialIdeal I = parse_ideal(ideal_text);
            NewtonPolytope P = build(I);
            for (const auto &f : P.facets()) {
                out.text << format_facet(f, I.ambient_dim()) << '\n';
            }
            out.doc["result"] = js::facets(P);
        };
    });

    auto *mult = app.add_subcommand("mult", "multiplier ideal J(a^c)");
    mult->add_option("--c", c_text)->required();
    mult->add_option("ideal", ideal_text)->required();
    mult->callback([&] { action = [&] { emit_ideal(out, multiplier_ideal(parse_ideal(ideal_text), parse_rational(c_text))); }; });

    auto *mixed = app.add_subcommand("mixed", "mixed multiplier ideal J(a1^c1 ... at^ct)");
    mixed->add_option("--term", terms, "<ideal>:<p/q>")->required();
    mixed->callback([&] {
        action = [&] {
            std::vector<MixedTerm> parsed;
            for (const auto &t : terms) {
                auto colon = t.rfind(':');
                if (colon == std::string::npos) {
                    throw InputError("mixed term '" + t + "' must be <ideal>:<p/q>");
                }
                std::optional<std::size_t> n;
                if (!parsed.empty()) {
                    n = parsed.front().ideal.ambient_dim();
                }
                parsed.push_back({parse_ideal(t.substr(0, colon), n), parse_rational(t.substr(colon + 1))});
            }
            emit_ideal(out, mixed_multiplier_ideal(parsed));
        };
    });

    auto *lct_cmd = app.add_subcommand("lct", "log canonical threshold");
    lct_cmd->add_option("ideal", ideal_text)->required();
    lct_cmd->callback([&] {
        action = [&] {
            ExtendedRational t = lct(parse_ideal(ideal_text));
            out.text << to_string(t) << '\n';
            out.doc["result"] = js::rational(t);
        };
    });

    auto *jumps = app.add_subcommand("jumps", "jumping numbers up to a bound");
    jumps->add_option("--max", max_text)->required();
    jumps->add_option("ideal", ideal_text)->required();
    jumps->callback([&] {
        action = [&] {
            JumpingSpectrum s = jumping_numbers(parse_ideal(ideal_text), parse_rational(max_text));
            for (const auto &j : s.jumps) {
                out.text << to_string(j.value) << '\n';
            }
            out.doc["result"] = js::spectrum(s);
        };
    });

    auto *jlength = app.add_subcommand("jlength", "jumping length of a principal monomial ideal");
    jlength->add_option("monomial", ideal_text)->required();
    jlength->callback([&] {
        action = [&] {
            std::int64_t len = jumping_length(parse_monomial(ideal_text));
            out.text << len << '\n';
            out.doc["result"] = len;
        };
    });

    auto *intclose = app.add_subcommand("intclose", "integral closure");
    intclose->add_option("ideal", ideal_text)->required();
    intclose->callback([&] { action = [&] { emit_ideal(out, integral_closure(parse_ideal(ideal_text))); }; });

    auto *sympow = app.add_subcommand("sympow", "symbolic power of a squarefree ideal");
    sympow->add_option("--k", k)->required();
    sympow->add_option("ideal", ideal_text)->required();
    sympow->callback([&] { action = [&] { emit_ideal(out, symbolic_power(parse_ideal(ideal_text), k)); }; });

    auto *asym = app.add_subcommand("asym", "asymptotic multiplier ideal of a graded system");
    asym->add_option("--system", system_text, "powers:<ideal> | symbolic:<ideal> | weight:<w1,...>")->required();
    asym->add_option("--c", c_text)->required();
    asym->add_option("--pmax", pmax)->capture_default_str();
    asym->callback([&] {
        action = [&] {
            AsymptoticResult r = asymptotic_multiplier_ideal(parse_system(system_text), parse_rational(c_text), pmax);
            out.text << format_ideal(r.ideal) << '\n' << "stabilized at p = " << r.p_used << '\n';
            out.doc["result"] = js::ideal(r.ideal);
            out.doc["p_used"] = r.p_used;
        };
    });

    auto *check = app.add_subcommand("check", "verify one theorem on a concrete instance");
    CheckArgs check_args;
    add_check_commands(*check, check_args, out, action);

    SuiteConfig config;
    auto *suite = app.add_subcommand("suite", "seeded randomized theorem checks");
    suite->add_option("--seed", config.seed)->capture_default_str();
    suite->add_option("--cases", config.cases)->capture_default_str();
    suite->add_option("--dims", config.dims)->delimiter(',')->capture_default_str();
    suite->add_option("--checks", config.checks)->delimiter(',');
    suite->callback([&] {
        action = [&] {
            Report r = run_suite(config);
            out.doc = js::report(r);
            out.text << "seed " << config.seed << ", " << config.cases << " cases\n";
            for (const auto &s : r.summaries) {
                out.text << s.name << ": " << s.held << "/" << s.run;
                if (s.name == "restriction") {
                    out.text << " (strict " << s.strict << ")";
                }
                out.text << '\n';
            }
            if (r.strict_restriction) {
                out.text << "strict restriction witness: " << format_ideal(r.strict_restriction->ideal) << '\n';
            }
            for (const auto &f : r.failures) {
                out.text << "case " << f.case_index << " " << f.verdict.name << " FAILS at " << f.verdict.failed_step
                         << ", counterexample "
                         << (f.verdict.counterexample ? format_monomial(*f.verdict.counterexample) : "-") << '\n';
            }
            if (!r.all_hold()) {
                out.code = kVerdictFailed;
            }
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        action();
    } catch (const NonStabilizationError &e) {
        std::cerr << "error: " << e.what() << '\n';
        for (const auto &step : e.chain()) {
            std::cerr << "  p = " << step.p << ": " << format_ideal(step.ideal) << '\n';
        }
        return kNoStabilization;
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const PreconditionError &e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return kBadInput;
    } catch (const InvariantError &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const std::overflow_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }

    std::string rendered;
    if (out.as_json) {
        if (!out.doc.contains("schema")) {
            out.doc["schema"] = js::kSchemaVersion;
        }
        rendered = out.doc.dump(2) + "\n";
    } else {
        rendered = out.text.str();
    }
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << '\n';
            return kBadInput;
        }
        file << rendered;
    }
    return out.code;
}

} // namespace

int main(int argc, char **argv) { return run(argc, argv); }
