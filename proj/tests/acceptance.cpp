// Acceptance runner: one PASS/FAIL line per criterion, exit 1 if any fails.
// Usage: acceptance <path-to-mideal-cli>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <mideal/json_io.hpp>
#include <mideal/mideal.hpp>

using namespace mideal;

namespace {

struct Criterion {
    std::vector<std::string> problems;
    std::int64_t checked = 0;

    void expect(bool ok, const std::string &what)
    {
        ++checked;
        if (!ok && problems.size() < 10) {
            problems.push_back(what);
        }
    }
};

MonomialIdeal ideal(const char *text) { return parse_ideal(text); }

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

MonomialIdeal random_ideal(std::mt19937_64 &rng, std::size_t n, int max_gens = 5, int max_exp = 8)
{
    std::uniform_int_distribution<int> count(1, max_gens), exp(0, max_exp);
    for (;;) {
        std::vector<ExponentVector> gens;
        for (int k = count(rng); k > 0; --k) {
            std::vector<std::int64_t> e(n);
            for (auto &x : e) {
                x = exp(rng);
            }
            gens.emplace_back(e);
        }
        MonomialIdeal I(n, gens);
        if (!I.is_unit()) {
            return I;
        }
    }
}

std::string show(const MonomialIdeal &I) { return format_ideal(I); }

void golden(Criterion &c)
{
    c.expect(lct(ideal("(x^2,y^3)")) == ExtendedRational(q(5, 6)), "lct (x^2,y^3)");
    c.expect(lct(ideal("(x^2,y^2)")) == ExtendedRational(q(1)), "lct (x^2,y^2)");

    auto a = ideal("(x^4,x*y^2,y^4)");
    c.expect(multiplier_ideal(a, 1) == ideal("(x^2,x*y,y^2)"), "J((x^4,xy^2,y^4))");
    c.expect(!contains(multiplier_ideal(a, 1), ExponentVector({0, 1})), "y excluded at c=1");
    for (const auto &t : {q(9, 10), q(99, 100)}) {
        c.expect(contains(multiplier_ideal(a, t), ExponentVector({0, 1})), "y included at c=" + to_string(t));
    }

    auto m2 = ideal("(x^2,y^2)");
    for (const auto &t : {q(3, 5), q(1), q(13, 10), q(2), q(7, 2)}) {
        std::int64_t e = to_int64(floor(2 * t)) - 1;
        auto expected = e <= 0 ? MonomialIdeal::unit(2) : power(ideal("(x,y)"), e);
        c.expect(multiplier_ideal(m2, t) == expected, "J((x^2,y^2)^" + to_string(t) + ")");
    }

    for (std::size_t n : {2u, 3u}) {
        auto m = MonomialIdeal::maximal(n);
        const auto N = static_cast<std::int64_t>(n);
        for (const auto &t : {q(N), q(2 * N + 1, 2), q(N + 2), q(17 * N, 5), q(N - 1), q(2 * N - 1, 2)}) {
            auto expected = t < N ? MonomialIdeal::unit(n) : power(m, to_int64(floor(t)) + 1 - N);
            c.expect(multiplier_ideal(m, t) == expected, "J(m^" + to_string(t) + ") n=" + std::to_string(n));
        }
    }

    // coordinate ideals of codimension e in 3 variables
    for (const auto &[text, e] : std::vector<std::pair<const char *, std::int64_t>>{{"(x)", 1}, {"(x,y)", 2}, {"(x,y,z)", 3}}) {
        auto qd = parse_ideal(text, 3);
        for (std::int64_t l = 1; l <= 5; ++l) {
            auto expected = l + 1 - e <= 0 ? MonomialIdeal::unit(3) : power(qd, l + 1 - e);
            c.expect(multiplier_ideal(qd, l) == expected, std::string("J(q^l) for ") + text + " l=" + std::to_string(l));
        }
    }

    for (auto [ea, eb] : std::vector<std::pair<int, int>>{{2, 3}, {9, 10}, {3, 30}}) {
        MonomialIdeal d(2, {ExponentVector({ea, 0}), ExponentVector({0, eb})});
        c.expect(lct(d) == ExtendedRational(q(1, ea) + q(1, eb)), "lct diagonal");
        std::set<Rational> expected;
        for (int v1 = 0; v1 <= 2 * ea; ++v1) {
            for (int v2 = 0; v2 <= 2 * eb; ++v2) {
                Rational xi = q(v1 + 1, ea) + q(v2 + 1, eb);
                if (xi <= 2) {
                    expected.insert(xi);
                }
            }
        }
        auto got = jumping_numbers(d, 2).values();
        c.expect(got == std::vector<Rational>(expected.begin(), expected.end()),
                 "jumping numbers of (x^" + std::to_string(ea) + ",y^" + std::to_string(eb) + ")");
    }

    auto sq = ideal("(x*y,y*z,x*z)");
    c.expect(contains(symbolic_power(sq, 2), ExponentVector({1, 1, 1})), "xyz in q^(2)");
    c.expect(!contains(power(sq, 2), ExponentVector({1, 1, 1})), "xyz not in q^2");
    for (std::int64_t m = 1; m <= 4; ++m) {
        c.expect(contains(power(sq, m), symbolic_power(sq, 2 * m)), "q^(2m) in q^m for m=" + std::to_string(m));
    }
}

void theorem_suites(Criterion &c, std::string &detail)
{
    SuiteConfig config; // seed 42, 100 cases, dims {2,3}, <= 5 gens, exponents <= 8
    Report r = run_suite(config);
    std::ostringstream out;
    for (const auto &s : r.summaries) {
        c.expect(s.run == config.cases * (s.name == "skoda_I" ? 3 : 1) && s.held == s.run, s.name);
        out << " " << s.name << "=" << s.held << "/" << s.run;
    }
    for (const auto &f : r.failures) {
        c.expect(false, "case " + std::to_string(f.case_index) + " " + f.verdict.name + ": " + f.verdict.failed_step);
        c.expect(f.verdict.counterexample_is_valid(), "counterexample invariant");
    }
    out << " strict_restriction=" << (r.strict_restriction ? show(r.strict_restriction->ideal) : "none");
    detail = out.str();
}

void oracle_equivalences(Criterion &c, std::string &detail)
{
    std::mt19937_64 rng(2024);
    std::int64_t points = 0;

    // (a) facets vs elimination oracle
    for (int k = 0; k < 12; ++k) {
        std::size_t n = 2 + k % 2;
        auto I = random_ideal(rng, n);
        auto P = build(I);
        for (int t = 0; t < 1000; ++t) {
            std::uniform_int_distribution<int> den(1, 6);
            int d = den(rng);
            std::uniform_int_distribution<int> num(0, 10 * d);
            RationalVector p(n);
            for (auto &x : p) {
                x = q(num(rng), d);
            }
            ++points;
            c.expect(member(P, p, Membership::closed) == member_oracle(I, p), "(a) membership " + show(I));
        }
    }

    // (b) J(a^k) vs mixed ideal of k unit copies
    for (int t = 0; t < 20; ++t) {
        auto a = random_ideal(rng, 2 + t % 2);
        for (std::int64_t k = 1; k <= 3; ++k) {
            std::vector<MixedTerm> copies(static_cast<std::size_t>(k), MixedTerm{a, Rational(1)});
            c.expect(multiplier_ideal(a, k) == mixed_multiplier_ideal(copies), "(b) " + show(a));
        }
    }

    // (c) asymptotic ideal of powers
    std::uniform_int_distribution<int> cnum(1, 16);
    for (int t = 0; t < 20; ++t) {
        auto b = random_ideal(rng, 2 + t % 2);
        Rational cc = q(cnum(rng), 4);
        auto r = asymptotic_multiplier_ideal(GradedSystem::powers(b), cc);
        c.expect(r.ideal == multiplier_ideal(b, cc) && r.p_used <= 2, "(c) " + show(b) + " c=" + to_string(cc));
    }

    // (d) weighted valuation vs closed form <w, m+1> > c by box enumeration
    std::vector<std::vector<Rational>> weights{
        {q(1), q(2, 3)}, {q(1, 2), q(1, 3)}, {q(2), q(5, 7)}, {q(1), q(1), q(1)}, {q(1, 2), q(3, 4), q(2, 5)}};
    for (const auto &w : weights) {
        for (const auto &cc : {q(1, 2), q(1), q(7, 3), q(4)}) {
            const std::size_t n = w.size();
            std::vector<std::int64_t> box(n);
            for (std::size_t i = 0; i < n; ++i) {
                box[i] = to_int64(ceil(cc / w[i]));
            }
            std::vector<ExponentVector> pts;
            std::vector<std::int64_t> m(n, 0);
            for (bool done = false; !done;) {
                Rational s = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    s += w[i] * (m[i] + 1);
                }
                if (s > cc) {
                    pts.emplace_back(m);
                }
                done = true;
                for (std::size_t i = 0; i < n; ++i) {
                    if (m[i] < box[i]) {
                        ++m[i];
                        done = false;
                        break;
                    }
                    m[i] = 0;
                }
            }
            auto r = asymptotic_multiplier_ideal(GradedSystem::weighted_valuation(w), cc);
            c.expect(r.ideal == MonomialIdeal(n, pts), "(d) c=" + to_string(cc));
        }
    }
    detail = " membership points=" + std::to_string(points);
}

void spectrum_semantics(Criterion &c)
{
    std::mt19937_64 rng(77);
    for (int t = 0; t < 50; ++t) {
        auto a = random_ideal(rng, 2 + t % 2);
        auto P = build(a);
        auto values = jumping_numbers(a, 2).values();
        if (values.empty()) {
            c.expect(false, "no jumps for " + show(a));
            continue;
        }
        c.expect(ExtendedRational(values.front()) == lct(a), "first jump = lct for " + show(a));
        Rational prev = 0;
        for (const auto &xi : values) {
            auto before = multiplier_ideal(P, prev);
            for (const auto &s : {q(1, 4), q(1, 2), q(3, 4)}) {
                Rational mid = prev + s * (xi - prev);
                c.expect(multiplier_ideal(P, mid) == before, "constant between jumps for " + show(a));
            }
            auto at = multiplier_ideal(P, xi);
            c.expect(contains(before, at) && !(before == at), "strict drop at " + to_string(xi) + " for " + show(a));
            prev = xi;
        }
    }
}

std::string run_cli(const std::string &cli, const std::string &args)
{
    std::string cmd = "'" + cli + "' " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return "<popen failed>";
    }
    while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) {
        out += buf.data();
    }
    int status = pclose(pipe);
    return out + "<status " + std::to_string(status) + ">";
}

void determinism_roundtrip(Criterion &c, const std::string &cli, std::string &detail)
{
    std::vector<std::string> corpus{
        "(x^2, y^3)", "{[4,0],[1,2],[0,4]}", "(x*y, y*z, x*z)", "(x)", "(1)", "(x^64)", "(x1*x2*x3*x4*x5)",
        "(x^2*y, x*y^3)", "(x^3, y^2*z, x*z^4)", "{[1,0,0],[0,1,0],[0,0,1]}", "(x, y, z, w)", "(x*y*z*w)",
        "(y^2, x*y, x^2)", "(x^5, x*y^3, y^7)", "{[2,2]}", "(x^8, x^7*y, y^8)"};
    std::mt19937_64 rng(99);
    while (corpus.size() < 60) {
        corpus.push_back(format_ideal(random_ideal(rng, 2 + corpus.size() % 3)));
    }
    std::size_t expressions = 0;
    for (const auto &text : corpus) {
        auto I = parse_ideal(text);
        auto printed = format_ideal(I);
        auto J = parse_ideal(printed, I.ambient_dim());
        c.expect(I == J && format_ideal(J) == printed, "round-trip " + text);
        ++expressions;
    }

    SuiteConfig config;
    config.cases = 10;
    c.expect(json::report(run_suite(config)).dump() == json::report(run_suite(config)).dump(), "report bytes");

    if (cli.empty()) {
        c.expect(false, "no CLI path given");
        return;
    }
    for (const std::string args : {"lct '(x^2,y^3)'", "mult --c 1 '(x^4,x*y^2,y^4)'", "jumps --max 1 '(x^9,y^10)'",
                                   "--json newton '(x^4,x*y^2,y^4)'", "--json suite --seed 7 --cases 5",
                                   "asym --system symbolic:'(x*y,y*z,x*z)' --c 2", "--json jumps --max 2 '(x^2,y^3)'"}) {
        c.expect(run_cli(cli, args) == run_cli(cli, args), "CLI determinism: " + args);
    }
    c.expect(run_cli(cli, "lct '(x^2,y^3)'") == "5/6\n<status 0>", "CLI lct");
    c.expect(run_cli(cli, "mult --c 1 '(x^4,x*y^2,y^4)'") == "(x^2, x*y, y^2)\n<status 0>", "CLI mult");
    c.expect(run_cli(cli, "jumps --max 1 '(x^9,y^10)'").rfind("19/90\n", 0) == 0, "CLI jumps");
    detail = " expressions=" + std::to_string(expressions);
}

} // namespace

int main(int argc, char **argv)
{
    const std::string cli = argc > 1 ? argv[1] : "";
    bool all = true;
    auto report = [&](const char *name, const std::function<void(Criterion &, std::string &)> &body) {
        Criterion c;
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        try {
            body(c, detail);
        } catch (const std::exception &e) {
            c.problems.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = c.problems.empty();
        all = all && ok;
        std::printf("%s %s (%lld checks, %.1fs)%s\n", ok ? "PASS" : "FAIL", name, static_cast<long long>(c.checked), secs,
                    detail.c_str());
        for (const auto &p : c.problems) {
            std::printf("     %s\n", p.c_str());
        }
        std::fflush(stdout);
    };

    report("1 golden values", [](Criterion &c, std::string &) { golden(c); });
    report("2 theorem property suites", theorem_suites);
    report("3 oracle equivalences", oracle_equivalences);
    report("4 jumping spectrum semantics", [](Criterion &c, std::string &) { spectrum_semantics(c); });
    report("5 determinism and round-trip",
           [&](Criterion &c, std::string &detail) { determinism_roundtrip(c, cli, detail); });
    return all ? 0 : 1;
}
