#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_support.hpp"

using namespace mideal;
using namespace mideal::test;

namespace {

MonomialIdeal random_ideal(std::mt19937_64 &rng, std::size_t n, int max_exp = 8)
{
    std::uniform_int_distribution<int> count(1, 5), exp(0, max_exp);
    std::vector<ExponentVector> gens;
    for (int k = count(rng); k > 0; --k) {
        std::vector<std::int64_t> e(n);
        for (auto &x : e) {
            x = exp(rng);
        }
        gens.emplace_back(e);
    }
    return MonomialIdeal(n, gens);
}

std::vector<Rational> Qs(std::initializer_list<const char *> xs)
{
    std::vector<Rational> out;
    for (const char *x : xs) {
        out.push_back(parse_rational(x));
    }
    return out;
}

} // namespace

// expected ideals below come from tests/oracle/howald_oracle.py
TEST(MultiplierIdeal, Golden)
{
    EXPECT_EQ(multiplier_ideal(I("(x^4,x*y^2,y^4)"), 1), I("(x^2,x*y,y^2)"));
    EXPECT_EQ(multiplier_ideal(I("(x^4,x*y^2,y^4)"), Q("9/10")), I("(y,x^2)"));
    EXPECT_EQ(multiplier_ideal(I("(x^4,x*y^2,y^4)"), Q("99/100")), I("(y,x^2)"));
    EXPECT_EQ(multiplier_ideal(I("(x^2,y^2)"), Q("3/2")), I("(x^2,x*y,y^2)"));
    EXPECT_EQ(multiplier_ideal(I("(x,y)"), Q("5/2")), I("(x,y)"));
    EXPECT_EQ(multiplier_ideal(I("(x^2,y^3)"), Q("1/2")), MonomialIdeal::unit(2));
    EXPECT_EQ(multiplier_ideal(I("(x^2,y^3)"), Q("5/6")), I("(x,y)"));
    EXPECT_EQ(multiplier_ideal(I("(x^2,y^3)"), 1), I("(x,y)"));
    EXPECT_EQ(multiplier_ideal(I("(x^3,y^2*z,x*z^4)"), 1), I("(x,y,z)"));
    EXPECT_EQ(multiplier_ideal(I("(x^3,y^2*z,x*z^4)"), Q("5/3")),
              I("(x^3, x^2*y, x^2*z, x*y*z, y^2*z, x*z^3, y*z^3)"));
    EXPECT_EQ(multiplier_ideal(power(I("(x^2,x*y,y^3)"), 2), 1), I("(x^3,x^2*y,x*y^2,y^4)"));
}

TEST(MultiplierIdeal, MaximalIdealFormula)
{
    for (std::size_t n : {2u, 3u}) {
        auto m = MonomialIdeal::maximal(n);
        for (const auto &c : Qs({"1/2", "1", "3/2", "2", "5/2", "3", "7/2", "5", "34/5", "51/5"})) {
            std::int64_t e = to_int64(floor(c)) + 1 - static_cast<std::int64_t>(n);
            auto expected = c < static_cast<std::int64_t>(n) ? MonomialIdeal::unit(n) : power(m, e);
            EXPECT_EQ(multiplier_ideal(m, c), expected) << n << " " << c;
        }
    }
}

TEST(MultiplierIdeal, EdgeCases)
{
    EXPECT_EQ(multiplier_ideal(I("(x^2,y^3)"), 0), MonomialIdeal::unit(2));
    EXPECT_THROW((void)multiplier_ideal(MonomialIdeal::zero(2), 1), InputError);
    EXPECT_THROW((void)multiplier_ideal(I("(x,y)"), -1), InputError);
    EXPECT_EQ(multiplier_ideal(MonomialIdeal::unit(2), 5), MonomialIdeal::unit(2));
    // principal ideals: J((x^v)^c) = x^floor(cv)
    EXPECT_EQ(multiplier_ideal(I("(x^2*y^3)"), Q("3/2")), I("(x^3*y^4)"));
}

TEST(MultiplierIdeal, Properties)
{
    std::mt19937_64 rng(29);
    auto cs = Qs({"1/3", "1/2", "2/3", "1", "4/3", "3/2", "2", "5/2"});
    for (int iter = 0; iter < 120; ++iter) {
        std::size_t n = 2 + iter % 2;
        auto a = random_ideal(rng, n);
        auto P = build(a);
        for (std::size_t k = 0; k + 1 < cs.size(); ++k) {
            // monotone in c
            EXPECT_TRUE(contains(multiplier_ideal(P, cs[k]), multiplier_ideal(P, cs[k + 1])));
        }
        // a ⊆ closure(a) ⊆ J(a)
        auto closure = integral_closure(a);
        EXPECT_TRUE(contains(closure, a));
        EXPECT_TRUE(contains(multiplier_ideal(P, 1), closure));
        EXPECT_EQ(multiplier_ideal(closure, Q("3/2")), multiplier_ideal(a, Q("3/2")));
    }
}

TEST(MixedMultiplierIdeal, Consistency)
{
    auto a = I("(x^2,y^3)");
    EXPECT_EQ(mixed_multiplier_ideal({{a, Q("5/3")}}), multiplier_ideal(a, Q("5/3")));
    EXPECT_EQ(mixed_multiplier_ideal({{a, 1}, {I("(x,y)"), 1}}), multiplier_ideal(multiply(a, I("(x,y)")), 1));
    EXPECT_EQ(mixed_multiplier_ideal({{a, Q("1/2")}, {a, Q("1/3")}}), multiplier_ideal(a, Q("5/6")));
    EXPECT_THROW((void)mixed_multiplier_ideal(std::span<const MixedTerm>()), InputError);
    EXPECT_THROW((void)mixed_multiplier_ideal({{a, 1}, {I("(x)", 1), 1}}), InputError);
}

TEST(Lct, Values)
{
    EXPECT_EQ(lct(I("(x^2,y^3)")), ExtendedRational(Q("5/6")));
    EXPECT_EQ(lct(I("(x^2,y^2)")), ExtendedRational(Rational(1)));
    EXPECT_EQ(lct(I("(x^9,y^10)")), ExtendedRational(Q("19/90")));
    EXPECT_EQ(lct(I("(x^3,y^30)")), ExtendedRational(Q("11/30")));
    EXPECT_EQ(lct(I("(x^3,y^2*z,x*z^4)")), ExtendedRational(Q("11/12")));
    EXPECT_TRUE(lct(MonomialIdeal::unit(2)).is_infinite());
    EXPECT_EQ(to_string(lct(MonomialIdeal::unit(2))), "inf");
}

TEST(JumpingNumbers, Values)
{
    auto s = jumping_numbers(I("(x^2,y^3)"), Q("3/2"));
    EXPECT_EQ(s.values(), Qs({"5/6", "7/6", "4/3", "3/2"}));
    EXPECT_EQ(s.jumps[0].witness, V({0, 0}));
    EXPECT_EQ(s.jumps[1].witness, V({0, 1}));
    EXPECT_EQ(jumping_numbers(I("(x^4,x*y^2,y^4)"), 2).values(),
              Qs({"5/8", "7/8", "1", "9/8", "5/4", "11/8", "3/2", "13/8", "7/4", "15/8", "2"}));
    EXPECT_EQ(jumping_numbers(I("(x^2*y,x*y^3)"), 2).values(), Qs({"3/5", "4/5", "1", "6/5", "7/5", "8/5", "9/5", "2"}));
    auto nine = jumping_numbers(I("(x^9,y^10)"), 1).values();
    nine.resize(8);
    EXPECT_EQ(nine, Qs({"19/90", "14/45", "29/90", "37/90", "19/45", "13/30", "23/45", "47/90"}));
    EXPECT_THROW((void)jumping_numbers(MonomialIdeal::unit(2), 1), InputError);
    EXPECT_THROW((void)jumping_numbers(I("(x,y)"), 0), InputError);
}

TEST(JumpingNumbers, DiagonalFormula)
{
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {9, 10}, {3, 30}}) {
        MonomialIdeal J(2, {V({a, 0}), V({0, b})});
        std::set<Rational> expected;
        for (int v1 = 0; v1 <= 2 * a; ++v1) {
            for (int v2 = 0; v2 <= 2 * b; ++v2) {
                Rational xi = Rational(v1 + 1, a) + Rational(v2 + 1, b);
                if (xi <= 2) {
                    expected.insert(xi);
                }
            }
        }
        auto got = jumping_numbers(J, 2).values();
        EXPECT_EQ(got, std::vector<Rational>(expected.begin(), expected.end()));
        EXPECT_EQ(ExtendedRational(got.front()), lct(J));
    }
}

TEST(JumpingLength, Values)
{
    EXPECT_EQ(jumping_length(V({1, 0})), 1);
    EXPECT_EQ(jumping_length(V({2, 0})), 2);
    EXPECT_EQ(jumping_length(V({1, 1})), 1);
    EXPECT_EQ(jumping_length(V({2, 3})), 4);
    EXPECT_THROW((void)jumping_length(V({0, 0})), InputError);
}

TEST(IntegralClosure, Values)
{
    EXPECT_EQ(integral_closure(I("(x^4,y^4)")), I("(x^4,x^3*y,x^2*y^2,x*y^3,y^4)"));
    EXPECT_EQ(integral_closure(I("(x,y)")), I("(x,y)"));
    EXPECT_EQ(integral_closure(I("(x^2,y^3)")), I("(x^2,x*y^2,y^3)"));
    EXPECT_EQ(integral_closure(I("(x^5,x*y^3,y^7)")), I("(x*y^3,x^5,x^4*y,x^3*y^2,y^7)"));
}
