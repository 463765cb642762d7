#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace mideal;
using namespace mideal::test;

TEST(ExponentVector, RejectsNegativeEntries) { EXPECT_THROW(V({1, -1}), InputError); }

TEST(ExponentVector, GrlexOrder)
{
    GrlexLess less;
    EXPECT_TRUE(less(V({2, 0}), V({1, 1})));
    EXPECT_TRUE(less(V({1, 1}), V({0, 2})));
    EXPECT_TRUE(less(V({0, 2}), V({3, 0})));
    EXPECT_FALSE(less(V({1, 1}), V({1, 1})));
}

TEST(ExponentVector, DividesAndLcm)
{
    EXPECT_TRUE(V({1, 2}).divides(V({1, 3})));
    EXPECT_FALSE(V({2, 0}).divides(V({1, 5})));
    EXPECT_EQ(lcm(V({2, 1}), V({1, 3})), V({2, 3}));
    EXPECT_EQ(V({1, 2}) + V({3, 0}), V({4, 2}));
}

TEST(MonomialIdeal, Minimalizes)
{
    EXPECT_EQ(MonomialIdeal(2, {V({2, 0}), V({3, 1})}).generators(), std::vector{V({2, 0})});
    EXPECT_TRUE(MonomialIdeal(2, {}).is_zero());
    EXPECT_TRUE(MonomialIdeal(2, {V({0, 0}), V({1, 2})}).is_unit());
    EXPECT_EQ(MonomialIdeal(2, {V({1, 2})}).size(), 1u);
}

TEST(MonomialIdeal, RejectsBadDimension)
{
    EXPECT_THROW(MonomialIdeal(0, {}), InputError);
    EXPECT_THROW(MonomialIdeal(9, {}), InputError);
    EXPECT_THROW(MonomialIdeal(2, {V({1, 2, 3})}), InputError);
}

TEST(MonomialIdeal, Containment)
{
    EXPECT_TRUE(contains(I("(x^2,y^3)"), V({1, 3})));
    EXPECT_FALSE(contains(I("(x^2,y^3)"), V({1, 2})));
    EXPECT_TRUE(contains(I("(x*y,y*z,x*z)"), V({1, 1, 1})));
    EXPECT_TRUE(contains(I("(x,y)"), I("(x^2,x*y)")));
    EXPECT_FALSE(contains(I("(x^2)", 1), I("(x)", 1)));
    EXPECT_TRUE(contains(I("(x^2,y^3)"), I("(x^2,y^3)")));
}

TEST(MonomialIdeal, Arithmetic)
{
    EXPECT_EQ(multiply(I("(x,y)"), I("(x,y)")), I("(x^2,x*y,y^2)"));
    EXPECT_EQ(power(I("(x,y)"), 0), MonomialIdeal::unit(2));
    EXPECT_EQ(power(I("(x,y)"), 3), I("(x^3,x^2*y,x*y^2,y^3)"));
    EXPECT_EQ(sum(I("(x^2)", 2), I("(y^3)", 2)), I("(x^2,y^3)"));
    EXPECT_THROW((void)power(I("(x,y)"), -1), InputError);
}

TEST(MonomialIdeal, Intersection)
{
    auto I3 = intersect(intersect(I("(x,y)", 3), I("(y,z)")), I("(x,z)", 3));
    EXPECT_EQ(I3, I("(x*y,x*z,y*z)"));
    EXPECT_EQ(intersect(I("(x^2,y)"), MonomialIdeal::zero(2)), MonomialIdeal::zero(2));
}

TEST(MonomialIdeal, Restrict)
{
    EXPECT_EQ(restrict(I("(x^2,x*y,y^3)"), {0}), I("(x^2)", 1));
    EXPECT_EQ(restrict(I("(x,y)"), {0}), I("(x)", 1));
    EXPECT_EQ(restrict(I("(x*y,y*z,x*z)"), {0, 1}), I("(x*y)", 2));
    EXPECT_TRUE(restrict(I("(x*y)"), {1}).is_zero());
}

TEST(MonomialIdeal, Squarefree)
{
    EXPECT_TRUE(is_squarefree(I("(x*y,y*z,x*z)")));
    EXPECT_FALSE(is_squarefree(I("(x^2,y)")));
    EXPECT_TRUE(is_squarefree(MonomialIdeal::unit(2)));
}

TEST(MonomialIdeal, MinimalPrimes)
{
    std::vector<VariableSubset> expected{{0, 1}, {0, 2}, {1, 2}};
    EXPECT_EQ(minimal_primes(I("(x*y,y*z,x*z)")), expected);
    EXPECT_EQ(minimal_primes(I("(x)", 1)), std::vector<VariableSubset>{{0}});
    EXPECT_EQ(minimal_primes(I("(x*y)")), (std::vector<VariableSubset>{{0}, {1}}));
    EXPECT_THROW((void)minimal_primes(I("(x^2,y)")), InputError);
}

TEST(MonomialIdeal, SymbolicPower)
{
    EXPECT_EQ(symbolic_power(I("(x,y)"), 3), power(I("(x,y)"), 3));
    EXPECT_EQ(symbolic_power(I("(x*y,y*z,x*z)"), 1), I("(x*y,y*z,x*z)"));
    // oracle: brute force over the box with per-prime order conditions
    EXPECT_EQ(symbolic_power(I("(x*y,y*z,x*z)"), 2), I("(x*y*z, x^2*y^2, x^2*z^2, y^2*z^2)"));
    EXPECT_EQ(symbolic_power(I("(x*y,y*z,x*z)"), 4),
              I("(x^2*y^2*z^2, x^3*y^3*z, x^3*y*z^3, x*y^3*z^3, x^4*y^4, x^4*z^4, y^4*z^4)"));
    EXPECT_TRUE(contains(symbolic_power(I("(x*y,y*z,x*z)"), 2), V({1, 1, 1})));
    EXPECT_FALSE(contains(power(I("(x*y,y*z,x*z)"), 2), V({1, 1, 1})));
}

namespace {

MonomialIdeal random_ideal(std::mt19937_64 &rng, std::size_t n)
{
    std::uniform_int_distribution<int> count(1, 4), exp(0, 5);
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

} // namespace

TEST(MonomialIdeal, LatticeProperties)
{
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t n = 2 + iter % 2;
        auto A = random_ideal(rng, n), B = random_ideal(rng, n), C = random_ideal(rng, n);
        EXPECT_EQ(multiply(A, B), multiply(B, A));
        EXPECT_EQ(multiply(multiply(A, B), C), multiply(A, multiply(B, C)));
        EXPECT_EQ(intersect(A, B), intersect(B, A));
        EXPECT_TRUE(contains(intersect(A, B), multiply(A, B)));
        EXPECT_TRUE(contains(sum(A, B), A));
        EXPECT_TRUE(contains(A, intersect(A, B)));
        EXPECT_EQ(multiply(A, sum(B, C)), sum(multiply(A, B), multiply(A, C)));
        for (const auto &g : A.generators()) {
            for (const auto &h : A.generators()) {
                EXPECT_TRUE(g == h || !g.divides(h));
            }
        }
    }
}

TEST(MonomialIdeal, DeskScaleValidation)
{
    EXPECT_NO_THROW(validate_desk_scale(I("(x^64,y)")));
    EXPECT_THROW(validate_desk_scale(MonomialIdeal(2, {V({65, 0})})), InputError);
}
