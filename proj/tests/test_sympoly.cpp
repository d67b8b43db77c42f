#include "dualpoly/multilinear.hpp"
#include "dualpoly/sympoly.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace dualpoly;

namespace {

Rat q(long num, long den = 1) { return Rat(BigInt(num), BigInt(den)); }

SinglePoly table(std::vector<Rat> v) { return SinglePoly(std::move(v)); }

// P of the OR construction at n = 4, and its parity-multiplied Q.
const SinglePoly p4 = table({q(1), q(2, 3), q(1, 3), q(0), q(-1, 3)});
const SinglePoly q4 = table({q(1), q(-2, 3), q(1, 3), q(0), q(-1, 3)});

} // namespace

TEST(SymBoolFn, NamedConstructors)
{
    EXPECT_EQ(SymBoolFn::or_fn(4).values(), (std::vector<int>{1, -1, -1, -1, -1}));
    EXPECT_EQ(SymBoolFn::parity(3).values(), (std::vector<int>{1, -1, 1, -1}));
    EXPECT_EQ(SymBoolFn::threshold(4, 2).values(), (std::vector<int>{1, 1, -1, -1, -1}));
    EXPECT_EQ(SymBoolFn::threshold(3, 0).values(), (std::vector<int>{-1, -1, -1, -1}));
    EXPECT_EQ(SymBoolFn::constant(2).values(), (std::vector<int>{1, 1, 1}));
    EXPECT_TRUE(SymBoolFn::or_fn(3).takes_both_values());
    EXPECT_FALSE(SymBoolFn::constant(3).takes_both_values());
    EXPECT_THROW(SymBoolFn({1, 0, -1}), std::invalid_argument);
    EXPECT_THROW(SymBoolFn::threshold(3, 4), std::invalid_argument);
    EXPECT_THROW(SinglePoly({q(1)}), std::invalid_argument);
}

TEST(InterpolateDegree, Examples)
{
    EXPECT_EQ(interpolate_degree(SinglePoly::constant(4, q(1))), 0);
    EXPECT_EQ(interpolate_degree(p4), 1);
    EXPECT_EQ(interpolate_degree(SymBoolFn::parity(4).as_poly()), 4);
    EXPECT_EQ(interpolate_degree(SinglePoly::zero(4)), zero_degree);
}

TEST(InterpolateDegree, AgreesWithLagrangeFitOracle)
{
    oracle::RatGen gen(11);
    for (int trial = 0; trial < 150; ++trial) {
        int n = gen.uniform(1, 9);
        auto v = gen.table(n);
        if (trial % 3 == 0) // force low degree through a planted polynomial
            v = gen.with_pure_high_degree(n, gen.uniform(0, n)).values();
        EXPECT_EQ(interpolate_degree(SinglePoly(v)), oracle::lagrange_degree(v));
    }
}

TEST(ForwardDifferences, NewtonFormReproducesTable)
{
    oracle::RatGen gen(5);
    for (int trial = 0; trial < 50; ++trial) {
        SinglePoly p(gen.table(gen.uniform(1, 12)));
        auto c = forward_differences(p);
        for (int k = 0; k <= p.n(); ++k)
            EXPECT_EQ(newton_evaluate(c, k), p[k]);
    }
    auto c = forward_differences(p4);
    EXPECT_EQ(c[0], q(1));
    EXPECT_EQ(c[1], q(-1, 3));
    for (std::size_t j = 2; j < c.size(); ++j)
        EXPECT_TRUE(c[j].is_zero());
}

TEST(ParityMultiply, Examples)
{
    EXPECT_EQ(parity_multiply(SinglePoly::constant(2, q(1))), table({q(1), q(-1), q(1)}));
    EXPECT_EQ(parity_multiply(p4), q4);
    EXPECT_EQ(parity_multiply(parity_multiply(p4)), p4);
}

TEST(PureHighDegree, Examples)
{
    EXPECT_EQ(pure_high_degree(SinglePoly::constant(4, q(1))), 0);
    EXPECT_EQ(pure_high_degree(SymBoolFn::parity(4).as_poly()), 4);
    EXPECT_EQ(pure_high_degree(q4), 3);
    EXPECT_THROW(pure_high_degree(SinglePoly::zero(3)), std::invalid_argument);
}

TEST(MomentsVanish, Examples)
{
    EXPECT_TRUE(moments_vanish(p4, 0));
    EXPECT_TRUE(moments_vanish(q4, 3));
    EXPECT_FALSE(moments_vanish(q4, 4));
    EXPECT_EQ(moment(q4, 0), q(0));
    EXPECT_EQ(moment(q4, 3), q(-8));
    EXPECT_EQ(vanishing_moment_order(q4), 3);
    EXPECT_THROW(moments_vanish(q4, 6), std::invalid_argument);
    EXPECT_TRUE(moments_vanish(q4, 0));
}

TEST(InnerProductAndNorm, Examples)
{
    const auto one = SinglePoly::constant(4, q(1));
    EXPECT_EQ(inner_product(one, one), q(16));
    EXPECT_EQ(inner_product(q4, SymBoolFn::or_fn(4)), q(2));
    EXPECT_EQ(inner_product(p4, SinglePoly::zero(4)), q(0));
    EXPECT_EQ(l1_norm(one), q(16));
    EXPECT_EQ(l1_norm(p4), q(6));
    EXPECT_EQ(l1_norm(SinglePoly::zero(4)), q(0));
    EXPECT_THROW(inner_product(p4, SinglePoly::zero(3)), std::invalid_argument);
}

TEST(SympolyProperties, DegreeAndPureHighDegreeAreDual)
{
    oracle::RatGen gen(3);
    for (int trial = 0; trial < 200; ++trial) {
        int n = gen.uniform(1, 12);
        SinglePoly p = trial % 2 ? SinglePoly(gen.table(n)) : gen.with_pure_high_degree(n, gen.uniform(0, n));
        if (p.is_zero())
            continue;
        EXPECT_EQ(interpolate_degree(p) + pure_high_degree(parity_multiply(p)), n);
    }
}

TEST(SympolyProperties, CubeSumsMatchWeightedSums)
{
    oracle::RatGen gen(17);
    for (int trial = 0; trial < 40; ++trial) {
        int n = gen.uniform(1, 8);
        SinglePoly a(gen.table(n));
        SinglePoly b(gen.table(n));
        auto va = evaluate_all(expand_multilinear(a));
        auto vb = evaluate_all(expand_multilinear(b));
        Rat dot, norm;
        for (std::size_t x = 0; x < va.size(); ++x) {
            dot += va[x] * vb[x];
            norm += va[x].abs();
        }
        EXPECT_EQ(inner_product(a, b), dot);
        EXPECT_EQ(l1_norm(a), norm);
    }
}
