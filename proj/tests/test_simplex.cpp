#include "dualpoly/simplex.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace dualpoly;
using namespace dualpoly::lp;

namespace {

Rat q(long num, long den = 1) { return Rat(BigInt(num), BigInt(den)); }

Row row(std::vector<Rat> coeffs, Relation rel, Rat rhs) { return Row{std::move(coeffs), rel, std::move(rhs)}; }

// Beale's example; cycles under the textbook largest-coefficient rule.
Problem beale()
{
    Problem p;
    p.sense = Sense::maximize;
    p.objective = {q(3, 4), q(-150), q(1, 50), q(-6)};
    p.free = {false, false, false, false};
    p.rows = {row({q(1, 4), q(-60), q(-1, 25), q(9)}, Relation::less_equal, q(0)),
              row({q(1, 2), q(-90), q(-1, 50), q(3)}, Relation::less_equal, q(0)),
              row({q(0), q(0), q(1), q(0)}, Relation::less_equal, q(1))};
    return p;
}

} // namespace

TEST(ExactSimplex, SingleBound)
{
    Problem p;
    p.sense = Sense::maximize;
    p.objective = {q(1)};
    p.free = {false};
    p.rows = {row({q(1)}, Relation::less_equal, q(3))};
    auto out = exact_simplex(p);
    ASSERT_EQ(out.status, Status::optimal);
    EXPECT_EQ(out.value, q(3));
    EXPECT_EQ(out.primal[0], q(3));
    EXPECT_EQ(out.dual[0], q(1));
    EXPECT_TRUE(verify_optimality(p, out));
}

TEST(ExactSimplex, BestConstantApproximantOfSign)
{
    // min e s.t. |c - 1| <= e, |c + 1| <= e, c free.
    Problem p;
    p.objective = {q(0), q(1)};
    p.free = {true, false};
    p.rows = {row({q(1), q(1)}, Relation::greater_equal, q(1)), row({q(-1), q(1)}, Relation::greater_equal, q(-1)),
              row({q(1), q(1)}, Relation::greater_equal, q(-1)), row({q(-1), q(1)}, Relation::greater_equal, q(1))};
    auto out = exact_simplex(p);
    ASSERT_EQ(out.status, Status::optimal);
    EXPECT_EQ(out.value, q(1));
    EXPECT_EQ(out.primal[0], q(0));
    EXPECT_EQ(out.primal[1], q(1));
    EXPECT_TRUE(verify_optimality(p, out));
}

TEST(ExactSimplex, BealeTerminatesUnderBland)
{
    const auto p = beale();
    auto out = exact_simplex(p);
    ASSERT_EQ(out.status, Status::optimal);
    // Optimum confirmed independently with an external LP solver.
    EXPECT_EQ(out.value, q(1, 20));
    EXPECT_EQ(out.primal, (std::vector<Rat>{q(1, 25), q(0), q(1), q(0)}));
    EXPECT_TRUE(verify_optimality(p, out));
}

TEST(ExactSimplex, BealeCyclesUnderLargestCoefficientRule)
{
    Options naive{PivotRule::dantzig, 200};
    auto out = exact_simplex(beale(), naive);
    EXPECT_EQ(out.status, Status::pivot_limit);
}

TEST(ExactSimplex, InfeasibleAndUnbounded)
{
    Problem inf;
    inf.objective = {q(1)};
    inf.free = {false};
    inf.rows = {row({q(1)}, Relation::less_equal, q(1)), row({q(1)}, Relation::greater_equal, q(2))};
    EXPECT_EQ(exact_simplex(inf).status, Status::infeasible);

    Problem unb;
    unb.sense = Sense::maximize;
    unb.objective = {q(1), q(0)};
    unb.free = {false, true};
    unb.rows = {row({q(1), q(-1)}, Relation::less_equal, q(1))};
    EXPECT_EQ(exact_simplex(unb).status, Status::unbounded);

    Problem contradiction;
    contradiction.objective = {q(1)};
    contradiction.free = {true};
    contradiction.rows = {row({q(0)}, Relation::equal, q(1))};
    EXPECT_EQ(exact_simplex(contradiction).status, Status::infeasible);
}

TEST(ExactSimplex, RedundantEqualitiesAndNegativeRhs)
{
    // x + y = 2 twice, x - y >= -4, minimise 3x + y.
    Problem p;
    p.objective = {q(3), q(1)};
    p.free = {false, false};
    p.rows = {row({q(1), q(1)}, Relation::equal, q(2)), row({q(2), q(2)}, Relation::equal, q(4)),
              row({q(1), q(-1)}, Relation::greater_equal, q(-4))};
    auto out = exact_simplex(p);
    ASSERT_EQ(out.status, Status::optimal);
    EXPECT_EQ(out.value, q(2));
    EXPECT_TRUE(verify_optimality(p, out));
}

TEST(ExactSimplex, RandomProblemsCertifyAndAreDeterministic)
{
    oracle::RatGen gen(101);
    int optimal = 0;
    for (int trial = 0; trial < 60; ++trial) {
        Problem p;
        const int vars = gen.uniform(1, 4);
        const int rows = gen.uniform(1, 5);
        p.sense = trial % 2 ? Sense::maximize : Sense::minimize;
        for (int j = 0; j < vars; ++j) {
            p.objective.push_back(gen.small(5, 3));
            p.free.push_back(gen.uniform(0, 3) == 0);
        }
        for (int i = 0; i < rows; ++i) {
            std::vector<Rat> c;
            for (int j = 0; j < vars; ++j)
                c.push_back(gen.small(5, 3));
            p.rows.push_back(row(std::move(c), static_cast<Relation>(gen.uniform(0, 2)), gen.small(6, 2)));
        }
        auto a = exact_simplex(p);
        auto b = exact_simplex(p);
        EXPECT_EQ(a.status, b.status);
        EXPECT_EQ(a.value, b.value);
        EXPECT_EQ(a.primal, b.primal);
        EXPECT_EQ(a.dual, b.dual);
        if (a.status == Status::optimal) {
            ++optimal;
            EXPECT_TRUE(verify_optimality(p, a));
            Problem reversed = p;
            std::reverse(reversed.rows.begin(), reversed.rows.end());
            auto r = exact_simplex(reversed);
            ASSERT_EQ(r.status, Status::optimal);
            EXPECT_EQ(r.value, a.value);
        }
    }
    EXPECT_GT(optimal, 10);
}

TEST(ExactSimplex, VerifyOptimalityRejectsTamperedDuals)
{
    const auto p = beale();
    auto out = exact_simplex(p);
    ASSERT_TRUE(verify_optimality(p, out));
    out.dual[2] += q(1, 7);
    EXPECT_FALSE(verify_optimality(p, out));
}

TEST(ExactSimplex, RejectsMalformedProblems)
{
    Problem p;
    p.objective = {q(1), q(1)};
    p.free = {false};
    EXPECT_THROW(exact_simplex(p), std::invalid_argument);
}
