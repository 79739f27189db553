#include <cmath>

#include <gtest/gtest.h>

#include <sinecert/grid.hpp>

using namespace sinecert;

TEST(Grid, ThreeTermsAtBeta1TouchZero)
{
    // S_3 = sin x (1 + cos x) vanishes at both ends of [0, pi]
    const BruteMinResult r = brute_min(3, beta1());
    EXPECT_EQ(r.negative_cells, 0);
    EXPECT_TRUE(r.min.value.contains_zero());
}

TEST(Grid, SingleTermMinimumIsZero)
{
    const BruteMinResult r = brute_min(2, Interval(1));
    EXPECT_EQ(r.negative_cells, 0);
    EXPECT_TRUE(r.min.value.contains_zero());
    EXPECT_TRUE(r.min.cell == 0 || r.min.cell == r.cells - 1);
}

TEST(Grid, SevenTermsHaveNoNegativeCell)
{
    const BruteMinResult r = brute_min(7, beta1(), 8192);
    EXPECT_EQ(r.cells, 8192);
    EXPECT_EQ(r.negative_cells, 0);
    EXPECT_FALSE(r.first_negative.has_value());
    EXPECT_FALSE(certainly_below(r.min.value, mpq_class(-1, 1000000)));
}

TEST(Grid, CellEnclosesPointValues)
{
    // every cell enclosure contains S at the cell midpoint
    const long cells = 512;
    const CoefficientSequence seq(11, beta1());
    const BruteMinResult r = brute_min(11, beta1(), cells);
    const Interval mid_value = eval_S(seq, r.min.x.midpoint()).value;
    EXPECT_TRUE(r.min.value.contains(mid_value));
}

TEST(Sharpness, WitnessJustBelowBeta1)
{
    const Interval below = beta1() - Interval(mpq_class(1, 100));
    const auto w = sharpness(3, below);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(w->value.certainly_negative());
    EXPECT_GT(w->midpoint.mid_double(), 2.5);
    EXPECT_LT(w->midpoint.mid_double(), M_PI);
}

TEST(Sharpness, NoWitnessAtOrAboveBeta1)
{
    EXPECT_FALSE(sharpness(3, beta1() + Interval(mpq_class(1, 100))).has_value());
    EXPECT_FALSE(sharpness(2, Interval(0)).has_value());
    EXPECT_FALSE(sharpness(3, beta1()).has_value());
}

TEST(Sharpness, ScanExampleAt058)
{
    const auto w = sharpness(3, Exponent::parse("0.58").enclose());
    ASSERT_TRUE(w.has_value());
    EXPECT_NEAR(w->midpoint.mid_double(), 2.95, 0.1);
}

TEST(Grid, RejectsBadArguments)
{
    EXPECT_THROW(brute_min(1, beta1()), std::invalid_argument);
    EXPECT_THROW(brute_min(7, beta1(), 63), std::invalid_argument);
}
