#include <set>

#include <gtest/gtest.h>

#include <sinecert/grid.hpp>
#include <sinecert/pipeline.hpp>

using namespace sinecert;

TEST(Pipeline, BranchSelection)
{
    const PipelineTrace t7 = pipeline(7, Exponent::parse("beta1"));
    EXPECT_TRUE(t7.proved()) << t7.first_failure();
    EXPECT_EQ(t7.branch, "two-summand");
    EXPECT_EQ(t7.t_summands, 2);

    const PipelineTrace t8 = pipeline(8, Exponent::parse("beta1"));
    EXPECT_TRUE(t8.proved()) << t8.first_failure();
    EXPECT_EQ(t8.branch, "even");

    const PipelineTrace t45 = pipeline(45, Exponent::parse("beta1"));
    EXPECT_TRUE(t45.proved()) << t45.first_failure();
    EXPECT_EQ(t45.branch, "more-than-ten");
    EXPECT_EQ(t45.anchor, 45);

    const PipelineTrace t15 = pipeline(15, Exponent::parse("beta1"));
    EXPECT_TRUE(t15.proved()) << t15.first_failure();
    EXPECT_EQ(t15.branch, "at-most-ten");
    EXPECT_EQ(t15.anchor, 15);
}

TEST(Pipeline, FullyConvexCasesUseFejerEverywhere)
{
    const PipelineTrace t = pipeline(30, Exponent::parse("1"));
    EXPECT_TRUE(t.proved()) << t.first_failure();
    EXPECT_TRUE(t.fully_convex);
    EXPECT_EQ(t.far.method, "fejer");
    EXPECT_EQ(t.middle.method, "fejer");
    EXPECT_EQ(t.near.method, "fejer");
}

TEST(Pipeline, ThresholdBoundsAreRecorded)
{
    const PipelineTrace t = pipeline(20, Exponent::parse("beta1"));
    const ReportConstant* t1 = nullptr;
    const ReportConstant* t2 = nullptr;
    for (const auto& b : t.middle.bounds) {
        t1 = b.name == "t1" ? &b : t1;
        t2 = b.name == "t2" ? &b : t2;
    }
    ASSERT_NE(t1, nullptr);
    ASSERT_NE(t2, nullptr);
    EXPECT_TRUE(certainly_below(t1->value, mpq_class(267, 100)));
    EXPECT_TRUE(certainly_below(t2->value, mpq_class(5, 2)));
}

TEST(Pipeline, RejectsSmallN)
{
    EXPECT_THROW(pipeline(6, Exponent::parse("beta1")), std::invalid_argument);
    EXPECT_THROW(pipeline(2, Exponent::parse("1")), std::invalid_argument);
}

TEST(Pipeline, BelowBeta1IsNotProved)
{
    const PipelineTrace t = pipeline(20, Exponent::parse("0.5"));
    EXPECT_FALSE(t.proved());
    EXPECT_FALSE(t.first_failure().empty());
}

TEST(Pipeline, TraceIsDeterministic)
{
    const std::string a = write_trace(pipeline(33, Exponent::parse("beta1")));
    const std::string b = write_trace(pipeline(33, Exponent::parse("beta1")));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.rfind("sinecert-trace v1", 0), 0u);
    EXPECT_NE(a.find("verdict proved"), std::string::npos);
    EXPECT_NE(a.find("end-trace"), std::string::npos);
}

TEST(Pipeline, AgreesWithBruteForceMinimum)
{
    // a proved instance must never have a certified negative cell
    for (const char* beta : {"beta1", "0.75", "1"}) {
        const Exponent e = Exponent::parse(beta);
        for (long n = 7; n <= 60; ++n) {
            const PipelineTrace t = pipeline(n, e);
            EXPECT_TRUE(t.proved()) << n << ' ' << beta << ": " << t.first_failure();
            const BruteMinResult r = brute_min(n, e.enclose(), 2048);
            EXPECT_EQ(r.negative_cells, 0) << n << ' ' << beta;
            EXPECT_FALSE(certainly_below(r.min.value, mpq_class(-1, 1000000))) << n << ' ' << beta;
        }
    }
}

TEST(Pipeline, EveryBranchOccursUpTo200)
{
    std::set<std::string> branches;
    for (long n = 7; n <= 200; ++n) {
        const PipelineTrace t = pipeline(n, Exponent::parse("beta1"));
        EXPECT_TRUE(t.proved()) << n << ": " << t.first_failure();
        branches.insert(t.branch);
    }
    EXPECT_EQ(branches, (std::set<std::string>{"two-summand", "at-most-ten", "more-than-ten", "even"}));
}
