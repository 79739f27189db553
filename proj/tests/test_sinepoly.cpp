#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include <sinecert/sinepoly.hpp>

using namespace sinecert;
using Big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<60>>;

namespace {

Big to_big(mpfr_srcptr v)
{
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v);
    return Big(q.get_num().get_str()) / Big(q.get_den().get_str());
}

bool encloses(const Interval& e, const Big& v)
{
    const Big slack = abs(v) * Big("1e-50") + Big("1e-50");
    return to_big(e.lo()) <= v + slack && v - slack <= to_big(e.hi());
}

Big big_beta1() { return log(Big(2)) / log(Big(16) / 5); }

// a_k from the defining formula, evaluated independently
Big oracle_coeff(long n, long k, const Big& beta)
{
    return pow(Big(n * n - k * k) / Big((n * n - 1) * k), beta);
}

} // namespace

TEST(Coefficients, EndpointsAreExact)
{
    for (long n : {2L, 3L, 7L, 45L, 200L}) {
        const CoefficientSequence seq(n, beta1());
        EXPECT_TRUE(seq.a(1).contains(1L));
        EXPECT_TRUE(seq.a(1).is_point());
        EXPECT_TRUE(seq.a(n).is_point());
        EXPECT_TRUE(seq.a(n).contains(0L));
    }
}

TEST(Coefficients, MatchIndependentEvaluation)
{
    const Big b = big_beta1();
    for (long n = 2; n <= 60; ++n) {
        const CoefficientSequence seq(n, beta1());
        for (long k = 1; k <= n; ++k) {
            EXPECT_TRUE(encloses(seq.a(k), oracle_coeff(n, k, b))) << n << ' ' << k;
        }
    }
}

TEST(Coefficients, BetaOneIsRational)
{
    const CoefficientSequence seq(9, Interval(1));
    for (long k = 1; k <= 9; ++k) {
        EXPECT_TRUE(seq.a(k).contains(mpq_class(81 - k * k, 80 * k)));
    }
}

TEST(Coefficients, SecondHalfOfN3IsOneHalfAtBeta1)
{
    // (5/16)^beta1 = 1/2 by the definition of beta1
    EXPECT_TRUE(CoefficientSequence(3, beta1()).a(2).contains(mpq_class(1, 2)));
}

TEST(Coefficients, DeltaOneClosedFormMatchesDifferences)
{
    for (long n = 3; n <= 200; ++n) {
        const CoefficientSequence seq(n, beta1());
        EXPECT_TRUE(delta1_closed(n, beta1()).overlaps(seq.delta(1))) << n;
    }
}

TEST(Coefficients, IndexChecks)
{
    const CoefficientSequence seq(7, beta1());
    EXPECT_THROW(seq.a(0), std::invalid_argument);
    EXPECT_THROW(seq.a(8), std::invalid_argument);
    EXPECT_THROW(seq.second_diff(1), std::invalid_argument);
    EXPECT_THROW(seq.delta(6), std::invalid_argument);
    EXPECT_THROW(CoefficientSequence(1, beta1()), std::invalid_argument);
}

TEST(Exponent, ParseForms)
{
    EXPECT_TRUE(Exponent::parse("beta1").is_beta1());
    EXPECT_EQ(Exponent::parse("beta2").kind(), Exponent::Kind::beta2);
    const Exponent e = Exponent::parse("0.58");
    EXPECT_EQ(e.kind(), Exponent::Kind::rational);
    EXPECT_EQ(e.rational_value(), mpq_class(29, 50));
    EXPECT_THROW(Exponent::parse("0.5.8"), std::invalid_argument);
    EXPECT_THROW(Exponent::parse("beta3"), std::invalid_argument);
}

TEST(Tau, ClosedFormAgreesWithDirectSum)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ux(1e-3, 3.14);
    for (long k = 1; k <= 64; ++k) {
        for (int i = 0; i < 16; ++i) {
            const Interval x{mpq_class(ux(rng))};
            for (bool alt : {false, true}) {
                const TauValue closed = tau(k, x, alt, TauForm::closed);
                const TauValue direct = tau(k, x, alt, TauForm::direct);
                EXPECT_TRUE(closed.value.overlaps(direct.value)) << k << ' ' << alt;
            }
        }
    }
}

TEST(Tau, NearZeroFallsBackToDirectSum)
{
    const Interval x{mpq_class(1, 1L << 30)};
    const TauValue v = tau(5, x, false, TauForm::closed);
    EXPECT_TRUE(v.fell_back);
    EXPECT_TRUE(v.value.overlaps(tau(5, x, false, TauForm::direct).value));
}

TEST(EvalS, ThreeTermsAtBeta1Factorizes)
{
    // S_3 = sin x + (1/2) sin 2x = sin x (1 + cos x)
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ux(0, 3.14159);
    for (int i = 0; i < 200; ++i) {
        const double xd = ux(rng);
        const Interval x{mpq_class(xd)};
        const Big xb = to_big(x.lo());
        EXPECT_TRUE(encloses(eval_S(3, beta1(), x).value, sin(xb) * (1 + cos(xb))));
    }
}

TEST(EvalS, AlternatingFormMatchesReflection)
{
    // S^-(x) = S(pi - x)
    const CoefficientSequence seq(11, beta1());
    for (int i = 1; i < 20; ++i) {
        const Interval x{mpq_class(i, 7)};
        const Interval reflected = pi_interval() - x;
        EXPECT_TRUE(eval_S(seq, x, true).value.overlaps(eval_S(seq, reflected).value));
    }
}

TEST(EvalS, IndependentSumAtRandomPoints)
{
    const Big b = big_beta1();
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ux(0, 3.14159);
    for (long n : {7L, 20L, 61L}) {
        const CoefficientSequence seq(n, beta1());
        for (int i = 0; i < 20; ++i) {
            const Interval x{mpq_class(ux(rng))};
            const Big xb = to_big(x.lo());
            Big s = 0;
            for (long k = 1; k < n; ++k) {
                s += oracle_coeff(n, k, b) * sin(k * xb);
            }
            EXPECT_TRUE(encloses(eval_S(seq, x).value, s));
        }
    }
}
