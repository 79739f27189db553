#include <map>
#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include <sinecert/certify.hpp>
#include <sinecert/decompose.hpp>

using namespace sinecert;
using Big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<60>>;

namespace {

Big big_beta1() { return log(Big(2)) / log(Big(16) / 5); }

Big to_big(mpfr_srcptr v)
{
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v);
    return Big(q.get_num().get_str()) / Big(q.get_den().get_str());
}

bool encloses(const Interval& e, const Big& v)
{
    const Big slack = abs(v) * Big("1e-45") + Big("1e-45");
    return to_big(e.lo()) <= v + slack && v - slack <= to_big(e.hi());
}

// Split from 60-digit second differences: kappa is the last index with a
// nonnegative second difference, and the tail a_m..a_n must have an odd
// number of terms, so m is kappa or kappa + 1.
struct OracleSplit {
    bool fully_convex = false;
    long m = 0;
    long count = 0;
};

OracleSplit oracle_split(long n, const Big& beta)
{
    std::vector<Big> a(static_cast<std::size_t>(n + 1));
    for (long k = 1; k <= n; ++k) {
        a[static_cast<std::size_t>(k)] = pow(Big(n * n - k * k) / Big((n * n - 1) * k), beta);
    }
    long kappa = 1;
    bool all = true;
    for (long k = 2; k <= n - 1; ++k) {
        const auto i = static_cast<std::size_t>(k);
        if (a[i - 1] - 2 * a[i] + a[i + 1] >= 0) {
            kappa = k;
        } else {
            all = false;
        }
    }
    if (all) {
        return {true, n, 0};
    }
    const long m = (n - kappa) % 2 == 0 ? kappa : kappa + 1;
    return {false, m, n - m};
}

Exponent beta_of(double b)
{
    return b == 0 ? Exponent::named_beta1() : Exponent::rational(mpq_class(b));
}

} // namespace

TEST(Split, SevenAtBeta1HasTwoSummands)
{
    const Decomposition d = build(7, Exponent::named_beta1());
    EXPECT_FALSE(d.fully_convex());
    EXPECT_EQ(d.m(), 5);
    EXPECT_EQ(d.t_summands(), 2);
    // d_5 = (1/10)^beta1 - (13/288)^beta1, d_6 = (13/288)^beta1
    const Interval b1 = beta1();
    const Interval p = pow(Interval(mpq_class(13, 288)), b1);
    EXPECT_TRUE(d.d_weights()[0].overlaps(pow(Interval(mpq_class(1, 10)), b1) - p));
    EXPECT_TRUE(d.d_weights()[1].overlaps(p));
}

TEST(Split, SevenIsFullyConvexAboveBeta2)
{
    for (const char* b : {"0.9", "1"}) {
        const Decomposition d = build(7, Exponent::parse(b));
        EXPECT_TRUE(d.fully_convex()) << b;
        EXPECT_EQ(d.t_summands(), 0);
    }
}

TEST(Split, SeventeenHasFiveTermTail)
{
    const Decomposition d = build(17, Exponent::named_beta1());
    EXPECT_EQ(d.m(), 13);
    EXPECT_EQ(17 - d.m() + 1, 5);
}

TEST(Split, AgreesWithIndependentSplit)
{
    const Big b1 = big_beta1();
    for (double b : {0.0, 0.7, 0.8, 0.9, 1.0}) {
        const Big bb = b == 0 ? b1 : Big(b);
        for (long n = 7; n <= 200; ++n) {
            const auto [seq, sp] = split_with_escalation(n, beta_of(b));
            const OracleSplit o = oracle_split(n, bb);
            EXPECT_EQ(sp.fully_convex, o.fully_convex) << n << ' ' << b;
            EXPECT_EQ(sp.m, o.m) << n << ' ' << b;
        }
    }
}

TEST(Split, HeadConvexTailConcaveStrictlySigned)
{
    for (long n = 7; n <= 200; ++n) {
        const Decomposition d = build(n, Exponent::named_beta1());
        const CoefficientSequence& s = d.sequence();
        for (long k = 2; k <= d.m() - 1; ++k) {
            EXPECT_TRUE(s.second_diff(k).certainly_positive()) << n << ' ' << k;
        }
        for (long k = d.m() + 1; k <= n - 1; ++k) {
            EXPECT_TRUE(s.second_diff(k).certainly_negative()) << n << ' ' << k;
        }
    }
}

TEST(Split, DWeightsNondecreasingWithEvenCount)
{
    for (double b : {0.0, 0.7, 0.8}) {
        for (long n = 7; n <= 200; ++n) {
            const Decomposition d = build(n, beta_of(b));
            const auto& w = d.d_weights();
            EXPECT_EQ(w.size() % 2, 0u) << n;
            for (std::size_t i = 0; i < w.size(); ++i) {
                EXPECT_TRUE(w[i].certainly_positive());
                if (i + 1 < w.size()) {
                    EXPECT_TRUE(certainly_less_equal(w[i], w[i + 1])) << n << ' ' << i;
                }
            }
        }
    }
}

TEST(Split, InflectionRadiusAndLowerBoundOnM)
{
    // 0.5281747 is the square of the inflection radius
    EXPECT_TRUE(certainly_less(abs(inflection_point_squared(beta1()) - Interval(mpq_class(5281747, 10000000))),
                               Interval(mpq_class(1, 1000000))));
    for (long n = 10; n <= 200; ++n) {
        const long floor_part = (5281747 * n) / 10000000;
        EXPECT_GE(build(n, Exponent::named_beta1()).m(), floor_part - 1) << n;
    }
}

TEST(Split, UndecidableAtBeta2ForSeven)
{
    // the n = 7 second difference at index 6 vanishes at beta2
    EXPECT_THROW(build(7, Exponent::named_beta2()), UndecidableSign);
}

TEST(Decomposition, IdentityAtRandomPoints)
{
    PrecisionGuard guard{Precision(64)};
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ux(1e-3, 3.14159);
    long checked = 0;
    for (double b : {0.0, 0.7, 0.9, 1.0}) {
        for (long n = 7; n <= 200; ++n) {
            const Decomposition d = build(n, beta_of(b));
            for (int i = 0; i < 32; ++i) {
                const Interval x{mpq_class(ux(rng))};
                const Interval parts = d.eval_H(x) + d.eval_K(x) + d.eval_T(x);
                EXPECT_TRUE(parts.overlaps(eval_S(d.sequence(), x).value)) << n << ' ' << b;
                ++checked;
            }
        }
    }
    EXPECT_EQ(checked, 4 * 194 * 32);
}

TEST(Decomposition, KSatisfiesFejerAtSeventeen)
{
    const Decomposition d = build(17, Exponent::named_beta1());
    EXPECT_EQ(fejer_from_differences(d.k_appended_second_differences(), d.k_coeffs().back()).verdict, Verdict::pass);
    // oracle: K = S_1 - H from 60-digit coefficients, convex with 0 appended
    const Big b = big_beta1();
    const long n = 17;
    const long m = d.m();
    auto a = [&](long k) { return pow(Big(n * n - k * k) / Big((n * n - 1) * k), b); };
    const Big h[3] = {a(1) - 4 * a(4) + 3 * a(5), a(2) - 3 * a(4) + 2 * a(5), a(3) - 2 * a(4) + a(5)};
    std::vector<Big> k;
    for (long j = 1; j <= m - 1; ++j) {
        k.push_back(a(j) - a(m) - (j <= 3 ? h[j - 1] : Big(0)));
    }
    ASSERT_EQ(k.size(), d.k_coeffs().size());
    for (std::size_t j = 0; j < k.size(); ++j) {
        EXPECT_TRUE(encloses(d.k_coeffs()[j], k[j])) << j;
    }
    k.push_back(0);
    for (std::size_t j = 1; j + 1 < k.size(); ++j) {
        EXPECT_GE(k[j - 1] - 2 * k[j] + k[j + 1], Big("-1e-50")) << j;
    }
    EXPECT_GE(k[k.size() - 2], 0);
}

TEST(Decomposition, HeadTooShortIsStructureError)
{
    // n = 6 at beta1 splits with fewer than five head terms
    EXPECT_THROW(build(6, Exponent::named_beta1()), StructureError);
}

TEST(Summands, CountsAtBeta1)
{
    const Big b1 = big_beta1();
    std::map<long, long> expected;
    for (long n = 7; n <= 47; n += 2) {
        expected[n] = oracle_split(n, b1).count;
    }
    // frozen from the oracle above
    const std::map<long, long> frozen{{7, 2},   {9, 2},   {11, 4},  {13, 4},  {15, 4},  {17, 4},  {19, 6},
                                      {21, 6},  {23, 6},  {25, 6},  {27, 8},  {29, 8},  {31, 8},  {33, 10},
                                      {35, 10}, {37, 10}, {39, 10}, {41, 12}, {43, 12}, {45, 12}, {47, 12}};
    EXPECT_EQ(expected, frozen);
    for (const auto& [n, c] : frozen) {
        EXPECT_EQ(count_T_summands(n), c) << n;
    }
}

TEST(Summands, PrintedBoundsFailOnlyWhereTheOracleSaysSo)
{
    // The printed bounds are "at most 2 for odd n <= 13" and "at most 10 for
    // odd n <= 43". Both are exceeded; these are the exact exceptions.
    std::vector<long> over_two;
    std::vector<long> over_ten;
    for (long n = 7; n <= 43; n += 2) {
        const long c = count_T_summands(n);
        if (n <= 13 && c > 2) {
            over_two.push_back(n);
        }
        if (c > 10) {
            over_ten.push_back(n);
        }
    }
    EXPECT_EQ(over_two, (std::vector<long>{11, 13}));
    EXPECT_EQ(over_ten, (std::vector<long>{41, 43}));
}

TEST(Summands, FewerForLargerExponent)
{
    for (long n = 7; n <= 60; ++n) {
        EXPECT_LE(count_T_summands(n, Exponent::rational(mpq_class(4, 5))), count_T_summands(n)) << n;
    }
}

TEST(HFamily, ConsistencyAndIndependentValues)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> uy(0, 1.0 / 48);
    std::uniform_real_distribution<double> ub(0.59, 1.0);
    for (int i = 0; i < 100; ++i) {
        const mpq_class yq(uy(rng));
        const mpq_class bq(ub(rng));
        const HFunctionFamily f = h_family(Interval(yq), Interval(bq));
        EXPECT_TRUE(f.h[3].overlaps(f.h[0] - Interval(2) * f.h[1] + f.h[2]));
        EXPECT_TRUE(f.h[4].overlaps(f.h[1] - Interval(2) * f.h[2]));
        const Big y = Big(yq.get_num().get_str()) / Big(yq.get_den().get_str());
        const Big b = Big(bq.get_num().get_str()) / Big(bq.get_den().get_str());
        auto base = [&](int c, int d) { return pow((1 - c * y) / d, b); };
        const Big h1 = 1 - 4 * base(15, 4) + 3 * base(24, 5);
        const Big h2 = base(3, 2) - 3 * base(15, 4) + 2 * base(24, 5);
        const Big h3 = base(8, 3) - 2 * base(15, 4) + base(24, 5);
        EXPECT_TRUE(encloses(f.h[0], h1));
        EXPECT_TRUE(encloses(f.h[1], h2));
        EXPECT_TRUE(encloses(f.h[2], h3));
        EXPECT_TRUE(encloses(f.h[3], h1 - 2 * h2 + h3));
    }
}

TEST(HFamily, EndpointsAndRange)
{
    // y = 1/48 is n = 7: h_1 = 1 - 4 (11/64)^beta + 3 (1/10)^beta
    const Interval b1 = beta1();
    const HFunctionFamily f = h_family(Interval(mpq_class(1, 48)), b1);
    const Interval expect = Interval(1) - Interval(4) * pow(Interval(mpq_class(11, 64)), b1) +
                            Interval(3) * pow(Interval(mpq_class(1, 10)), b1);
    EXPECT_TRUE(f.h[0].overlaps(expect));
    EXPECT_TRUE(f.h[0].overlaps(h_coefficients(CoefficientSequence(7, b1))[0]));
    EXPECT_TRUE(h_family(Interval(0), Interval(1)).h[3].contains(mpq_class(1, 3)));
    EXPECT_THROW(h_family(Interval(mpq_class(1, 47)), b1), std::invalid_argument);
    EXPECT_THROW(h_family(Interval(-1), b1), std::invalid_argument);
}
