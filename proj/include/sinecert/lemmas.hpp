#ifndef SINECERT_LEMMAS_HPP
#define SINECERT_LEMMAS_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "certify.hpp"
#include "decompose.hpp"
#include "expr.hpp"
#include "interval.hpp"
#include "polynomial.hpp"
#include "report.hpp"
#include "sinepoly.hpp"

namespace sinecert {

namespace detail {

inline mpq_class dec(std::string_view s)
{
    auto q = parse_rational(s);
    if (!q) {
        throw std::logic_error("bad literal " + std::string(s));
    }
    return *q;
}

inline Interval idec(std::string_view s) { return Interval(dec(s)); }

inline mpq_class lower_q(const Interval& v)
{
    mpq_class r;
    mpfr_get_q(r.get_mpq_t(), v.lo());
    return r;
}

inline mpq_class upper_q(const Interval& v)
{
    mpq_class r;
    mpfr_get_q(r.get_mpq_t(), v.hi());
    return r;
}

/// A 20-digit decimal at or below / above the enclosure.
inline mpq_class decimal_below(const Interval& v)
{
    const mpz_class scale = mpz_class(10) * mpz_class("10000000000000000000");
    mpz_class f;
    mpq_class q = lower_q(v) * scale;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return mpq_class(f, scale);
}

inline mpq_class decimal_above(const Interval& v)
{
    const mpz_class scale = mpz_class(10) * mpz_class("10000000000000000000");
    mpz_class f;
    mpq_class q = upper_q(v) * scale;
    mpz_cdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return mpq_class(f, scale);
}

inline const Interval& b1() { return named_constant(NamedConstant::beta1); }

inline std::string show(const Interval& v) { return v.to_string(20); }

inline MonotoneFn monotone(std::string_view text, Direction d, const mpq_class& lo, const mpq_class& hi,
                           const std::string& var)
{
    return MonotoneFn{parse_expr(text, var), d, lo, hi, var};
}

/// |v - p| <= tol, certified.
inline bool within(const Interval& v, const mpq_class& p, const mpq_class& tol)
{
    return mpfr_cmp_q(v.lo(), mpq_class(p - tol).get_mpq_t()) >= 0 &&
           mpfr_cmp_q(v.hi(), mpq_class(p + tol).get_mpq_t()) <= 0;
}

inline mpq_class cauchy_bound(const RationalPolynomial& p)
{
    mpq_class m = 0;
    for (long i = 0; i < p.degree(); ++i) {
        mpq_class r = abs(p.coefficient(static_cast<std::size_t>(i)) / p.leading());
        m = std::max(m, r);
    }
    return m + 1;
}

/// p > 0 on [a, infinity): positive at a, positive leading coefficient and no
/// root between a and the Cauchy bound.
inline SturmResult positive_on_ray(const RationalPolynomial& p, const mpq_class& a)
{
    if (p(a) <= 0 || p.leading() <= 0) {
        SturmResult r;
        r.polynomial = p;
        r.a = a;
        r.b = a;
        r.sample = a;
        r.sample_value = p(a);
        r.positive = false;
        return r;
    }
    SturmResult r = sturm_positive(p, a, std::max(cauchy_bound(p), mpq_class(a + 1)));
    return r;
}

inline Verdict monotone_claim(LemmaReport& rep, const std::string& name, const MonotoneFn& f,
                              int depth = kMonotoneMaxDepth)
{
    MonotoneResult m = verify_monotone(f, depth);
    std::string detail = f.expr.to_string(f.var) + " " + direction_name(f.direction) + " on [" +
                         format_rational(f.lo) + ", " + format_rational(f.hi) + "], " + std::to_string(m.cells) +
                         " cells";
    if (m.verdict != Verdict::pass && m.witness) {
        detail += ", stuck on [" + format_rational(m.witness->first) + ", " + format_rational(m.witness->second) + "]";
    }
    rep.claim(name, m.verdict, detail);
    return m.verdict;
}

inline void sturm_claim(LemmaReport& rep, const std::string& name, const SturmResult& r)
{
    rep.sturm.push_back({name, r});
}

} // namespace detail

/// phi''(x) / sin x for phi = [h1, h2, h3]^-, as a quadratic in X = cos x:
/// -36 h3 X^2 + 8 h2 X + 9 h3 - h1.
inline Interval h_minus_curvature(const std::array<Interval, 3>& h, const Interval& X)
{
    return Interval(-36) * h[2] * square(X) + Interval(8) * h[1] * X + Interval(9) * h[2] - h[0];
}

/// Concavity of [h1, h2, h3]^- on [0, x0] (0 < x0 < pi): the curvature
/// quadratic is negative for X in [cos x0, 1], checked on a subdivision.
inline Verdict h_minus_concave(const std::array<Interval, 3>& h, const Interval& x0, int cells = 256)
{
    const mpq_class lo = detail::lower_q(cos(x0));
    const mpq_class step = (mpq_class(1) - lo) / cells;
    bool open = false;
    for (int i = 0; i < cells; ++i) {
        const mpq_class a = lo + step * i;
        const mpq_class b = i + 1 == cells ? mpq_class(1) : lo + step * (i + 1);
        const Interval q = h_minus_curvature(h, Interval::from_endpoints(a, b));
        if (q.certainly_negative()) {
            continue;
        }
        if (q.certainly_nonnegative()) {
            return Verdict::fail;
        }
        open = true;
    }
    return open ? Verdict::inconclusive : Verdict::pass;
}

/// [h1, h2, h3]^-(x) / x.
inline Interval h_minus_over_x(const std::array<Interval, 3>& h, const Interval& x)
{
    return eval_sine_poly({h[0], h[1], h[2]}, x, true) / x;
}

/// H^-(n0, beta1)/x at one evaluation point, with concavity on [0, x0]
/// (which makes H^-/x decreasing there).
struct HAnchor {
    long n0 = 0;
    std::array<Interval, 3> h;
    Interval x;
    Interval value;
    Interval concave_on;
    Verdict concave = Verdict::inconclusive;
};

inline HAnchor compute_anchor(long n0, const Interval& x, const Interval& concave_on)
{
    HAnchor a;
    a.n0 = n0;
    a.h = h_coefficients(CoefficientSequence(n0, detail::b1()));
    a.x = x;
    a.value = h_minus_over_x(a.h, x);
    a.concave_on = concave_on;
    a.concave = h_minus_concave(a.h, concave_on);
    return a;
}

struct HAnchors {
    HAnchor h7_far;  // n0 = 7 at x = 0.75
    HAnchor h7_mid;  // n0 = 7 at x = 2.67/7
    HAnchor h15;     // n0 = 15 at x = 2.5/15
    HAnchor h45;     // n0 = 45 at x = 2.5/45
};

/// Cached per thread and working precision.
inline const HAnchors& h_anchors()
{
    thread_local std::map<long, HAnchors> cache;
    auto it = cache.find(working_precision());
    if (it != cache.end()) {
        return it->second;
    }
    const Interval x075 = detail::idec("0.75");
    HAnchors a{compute_anchor(7, x075, x075), compute_anchor(7, Interval(detail::dec("2.67") / 7), x075),
               compute_anchor(15, Interval(mpq_class(1, 6)), Interval(mpq_class(1, 6))),
               compute_anchor(45, Interval(mpq_class(1, 18)), Interval(mpq_class(1, 18)))};
    return cache.emplace(working_precision(), std::move(a)).first->second;
}

// ---------------------------------------------------------------------------
// h-function certificates

struct HTarget {
    std::string name;
    std::string g1;
    std::string g2;
    Direction direction;
};

/// The ten targets on y in [0, 1/48]: -h_i'(y; beta1) >= 0 rearranged as
/// g1 >= g2, and d h_i(y; 1) / d beta >= 0.
inline std::vector<HTarget> h_targets()
{
    const std::string w = "((1-3*y)/2)";
    const std::string z = "((1-8*y)/3)";
    const std::string u = "((1-15*y)/4)";
    const std::string v = "((1-24*y)/5)";
    auto p = [](const std::string& b) { return b + "^(beta1-1)"; };
    auto xl = [](const std::string& b) { return b + "*ln" + b; };
    const auto inc = Direction::increasing;
    const auto decr = Direction::decreasing;
    return {
        {"h1", "72*" + p(v), "75*" + p(u), inc},
        {"h2", "3/2*" + p(w) + "+48/5*" + p(v), "45/4*" + p(u), inc},
        {"h3", "8/3*" + p(z) + "+24/5*" + p(v), "15/2*" + p(u), inc},
        {"h4", "8/3*" + p(z), "3*" + p(w), inc},
        {"h5", "3/2*" + p(w) + "+15/4*" + p(u), "16/3*" + p(z), inc},
        {"dh1", "3*" + xl(v), "4*" + xl(u), inc},
        {"dh2", xl(w) + "-3*" + xl(u), "-2*" + xl(v), decr},
        {"dh3", xl(z) + "+" + xl(v), "2*" + xl(u), inc},
        {"dh4", xl(z) + "-2*" + xl(w), "0", inc},
        {"dh5", xl(w) + "-2*" + xl(z), "-" + xl(u), decr},
    };
}

inline std::pair<MonotoneFn, MonotoneFn> h_target_functions(const HTarget& t)
{
    const mpq_class hi(1, 48);
    return {detail::monotone(t.g1, t.direction, 0, hi, "y"), detail::monotone(t.g2, t.direction, 0, hi, "y")};
}

/// The four-point chain for h1 as printed with the source argument.
inline std::vector<mpq_class> printed_h1_chain()
{
    return {0, detail::dec("0.0075"), detail::dec("0.0181"), mpq_class(1, 48)};
}

/// The four-point h1 chain with its links evaluated at the working precision.
inline DifCertificate printed_h1_certificate()
{
    auto [g1, g2] = h_target_functions(h_targets()[0]);
    DifCertificate cert{g1, g2, printed_h1_chain(), {}, false, working_precision()};
    const auto& chain = cert.chain;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        cert.links.push_back(evaluate_link(cert.g1, cert.g2, chain[i], chain[i + 1]));
    }
    return cert;
}

inline LemmaReport verify_h_certificates(int max_points = 64)
{
    LemmaReport rep;
    rep.id = "h-certificates";
    for (const auto& t : h_targets()) {
        auto [g1, g2] = h_target_functions(t);
        try {
            DifCertificate cert = dif_certify(g1, g2, max_points);
            const bool m1 = verify_monotone(g1).verdict == Verdict::pass;
            const bool m2 = verify_monotone(g2).verdict == Verdict::pass;
            cert.monotonicity_certified = m1 && m2;
            const CheckResult chk = check_certificate(cert);
            rep.claim(t.name + " chain", chk.verdict,
                      std::to_string(cert.chain.size()) + " points" + (chk.message.empty() ? "" : ", " + chk.message),
                      cert.monotonicity_certified);
            if (!cert.monotonicity_certified) {
                rep.note(t.name + ": monotonicity of g1/g2 declared, not certified");
            }
            rep.certificates.push_back(std::move(cert));
        } catch (const CertificationFailure& e) {
            rep.claim(t.name + " chain", Verdict::fail,
                      std::string(e.what()) + " at y = " + format_rational(e.location()));
        }
    }

    {
        const CheckResult chk = check_certificate(printed_h1_certificate());
        rep.claim("h1 printed four-point chain", chk.verdict, chk.message);
    }

    const auto at_end = h_family(Interval(mpq_class(1, 48)), detail::b1());
    for (int i = 0; i < 5; ++i) {
        const std::string name = "h" + std::to_string(i + 1) + "(1/48; beta1)";
        rep.constant(name, at_end.h[static_cast<std::size_t>(i)]);
        rep.claim(name + " > 0", at_end.h[static_cast<std::size_t>(i)].certainly_positive());
    }
    const auto at_zero = h_family(Interval(0), detail::b1());
    rep.constant("h4(0; beta1)", at_zero.h[3]);
    rep.claim("h4(0; beta1) > 0", at_zero.h[3].certainly_positive());
    rep.note("increase in beta on [beta1, 1] follows from the beta = 1 derivative targets by the endpoint "
             "reduction for power differences");
    rep.finalize();
    return rep;
}

// ---------------------------------------------------------------------------
// H^-/x lower bounds

inline LemmaReport h_lower_bounds()
{
    using detail::dec;
    LemmaReport rep;
    rep.id = "h-bounds";
    const HAnchors& a = h_anchors();
    rep.constant("H7/x at 0.75", a.h7_far.value);
    rep.constant("H7/x at 2.67/7", a.h7_mid.value);
    rep.constant("H15/x at 2.5/15", a.h15.value);
    rep.constant("H45/x at 2.5/45", a.h45.value);

    rep.claim("H7 concave on [0, 0.75]", a.h7_far.concave);
    rep.claim("H15 concave on [0, 2.5/15]", a.h15.concave);
    rep.claim("H45 concave on [0, 2.5/45]", a.h45.concave);

    rep.claim("H7/x at 0.75 within 1e-9 of 0.2232352723",
              detail::within(a.h7_far.value, dec("0.2232352723"), dec("1e-9")), detail::show(a.h7_far.value));
    rep.claim("H7/x at 0.75 > 0.2232", certainly_above(a.h7_far.value, dec("0.2232")));
    rep.claim("H7/x at 2.67/7 > 0.2285", certainly_above(a.h7_mid.value, dec("0.2285")),
              detail::show(a.h7_mid.value));
    rep.claim("H15/x at 2.5/15 > 0.248", certainly_above(a.h15.value, dec("0.248")), detail::show(a.h15.value));
    rep.claim("H45/x at 2.5/45 > 0.250772629", certainly_above(a.h45.value, dec("0.250772629")),
              detail::show(a.h45.value));
    rep.claim("H45/x at 2.5/45 > 0.2507726", certainly_above(a.h45.value, dec("0.2507726")));

    // H7^-/x on (0, 0.75] at 64 grid points: no certified increase.
    bool ok = true;
    std::string where;
    std::optional<Interval> prev;
    for (int i = 1; i <= 64; ++i) {
        const Interval x(dec("0.75") * i / 64);
        Interval v = h_minus_over_x(a.h7_far.h, x);
        if (prev && certainly_less(*prev, v)) {
            ok = false;
            where = "increase before grid point " + std::to_string(i);
        }
        prev = std::move(v);
    }
    rep.claim("H7/x nonincreasing at 64 grid points of (0, 0.75]", ok, where);
    rep.note("H/x is decreasing on [0, x0] once H is concave there, since H(0) = 0");
    rep.finalize();
    return rep;
}

// ---------------------------------------------------------------------------
// Individual lemmas

/// sin(x/2) + 0.338 sin(3x/2) - 0.662 >= 0 on [0.75, pi].
inline LemmaReport verify_b5()
{
    using detail::dec;
    LemmaReport rep;
    rep.id = "b5";
    const RationalPolynomial X{0, 1};
    const RationalPolynomial quad{-331, 676, 676};
    const RationalPolynomial factored = RationalPolynomial::constant(mpq_class(1, 500)) * RationalPolynomial{1, -1} * quad;
    const RationalPolynomial cubic{dec("-0.662"), dec("2.014"), 0, dec("-1.352")};
    // cos t - 0.338 cos 3t - 0.662 with cos 3t = 4X^3 - 3X
    const RationalPolynomial cos3{0, -3, 0, 4};
    const RationalPolynomial direct = X - RationalPolynomial::constant(dec("0.338")) * cos3 -
                                      RationalPolynomial::constant(dec("0.662"));
    rep.claim("substituted form equals -1.352X^3 + 2.014X - 0.662", direct == cubic);
    rep.claim("(1/500)(1-X)(676X^2+676X-331) expands to the same cubic", factored == cubic);

    detail::sturm_claim(rep, "676X^2+676X-331 on (0.4, 1)", sturm_positive(quad, dec("0.4"), 1));

    // x in [0.75, pi] maps to t = (pi - x)/2 in [0, (pi - 0.75)/2], X = cos t.
    const Interval xmin = cos((pi_interval() - detail::idec("0.75")) / Interval(2));
    rep.constant("X range lower end cos((pi-0.75)/2)", xmin);
    const mpq_class xmin_lo = detail::decimal_below(xmin);
    detail::sturm_claim(rep, "676X^2+676X-331 on (cos((pi-0.75)/2), 1)", sturm_positive(quad, xmin_lo, 1));

    const Interval root = (Interval(-676) + sqrt(Interval(676 * 676 + 4 * 676 * 331))) / Interval(2 * 676);
    rep.constant("positive root of 676X^2+676X-331", root);
    rep.claim("positive root lies below the X range", certainly_less(root, xmin));
    rep.note("X = cos t reaches down to about 0.3663 on [0.75, pi]; the (0.4, 1) check alone does not cover it");
    rep.finalize();
    return rep;
}

/// Convex/concave structure of (1/x - x)^beta and the split point.
inline LemmaReport verify_fc()
{
    using detail::dec;
    LemmaReport rep;
    rep.id = "fc";
    const RationalPolynomial g0{2, 0, -6, 0, 18, 0, 2};
    const RationalPolynomial g1{6, 0, -12, 0, 6};
    const RationalPolynomial gs{-1, 0, 56, 0, -78, 0, 8, 0, -1};
    detail::sturm_claim(rep, "g(x;0) = 2x^6+18x^4-6x^2+2 on (0, 1)", sturm_positive(g0, 0, 1));
    detail::sturm_claim(rep, "g(x;1) = 6x^4-12x^2+6 on (0.63, 0.99)", sturm_positive(g1, dec("0.63"), dec("0.99")));

    const Interval x1 = sqrt(sqrt(Interval(5)) - Interval(2));
    const Interval x2 = sqrt(sqrt(Interval(21)) - Interval(4));
    rep.constant("x1 = sqrt(sqrt5 - 2)", x1);
    rep.constant("x2 = sqrt(sqrt21 - 4)", x2);
    rep.claim("[x1, x2] inside [0.4, 0.8]", certainly_above(x1, dec("0.4")) && certainly_below(x2, dec("0.8")));
    rep.claim("x2 > 0.63", certainly_above(x2, dec("0.63")));
    detail::sturm_claim(rep, "g(x;1) on (x2, 1 - 1e-6)", sturm_positive(g1, detail::decimal_below(x2), 1 - dec("1e-6")));
    rep.note("g(x;1) vanishes at x = 1; the check stops at 1 - 1e-6");
    detail::sturm_claim(rep, "-x^8+8x^6-78x^4+56x^2-1 on (0.4, 0.8)", sturm_positive(gs, dec("0.4"), dec("0.8")));

    // discriminant of the quadratic in sigma
    const RationalPolynomial x2p{1, 0, 1};
    const RationalPolynomial a = x2p * x2p * x2p;
    const RationalPolynomial b = -RationalPolynomial{-3, 0, 9, 0, 15, 0, 3};
    const RationalPolynomial c{2, 0, -6, 0, 18, 0, 2};
    const RationalPolynomial disc = RationalPolynomial::constant(4) * a * c - b * b;
    rep.claim("4ac - b^2 = (x^2+1)^2 (-x^8+8x^6-78x^4+56x^2-1)", disc == x2p * x2p * gs);
    rep.claim("3x^6+15x^4+9x^2-3 = 3(x^4+4x^2-1)(x^2+1)",
              RationalPolynomial{-3, 0, 9, 0, 15, 0, 3} ==
                  RationalPolynomial::constant(3) * RationalPolynomial{-1, 0, 4, 0, 1} * x2p);

    const Interval xs2 = inflection_point_squared(detail::b1());
    rep.constant("x_*(beta1)^2", xs2);
    rep.constant("x_*(beta1)", sqrt(xs2));
    rep.claim("x_*(beta1)^2 within 1e-6 of 0.5281747", detail::within(xs2, dec("0.5281747"), dec("1e-6")),
              detail::show(xs2));
    rep.note("the printed 0.5281747 is the square of the inflection point");

    for (long n = 5; n <= 9; ++n) {
        try {
            const auto [seq, sp] = split_with_escalation(n, Exponent::named_beta1());
            rep.constant("split m at n=" + std::to_string(n), Interval(sp.m));
            if (n >= 7) {
                bool convex_head = true;
                for (long k = 2; k <= 4; ++k) {
                    convex_head = convex_head && seq.second_diff(k).certainly_nonnegative();
                }
                rep.claim("n=" + std::to_string(n) + ": second differences 2..4 >= 0 and m >= 5",
                          convex_head && sp.m >= 5);
            }
        } catch (const UndecidableSign& e) {
            rep.claim("split at n=" + std::to_string(n), Verdict::inconclusive, e.what());
        }
    }
    bool lower = true;
    std::string where;
    for (long n = 10; n <= 200; ++n) {
        const auto sp = split_with_escalation(n, Exponent::named_beta1()).second;
        const long floor_part = (n * 5281747L) / 10000000L;
        if (sp.m < floor_part - 1) {
            lower = false;
            where = "n = " + std::to_string(n);
        }
    }
    rep.claim("m >= floor(0.5281747 n) - 1 for 10 <= n <= 200", lower, where);
    rep.finalize();
    return rep;
}

/// (1+B)^beta ln(1+B) + (1-B)^beta ln(1-B) >= 0 reduced to beta = 1/2.
inline LemmaReport verify_BB(int max_points = 512)
{
    using detail::dec;
    LemmaReport rep;
    rep.id = "BB";
    const mpq_class split = dec("0.864");
    const Interval tau = Interval(1) - exp(Interval(-2));
    rep.constant("tau = 1 - e^-2", tau);
    rep.claim("case split point 0.864 <= tau", certainly_above(tau, split));

    // case 1: B in [0.864, 1]
    const auto th1 = detail::monotone("(1+x)*(ln(1+x))^2", Direction::increasing, 0, 1, "x");
    detail::monotone_claim(rep, "theta1 increasing on [0, 1]", th1);
    const Expr th2 = parse_expr("(1-x)*(ln(1-x))^2", "x");
    mpq_class tail_start(1);
    tail_start -= mpq_class(1, 1 << 20);
    const int cells = 1024;
    Interval sup(0);
    for (int i = 0; i < cells; ++i) {
        const mpq_class lo = split + (tail_start - split) * i / cells;
        const mpq_class hi = split + (tail_start - split) * (i + 1) / cells;
        sup = hull(sup, th2.eval(Interval::from_endpoints(lo, hi)));
    }
    // t ln^2 t = sqrt(t) (sqrt(t) ln^2 t) <= 2^-10 * 16 e^-2 for t <= 2^-20
    const Interval tail = Interval(16) * exp(Interval(-2)) / Interval(1024);
    sup = hull(sup, tail);
    const Interval th1_at = th1.at(split);
    rep.constant("theta1(0.864)", th1_at);
    rep.constant("sup theta2 on [0.864, 1]", sup);
    rep.claim("case 1: theta1(0.864) > sup theta2 on [0.864, 1]", certainly_less(sup, th1_at));

    // case 2: B in [0.4, 0.864]
    {
        const auto g1 = detail::monotone("(1+x)*(ln(1+x))^2", Direction::increasing, dec("0.4"), split, "x");
        const auto g2 = detail::monotone("(1-x)*(ln(1-x))^2", Direction::increasing, dec("0.4"), split, "x");
        const bool m1 = detail::monotone_claim(rep, "theta1 increasing on [0.4, 0.864]", g1) == Verdict::pass;
        const bool m2 = detail::monotone_claim(rep, "theta2 increasing on [0.4, 0.864]", g2) == Verdict::pass;
        try {
            DifCertificate cert = dif_certify(g1, g2, max_points);
            cert.monotonicity_certified = m1 && m2;
            const CheckResult chk = check_certificate(cert);
            rep.claim("case 2 chain on [0.4, 0.864]", chk.verdict,
                      std::to_string(cert.chain.size()) + " points");
            rep.certificates.push_back(std::move(cert));
        } catch (const CertificationFailure& e) {
            rep.claim("case 2 chain on [0.4, 0.864]", Verdict::fail,
                      std::string(e.what()) + " at B = " + format_rational(e.location()));
        }
    }

    // case 3: B in [0, 0.4], series bounds
    const RationalPolynomial B{0, 1};
    const RationalPolynomial L{0, 1, mpq_class(-1, 2), mpq_class(1, 3), mpq_class(-1, 4)};
    const RationalPolynomial upper{0, 0, 1, 0, mpq_class(-1, 12), mpq_class(-1, 12)};
    const RationalPolynomial P = RationalPolynomial{1, 1} * L * L - upper;
    const auto [quo, rem] = divmod(P, RationalPolynomial::monomial(1, 5));
    rep.claim("series difference is divisible by B^5", rem.is_zero());
    rep.claim("quotient equals (9B^4-15B^3+28B^2-68B+24)/144",
              quo == RationalPolynomial::constant(mpq_class(1, 144)) * RationalPolynomial{24, -68, 28, -15, 9});
    detail::sturm_claim(rep, "(9B^4-15B^3+28B^2-68B+24)/144 on (0, 0.4)", sturm_positive(quo, 0, dec("0.4")));
    const auto [lq, lrem] = divmod(L, B);
    detail::sturm_claim(rep, "truncated log series / B on (0, 0.4)", sturm_positive(lq, 0, dec("0.4")));
    const Expr sixth = parse_expr("(52-48*ln(1-x))/(1-x)^5", "x");
    const Interval s6 = sixth.eval(Interval::from_endpoints(0, dec("0.4")));
    rep.constant("sixth derivative term on [0, 0.4]", s6);
    rep.claim("(52 - 48 ln(1-B))/(1-B)^5 >= 0 on [0, 0.4]", s6.certainly_nonnegative());
    rep.note("the squared series factor is B - B^2/2 + B^3/3 - B^4/4");
    rep.finalize();
    return rep;
}

/// Concavity of H^-(7, beta1) on [0, 0.75] through the quadratic in X = cos x.
inline LemmaReport verify_H7b()
{
    using detail::dec;
    LemmaReport rep;
    rep.id = "H7b";
    const auto h = h_coefficients(CoefficientSequence(7, detail::b1()));
    const auto fam = h_family(Interval(mpq_class(1, 48)), detail::b1());
    bool agree = true;
    for (int i = 0; i < 3; ++i) {
        agree = agree && h[static_cast<std::size_t>(i)].overlaps(fam.h[static_cast<std::size_t>(i)]);
        rep.constant("h" + std::to_string(i + 1), h[static_cast<std::size_t>(i)]);
    }
    rep.claim("coefficient route and y-family route agree", agree);

    const Interval A = Interval(-36) * h[2];
    const Interval Bc = Interval(8) * h[1];
    const Interval C = Interval(9) * h[2] - h[0];
    const Interval disc = square(Bc) - Interval(4) * A * C;
    const Interval sd = sqrt(disc);
    const Interval r_small = (sd - Bc) / (Interval(2) * A);
    const Interval r_large = (Interval(0) - Bc - sd) / (Interval(2) * A);
    rep.constant("root 1", r_small);
    rep.constant("root 2", r_large);
    rep.claim("root 1 within 1e-12 of 0.39281956258689586",
              detail::within(r_small, dec("0.39281956258689586"), dec("1e-12")), detail::show(r_small));
    rep.claim("root 2 within 1e-12 of 0.67755077339437549",
              detail::within(r_large, dec("0.67755077339437549"), dec("1e-12")), detail::show(r_large));
    const Interval c075 = cos(detail::idec("0.75"));
    rep.constant("cos(0.75)", c075);
    rep.claim("both roots below cos(0.75)", certainly_less(r_large, c075) && certainly_less(r_small, c075));

    // For X >= 0 the quadratic is bounded above by the one built from upper endpoints.
    const RationalPolynomial up{detail::decimal_above(C), detail::decimal_above(Bc), detail::decimal_above(A)};
    const mpq_class c_lo = detail::decimal_below(c075);
    detail::sturm_claim(rep, "minus the upper quadratic on (cos 0.75, 1)", sturm_positive(-up, c_lo, 1));
    rep.claim("upper quadratic negative at both ends", up(c_lo) < 0 && up(mpq_class(1)) < 0);
    rep.claim("curvature negative on [cos 0.75, 1] by subdivision", h_minus_concave(h, detail::idec("0.75")));
    rep.finalize();
    return rep;
}

/// n a_{n-1}(beta1) decreasing in n, and 7 a_6(beta1) <= 1.105.
inline LemmaReport verify_mono11()
{
    using detail::dec;
    LemmaReport rep;
    rep.id = "mono11";
    // R(n) = n^2 (2n - 1) / ((n^2 - 1)(n - 1))
    const RationalPolynomial N{0, 0, -1, 2};
    const RationalPolynomial D{1, -1, -1, 1};
    const RationalPolynomial num = N.derivative() * D - N * D.derivative();
    detail::sturm_claim(rep, "-(N'D - ND') on [7, oo) for R(n)", detail::positive_on_ray(-num, 7));
    rep.claim("beta1 > 1/2 so n^(1/beta1 - 2) decreases", certainly_above(detail::b1(), mpq_class(1, 2)));

    bool dec_ok = true;
    std::string where;
    Interval prev = Interval(7) * CoefficientSequence(7, detail::b1()).a(6);
    rep.constant("7 a_6(beta1)", prev);
    for (long n = 8; n <= 200; ++n) {
        Interval v = Interval(n) * coeff(n, n - 1, detail::b1());
        if (!certainly_less(v, prev)) {
            dec_ok = false;
            where = "n = " + std::to_string(n);
        }
        prev = std::move(v);
    }
    rep.claim("n a_{n-1}(beta1) strictly decreasing for 7 <= n <= 200", dec_ok, where);
    rep.claim("7 a_6(beta1) <= 1.105", certainly_below(*rep.find_constant("7 a_6(beta1)"), dec("1.105")));
    rep.finalize();
    return rep;
}

inline Interval theta(long n) { return Interval(n - 1) * delta1_closed(n, detail::b1()); }

/// (n-1) delta_1 <= theta(12) for n >= 7 and <= theta(45) for n >= 45.
inline LemmaReport verify_delta1()
{
    using detail::dec;
    LemmaReport rep;
    rep.id = "delta1";
    std::vector<Interval> th(16);
    for (long n = 7; n <= 15; ++n) {
        th[static_cast<std::size_t>(n)] = theta(n);
        rep.constant("theta(" + std::to_string(n) + ")", th[static_cast<std::size_t>(n)]);
    }
    const Interval th45 = theta(45);
    rep.constant("theta(45)", th45);
    {
        const CoefficientSequence seq(12, detail::b1());
        rep.claim("closed form agrees with the coefficient sequence at n=12",
                  th[12].overlaps(Interval(11) * seq.delta(1)));
    }
    bool up = true;
    for (long n = 7; n < 12; ++n) {
        up = up && certainly_less(th[static_cast<std::size_t>(n)], th[static_cast<std::size_t>(n + 1)]);
    }
    rep.claim("theta(7) < ... < theta(12)", up);
    bool down = true;
    for (long n = 12; n < 15; ++n) {
        down = down && certainly_less(th[static_cast<std::size_t>(n + 1)], th[static_cast<std::size_t>(n)]);
    }
    rep.claim("theta(12) > theta(13) > theta(14) > theta(15)", down);
    rep.claim("theta(12) < 0.3921", certainly_below(th[12], dec("0.3921")), detail::show(th[12]));
    rep.claim("theta(45) < 0.3428", certainly_below(th45, dec("0.3428")), detail::show(th45));

    // theta(n) = F(n)^beta1 * eta(n-1) / (n-1)^alpha with both factors positive and decreasing
    detail::monotone_claim(rep, "F(n) = (2n-1)/((n+1)(n-1)^(1/10)) decreasing on [15, 1e6]",
                           detail::monotone("(2*n-1)/((n+1)*(n-1)^(1/10))", Direction::decreasing, 15, 1000000,
                                            "n"));
    // in t = 1/(n-1): eta(t) t^alpha increasing on [1e-6, 1/14]
    const std::string eta_t = "(2-(4/((2+t)*(1-t)))^beta1)*t^(19/10*beta1-1)";
    detail::monotone_claim(rep, "eta(y)/y^alpha decreasing for y = n-1 in [14, 1e6]",
                           detail::monotone(eta_t, Direction::increasing, mpq_class(1, 1000000), mpq_class(1, 14),
                                            "t"));
    const Interval eta_end = parse_expr(eta_t, "t").eval(Interval(mpq_class(1, 1000000)));
    rep.claim("eta(y)/y^alpha > 0 at the window end", eta_end.certainly_positive());

    const Interval tail = exp((Interval(1) + detail::b1()) * log(Interval(2))) *
                          pow(Interval(1000000), Interval(1) - Interval(2) * detail::b1());
    rep.constant("tail bound 2^(1+beta1) (n-1)^(1-2 beta1) at n-1 = 1e6", tail);
    rep.claim("tail bound < theta(45)", certainly_less(tail, th45));

    // monotone in beta where delta_1 >= 0
    detail::sturm_claim(rep, "(n^2-1)(n-1) - (2n-1) on [7, oo)",
                        detail::positive_on_ray(RationalPolynomial{-1, -1, 1} * RationalPolynomial{-1, 1} -
                                                    RationalPolynomial{-1, 2},
                                                7));
    detail::sturm_claim(rep, "4(n-1)^2 - (2n-1)(n-2) = 2n^2-3n+2 on [7, oo)",
                        detail::positive_on_ray(RationalPolynomial::constant(4) * RationalPolynomial{-1, 1} *
                                                        RationalPolynomial{-1, 1} -
                                                    RationalPolynomial{-1, 2} * RationalPolynomial{-2, 1},
                                                7));
    rep.note("first base < 1 and second base > 1, so where delta_1 >= 0 it decreases in beta");
    rep.finalize();
    return rep;
}

/// Bound on (n-k) delta_k for odd n >= 15, k = 3, 5, 7, 9.
struct DeltaBound {
    long k;
    const char* bound;
};

inline const std::array<DeltaBound, 4>& delta_bounds()
{
    static const std::array<DeltaBound, 4> b{{{3, "0.0412"}, {5, "0.018"}, {7, "0.010342"}, {9, "0.006902"}}};
    return b;
}

inline Interval delta_times(long n, long k, const Interval& beta)
{
    const CoefficientSequence seq(n, beta);
    return Interval(n - k) * seq.delta(k);
}

inline LemmaReport verify_delta_odd()
{
    using detail::dec;
    LemmaReport rep;
    rep.id = "delta_odd";
    const Interval& beta = detail::b1();
    std::map<long, Interval> worst;
    std::map<long, std::string> failing;
    for (long n = 15; n <= 199; n += 2) {
        const CoefficientSequence seq(n, beta);
        for (const auto& db : delta_bounds()) {
            const Interval v = Interval(n - db.k) * seq.delta(db.k);
            auto it = worst.find(db.k);
            if (it == worst.end()) {
                worst.emplace(db.k, v);
            } else {
                it->second = hull(it->second, v);
            }
            if (!certainly_below(v, dec(db.bound)) && failing[db.k].empty()) {
                failing[db.k] = "n = " + std::to_string(n);
            }
        }
    }
    for (const auto& db : delta_bounds()) {
        const std::string k = std::to_string(db.k);
        rep.constant("range of (n-" + k + ") delta_" + k + " over odd n in [15, 199]", worst.at(db.k));
        rep.claim("(n-" + k + ") delta_" + k + " < " + db.bound + " for odd n in [15, 199]", failing[db.k].empty(),
                  failing[db.k]);
    }
    {
        Interval w(0);
        std::string where;
        for (long n = 45; n <= 97; n += 2) {
            const Interval v = delta_times(n, 3, beta);
            w = n == 45 ? v : hull(w, v);
            if (!certainly_below(v, dec("0.0326")) && where.empty()) {
                where = "n = " + std::to_string(n);
            }
        }
        rep.constant("range of (n-3) delta_3 over odd n in [45, 97]", w);
        rep.claim("(n-3) delta_3 < 0.0326 for odd n in [45, 97]", where.empty(), where);
    }

    // (n-k) delta_k = E_k(n) G_k(n); G_k increases to C_k, E_k decreases on the window
    for (const auto& db : delta_bounds()) {
        const long k = db.k;
        const std::string ks = std::to_string(k);
        const Interval Ck = Interval(2) - pow(Interval(mpq_class(k + 1, k)), beta) -
                            pow(Interval(mpq_class(k - 1, k)), beta);
        rep.constant("C_" + ks, Ck);
        const std::string E = "(" + ks + "*(2*n-" + ks + ")*(n-" + ks + ")^(1/beta1-1)/(n^2-1))^beta1";
        const std::string kp = std::to_string(k + 1);
        const std::string km = std::to_string(k - 1);
        // G_k in t = 1/n, smooth up to t = 0 where it equals C_k
        auto ratio = [&](const std::string& j) {
            return "(" + j + "*(2-" + j + "*t)*(1-" + ks + "*t)/(" + ks + "*(2-" + ks + "*t)*(1-" + j + "*t)))^beta1";
        };
        const std::string G = "2-" + ratio(kp) + "-" + ratio(km);
        detail::monotone_claim(rep, "G_" + ks + " increasing in n >= 15 (decreasing in t = 1/n on [0, 1/15])",
                               detail::monotone(G, Direction::decreasing, 0, mpq_class(1, 15), "t"));
        const Interval g0 = parse_expr(G, "t").eval(Interval(0));
        rep.claim("G_" + ks + "(oo) = C_" + ks, g0.overlaps(Ck));
        const Interval e15 = parse_expr(E, "n").eval(Interval(15));
        const Interval g15 = parse_expr(G, "t").eval(Interval(mpq_class(1, 15)));
        rep.claim("E_" + ks + "(15) G_" + ks + "(15) matches the direct value",
                  (e15 * g15).overlaps(delta_times(15, k, beta)));
        rep.constant("C_" + ks + " E_" + ks + "(15)", Ck * e15);
        rep.claim("C_" + ks + " E_" + ks + "(15) < " + db.bound, certainly_below(Ck * e15, dec(db.bound)));
        const long start = k == 3 ? 15 : 199;
        detail::monotone_claim(rep, "E_" + ks + " decreasing on [" + std::to_string(start) + ", 1e6]",
                               detail::monotone(E, Direction::decreasing, start, 1000000, "n"));
        const Interval es = parse_expr(E, "n").eval(Interval(start));
        if (start != 15) {
            rep.claim("C_" + ks + " E_" + ks + "(" + std::to_string(start) + ") < " + db.bound,
                      certainly_below(Ck * es, dec(db.bound)));
        }
        if (k == 3) {
            const Interval e99 = parse_expr(E, "n").eval(Interval(99));
            rep.constant("C_3 E_3(99)", Ck * e99);
            rep.claim("C_3 E_3(99) < 0.0326", certainly_below(Ck * e99, dec("0.0326")));
        }
    }
    rep.note("E_k for k >= 5 increases near n = 15, so its window starts where the direct table ends");
    rep.note("beyond 1e6, E_k tends to 0; delta_k decreases in beta by the power-sum lemma");
    rep.finalize();
    return rep;
}

/// (n-11)(a_{n-10} - a_{n-9}) at beta1 for n >= 45.
inline Interval tail_difference(long n, const Interval& beta)
{
    return Interval(n - 11) * (coeff(n, n - 10, beta) - coeff(n, n - 9, beta));
}

inline LemmaReport verify_tail14()
{
    using detail::dec;
    LemmaReport rep;
    rep.id = "tail14";
    const Interval& beta = detail::b1();
    bool low_ok = true;
    std::string where;
    for (long n = 45; n <= 199; n += 2) {
        const mpq_class A(20 * n - 100, (n * n - 1) * (n - 10));
        const mpq_class B(18 * n - 81, (n * n - 1) * (n - 9));
        mpq_class Ac = A;
        mpq_class Bc = B;
        Ac.canonicalize();
        Bc.canonicalize();
        if (Ac != coeff_base(n, n - 10) || Bc != coeff_base(n, n - 9)) {
            low_ok = false;
            where = "base mismatch at n = " + std::to_string(n);
            continue;
        }
        const XiReduction r = xi_endpoint_reduce(PowerDiffFn(1, 0, Ac, Bc, Bc / 2), beta);
        if (r.result != EndpointDominance::sup_at_low) {
            low_ok = false;
            where = "n = " + std::to_string(n) + ": " + dominance_name(r.result);
        }
    }
    rep.claim("a_{n-10} - a_{n-9} is largest at beta1 (odd n in [45, 199])", low_ok, where);

    const Interval v45 = tail_difference(45, beta);
    rep.constant("(n-11)(a_{n-10} - a_{n-9}) at n=45", v45);
    rep.claim("value at n=45 < 0.1636", certainly_below(v45, dec("0.1636")), detail::show(v45));
    rep.claim("value at n=45 < 0.16365", certainly_below(v45, dec("0.16365")));
    bool table = true;
    for (long n = 47; n <= 199; n += 2) {
        table = table && certainly_less(tail_difference(n, beta), v45);
    }
    rep.claim("values for odd n in [47, 199] below the n=45 value", table);
    // in t = 1/n the extension is (1-11t) t^(2beta-1) / (1-t^2)^beta * bracket
    detail::monotone_claim(
        rep, "continuous extension decreasing on [45, 1e6] (increasing in t = 1/n)",
        detail::monotone("(1-11*t)*t^(2*beta1-1)/(1-t^2)^beta1*(((20-100*t)/(1-10*t))^beta1-((18-81*t)/(1-9*t))^beta1)",
                         Direction::increasing, mpq_class(1, 1000000), mpq_class(1, 45), "t"));
    // n >= 1e6: (n-11)/(n^2-1)^beta <= 1.000001 n^(1-2beta), bracket <= 20.0001^beta - 18^beta
    const Interval tail = Interval(dec("1.000001")) * pow(Interval(1000000), Interval(1) - Interval(2) * beta) *
                          (pow(Interval(dec("20.0001")), beta) - pow(Interval(18), beta));
    rep.constant("tail bound beyond 1e6", tail);
    rep.claim("tail bound < 0.1636", certainly_below(tail, dec("0.1636")));
    rep.note("a_{n-9} has base (18n-81)/((n^2-1)(n-9))");
    rep.finalize();
    return rep;
}

// ---------------------------------------------------------------------------
// Printed constants

inline Interval threshold_first() { return detail::idec("1.105") / (Interval(2) * detail::idec("0.2232") * cos(detail::idec("0.375"))); }

inline Interval threshold_second()
{
    return detail::idec("1.105") / (Interval(2) * detail::idec("0.2285") * cos(Interval(detail::dec("2.67") / 14)));
}

inline LemmaReport constants_report()
{
    using detail::dec;
    LemmaReport rep;
    rep.id = "constants";
    const Interval& beta1v = named_constant(NamedConstant::beta1);
    const Interval& beta2v = named_constant(NamedConstant::beta2);
    rep.constant("beta1", beta1v);
    rep.constant("beta2", beta2v);
    rep.claim("beta1 within 1e-5 of 0.59592", detail::within(beta1v, dec("0.59592"), dec("1e-5")));
    rep.claim("beta2 within 1e-9 of 0.8714162659", detail::within(beta2v, dec("0.8714162659"), dec("1e-9")));
    rep.claim("(5/16)^beta1 = 1/2", pow(Interval(mpq_class(5, 16)), beta1v).contains(mpq_class(1, 2)));
    rep.claim("(13/288)^beta2 = (1/10)^beta2 / 2",
              pow(Interval(mpq_class(13, 288)), beta2v).overlaps(pow(Interval(mpq_class(1, 10)), beta2v) / Interval(2)));
    const Interval a2max = pow(Interval(mpq_class(1, 2)), beta1v);
    rep.constant("2^-beta1 (bounds a_2)", a2max);
    rep.claim("a_2 <= 2^-beta1 < 0.662", certainly_below(a2max, dec("0.662")));
    const Interval na = Interval(7) * coeff(7, 6, beta1v);
    rep.constant("7 a_6(beta1)", na);
    rep.claim("7 a_6(beta1) <= 1.105", certainly_below(na, dec("1.105")));

    const HAnchors& a = h_anchors();
    rep.constant("H7/x at 0.75", a.h7_far.value);
    rep.claim("H7/x at 0.75 within 1e-9 of 0.2232352723",
              detail::within(a.h7_far.value, dec("0.2232352723"), dec("1e-9")));
    const Interval t1 = threshold_first();
    const Interval t2 = threshold_second();
    rep.constant("t1 = 1.105/(2 * 0.2232 cos 0.375)", t1);
    rep.constant("t2 = 1.105/(2 * 0.2285 cos(2.67/14))", t2);
    rep.claim("t1 within 1e-6 of 2.660223693", detail::within(t1, dec("2.660223693"), dec("1e-6")), detail::show(t1));
    rep.claim("t1 > 2.660223693", certainly_above(t1, dec("2.660223693")));
    rep.claim("t1 / 7 <= 2.67 / 7", certainly_below(t1, dec("2.67")));
    rep.claim("t2 within 1e-6 of 2.4602482", detail::within(t2, dec("2.4602482"), dec("1e-6")), detail::show(t2));
    rep.claim("t2 > 2.4602482", certainly_above(t2, dec("2.4602482")));
    rep.claim("t2 <= 2.5", certainly_below(t2, dec("2.5")));
    const Interval h7mid = a.h7_mid.value;
    rep.constant("H7/x at 2.67/7", h7mid);
    rep.claim("H7/x at 2.67/7 > 0.2285", certainly_above(h7mid, dec("0.2285")));
    rep.constant("H15/x at 2.5/15", a.h15.value);
    rep.claim("H15/x at 2.5/15 > 0.248", certainly_above(a.h15.value, dec("0.248")));
    rep.constant("H45/x at 2.5/45", a.h45.value);
    rep.claim("H45/x at 2.5/45 > 0.250772629", certainly_above(a.h45.value, dec("0.250772629")),
              detail::show(a.h45.value));

    const Interval xs2 = inflection_point_squared(beta1v);
    rep.constant("x_*(beta1)^2", xs2);
    rep.claim("x_*(beta1)^2 within 1e-6 of 0.5281747", detail::within(xs2, dec("0.5281747"), dec("1e-6")));

    const Interval th12 = theta(12);
    const Interval th45 = theta(45);
    rep.constant("theta(12)", th12);
    rep.constant("theta(45)", th45);
    rep.claim("theta(12) < 0.3921", certainly_below(th12, dec("0.3921")));
    rep.claim("theta(45) < 0.3428", certainly_below(th45, dec("0.3428")));
    rep.claim("theta(12)/2 <= 0.196", certainly_below(th12 / Interval(2), dec("0.196")),
              detail::show(th12 / Interval(2)));
    rep.claim("theta(12)/2 < 0.19605", certainly_below(th12 / Interval(2), dec("0.19605")));

    const mpq_class s1 = dec("0.196") + dec("0.0206") + dec("0.009") + dec("0.005171") + dec("0.003451");
    rep.claim("0.196+0.0206+0.009+0.005171+0.003451 = 0.234222", s1 == dec("0.234222"), format_rational(s1));
    bool halves = true;
    const std::array<const char*, 4> half{"0.0206", "0.009", "0.005171", "0.003451"};
    for (std::size_t i = 0; i < 4; ++i) {
        halves = halves && dec(half[i]) * 2 == dec(delta_bounds()[i].bound);
    }
    rep.claim("0.0206, 0.009, 0.005171, 0.003451 are halves of the delta bounds", halves);
    const mpq_class s2 =
        dec("0.1636") / 2 + dec("0.006902") + dec("0.010342") + dec("0.018") + dec("0.0326") + dec("0.3428");
    rep.claim("0.1636/2+0.006902+0.010342+0.018+0.0326+0.3428 = 0.492444", s2 == dec("0.492444"),
              format_rational(s2));
    rep.claim("0.234222 < 0.248", dec("0.234222") < dec("0.248"));
    rep.claim("0.492444 < 2 * 0.250772629", dec("0.492444") < 2 * dec("0.250772629"));
    rep.finalize();
    return rep;
}

// ---------------------------------------------------------------------------
// Dispatch

inline const std::vector<std::string>& lemma_ids()
{
    static const std::vector<std::string> ids{"b5", "fc", "BB", "H7b", "mono11", "delta1", "delta_odd", "tail14"};
    return ids;
}

/// Every id accepted by run_verification, in "all" order.
inline const std::vector<std::string>& verification_ids()
{
    static const std::vector<std::string> ids{"b5",        "fc",     "BB",             "H7b",      "mono11",
                                              "delta1",    "delta_odd", "tail14",     "h-certificates",
                                              "h-bounds",  "constants"};
    return ids;
}

inline bool is_verification_id(const std::string& id)
{
    const auto& ids = verification_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

inline LemmaReport verify_lemma(const std::string& id)
{
    if (id == "b5") {
        return verify_b5();
    }
    if (id == "fc") {
        return verify_fc();
    }
    if (id == "BB") {
        return verify_BB();
    }
    if (id == "H7b") {
        return verify_H7b();
    }
    if (id == "mono11") {
        return verify_mono11();
    }
    if (id == "delta1") {
        return verify_delta1();
    }
    if (id == "delta_odd") {
        return verify_delta_odd();
    }
    if (id == "tail14") {
        return verify_tail14();
    }
    throw std::invalid_argument("unknown lemma id: " + id);
}

/// One id from verification_ids(), or "all".
inline std::vector<LemmaReport> run_verification(const std::string& id, int max_points = 64)
{
    if (id == "all") {
        std::vector<LemmaReport> out;
        for (const auto& i : verification_ids()) {
            auto r = run_verification(i, max_points);
            out.insert(out.end(), r.begin(), r.end());
        }
        return out;
    }
    if (id == "h-certificates") {
        return {verify_h_certificates(max_points)};
    }
    if (id == "h-bounds") {
        return {h_lower_bounds()};
    }
    if (id == "constants") {
        return {constants_report()};
    }
    return {verify_lemma(id)};
}

} // namespace sinecert

#endif // SINECERT_LEMMAS_HPP
