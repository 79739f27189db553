#ifndef SINECERT_PIPELINE_HPP
#define SINECERT_PIPELINE_HPP

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "certify.hpp"
#include "decompose.hpp"
#include "interval.hpp"
#include "lemmas.hpp"
#include "report.hpp"
#include "sinepoly.hpp"

namespace sinecert {

/// One interval of [0, pi] for S^- with the bounds used and the checks made.
struct RegionResult {
    std::string name;
    std::string method;
    std::vector<ReportConstant> bounds;
    std::vector<ReportClaim> checks;
    Verdict verdict = Verdict::inconclusive;

    void bound(std::string label, Interval v) { bounds.push_back({std::move(label), std::move(v)}); }
    void check(std::string label, Verdict v, std::string detail = {})
    {
        checks.push_back({std::move(label), v, true, std::move(detail)});
    }
    void check(std::string label, bool ok, std::string detail = {})
    {
        check(std::move(label), ok ? Verdict::pass : Verdict::fail, std::move(detail));
    }

    void finalize()
    {
        verdict = Verdict::pass;
        for (const auto& c : checks) {
            if (c.verdict == Verdict::fail) {
                verdict = Verdict::fail;
                return;
            }
            if (c.verdict == Verdict::inconclusive) {
                verdict = Verdict::inconclusive;
            }
        }
        if (checks.empty()) {
            verdict = Verdict::inconclusive;
        }
    }

    const ReportClaim* first_failure() const
    {
        for (const auto& c : checks) {
            if (c.verdict != Verdict::pass) {
                return &c;
            }
        }
        return nullptr;
    }
};

inline const char* region_verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "proved";
    case Verdict::fail:
        return "failed";
    case Verdict::inconclusive:
        return "inconclusive";
    }
    return "?";
}

struct PipelineTrace {
    long n = 0;
    std::string beta;
    Interval beta_enclosure;
    long m = 0;
    long kappa = 0;
    bool fully_convex = false;
    long t_summands = 0;
    /// fejer, even, two-summand, at-most-ten or more-than-ten.
    std::string branch;
    long anchor = 0;
    std::string error;
    RegionResult far;
    RegionResult middle;
    RegionResult near;

    bool proved() const
    {
        return error.empty() && far.verdict == Verdict::pass && middle.verdict == Verdict::pass &&
               near.verdict == Verdict::pass;
    }

    /// "region: check" for the first check that did not pass, or empty.
    std::string first_failure() const
    {
        if (!error.empty()) {
            return error;
        }
        for (const RegionResult* r : {&far, &middle, &near}) {
            if (const ReportClaim* c = r->first_failure()) {
                return r->name + ": " + c->name + (c->detail.empty() ? "" : " (" + c->detail + ")");
            }
        }
        return {};
    }
};

namespace detail {

/// b5 is instance-independent; run once per thread and precision.
inline Verdict b5_verdict()
{
    thread_local std::map<long, Verdict> cache;
    auto it = cache.find(working_precision());
    if (it == cache.end()) {
        const LemmaReport r = verify_b5();
        it = cache.emplace(working_precision(), r.status == Status::certified ? Verdict::pass : Verdict::fail).first;
    }
    return it->second;
}

/// H(n, beta) - H(n0, beta1) >= 0 via Fejer: second differences of the
/// difference with 0 appended, and its last coefficient.
inline FejerResult h_difference_fejer(const std::vector<Interval>& h, const std::array<Interval, 3>& anchor)
{
    const Interval D1 = h[0] - anchor[0];
    const Interval D2 = h[1] - anchor[1];
    const Interval D3 = h[2] - anchor[2];
    return fejer_from_differences({D1 - Interval(2) * D2 + D3, D2 - Interval(2) * D3}, D3);
}

inline void check_h_dominates(RegionResult& r, const Decomposition& dec, const HAnchor& a, const Exponent& beta)
{
    const std::string label = "H(n, beta) >= H(" + std::to_string(a.n0) + ", beta1)";
    if (dec.n() == a.n0 && beta.is_beta1()) {
        r.check(label, Verdict::pass, "identical");
        return;
    }
    const FejerResult f = h_difference_fejer(dec.h_coeffs(), a.h);
    r.check(label, f.verdict, f.verdict == Verdict::pass ? "" : "second difference " + std::to_string(f.index));
}

inline Verdict fejer_verdict(const std::vector<Interval>& diffs, const Interval& last)
{
    return fejer_from_differences(diffs, last).verdict;
}

/// d_m..d_{n-1} positive and nondecreasing.
inline Verdict tail_increasing(const Decomposition& dec, std::string& where)
{
    const auto& d = dec.d_weights();
    Verdict v = Verdict::pass;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (!d[i].certainly_positive()) {
            where = "d_" + std::to_string(dec.m() + static_cast<long>(i));
            return Verdict::fail;
        }
        if (i + 1 < d.size()) {
            const Interval step = d[i + 1] - d[i];
            if (step.certainly_negative()) {
                where = "d_" + std::to_string(dec.m() + static_cast<long>(i) + 1);
                return Verdict::fail;
            }
            if (!step.certainly_nonnegative()) {
                where = "d_" + std::to_string(dec.m() + static_cast<long>(i) + 1);
                v = Verdict::inconclusive;
            }
        }
    }
    return v;
}

inline void fejer_region(RegionResult& r, const Decomposition& dec)
{
    r.method = "fejer";
    r.check("coefficients with 0 appended are convex",
            fejer_verdict(dec.k_appended_second_differences(), dec.k_coeffs().back()) == Verdict::pass &&
                    fejer_verdict(dec.h_appended_second_differences(), dec.h_coeffs().back()) == Verdict::pass
                ? Verdict::pass
                : Verdict::fail,
            "S = H + K with both parts convex");
}

} // namespace detail

/// Replays the nonnegativity argument for S^-_{n,beta} on [0, pi] in three
/// regions, re-deriving each inequality for this (n, beta) with enclosures.
inline PipelineTrace pipeline(long n, const Exponent& beta)
{
    using detail::dec;
    if (n < 7) {
        throw std::invalid_argument("pipeline needs n >= 7");
    }
    PipelineTrace t;
    t.n = n;
    t.beta = beta.to_string();
    t.beta_enclosure = beta.enclose();
    t.far.name = "[0.75, pi]";
    t.middle.name = "[2.5/n, 0.75]";
    t.near.name = "[0, 2.5/n]";
    auto fail_all = [&](const std::string& why, Verdict v) {
        t.error = why;
        for (RegionResult* r : {&t.far, &t.middle, &t.near}) {
            r->check("setup", v, why);
            r->finalize();
        }
    };

    const Interval& b1 = named_constant(NamedConstant::beta1);
    if (!beta.is_beta1() && !certainly_less_equal(b1, t.beta_enclosure)) {
        fail_all("beta >= beta1 not certified", Verdict::fail);
        return t;
    }

    std::optional<Decomposition> decomp;
    try {
        decomp.emplace(build(n, beta));
    } catch (const UndecidableSign& e) {
        fail_all(e.what(), Verdict::inconclusive);
        return t;
    } catch (const StructureError& e) {
        fail_all(e.what(), Verdict::fail);
        return t;
    }
    const Decomposition& D = *decomp;
    const CoefficientSequence& seq = D.sequence();
    t.m = D.m();
    t.kappa = D.split().kappa;
    t.fully_convex = D.fully_convex();
    t.t_summands = D.t_summands();

    if (t.fully_convex) {
        t.branch = "fejer";
        for (RegionResult* r : {&t.far, &t.middle, &t.near}) {
            detail::fejer_region(*r, D);
            r->finalize();
        }
        return t;
    }

    const HAnchors& anchors = h_anchors();
    const Verdict k_fejer = detail::fejer_verdict(D.k_appended_second_differences(), D.k_coeffs().back());
    const Verdict h_fejer = detail::fejer_verdict(D.h_appended_second_differences(), D.h_coeffs().back());
    std::string tail_where;
    const Verdict tail = detail::tail_increasing(D, tail_where);

    // [0.75, pi]: comparison bound with a_2 <= 0.662 and the b5 numerator
    {
        RegionResult& r = t.far;
        r.method = "b5";
        bool decreasing = true;
        for (long k = 1; k < n; ++k) {
            decreasing = decreasing && seq.d(k).certainly_positive();
        }
        r.check("a_k strictly decreasing", decreasing);
        r.bound("a_2", seq.a(2));
        r.check("a_2 <= 0.662", certainly_below(seq.a(2), dec("0.662")));
        r.check("sin(x/2) + 0.338 sin(3x/2) - 0.662 >= 0 on [0.75, pi]", detail::b5_verdict());
        r.bound("comparison bound at x = 0.75", alt_lower_bound(Interval(1), detail::idec("0.662"), detail::idec("0.75")));
        r.finalize();
    }

    // [2.5/n, 0.75]: H^-/x from the n0 = 7 anchor against T^- >= -d_{n-1}/(2 cos(x/2))
    {
        RegionResult& r = t.middle;
        r.method = "threshold";
        detail::check_h_dominates(r, D, anchors.h7_far, beta);
        r.check("H(7, beta1) concave on [0, 0.75]", anchors.h7_far.concave);
        r.check("K >= 0 (convex with 0 appended)", k_fejer);
        r.check("H >= 0 (convex with 0 appended)", h_fejer);
        r.check("d_k > 0 nondecreasing on the tail", tail, tail_where);
        const Interval nd = Interval(n) * seq.d(n - 1);
        r.bound("n d_{n-1}", nd);
        r.check("n d_{n-1} <= 1.105", certainly_below(nd, dec("1.105")));
        r.bound("H7/x at 0.75", anchors.h7_far.value);
        r.bound("H7/x at 2.67/7", anchors.h7_mid.value);
        r.check("H7/x at 0.75 >= 0.2232", certainly_above(anchors.h7_far.value, dec("0.2232")));
        r.check("H7/x at 2.67/7 >= 0.2285", certainly_above(anchors.h7_mid.value, dec("0.2285")));
        const Interval t1 = threshold_first();
        const Interval t2 = threshold_second();
        r.bound("t1", t1);
        r.bound("t2", t2);
        r.bound("t1/n", t1 / Interval(n));
        r.bound("t2/n", t2 / Interval(n));
        r.check("t1/n <= 2.67/7", certainly_less_equal(t1 * Interval(7), Interval(dec("2.67") * n)));
        r.check("t2 <= 2.5", certainly_below(t2, dec("2.5")));
        r.finalize();
    }

    // [0, 2.5/n]
    {
        RegionResult& r = t.near;
        r.check("K >= 0 (convex with 0 appended)", k_fejer);
        r.check("d_k > 0 nondecreasing on the tail", tail, tail_where);
        if (n % 2 == 0) {
            t.branch = "even";
            r.method = "even";
            // tau^-_{n-1} = sin(nx/2) cos((n-1)x/2) / cos(x/2) on [0, pi/n]
            const Interval zero(0);
            const Interval pi_n = pi_interval() / Interval(n);
            const Interval X = Interval::from_endpoints(zero.lo(), pi_n.hi());
            const Interval half = X / Interval(2);
            const Interval prod =
                sin(Interval(n) * half) * cos(Interval(n - 1) * half) / cos(half);
            r.bound("tau^-_{n-1} on [0, pi/n]", prod);
            r.check("tau^-_{n-1} >= 0 on [0, pi/n]", prod.certainly_nonnegative());
            const Interval x0(mpq_class(5, 2 * n));
            const Interval h0 = x0 / Interval(2);
            const Interval at = sin(Interval(n) * h0) * cos(Interval(n - 1) * h0) / cos(h0);
            r.check("product form matches tau^-_{n-1} at 2.5/n",
                    at.overlaps(tau(n - 1, x0, true, TauForm::direct).value));
            r.check("2.5 <= pi", certainly_above(pi_interval(), dec("2.5")));
            r.check("H >= 0 (convex with 0 appended)", h_fejer);
        } else {
            const long count = t.t_summands;
            t.branch = count == 2 ? "two-summand" : count <= 10 ? "at-most-ten" : "more-than-ten";
            r.method = t.branch;
            const HAnchor& a = n >= 45 ? anchors.h45 : n >= 15 ? anchors.h15 : anchors.h7_mid;
            t.anchor = a.n0;
            detail::check_h_dominates(r, D, a, beta);
            r.check("H(" + std::to_string(a.n0) + ", beta1) concave", a.concave);
            r.bound("H^-/x lower bound", a.value);
            r.check("m odd, n - 1 even", t.m % 2 == 1 && (n - 1) % 2 == 0);
            // 2|T^-|/x <= sum over odd k <= n-m-1 of (n-k) delta_k
            Interval sum(0);
            for (long k = 1; k <= n - t.m - 1; k += 2) {
                sum += Interval(n - k) * seq.delta(k);
            }
            const Interval half_sum = sum / Interval(2);
            r.bound("|T^-|/x bound", half_sum);
            r.check("|T^-|/x bound < H^-/x bound", certainly_less(half_sum, a.value));
            if (count == 2) {
                r.bound("theta(12)/2", theta(12) / Interval(2));
                r.check("|T^-|/x bound <= theta(12)/2", certainly_less_equal(half_sum, theta(12) / Interval(2)));
            } else if (count <= 10 && n >= 15) {
                r.check("|T^-|/x bound <= 0.234222", certainly_below(half_sum, dec("0.234222")));
            } else if (count > 10) {
                // telescoped form: (n-11)/2 (a_{n-10} - a_{n-9}) + sum_{k odd <= 9} (n-k) delta_k
                Interval head(0);
                for (long k = 1; k <= 9; k += 2) {
                    head += Interval(n - k) * seq.delta(k);
                }
                const Interval tele =
                    (Interval(n - 11) / Interval(2) * (seq.a(n - 10) - seq.a(n - 9)) + head) / Interval(2);
                r.bound("telescoped |T^-|/x bound", tele);
                bool pairs = true;
                for (long k = 11; k <= n - t.m - 1; k += 2) {
                    pairs = pairs && certainly_less_equal(seq.delta(k), seq.delta(k - 1));
                }
                r.check("delta_k <= delta_{k-1} for odd k >= 11", pairs);
                r.check("telescoped bound < H^-/x bound", certainly_less(tele, a.value));
                r.check("telescoped bound <= 0.492444 / 2", certainly_below(tele, dec("0.246222")));
            }
        }
        r.finalize();
    }
    return t;
}

inline std::string write_trace(const PipelineTrace& t)
{
    std::ostringstream out;
    out << "sinecert-trace v1\n";
    out << "n " << t.n << '\n';
    out << "beta " << t.beta << ' ' << mpfr_to_roundtrip(t.beta_enclosure.lo()) << ' '
        << mpfr_to_roundtrip(t.beta_enclosure.hi()) << '\n';
    out << "split m " << t.m << " kappa " << t.kappa << " fully-convex " << (t.fully_convex ? "yes" : "no") << '\n';
    out << "summands " << t.t_summands << '\n';
    out << "branch " << (t.branch.empty() ? "none" : t.branch) << '\n';
    if (t.anchor != 0) {
        out << "anchor " << t.anchor << '\n';
    }
    if (!t.error.empty()) {
        out << "error " << one_line(t.error) << '\n';
    }
    for (const RegionResult* r : {&t.far, &t.middle, &t.near}) {
        out << "region " << r->name << " method " << (r->method.empty() ? "none" : r->method) << " verdict "
            << region_verdict_name(r->verdict) << '\n';
        for (const auto& b : r->bounds) {
            out << "  bound " << b.name << " : " << mpfr_to_roundtrip(b.value.lo()) << ' '
                << mpfr_to_roundtrip(b.value.hi()) << '\n';
        }
        for (const auto& c : r->checks) {
            out << "  check " << verdict_name(c.verdict) << ' ' << c.name;
            if (!c.detail.empty()) {
                out << " : " << one_line(c.detail);
            }
            out << '\n';
        }
    }
    out << "verdict " << (t.proved() ? "proved" : "not-proved") << '\n';
    out << "end-trace\n";
    return out.str();
}

} // namespace sinecert

#endif // SINECERT_PIPELINE_HPP
