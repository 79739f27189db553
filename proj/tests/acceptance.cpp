// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <sinecert/sinecert.hpp>

using namespace sinecert;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

mpq_class to_q(mpfr_srcptr v)
{
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v);
    return q;
}

mpq_class dec(const char* s) { return *parse_rational(s); }

bool within(const Interval& v, const char* printed, const char* tol)
{
    const mpq_class p = dec(printed);
    const mpq_class t = dec(tol);
    return to_q(v.lo()) >= p - t && to_q(v.hi()) <= p + t;
}

// ---------------------------------------------------------------------------

Outcome constants()
{
    Outcome o;
    const LemmaReport c = constants_report();
    for (const auto& cl : c.claims) {
        o.require(cl.verdict == Verdict::pass, cl.name + (cl.detail.empty() ? "" : " [" + cl.detail + "]"));
    }
    const LemmaReport h = verify_H7b();
    for (const char* name : {"root 1", "root 2"}) {
        const ReportClaim* cl = nullptr;
        for (const auto& x : h.claims) {
            if (x.name.rfind(name, 0) == 0) {
                cl = &x;
            }
        }
        o.require(cl != nullptr && cl->verdict == Verdict::pass, std::string("H7b ") + name + " within 1e-12");
    }
    // second route for the headline constants, straight from their formulas
    o.require(within(log(Interval(2)) / log(Interval(mpq_class(16, 5))), "0.59592", "1e-5"), "beta1 formula");
    o.require(within(log(Interval(2)) / (log(Interval(288)) - log(Interval(130))), "0.8714162659", "1e-9"),
              "beta2 formula");
    o.require(within(inflection_point_squared(beta1()), "0.5281747", "1e-6"), "inflection formula");
    o.require(within(threshold_first(), "2.660223693", "1e-6"), "t1 formula");
    o.require(within(threshold_second(), "2.4602482", "1e-6"), "t2 formula");
    o.require(certainly_below(theta(12), dec("0.3921")) && certainly_below(theta(45), dec("0.3428")), "theta bounds");
    return o;
}

Outcome certificates()
{
    Outcome o;
    const LemmaReport r = verify_h_certificates(64);
    o.require(r.status == Status::certified, std::string("h-certificates status ") + status_name(r.status));
    o.require(r.certificates.size() == 10, "expected 10 certificates, got " + std::to_string(r.certificates.size()));
    for (const auto& c : r.certificates) {
        o.require(c.chain.size() <= 64, "chain longer than 64 points");
        // independent re-check through the serialized form
        const CheckResult cr = check_parsed_certificate(parse_certificate(write_certificate(c)));
        o.require(cr.verdict == Verdict::pass, "re-check failed: " + cr.message);
    }
    const CheckResult printed = check_certificate(printed_h1_certificate());
    o.require(printed.verdict == Verdict::pass, "printed h1 chain: " + printed.message);
    return o;
}

Outcome sturm_suite()
{
    Outcome o;
    for (const char* id : {"b5", "fc", "BB", "H7b"}) {
        const LemmaReport r = verify_lemma(id);
        o.require(!r.sturm.empty(), std::string(id) + " has no Sturm records");
        for (const auto& s : r.sturm) {
            o.require(s.result.roots == 0 && s.result.positive, std::string(id) + ": " + s.name);
            // recount from the stored polynomial
            const auto& p = s.result.polynomial;
            const int again = sturm_count(p, s.result.a, s.result.b);
            o.require(again == 0 && isolate_roots(p, s.result.a, s.result.b, mpq_class(1, 1000)).empty(),
                      std::string(id) + ": recount of " + s.name);
        }
    }
    return o;
}

Outcome pipeline_replay()
{
    Outcome o;
    std::set<std::string> branches;
    bool far_b5 = false;
    for (const char* beta : {"beta1", "1"}) {
        const Exponent e = Exponent::parse(beta);
        for (long n = 7; n <= 200; ++n) {
            const PipelineTrace t = pipeline(n, e);
            o.require(t.proved(), "n=" + std::to_string(n) + " beta=" + beta + ": " + t.first_failure());
            branches.insert(t.branch);
            far_b5 = far_b5 || t.far.method == "b5";
        }
    }
    o.require(far_b5, "far region never used the b5 bound");
    for (const char* b : {"even", "two-summand", "at-most-ten", "more-than-ten"}) {
        o.require(branches.count(b) == 1, std::string("branch not exercised: ") + b);
    }
    return o;
}

Outcome oracle_consistency()
{
    Outcome o;
    for (long n = 2; n <= 200; ++n) {
        const BruteMinResult r = brute_min(n, beta1(), 8192);
        o.require(r.negative_cells == 0, "certified negative cell at n=" + std::to_string(n));
    }
    const auto w = sharpness(3, Exponent::parse("0.58").enclose(), 8192);
    o.require(w.has_value(), "no sharpness witness for n=3, beta=0.58");
    return o;
}

Outcome delta_table()
{
    Outcome o;
    const LemmaReport r = verify_delta_odd();
    o.require(r.status == Status::certified, std::string("delta_odd status ") + status_name(r.status));
    for (const auto& row : delta_bounds()) {
        for (long n = 15; n <= 199; n += 2) {
            o.require(certainly_below(delta_times(n, row.k, beta1()), dec(row.bound)),
                      "(n-" + std::to_string(row.k) + ") delta at n=" + std::to_string(n));
        }
    }
    for (long n = 45; n <= 97; n += 2) {
        o.require(certainly_below(delta_times(n, 3, beta1()), dec("0.0326")), "(n-3) delta_3 at n=" + std::to_string(n));
    }
    return o;
}

// --- property suites --------------------------------------------------------

class Big {
public:
    static constexpr mpfr_prec_t kPrec = 600;
    Big() { mpfr_init2(v_, kPrec); }
    explicit Big(mpfr_srcptr x) : Big() { mpfr_set(v_, x, MPFR_RNDN); }
    Big(const Big& o) : Big() { mpfr_set(v_, o.v_, MPFR_RNDN); }
    Big& operator=(const Big& o)
    {
        mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~Big() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

enum class Op { exp, log, sqrt, sin, cos, square, add, sub, mul, div, pow };

Big oracle(Op op, const Big& a, const Big& b)
{
    Big r;
    switch (op) {
    case Op::exp: mpfr_exp(r.get(), a.get(), MPFR_RNDN); break;
    case Op::log: mpfr_log(r.get(), a.get(), MPFR_RNDN); break;
    case Op::sqrt: mpfr_sqrt(r.get(), a.get(), MPFR_RNDN); break;
    case Op::sin: mpfr_sin(r.get(), a.get(), MPFR_RNDN); break;
    case Op::cos: mpfr_cos(r.get(), a.get(), MPFR_RNDN); break;
    case Op::square: mpfr_sqr(r.get(), a.get(), MPFR_RNDN); break;
    case Op::add: mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN); break;
    case Op::sub: mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN); break;
    case Op::mul: mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN); break;
    case Op::div: mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN); break;
    case Op::pow: mpfr_pow(r.get(), a.get(), b.get(), MPFR_RNDN); break;
    }
    return r;
}

Interval apply(Op op, const Interval& a, const Interval& b)
{
    switch (op) {
    case Op::exp: return exp(a);
    case Op::log: return log(a);
    case Op::sqrt: return sqrt(a);
    case Op::sin: return sin(a);
    case Op::cos: return cos(a);
    case Op::square: return square(a);
    case Op::add: return a + b;
    case Op::sub: return a - b;
    case Op::mul: return a * b;
    case Op::div: return a / b;
    case Op::pow: return pow(a, b);
    }
    return a;
}

// v in [lo, hi] up to the oracle's rounding error
bool encloses(const Interval& e, const Big& v)
{
    Big slack;
    mpfr_abs(slack.get(), v.get(), MPFR_RNDU);
    mpfr_mul_2si(slack.get(), slack.get(), -590, MPFR_RNDU);
    Big lo(v.get());
    Big hi(v.get());
    mpfr_sub(lo.get(), lo.get(), slack.get(), MPFR_RNDD);
    mpfr_add(hi.get(), hi.get(), slack.get(), MPFR_RNDU);
    return mpfr_lessequal_p(e.lo(), hi.get()) && mpfr_greaterequal_p(e.hi(), lo.get());
}

bool subset(const Interval& a, const Interval& b)
{
    return mpfr_greaterequal_p(a.lo(), b.lo()) && mpfr_lessequal_p(a.hi(), b.hi());
}

struct Fuzz {
    std::mt19937_64 rng{424242};

    double u(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

    Interval make(double lo, double hi)
    {
        double a = u(lo, hi);
        double b = u(lo, hi);
        if (a > b) {
            std::swap(a, b);
        }
        const double kind = u(0, 1);
        if (kind < 0.2) {
            return Interval::from_endpoints(mpq_class(a), mpq_class(a));
        }
        if (kind < 0.4) {
            return Interval::from_endpoints(mpq_class(a), mpq_class(a) + mpq_class(1, 1) / (mpz_class(1) << 100));
        }
        return Interval::from_endpoints(mpq_class(a), mpq_class(b));
    }

    // lo, hi and one interior point, exact
    std::vector<Big> points(const Interval& x)
    {
        Big lo(x.lo());
        Big hi(x.hi());
        Big mid;
        mpfr_sub(mid.get(), hi.get(), lo.get(), MPFR_RNDN);
        mpfr_mul_d(mid.get(), mid.get(), u(0, 1), MPFR_RNDN);
        mpfr_add(mid.get(), mid.get(), lo.get(), MPFR_RNDN);
        if (mpfr_less_p(mid.get(), lo.get()) || mpfr_greater_p(mid.get(), hi.get())) {
            mid = lo;
        }
        return {lo, hi, mid};
    }

    Interval shrink(const Interval& x)
    {
        const mpq_class lo = to_q(x.lo());
        const mpq_class hi = to_q(x.hi());
        double s = u(0, 1);
        double t = u(0, 1);
        if (s > t) {
            std::swap(s, t);
        }
        const Interval r = Interval::from_endpoints(lo + (hi - lo) * mpq_class(s), lo + (hi - lo) * mpq_class(t));
        return subset(r, x) ? r : x;
    }
};

void interval_fuzz(Outcome& o)
{
    Fuzz f;
    long violations = 0;
    long cases = 0;
    const Op unary[] = {Op::exp, Op::log, Op::sqrt, Op::sin, Op::cos, Op::square};
    const Op binary[] = {Op::add, Op::sub, Op::mul, Op::div, Op::pow};
    for (; cases < 100000; ++cases) {
        bool ok = true;
        if (cases % 2 == 0) {
            const Op op = unary[(cases / 2) % 6];
            const Interval x = op == Op::log || op == Op::sqrt ? f.make(1e-3, 50) : f.make(-30, 30);
            const Interval y = apply(op, x, x);
            for (const Big& p : f.points(x)) {
                ok = ok && encloses(y, oracle(op, p, p));
            }
            const Interval xs = f.shrink(x);
            ok = ok && subset(apply(op, xs, xs), y);
        } else {
            const Op op = binary[(cases / 2) % 5];
            const Interval a = op == Op::pow ? f.make(1e-2, 10) : f.make(-20, 20);
            Interval b = op == Op::pow ? f.make(-3, 3) : op == Op::div ? f.make(0.5, 20) : f.make(-20, 20);
            if (op == Op::div && f.u(0, 1) < 0.5) {
                b = -b;
            }
            const Interval y = apply(op, a, b);
            const auto pa = f.points(a);
            const auto pb = f.points(b);
            for (std::size_t i = 0; i < pa.size(); ++i) {
                ok = ok && encloses(y, oracle(op, pa[i], pb[(i + 1) % pb.size()]));
            }
            ok = ok && subset(apply(op, f.shrink(a), f.shrink(b)), y);
        }
        violations += ok ? 0 : 1;
    }
    o.require(cases == 100000 && violations == 0, "interval fuzz: " + std::to_string(violations) + " violations");
}

void tau_agreement(Outcome& o)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ux(1e-3, 3.14);
    for (long k = 1; k <= 64; ++k) {
        for (int i = 0; i < 16; ++i) {
            const Interval x{mpq_class(ux(rng))};
            for (bool alt : {false, true}) {
                o.require(tau(k, x, alt, TauForm::closed).value.overlaps(tau(k, x, alt, TauForm::direct).value),
                          "tau closed vs direct at k=" + std::to_string(k));
            }
        }
    }
}

void identity_and_splits(Outcome& o)
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> ux(1e-3, 3.14159);
    for (long n = 7; n <= 200; ++n) {
        const Decomposition d = build(n, Exponent::named_beta1());
        for (int i = 0; i < 32; ++i) {
            const Interval x{mpq_class(ux(rng))};
            const Interval parts = d.eval_H(x) + d.eval_K(x) + d.eval_T(x);
            o.require(parts.overlaps(eval_S(d.sequence(), x).value), "S = H + K + T at n=" + std::to_string(n));
        }
        // d_k positive and nondecreasing with an even count
        const auto& w = d.d_weights();
        o.require(w.size() % 2 == 0, "odd tail count at n=" + std::to_string(n));
        for (std::size_t j = 0; j < w.size(); ++j) {
            o.require(w[j].certainly_positive(), "d_k not positive at n=" + std::to_string(n));
            if (j > 0) {
                o.require(!certainly_less(w[j], w[j - 1]), "d_k decreasing at n=" + std::to_string(n));
            }
        }
    }
}

void summand_monotonicity(Outcome& o)
{
    // larger beta never needs more tail summands
    const std::vector<Exponent> betas{Exponent::named_beta1(), Exponent::rational(mpq_class(7, 10)),
                                      Exponent::rational(mpq_class(4, 5)), Exponent::rational(mpq_class(9, 10)),
                                      Exponent::rational(mpq_class(1))};
    for (long n = 7; n <= 200; ++n) {
        long prev = -1;
        for (const auto& b : betas) {
            const long c = count_T_summands(n, b);
            o.require(prev < 0 || c <= prev, "summand count rises with beta at n=" + std::to_string(n));
            prev = c;
        }
    }
}

Outcome properties()
{
    Outcome o;
    interval_fuzz(o);
    tau_agreement(o);
    identity_and_splits(o);
    summand_monotonicity(o);
    return o;
}

struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {"constant reproduction", 60, constants},
        {"certificate suite", 10, certificates},
        {"sturm suite", 0, sturm_suite},
        {"pipeline replay n=7..200 at beta1 and 1", 300, pipeline_replay},
        {"oracle consistency scan n=2..200 and sharpness", 120, oracle_consistency},
        {"delta-bound table", 0, delta_table},
        {"property suites", 0, properties},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds) {
            o.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
        }
        std::printf("%s criterion %zu: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, c.name, secs);
        std::size_t shown = 0;
        for (const auto& note : o.notes) {
            if (++shown > 8) {
                std::printf("    ... %zu more\n", o.notes.size() - 8);
                break;
            }
            std::printf("    %s\n", note.c_str());
        }
        failed += o.pass ? 0 : 1;
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
