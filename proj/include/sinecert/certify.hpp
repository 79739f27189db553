#ifndef SINECERT_CERTIFY_HPP
#define SINECERT_CERTIFY_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "expr.hpp"
#include "interval.hpp"
#include "polynomial.hpp"

namespace sinecert {

enum class Verdict { pass, fail, inconclusive };

inline const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::inconclusive:
        return "inconclusive";
    }
    return "?";
}

enum class Direction { increasing, decreasing };

inline const char* direction_name(Direction d) { return d == Direction::increasing ? "increasing" : "decreasing"; }

/// A function of one variable together with its claimed monotonicity on a
/// closed domain with rational endpoints.
struct MonotoneFn {
    Expr expr;
    Direction direction = Direction::increasing;
    mpq_class lo;
    mpq_class hi;
    std::string var = "x";

    Interval domain() const { return Interval::from_endpoints(lo, hi); }
    Interval at(const mpq_class& t) const { return expr.eval(Interval(t)); }
};

/// Certification could not finish; `location` is where the chain got stuck.
class CertificationFailure : public std::runtime_error {
public:
    CertificationFailure(const std::string& what, mpq_class location)
        : std::runtime_error(what), location_(std::move(location))
    {
    }
    const mpq_class& location() const { return location_; }

private:
    mpq_class location_;
};

struct DifLink {
    mpq_class left;
    mpq_class right;
    /// g1 at left (increasing) or right (decreasing).
    Interval g1;
    /// g2 at right (increasing) or left (decreasing).
    Interval g2;
    Interval diff;
};

/// Point chain proving g1 >= g2 on [lo, hi] for monotone g1, g2 sharing
/// direction: each link compares g1 at one end against g2 at the other.
struct DifCertificate {
    MonotoneFn g1;
    MonotoneFn g2;
    std::vector<mpq_class> chain;
    std::vector<DifLink> links;
    /// True when verify_monotone passed for both functions, false when monotonicity is only declared.
    bool monotonicity_certified = false;
    long precision = 0;
};

/// Evaluates the link between chain points left < right.
inline DifLink evaluate_link(const MonotoneFn& g1, const MonotoneFn& g2, const mpq_class& left, const mpq_class& right)
{
    const bool inc = g1.direction == Direction::increasing;
    Interval v1 = g1.at(inc ? left : right);
    Interval v2 = g2.at(inc ? right : left);
    Interval diff = v1 - v2;
    return {left, right, std::move(v1), std::move(v2), std::move(diff)};
}

struct CheckResult {
    Verdict verdict = Verdict::fail;
    /// Index of the first failing link, or -1 when the failure is structural.
    long failing_link = -1;
    std::string message;
    std::vector<DifLink> links;
};

/// Re-evaluates every link from scratch; pass iff the chain is strictly
/// increasing, spans the domain, and every difference has a positive lower bound.
inline CheckResult check_certificate(const DifCertificate& cert)
{
    CheckResult r;
    if (cert.g1.direction != cert.g2.direction) {
        r.message = "g1 and g2 have different directions";
        return r;
    }
    if (cert.g1.lo != cert.g2.lo || cert.g1.hi != cert.g2.hi) {
        r.message = "g1 and g2 have different domains";
        return r;
    }
    const auto& c = cert.chain;
    if (c.size() < 2) {
        r.message = "chain has fewer than two points";
        return r;
    }
    if (c.front() != cert.g1.lo || c.back() != cert.g1.hi) {
        r.message = "chain does not span the domain";
        return r;
    }
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (!(c[i] < c[i + 1])) {
            r.message = "chain is not strictly increasing at point " + std::to_string(i);
            return r;
        }
    }
    try {
        for (std::size_t i = 0; i + 1 < c.size(); ++i) {
            r.links.push_back(evaluate_link(cert.g1, cert.g2, c[i], c[i + 1]));
            if (!r.links.back().diff.certainly_positive() && r.failing_link < 0) {
                r.failing_link = static_cast<long>(i);
            }
        }
    } catch (const DomainError& e) {
        r.message = std::string("evaluation outside domain: ") + e.what();
        return r;
    }
    if (r.failing_link >= 0) {
        r.message = "difference not positive on link " + std::to_string(r.failing_link);
        return r;
    }
    r.verdict = Verdict::pass;
    return r;
}

struct DifOptions {
    /// Chain points are chosen with a relative safety margin of 2^-margin_bits.
    int margin_bits = 20;
    int bisection_depth = 60;
    /// Steps below (hi - lo) * 2^-min_step_bits count as no progress.
    int min_step_bits = 50;
};

namespace detail {

// Shortest decimal in [lo, hi] (lo <= hi), found by increasing the number
// of fractional digits until some multiple of 10^-d lands in the range.
inline mpq_class shortest_decimal_in(const mpq_class& lo, const mpq_class& hi)
{
    mpz_class scale = 1;
    for (int d = 0; d < 80; ++d) {
        mpq_class scaled = hi * scale;
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
        mpq_class candidate(f, scale);
        candidate.canonicalize();
        if (candidate >= lo) {
            return candidate;
        }
        scale *= 10;
    }
    return hi;
}

} // namespace detail

/// Greedy chain construction. From each point the next one is the largest t
/// whose link still clears the relative margin, found by bisection and then
/// rounded down to the shortest decimal that keeps at least half the step.
inline DifCertificate dif_certify(const MonotoneFn& g1, const MonotoneFn& g2, int max_points,
                                  const DifOptions& opt = {})
{
    if (g1.direction != g2.direction || g1.lo != g2.lo || g1.hi != g2.hi) {
        throw std::invalid_argument("g1 and g2 must share domain and direction");
    }
    if (!(g1.lo < g1.hi)) {
        throw std::invalid_argument("domain must have positive length");
    }
    const bool inc = g1.direction == Direction::increasing;
    const mpq_class range = g1.hi - g1.lo;
    mpq_class min_step = range;
    mpq_div_2exp(min_step.get_mpq_t(), range.get_mpq_t(), static_cast<unsigned long>(opt.min_step_bits));

    DifCertificate cert{g1, g2, {g1.lo}, {}, false, working_precision()};

    const Interval margin(mpq_class(mpz_class(1), mpz_class(1) << opt.margin_bits));
    // The link from the current point (value `fixed`) to `to` clears the margin.
    auto clears = [&](const Interval& fixed, const mpq_class& to) {
        try {
            if (inc) {
                Interval target = fixed - abs(fixed) * margin;
                return certainly_less(g2.at(to), target);
            }
            Interval target = fixed + abs(fixed) * margin;
            return certainly_less(target, g1.at(to));
        } catch (const DomainError&) {
            return false;
        }
    };

    mpq_class cur = g1.lo;
    while (cur < g1.hi) {
        if (static_cast<int>(cert.chain.size()) >= max_points) {
            throw CertificationFailure("chain exceeds " + std::to_string(max_points) + " points", cur);
        }
        Interval fixed = inc ? g1.at(cur) : g2.at(cur);
        mpq_class next;
        if (clears(fixed, g1.hi)) {
            next = g1.hi;
        } else {
            mpq_class good = cur;
            mpq_class bad = g1.hi;
            for (int i = 0; i < opt.bisection_depth; ++i) {
                mpq_class mid = (good + bad) / 2;
                if (clears(fixed, mid)) {
                    good = mid;
                } else {
                    bad = mid;
                }
            }
            if (good - cur < min_step) {
                throw CertificationFailure("no progress: step below minimum", cur);
            }
            next = detail::shortest_decimal_in(cur + (good - cur) / 2, good);
        }
        cert.chain.push_back(next);
        cur = next;
    }
    cert.links.clear();
    for (std::size_t i = 0; i + 1 < cert.chain.size(); ++i) {
        cert.links.push_back(evaluate_link(g1, g2, cert.chain[i], cert.chain[i + 1]));
        if (!cert.links.back().diff.certainly_positive()) {
            throw CertificationFailure("constructed link failed re-evaluation", cert.chain[i]);
        }
    }
    return cert;
}

struct MonotoneResult {
    Verdict verdict = Verdict::inconclusive;
    int max_depth = 0;
    long cells = 0;
    /// Where the derivative had the wrong sign (fail) or stayed ambiguous (inconclusive).
    std::optional<std::pair<mpq_class, mpq_class>> witness;
};

inline constexpr int kMonotoneMaxDepth = 12;

/// Certifies the declared monotonicity by enclosing f' over an adaptive
/// subdivision of the domain. Wide positive ranges split geometrically.
inline MonotoneResult verify_monotone(const MonotoneFn& f, int max_depth = kMonotoneMaxDepth)
{
    MonotoneResult r;
    r.verdict = Verdict::pass;
    struct Cell {
        mpq_class a;
        mpq_class b;
        int depth;
    };
    std::vector<Cell> work{{f.lo, f.hi, 0}};
    const bool inc = f.direction == Direction::increasing;
    while (!work.empty()) {
        Cell c = work.back();
        work.pop_back();
        ++r.cells;
        r.max_depth = std::max(r.max_depth, c.depth);
        std::optional<Interval> deriv;
        try {
            deriv = f.expr.eval_dual(Interval::from_endpoints(c.a, c.b)).deriv;
        } catch (const DomainError&) {
            deriv.reset();
        }
        if (deriv) {
            if (inc ? deriv->certainly_nonnegative() : deriv->certainly_nonpositive()) {
                continue;
            }
            if (inc ? deriv->certainly_negative() : deriv->certainly_positive()) {
                r.verdict = Verdict::fail;
                r.witness = std::make_pair(c.a, c.b);
                return r;
            }
        }
        if (c.depth >= max_depth) {
            r.verdict = Verdict::inconclusive;
            if (!r.witness) {
                r.witness = std::make_pair(c.a, c.b);
            }
            continue;
        }
        mpq_class mid = (c.a + c.b) / 2;
        if (c.a > 0 && c.b > c.a * 8) {
            mpq_class g(std::sqrt(c.a.get_d() * c.b.get_d()));
            if (g > c.a && g < c.b) {
                mid = g;
            }
        }
        work.push_back({mid, c.b, c.depth + 1});
        work.push_back({c.a, mid, c.depth + 1});
    }
    return r;
}

struct FejerResult {
    Verdict verdict = Verdict::fail;
    /// Second differences of the sequence with 0 appended (index j = 2..len).
    std::vector<Interval> second_differences;
    /// 1-based index of the offending second difference; 0 for the last coefficient.
    long index = -1;
};

/// Decides the Fejer hypothesis from the appended-zero second differences
/// and the last coefficient (which must be nonnegative as well).
inline FejerResult fejer_from_differences(std::vector<Interval> diffs, const Interval& last)
{
    FejerResult r;
    r.second_differences = std::move(diffs);
    bool undecided = false;
    for (std::size_t i = 0; i < r.second_differences.size(); ++i) {
        const auto& d = r.second_differences[i];
        if (d.certainly_negative()) {
            r.verdict = Verdict::fail;
            r.index = static_cast<long>(i) + 2;
            return r;
        }
        if (!d.certainly_nonnegative() && !undecided) {
            undecided = true;
            r.index = static_cast<long>(i) + 2;
        }
    }
    if (last.certainly_negative()) {
        r.verdict = Verdict::fail;
        r.index = 0;
        return r;
    }
    if (!last.certainly_nonnegative() && !undecided) {
        undecided = true;
        r.index = 0;
    }
    r.verdict = undecided ? Verdict::inconclusive : Verdict::pass;
    if (!undecided) {
        r.index = -1;
    }
    return r;
}

/// Fejer criterion: {c_1, ..., c_m, 0} convex (and c_m >= 0) implies the sine
/// polynomial with coefficients c is nonnegative on [0, pi].
inline FejerResult fejer_check(const std::vector<Interval>& c)
{
    if (c.empty()) {
        throw std::invalid_argument("Fejer check needs a nonempty sequence");
    }
    std::vector<Interval> diffs;
    for (std::size_t j = 1; j < c.size(); ++j) {
        Interval next = j + 1 < c.size() ? c[j + 1] : Interval(0);
        diffs.push_back(c[j - 1] - Interval(2) * c[j] + next);
    }
    return fejer_from_differences(std::move(diffs), c.back());
}

/// xi(beta) = lambda A^beta - (lambda + mu) B^beta + mu C^beta.
struct PowerDiffFn {
    mpq_class lambda;
    mpq_class mu;
    mpq_class A;
    mpq_class B;
    mpq_class C;

    PowerDiffFn(mpq_class l, mpq_class m, mpq_class a, mpq_class b, mpq_class c)
        : lambda(std::move(l)), mu(std::move(m)), A(std::move(a)), B(std::move(b)), C(std::move(c))
    {
        if (lambda < 0 || mu < 0) {
            throw std::invalid_argument("lambda and mu must be nonnegative");
        }
        if (!(0 < C && C < B && B < A && A <= 1)) {
            throw std::invalid_argument("need 0 < C < B < A <= 1");
        }
    }

    Interval value(const Interval& beta) const
    {
        return Interval(lambda) * pow(Interval(A), beta) - Interval(lambda + mu) * pow(Interval(B), beta) +
               Interval(mu) * pow(Interval(C), beta);
    }

    Interval derivative(const Interval& beta) const
    {
        auto term = [&](const mpq_class& base) {
            Interval b(base);
            return pow(b, beta) * log(b);
        };
        return Interval(lambda) * term(A) - Interval(lambda + mu) * term(B) + Interval(mu) * term(C);
    }
};

enum class EndpointDominance { sup_at_low, sup_at_high, inconclusive };

inline const char* dominance_name(EndpointDominance d)
{
    switch (d) {
    case EndpointDominance::sup_at_low:
        return "sup-at-low";
    case EndpointDominance::sup_at_high:
        return "sup-at-high";
    case EndpointDominance::inconclusive:
        return "inconclusive";
    }
    return "?";
}

struct XiReduction {
    EndpointDominance result = EndpointDominance::inconclusive;
    Interval value_at_low;
    Interval derivative_at_high;
    Interval derivative_at_low;
};

/// Decides which end of [beta_low, 1] carries the supremum of xi. Since xi
/// has no interior local minimum once xi(beta_low) >= 0, xi'(1) >= 0 makes xi
/// increasing and xi'(beta_low) <= 0 makes it decreasing on the whole range.
inline XiReduction xi_endpoint_reduce(const PowerDiffFn& f, const Interval& beta_low)
{
    XiReduction r{EndpointDominance::inconclusive, f.value(beta_low), f.derivative(Interval(1)),
                  f.derivative(beta_low)};
    if (!r.value_at_low.certainly_nonnegative()) {
        throw std::invalid_argument("xi(beta_low) >= 0 could not be certified");
    }
    if (r.derivative_at_high.certainly_nonnegative()) {
        r.result = EndpointDominance::sup_at_high;
    } else if (r.derivative_at_low.certainly_nonpositive()) {
        r.result = EndpointDominance::sup_at_low;
    }
    return r;
}

/// Lower bound for the alternating sine polynomial [c_1, c_2, ...]^- with
/// positive decreasing coefficients:
/// (c1 (sin(x/2) + sin(3x/2)) - c2 (1 + sin(3x/2))) / (2 cos(x/2)).
inline Interval alt_lower_bound(const Interval& c1, const Interval& c2, const Interval& x)
{
    const Interval half = x / Interval(2);
    const Interval den = Interval(2) * cos(half);
    if (den.contains_zero()) {
        throw DomainError("cos(x/2) vanishes on the argument interval");
    }
    const Interval s3 = sin(Interval(3) * half);
    return (c1 * (sin(half) + s3) - c2 * (Interval(1) + s3)) / den;
}

} // namespace sinecert

#endif // SINECERT_CERTIFY_HPP
