#ifndef SINECERT_INTERVAL_HPP
#define SINECERT_INTERVAL_HPP

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

namespace sinecert {

/// Raised when an operation is applied outside its mathematical domain
/// (division by an interval containing zero, log of a nonpositive value, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline constexpr long kDefaultPrecisionBits = 128;
inline constexpr long kMinPrecisionBits = 53;

/// Number of significand bits used for interval endpoints.
struct Precision {
    long bits;

    explicit Precision(long b) : bits(b)
    {
        if (b < kMinPrecisionBits) {
            throw std::invalid_argument("precision must be at least 53 bits");
        }
    }
};

namespace detail {

inline long precision_from_environment()
{
    if (const char* env = std::getenv("SINECERT_PRECISION")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= kMinPrecisionBits && v <= MPFR_PREC_MAX) {
            return v;
        }
    }
    return kDefaultPrecisionBits;
}

inline long& thread_precision()
{
    thread_local long bits = precision_from_environment();
    return bits;
}

} // namespace detail

/// Working precision of the calling thread. Every interval created by an
/// operation on this thread gets endpoints of this many bits.
inline long working_precision() { return detail::thread_precision(); }

/// Scoped override of the calling thread's working precision.
class PrecisionGuard {
public:
    explicit PrecisionGuard(Precision p) : saved_(detail::thread_precision())
    {
        detail::thread_precision() = p.bits;
    }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;
    ~PrecisionGuard() { detail::thread_precision() = saved_; }

private:
    long saved_;
};

/// Closed real interval [lo, hi] with MPFR endpoints. Every operation rounds
/// outward, so the result encloses the exact image of the operands.
class Interval {
public:
    Interval() : Interval(0L) {}

    Interval(long v) // NOLINT(google-explicit-constructor)
    {
        init(working_precision());
        mpfr_set_si(lo_, v, MPFR_RNDD);
        mpfr_set_si(hi_, v, MPFR_RNDU);
    }

    Interval(int v) : Interval(static_cast<long>(v)) {} // NOLINT(google-explicit-constructor)

    /// Encloses the exact rational q; width at most one ulp.
    explicit Interval(const mpq_class& q)
    {
        init(working_precision());
        mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
    }

    /// Encloses the exact double value d (a binary number, so width 0 when
    /// the working precision is at least 53 bits).
    static Interval from_double(double d)
    {
        Interval r(uninit_tag{});
        mpfr_set_d(r.lo_, d, MPFR_RNDD);
        mpfr_set_d(r.hi_, d, MPFR_RNDU);
        return r;
    }

    static Interval from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi)
    {
        Interval r(uninit_tag{});
        mpfr_set(r.lo_, lo, MPFR_RNDD);
        mpfr_set(r.hi_, hi, MPFR_RNDU);
        r.check_order();
        return r;
    }

    static Interval from_endpoints(const mpq_class& lo, const mpq_class& hi)
    {
        Interval r(uninit_tag{});
        mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
        r.check_order();
        return r;
    }

    /// Parses "p", "p/q" or a decimal literal exactly, then encloses it.
    static Interval parse(std::string_view text);

    Interval(const Interval& other)
    {
        init(mpfr_get_prec(other.lo_));
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }

    Interval(Interval&& other) noexcept
    {
        init(mpfr_get_prec(other.lo_));
        mpfr_swap(lo_, other.lo_);
        mpfr_swap(hi_, other.hi_);
    }

    Interval& operator=(const Interval& other)
    {
        if (this != &other) {
            mpfr_set_prec(lo_, mpfr_get_prec(other.lo_));
            mpfr_set_prec(hi_, mpfr_get_prec(other.hi_));
            mpfr_set(lo_, other.lo_, MPFR_RNDD);
            mpfr_set(hi_, other.hi_, MPFR_RNDU);
        }
        return *this;
    }

    Interval& operator=(Interval&& other) noexcept
    {
        mpfr_swap(lo_, other.lo_);
        mpfr_swap(hi_, other.hi_);
        return *this;
    }

    ~Interval()
    {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    long precision() const { return static_cast<long>(mpfr_get_prec(lo_)); }

    /// Endpoints rounded outward to double.
    double lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid_double() const { return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)); }

    /// Upper bound on hi - lo.
    double width() const
    {
        mpfr_t w;
        mpfr_init2(w, 64);
        mpfr_sub(w, hi_, lo_, MPFR_RNDU);
        double d = mpfr_get_d(w, MPFR_RNDU);
        mpfr_clear(w);
        return d;
    }

    /// Exact midpoint as an interval of zero width (or one ulp if inexact).
    Interval midpoint() const
    {
        Interval r(uninit_tag{});
        mpfr_add(r.lo_, lo_, hi_, MPFR_RNDD);
        mpfr_add(r.hi_, lo_, hi_, MPFR_RNDU);
        mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDD);
        mpfr_div_2ui(r.hi_, r.hi_, 1, MPFR_RNDU);
        return r;
    }

    bool is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }

    bool contains(const mpq_class& q) const
    {
        return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
    }
    bool contains(double d) const { return mpfr_cmp_d(lo_, d) <= 0 && mpfr_cmp_d(hi_, d) >= 0; }
    bool contains(long v) const { return mpfr_cmp_si(lo_, v) <= 0 && mpfr_cmp_si(hi_, v) >= 0; }
    bool contains(int v) const { return contains(static_cast<long>(v)); }
    bool contains(const Interval& other) const
    {
        return mpfr_lessequal_p(lo_, other.lo_) && mpfr_greaterequal_p(hi_, other.hi_);
    }
    bool overlaps(const Interval& other) const
    {
        return mpfr_lessequal_p(lo_, other.hi_) && mpfr_lessequal_p(other.lo_, hi_);
    }

    bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
    bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }
    bool certainly_nonnegative() const { return mpfr_sgn(lo_) >= 0; }
    bool certainly_nonpositive() const { return mpfr_sgn(hi_) <= 0; }
    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

    /// Decimal rendering "[lo, hi]" with `digits` significant digits, rounded outward.
    std::string to_string(int digits = 17) const;

    Interval operator-() const
    {
        Interval r(uninit_tag{});
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }

    Interval& operator+=(const Interval& b)
    {
        mpfr_add(lo_, lo_, b.lo_, MPFR_RNDD);
        mpfr_add(hi_, hi_, b.hi_, MPFR_RNDU);
        return *this;
    }
    Interval& operator-=(const Interval& b)
    {
        // b may alias *this
        if (this == &b) {
            mpfr_t t;
            mpfr_init2(t, mpfr_get_prec(lo_));
            mpfr_sub(t, lo_, hi_, MPFR_RNDD);
            mpfr_sub(hi_, hi_, lo_, MPFR_RNDU);
            mpfr_swap(lo_, t);
            mpfr_clear(t);
            return *this;
        }
        mpfr_sub(lo_, lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(hi_, hi_, b.lo_, MPFR_RNDU);
        return *this;
    }
    Interval& operator*=(const Interval& b);
    Interval& operator/=(const Interval& b);

    friend Interval operator+(Interval a, const Interval& b) { return a += b; }
    friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);

    /// Smallest interval containing both operands.
    friend Interval hull(const Interval& a, const Interval& b)
    {
        Interval r(uninit_tag{});
        mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }

    /// Intersection; nullopt when disjoint.
    friend std::optional<Interval> intersect(const Interval& a, const Interval& b)
    {
        if (!a.overlaps(b)) {
            return std::nullopt;
        }
        Interval r(uninit_tag{});
        mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << x.to_string(); }

    friend Interval exp(const Interval& a);
    friend Interval log(const Interval& a);
    friend Interval sqrt(const Interval& a);
    friend Interval sin(const Interval& a);
    friend Interval cos(const Interval& a);
    friend Interval abs(const Interval& a);
    friend Interval square(const Interval& a);
    friend Interval pi_interval();

    struct uninit_tag {};
    explicit Interval(uninit_tag) { init(working_precision()); }
    mpfr_ptr lo_mut() { return lo_; }
    mpfr_ptr hi_mut() { return hi_; }

private:
    void init(mpfr_prec_t p)
    {
        mpfr_init2(lo_, p);
        mpfr_init2(hi_, p);
    }

    void check_order() const
    {
        if (mpfr_greater_p(lo_, hi_)) {
            throw std::invalid_argument("interval endpoints out of order");
        }
    }

    mpfr_t lo_;
    mpfr_t hi_;
};

namespace detail {

struct MpfrTemp {
    mpfr_t v;
    explicit MpfrTemp(mpfr_prec_t p) { mpfr_init2(v, p); }
    MpfrTemp(const MpfrTemp&) = delete;
    MpfrTemp& operator=(const MpfrTemp&) = delete;
    ~MpfrTemp() { mpfr_clear(v); }
};

// Lower and upper bounds of x * y over the four endpoint products.
inline void mul_bounds(mpfr_ptr lo, mpfr_ptr hi, mpfr_srcptr alo, mpfr_srcptr ahi, mpfr_srcptr blo, mpfr_srcptr bhi)
{
    const mpfr_prec_t p = mpfr_get_prec(lo);
    MpfrTemp t(p);
    MpfrTemp rlo(p);
    MpfrTemp rhi(p);
    mpfr_srcptr as[2] = {alo, ahi};
    mpfr_srcptr bs[2] = {blo, bhi};
    bool first = true;
    for (auto* x : as) {
        for (auto* y : bs) {
            mpfr_mul(t.v, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t.v, rlo.v)) {
                mpfr_set(rlo.v, t.v, MPFR_RNDD);
            }
            mpfr_mul(t.v, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t.v, rhi.v)) {
                mpfr_set(rhi.v, t.v, MPFR_RNDU);
            }
            first = false;
        }
    }
    mpfr_set(lo, rlo.v, MPFR_RNDD);
    mpfr_set(hi, rhi.v, MPFR_RNDU);
}

} // namespace detail

inline Interval operator*(const Interval& a, const Interval& b)
{
    Interval r(Interval::uninit_tag{});
    // Fast paths for the common sign patterns.
    if (mpfr_sgn(a.lo_) >= 0 && mpfr_sgn(b.lo_) >= 0) {
        mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    } else {
        detail::mul_bounds(r.lo_, r.hi_, a.lo_, a.hi_, b.lo_, b.hi_);
    }
    return r;
}

inline Interval& Interval::operator*=(const Interval& b)
{
    *this = *this * b;
    return *this;
}

inline Interval operator/(const Interval& a, const Interval& b)
{
    if (b.contains_zero()) {
        throw DomainError("division by an interval containing zero");
    }
    Interval r(Interval::uninit_tag{});
    const mpfr_prec_t p = mpfr_get_prec(r.lo_);
    detail::MpfrTemp t(p);
    bool first = true;
    mpfr_srcptr as[2] = {a.lo_, a.hi_};
    mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    for (auto* x : as) {
        for (auto* y : bs) {
            mpfr_div(t.v, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t.v, r.lo_)) {
                mpfr_set(r.lo_, t.v, MPFR_RNDD);
            }
            mpfr_div(t.v, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t.v, r.hi_)) {
                mpfr_set(r.hi_, t.v, MPFR_RNDU);
            }
            first = false;
        }
    }
    return r;
}

inline Interval& Interval::operator/=(const Interval& b)
{
    *this = *this / b;
    return *this;
}

inline Interval exp(const Interval& a)
{
    Interval r(Interval::uninit_tag{});
    mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

inline Interval log(const Interval& a)
{
    if (mpfr_sgn(a.lo_) <= 0) {
        throw DomainError("log of an interval that is not strictly positive");
    }
    Interval r(Interval::uninit_tag{});
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

inline Interval sqrt(const Interval& a)
{
    if (mpfr_sgn(a.lo_) < 0) {
        throw DomainError("sqrt of an interval with negative values");
    }
    Interval r(Interval::uninit_tag{});
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

inline Interval abs(const Interval& a)
{
    if (mpfr_sgn(a.lo_) >= 0) {
        return a;
    }
    if (mpfr_sgn(a.hi_) <= 0) {
        return -a;
    }
    Interval r(Interval::uninit_tag{});
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

inline Interval square(const Interval& a)
{
    Interval m = abs(a);
    Interval r(Interval::uninit_tag{});
    mpfr_sqr(r.lo_, m.lo_, MPFR_RNDD);
    mpfr_sqr(r.hi_, m.hi_, MPFR_RNDU);
    return r;
}

/// Enclosure of pi at the working precision.
inline Interval pi_interval()
{
    Interval r(Interval::uninit_tag{});
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

/// Integer power by repeated squaring; valid for any sign of the base.
inline Interval pow_int(const Interval& a, long k)
{
    if (k < 0) {
        return Interval(1) / pow_int(a, -k);
    }
    if (k == 0) {
        return Interval(1);
    }
    if (k % 2 == 0) {
        return square(pow_int(a, k / 2));
    }
    return a * pow_int(a, k - 1);
}

/// a^b for a strictly positive base, computed as exp(b * log(a)).
inline Interval pow(const Interval& a, const Interval& b)
{
    if (!a.certainly_positive()) {
        throw DomainError("pow requires a strictly positive base");
    }
    return exp(b * log(a));
}

namespace detail {

// Returns true when some integer j satisfies lo <= offset + j * period <= hi,
// deciding conservatively (may answer true when the nearest candidate is
// within rounding distance of the interval).
inline bool hits_lattice(const Interval& x, const Interval& offset, const Interval& period)
{
    Interval left = (Interval::from_endpoints(x.lo(), x.lo()) - offset) / period;
    Interval right = (Interval::from_endpoints(x.hi(), x.hi()) - offset) / period;
    MpfrTemp first(mpfr_get_prec(left.lo()));
    MpfrTemp last(mpfr_get_prec(right.hi()));
    mpfr_ceil(first.v, left.lo());
    mpfr_floor(last.v, right.hi());
    return mpfr_lessequal_p(first.v, last.v) != 0;
}

// Both directed roundings of f(in) from one call. MPFR rounds correctly, so
// an inexact round-down result and its upper neighbour bracket f(in).
template <typename F>
void directed_pair(mpfr_ptr lo, mpfr_ptr hi, mpfr_srcptr in, F f)
{
    const int ternary = f(lo, in, MPFR_RNDD);
    mpfr_set(hi, lo, MPFR_RNDU);
    if (ternary != 0) {
        mpfr_nextabove(hi);
    }
}

template <typename F>
Interval monotone_endpoint_hull(const Interval& a, F f)
{
    Interval r(Interval::uninit_tag{});
    directed_pair(r.lo_mut(), r.hi_mut(), a.lo(), f);
    if (a.is_point()) {
        return r;
    }
    const mpfr_prec_t p = mpfr_get_prec(r.lo());
    MpfrTemp lo(p);
    MpfrTemp hi(p);
    directed_pair(lo.v, hi.v, a.hi(), f);
    mpfr_min(r.lo_mut(), r.lo(), lo.v, MPFR_RNDD);
    mpfr_max(r.hi_mut(), r.hi(), hi.v, MPFR_RNDU);
    return r;
}

// pi, 2 pi, pi/2 and -pi/2 at one precision.
struct PiMultiples {
    Interval pi;
    Interval two_pi;
    Interval half_pi;
    Interval minus_half_pi;
};

inline const PiMultiples& pi_multiples()
{
    thread_local long bits = 0;
    thread_local std::optional<PiMultiples> cache;
    if (!cache || bits != working_precision()) {
        const Interval pi = pi_interval();
        const Interval half = pi / Interval(2);
        cache.emplace(PiMultiples{pi, pi * Interval(2), half, -half});
        bits = working_precision();
    }
    return *cache;
}

// For a thin argument, f(lo) widened by the width encloses f over the
// interval because |sin'| and |cos'| are at most 1. Returns false when the
// argument is too wide for this to be worthwhile.
template <typename F>
bool thin_trig_hull(Interval& r, const Interval& a, F f)
{
    const mpfr_prec_t p = mpfr_get_prec(r.lo());
    MpfrTemp w(p);
    mpfr_sub(w.v, a.hi(), a.lo(), MPFR_RNDU);
    if (mpfr_cmp_ui_2exp(w.v, 1, -40) >= 0) {
        return false;
    }
    directed_pair(r.lo_mut(), r.hi_mut(), a.lo(), f);
    mpfr_sub(r.lo_mut(), r.lo(), w.v, MPFR_RNDD);
    mpfr_add(r.hi_mut(), r.hi(), w.v, MPFR_RNDU);
    if (mpfr_cmp_si(r.lo(), -1) < 0) {
        mpfr_set_si(r.lo_mut(), -1, MPFR_RNDD);
    }
    if (mpfr_cmp_si(r.hi(), 1) > 0) {
        mpfr_set_si(r.hi_mut(), 1, MPFR_RNDU);
    }
    return true;
}

} // namespace detail

inline Interval sin(const Interval& a)
{
    if (a.width() >= 6.5) {
        Interval r(Interval::uninit_tag{});
        mpfr_set_si(r.lo_, -1, MPFR_RNDD);
        mpfr_set_si(r.hi_, 1, MPFR_RNDU);
        return r;
    }
    auto f = [](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t rnd) { return mpfr_sin(out, in, rnd); };
    if (!a.is_point()) {
        Interval thin(Interval::uninit_tag{});
        if (detail::thin_trig_hull(thin, a, f)) {
            return thin;
        }
    }
    Interval r = detail::monotone_endpoint_hull(a, f);
    if (a.is_point()) {
        return r;
    }
    const auto& pm = detail::pi_multiples();
    if (detail::hits_lattice(a, pm.half_pi, pm.two_pi)) {
        mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    }
    if (detail::hits_lattice(a, pm.minus_half_pi, pm.two_pi)) {
        mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    }
    return r;
}

inline Interval cos(const Interval& a)
{
    if (a.width() >= 6.5) {
        Interval r(Interval::uninit_tag{});
        mpfr_set_si(r.lo_, -1, MPFR_RNDD);
        mpfr_set_si(r.hi_, 1, MPFR_RNDU);
        return r;
    }
    auto f = [](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t rnd) { return mpfr_cos(out, in, rnd); };
    if (!a.is_point()) {
        Interval thin(Interval::uninit_tag{});
        if (detail::thin_trig_hull(thin, a, f)) {
            return thin;
        }
    }
    Interval r = detail::monotone_endpoint_hull(a, f);
    if (a.is_point()) {
        return r;
    }
    const auto& pm = detail::pi_multiples();
    if (detail::hits_lattice(a, Interval(0), pm.two_pi)) {
        mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    }
    if (detail::hits_lattice(a, pm.pi, pm.two_pi)) {
        mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    }
    return r;
}

/// log(2) / log(16/5): the smallest admissible exponent.
inline Interval beta1()
{
    return log(Interval(2)) / log(Interval(mpq_class(16, 5)));
}

/// log(2) / (log(288) - log(130)): the exponent at which the n = 7 coefficient
/// sequence becomes convex.
inline Interval beta2()
{
    return log(Interval(2)) / (log(Interval(288)) - log(Interval(130)));
}

// ---------------------------------------------------------------------------
// Rational parsing and formatting

/// Parses an exact rational from "p", "p/q", or a decimal such as "-1.25e-3".
inline std::optional<mpq_class> parse_rational(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
            s.remove_prefix(1);
        }
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
            s.remove_suffix(1);
        }
        return s;
    };
    text = trim(text);
    if (text.empty()) {
        return std::nullopt;
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = parse_rational(text.substr(0, slash));
        auto den = parse_rational(text.substr(slash + 1));
        if (!num || !den || *den == 0) {
            return std::nullopt;
        }
        mpq_class q = *num / *den;
        q.canonicalize();
        return q;
    }
    bool negative = false;
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    bool any_digit = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            any_digit = true;
            if (seen_point) {
                ++frac_digits;
            }
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!any_digit) {
        return std::nullopt;
    }
    long exponent = 0;
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E') {
            return std::nullopt;
        }
        std::string e(text.substr(i + 1));
        if (e.empty()) {
            return std::nullopt;
        }
        char* end = nullptr;
        exponent = std::strtol(e.c_str(), &end, 10);
        if (*end != '\0') {
            return std::nullopt;
        }
    }
    mpz_class mantissa(digits, 10);
    long scale = exponent - frac_digits;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    mpq_class q = scale < 0 ? mpq_class(mantissa, power) : mpq_class(mantissa * power);
    q.canonicalize();
    if (negative) {
        q = -q;
    }
    return q;
}

/// Finite decimal when the denominator is 2^a 5^b, otherwise "p/q".
inline std::string format_rational(const mpq_class& q)
{
    mpz_class den = q.get_den();
    long twos = 0;
    long fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
        den /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        den /= 5;
        ++fives;
    }
    if (den != 1) {
        return q.get_str(10);
    }
    const long places = std::max(twos, fives);
    if (places == 0) {
        return q.get_num().get_str(10);
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    mpz_class scaled = q.get_num() * scale / q.get_den();
    bool negative = scaled < 0;
    std::string s = mpz_class(abs(scaled)).get_str(10);
    if (static_cast<long>(s.size()) <= places) {
        s.insert(0, static_cast<std::size_t>(places - static_cast<long>(s.size()) + 1), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(places), ".");
    return negative ? "-" + s : s;
}

inline Interval Interval::parse(std::string_view text)
{
    auto q = parse_rational(text);
    if (!q) {
        throw std::invalid_argument("not a rational literal: " + std::string(text));
    }
    return Interval(*q);
}

/// Decimal string of an MPFR value with the given significant digits and rounding.
inline std::string mpfr_to_decimal(mpfr_srcptr x, int digits, mpfr_rnd_t rnd)
{
    if (mpfr_zero_p(x)) {
        return "0";
    }
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), x, rnd);
    std::string m(raw);
    mpfr_free_str(raw);
    bool negative = !m.empty() && m.front() == '-';
    if (negative) {
        m.erase(0, 1);
    }
    // m is d1 d2 ... dn meaning 0.d1d2...dn * 10^exp10
    std::string out = negative ? "-" : "";
    out += m.substr(0, 1);
    if (m.size() > 1) {
        out += ".";
        out += m.substr(1);
    }
    out += "e";
    out += std::to_string(static_cast<long>(exp10) - 1);
    return out;
}

/// Round-trip decimal for an MPFR value: parsing the result back with
/// round-to-nearest at the same precision restores the exact bits.
inline std::string mpfr_to_roundtrip(mpfr_srcptr x)
{
    const auto digits = static_cast<int>(mpfr_get_str_ndigits(10, mpfr_get_prec(x)));
    return mpfr_to_decimal(x, digits, MPFR_RNDN);
}

inline std::string Interval::to_string(int digits) const
{
    return "[" + mpfr_to_decimal(lo_, digits, MPFR_RNDD) + ", " + mpfr_to_decimal(hi_, digits, MPFR_RNDU) + "]";
}

/// Parses two round-trip decimal endpoints at the given precision.
inline Interval interval_from_roundtrip(const std::string& lo, const std::string& hi, long bits)
{
    Interval r(Interval::uninit_tag{});
    mpfr_set_prec(r.lo_mut(), bits);
    mpfr_set_prec(r.hi_mut(), bits);
    if (mpfr_set_str(r.lo_mut(), lo.c_str(), 10, MPFR_RNDN) != 0 ||
        mpfr_set_str(r.hi_mut(), hi.c_str(), 10, MPFR_RNDN) != 0) {
        throw std::invalid_argument("malformed decimal endpoint");
    }
    if (mpfr_greater_p(r.lo(), r.hi())) {
        throw std::invalid_argument("interval endpoints out of order");
    }
    return r;
}

/// True when every point of a is strictly below every point of b.
inline bool certainly_less(const Interval& a, const Interval& b) { return mpfr_less_p(a.hi(), b.lo()) != 0; }
inline bool certainly_less_equal(const Interval& a, const Interval& b) { return mpfr_lessequal_p(a.hi(), b.lo()) != 0; }

/// Upper endpoint compared against an exact rational bound: every point of a < q.
inline bool certainly_below(const Interval& a, const mpq_class& q) { return mpfr_cmp_q(a.hi(), q.get_mpq_t()) < 0; }
inline bool certainly_above(const Interval& a, const mpq_class& q) { return mpfr_cmp_q(a.lo(), q.get_mpq_t()) > 0; }

} // namespace sinecert

#endif // SINECERT_INTERVAL_HPP
