#ifndef SINECERT_SINEPOLY_HPP
#define SINECERT_SINEPOLY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "expr.hpp"
#include "interval.hpp"

namespace sinecert {

/// How an exponent was specified. Named and rational exponents can be
/// re-enclosed at a higher precision; a raw interval cannot.
class Exponent {
public:
    enum class Kind { beta1, beta2, rational, interval };

    static Exponent named_beta1() { return Exponent(Kind::beta1); }
    static Exponent named_beta2() { return Exponent(Kind::beta2); }
    static Exponent rational(const mpq_class& q)
    {
        Exponent e(Kind::rational);
        e.q_ = q;
        return e;
    }
    static Exponent from_interval(const Interval& v)
    {
        Exponent e(Kind::interval);
        e.v_ = v;
        return e;
    }

    /// Accepts "beta1", "beta2", or an exact decimal / fraction literal.
    static Exponent parse(std::string_view text)
    {
        if (text == "beta1") {
            return named_beta1();
        }
        if (text == "beta2") {
            return named_beta2();
        }
        auto q = parse_rational(text);
        if (!q) {
            throw std::invalid_argument("malformed exponent: " + std::string(text));
        }
        return rational(*q);
    }

    Kind kind() const { return kind_; }
    bool is_beta1() const { return kind_ == Kind::beta1; }
    const mpq_class& rational_value() const { return q_; }

    /// Enclosure at the current working precision.
    Interval enclose() const
    {
        switch (kind_) {
        case Kind::beta1:
            return named_constant(NamedConstant::beta1);
        case Kind::beta2:
            return named_constant(NamedConstant::beta2);
        case Kind::rational:
            return Interval(q_);
        case Kind::interval:
            return *v_;
        }
        throw std::logic_error("unknown exponent kind");
    }

    std::string to_string() const
    {
        switch (kind_) {
        case Kind::beta1:
            return "beta1";
        case Kind::beta2:
            return "beta2";
        case Kind::rational:
            return format_rational(q_);
        case Kind::interval:
            return v_->to_string();
        }
        return "?";
    }

private:
    explicit Exponent(Kind k) : kind_(k) {}

    Kind kind_;
    mpq_class q_;
    std::optional<Interval> v_;
};

/// Exact base (n^2 - k^2) / ((n^2 - 1) k) of the k-th coefficient.
inline mpq_class coeff_base(long n, long k)
{
    mpq_class q(n * n - k * k, (n * n - 1) * k);
    q.canonicalize();
    return q;
}

/// a_{n,k} = ((n^2 - k^2) / ((n^2 - 1) k))^beta, with a_{n,1} = 1 and a_{n,n} = 0 exactly.
inline Interval coeff(long n, long k, const Interval& beta)
{
    if (n < 2 || k < 1 || k > n) {
        throw std::invalid_argument("coefficient index out of range");
    }
    if (k == n) {
        return Interval(0);
    }
    if (k == 1) {
        return Interval(1);
    }
    return pow(Interval(coeff_base(n, k)), beta);
}

/// The coefficients a_1..a_n of S_{n,beta}.
class CoefficientSequence {
public:
    CoefficientSequence(long n, Interval beta) : n_(n), beta_(std::move(beta))
    {
        if (n < 2) {
            throw std::invalid_argument("n must be at least 2");
        }
        a_.reserve(static_cast<std::size_t>(n));
        for (long k = 1; k <= n; ++k) {
            a_.push_back(coeff(n, k, beta_));
        }
    }

    long n() const { return n_; }
    const Interval& beta() const { return beta_; }

    /// a_k for 1 <= k <= n.
    const Interval& a(long k) const
    {
        if (k < 1 || k > n_) {
            throw std::invalid_argument("coefficient index out of range");
        }
        return a_[static_cast<std::size_t>(k - 1)];
    }

    const std::vector<Interval>& values() const { return a_; }

    /// a_{k-1} - 2 a_k + a_{k+1} for 2 <= k <= n-1.
    Interval second_diff(long k) const
    {
        if (k < 2 || k > n_ - 1) {
            throw std::invalid_argument("second difference index out of range");
        }
        return a(k - 1) - Interval(2) * a(k) + a(k + 1);
    }

    /// -second_diff(n - k) for 1 <= k <= n-2.
    Interval delta(long k) const
    {
        if (k < 1 || k > n_ - 2) {
            throw std::invalid_argument("delta index out of range");
        }
        return -second_diff(n_ - k);
    }

    /// a_k - a_{k+1} for 1 <= k <= n-1.
    Interval d(long k) const
    {
        if (k < 1 || k > n_ - 1) {
            throw std::invalid_argument("d index out of range");
        }
        return a(k) - a(k + 1);
    }

private:
    long n_;
    Interval beta_;
    std::vector<Interval> a_;
};

/// Closed form of delta_1:
/// ((2n-1)/((n^2-1)(n-1)))^beta * [2 - (4(n-1)^2/((2n-1)(n-2)))^beta].
inline Interval delta1_closed(long n, const Interval& beta)
{
    if (n < 3) {
        throw std::invalid_argument("delta_1 needs n >= 3");
    }
    Interval first = pow(Interval(mpq_class(2 * n - 1, (n * n - 1) * (n - 1))), beta);
    Interval inner = pow(Interval(mpq_class(4 * (n - 1) * (n - 1), (2 * n - 1) * (n - 2))), beta);
    return first * (Interval(2) - inner);
}

struct SinePolyValue {
    Interval value;
    Interval x;
};

/// Sum of c_k sin(kx) (k from 1), with the alternating sign (-1)^{k+1} when requested.
inline Interval eval_sine_poly(const std::vector<Interval>& c, const Interval& x, bool alternating = false)
{
    Interval s(0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const long k = static_cast<long>(i) + 1;
        Interval term = c[i] * sin(Interval(k) * x);
        if (alternating && k % 2 == 0) {
            s -= term;
        } else {
            s += term;
        }
    }
    return s;
}

/// S_{n,beta}(x), or S^- when `alternating`.
inline SinePolyValue eval_S(const CoefficientSequence& seq, const Interval& x, bool alternating = false)
{
    std::vector<Interval> c(seq.values().begin(), seq.values().end() - 1);
    return {eval_sine_poly(c, x, alternating), x};
}

inline SinePolyValue eval_S(long n, const Interval& beta, const Interval& x, bool alternating = false)
{
    return eval_S(CoefficientSequence(n, beta), x, alternating);
}

enum class TauForm { closed, direct };

struct TauValue {
    Interval value;
    /// True when the closed form was requested but fell back to direct summation.
    bool fell_back = false;
};

/// tau_k(x) = sum_{j=1}^k sin(jx), or the alternating tau_k^- when requested.
inline TauValue tau(long k, const Interval& x, bool alternating, TauForm form)
{
    if (k < 1) {
        throw std::invalid_argument("tau index must be positive");
    }
    auto direct = [&] {
        Interval s(0);
        for (long j = 1; j <= k; ++j) {
            Interval t = sin(Interval(j) * x);
            if (alternating && j % 2 == 0) {
                s -= t;
            } else {
                s += t;
            }
        }
        return s;
    };
    if (form == TauForm::direct) {
        return {direct(), false};
    }
    const Interval half = x / Interval(2);
    const Interval outer = Interval(mpq_class(2 * k + 1, 2)) * x;
    if (!alternating) {
        Interval den = sin(half);
        if (mpfr_cmp_ui_2exp(den.lo(), 1, -20) < 0) {
            return {direct(), true};
        }
        return {(cos(half) - cos(outer)) / (Interval(2) * den), false};
    }
    Interval den = cos(half);
    if (mpfr_cmp_q(den.lo(), mpq_class(1, 1 << 20).get_mpq_t()) < 0) {
        return {direct(), true};
    }
    Interval s = sin(outer);
    Interval num = k % 2 == 0 ? sin(half) - s : sin(half) + s;
    return {num / (Interval(2) * den), false};
}

} // namespace sinecert

#endif // SINECERT_SINEPOLY_HPP
