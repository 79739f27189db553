#ifndef SINECERT_DECOMPOSE_HPP
#define SINECERT_DECOMPOSE_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "interval.hpp"
#include "sinepoly.hpp"

namespace sinecert {

/// An interval sign could not be decided at the transition between the
/// convex head and the concave tail, even after raising the precision.
class UndecidableSign : public std::runtime_error {
public:
    UndecidableSign(long k, long bits)
        : std::runtime_error("sign of second difference " + std::to_string(k) + " undecidable at " +
                             std::to_string(bits) + " bits"),
          k_(k)
    {
    }
    long index() const { return k_; }

private:
    long k_;
};

/// The coefficient sequence does not have the shape the decomposition needs.
class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact rational combination sum q_k a_k of coefficients. Evaluating a form
/// whose terms cancel symbolically gives an exact zero instead of an interval
/// straddling zero.
class LinearForm {
public:
    LinearForm() = default;
    static LinearForm term(long k, const mpq_class& q = 1)
    {
        LinearForm f;
        f.add(k, q);
        return f;
    }

    void add(long k, const mpq_class& q)
    {
        mpq_class& slot = terms_[k];
        slot += q;
        if (slot == 0) {
            terms_.erase(k);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, mpq_class>& terms() const { return terms_; }

    Interval eval(const CoefficientSequence& seq) const
    {
        Interval s(0);
        for (const auto& [k, q] : terms_) {
            s += Interval(q) * seq.a(k);
        }
        return s;
    }

    friend LinearForm operator+(LinearForm a, const LinearForm& b)
    {
        for (const auto& [k, q] : b.terms_) {
            a.add(k, q);
        }
        return a;
    }
    friend LinearForm operator*(const mpq_class& s, const LinearForm& f)
    {
        LinearForm r;
        for (const auto& [k, q] : f.terms_) {
            r.add(k, s * q);
        }
        return r;
    }
    friend LinearForm operator-(const LinearForm& a, const LinearForm& b) { return a + mpq_class(-1) * b; }

    /// Text such as "a1 - 4*a4 + 3*a5".
    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto& [k, q] : terms_) {
            const mpq_class mag = abs(q);
            out += out.empty() ? (q < 0 ? "-" : "") : (q < 0 ? " - " : " + ");
            if (mag != 1) {
                out += format_rational(mag) + "*";
            }
            out += "a" + std::to_string(k);
        }
        return out;
    }

private:
    std::map<long, mpq_class> terms_;
};

enum class DiffSign { nonnegative, negative, undecided };

inline DiffSign classify_sign(const Interval& v)
{
    if (v.certainly_nonnegative()) {
        return DiffSign::nonnegative;
    }
    if (v.certainly_negative()) {
        return DiffSign::negative;
    }
    return DiffSign::undecided;
}

struct SplitPoint {
    bool fully_convex = false;
    /// Shared endpoint a_m of the convex head and the concave tail; n when fully convex.
    long m = 0;
    /// Last index with a nonnegative second difference.
    long kappa = 0;
    /// Precision (bits) at which every sign was decided.
    long bits = 0;
};

/// Split of {a_1..a_n} into a convex head {a_1..a_m} and a concave tail
/// {a_m..a_n} with an odd number of terms, at the precision of `seq`.
/// Throws UndecidableSign or StructureError.
inline SplitPoint split_point(const CoefficientSequence& seq)
{
    const long n = seq.n();
    if (n < 5) {
        throw std::invalid_argument("split point needs n >= 5");
    }
    SplitPoint sp;
    sp.bits = seq.a(2).precision();
    long kappa = 1;
    bool seen_negative = false;
    for (long k = 2; k <= n - 1; ++k) {
        switch (classify_sign(seq.second_diff(k))) {
        case DiffSign::undecided:
            throw UndecidableSign(k, sp.bits);
        case DiffSign::nonnegative:
            if (seen_negative) {
                throw StructureError("second differences change sign more than once (k = " + std::to_string(k) +
                                     ")");
            }
            kappa = k;
            break;
        case DiffSign::negative:
            seen_negative = true;
            break;
        }
    }
    sp.kappa = kappa;
    if (kappa == n - 1) {
        sp.fully_convex = true;
        sp.m = n;
        return sp;
    }
    // Both kappa and kappa + 1 give a convex head and a concave tail; exactly
    // one of them leaves an odd number of tail terms (n - m even).
    sp.m = (n - kappa) % 2 == 0 ? kappa : kappa + 1;
    return sp;
}

/// Structural decomposition S = H + K + T at a split point m:
///   H = [a1 - 4a4 + 3a5, a2 - 3a4 + 2a5, a3 - 2a4 + a5],
///   K = [a_j - a_m] - H,   T = sum_{k=m}^{n-1} d_k tau_k with d_k = a_k - a_{k+1}.
class Decomposition {
public:
    Decomposition(CoefficientSequence seq, SplitPoint split) : seq_(std::move(seq)), split_(split)
    {
        const long m = split_.m;
        if (m < 5) {
            throw StructureError("convex head has " + std::to_string(m) + " terms; at least 5 are needed");
        }
        auto a = [](long k, long q = 1) { return LinearForm::term(k, q); };
        h_forms_ = {a(1) - a(4, 4) + a(5, 3), a(2) - a(4, 3) + a(5, 2), a(3) - a(4, 2) + a(5)};
        for (long j = 1; j <= m - 1; ++j) {
            LinearForm s1 = a(j) - a(m);
            k_forms_.push_back(j <= 3 ? s1 - h_forms_[static_cast<std::size_t>(j - 1)] : s1);
        }
        for (const auto& f : h_forms_) {
            h_.push_back(f.eval(seq_));
        }
        for (const auto& f : k_forms_) {
            k_.push_back(f.eval(seq_));
        }
        for (long k = m; k <= n() - 1; ++k) {
            d_.push_back(seq_.d(k));
        }
    }

    long n() const { return seq_.n(); }
    long m() const { return split_.m; }
    bool fully_convex() const { return split_.fully_convex; }
    const SplitPoint& split() const { return split_; }
    const CoefficientSequence& sequence() const { return seq_; }
    const Interval& beta() const { return seq_.beta(); }

    const std::array<LinearForm, 3>& h_forms() const { return h_forms_; }
    const std::vector<LinearForm>& k_forms() const { return k_forms_; }
    const std::vector<Interval>& h_coeffs() const { return h_; }
    const std::vector<Interval>& k_coeffs() const { return k_; }

    /// d_m..d_{n-1}; empty when fully convex.
    const std::vector<Interval>& d_weights() const { return d_; }
    long t_summands() const { return static_cast<long>(d_.size()); }

    /// Second differences of {K_1..K_{m-1}, 0}, computed on exact forms.
    std::vector<Interval> k_appended_second_differences() const
    {
        return appended_second_differences(k_forms_);
    }

    /// Second differences of {H_1, H_2, H_3, 0}.
    std::vector<Interval> h_appended_second_differences() const
    {
        return appended_second_differences(std::vector<LinearForm>(h_forms_.begin(), h_forms_.end()));
    }

    Interval eval_H(const Interval& x, bool alternating = false) const { return eval_sine_poly(h_, x, alternating); }
    Interval eval_K(const Interval& x, bool alternating = false) const { return eval_sine_poly(k_, x, alternating); }

    Interval eval_T(const Interval& x, bool alternating = false) const
    {
        Interval s(0);
        for (std::size_t i = 0; i < d_.size(); ++i) {
            const long k = m() + static_cast<long>(i);
            s += d_[i] * tau(k, x, alternating, TauForm::closed).value;
        }
        return s;
    }

private:
    std::vector<Interval> appended_second_differences(const std::vector<LinearForm>& c) const
    {
        std::vector<Interval> out;
        const std::size_t len = c.size();
        for (std::size_t j = 1; j < len; ++j) {
            LinearForm next = j + 1 < len ? c[j + 1] : LinearForm{};
            out.push_back((c[j - 1] - mpq_class(2) * c[j] + next).eval(seq_));
        }
        return out;
    }

    CoefficientSequence seq_;
    SplitPoint split_;
    std::array<LinearForm, 3> h_forms_;
    std::vector<LinearForm> k_forms_;
    std::vector<Interval> h_;
    std::vector<Interval> k_;
    std::vector<Interval> d_;
};

inline constexpr int kMaxPrecisionEscalations = 2;

/// Builds the sequence for (n, beta) and finds its split point, doubling the
/// precision (up to 4x the working precision) while a sign is undecided.
inline std::pair<CoefficientSequence, SplitPoint> split_with_escalation(long n, const Exponent& beta)
{
    long bits = working_precision();
    for (int attempt = 0;; ++attempt) {
        PrecisionGuard guard{Precision(bits)};
        CoefficientSequence seq(n, beta.enclose());
        try {
            SplitPoint sp = split_point(seq);
            return {std::move(seq), sp};
        } catch (const UndecidableSign&) {
            if (attempt == kMaxPrecisionEscalations || beta.kind() == Exponent::Kind::interval) {
                throw;
            }
        }
        bits *= 2;
    }
}

inline Decomposition build(const CoefficientSequence& seq)
{
    return Decomposition(seq, split_point(seq));
}

inline Decomposition build(long n, const Exponent& beta)
{
    auto [seq, sp] = split_with_escalation(n, beta);
    return Decomposition(std::move(seq), sp);
}

/// Number of d-weights in T for (n, beta), zero when fully convex.
inline long count_T_summands(long n, const Exponent& beta = Exponent::named_beta1())
{
    auto [seq, sp] = split_with_escalation(n, beta);
    return seq.n() - sp.m;
}

/// The three coefficients a1 - 4a4 + 3a5, a2 - 3a4 + 2a5, a3 - 2a4 + a5 of H,
/// computed without a split point (needs n >= 6).
inline std::array<Interval, 3> h_coefficients(const CoefficientSequence& seq)
{
    if (seq.n() < 6) {
        throw std::invalid_argument("H needs n >= 6");
    }
    auto a = [&](long k) { return seq.a(k); };
    return {a(1) - Interval(4) * a(4) + Interval(3) * a(5), a(2) - Interval(3) * a(4) + Interval(2) * a(5),
            a(3) - Interval(2) * a(4) + a(5)};
}

/// h_1..h_5 as functions of y = 1/(n^2 - 1) and beta.
struct HFunctionFamily {
    Interval y;
    Interval beta;
    std::array<Interval, 5> h;
};

inline HFunctionFamily h_family(const Interval& y, const Interval& beta)
{
    if (mpfr_sgn(y.lo()) < 0 || mpfr_cmp_q(y.lo(), mpq_class(1, 48).get_mpq_t()) > 0) {
        throw std::invalid_argument("y must lie in [0, 1/48]");
    }
    auto base = [&](long c, long d) { return pow((Interval(1) - Interval(c) * y) / Interval(d), beta); };
    const Interval w = base(3, 2);
    const Interval z = base(8, 3);
    const Interval u = base(15, 4);
    const Interval v = base(24, 5);
    const Interval one(1);
    const Interval two(2);
    HFunctionFamily f{y, beta, {}};
    f.h[0] = one - Interval(4) * u + Interval(3) * v;
    f.h[1] = w - Interval(3) * u + two * v;
    f.h[2] = z - two * u + v;
    f.h[3] = one - two * w + z;
    f.h[4] = w - two * z + u;
    return f;
}

/// Square of the inflection point of (1/x - x)^beta on (0, 1):
/// (sqrt(5 - 4 beta) + beta - 2) / (1 - beta), for beta < 1.
inline Interval inflection_point_squared(const Interval& beta)
{
    const Interval one(1);
    return (sqrt(Interval(5) - Interval(4) * beta) + beta - Interval(2)) / (one - beta);
}

inline Interval inflection_point(const Interval& beta) { return sqrt(inflection_point_squared(beta)); }

} // namespace sinecert

#endif // SINECERT_DECOMPOSE_HPP
