#ifndef SINECERT_POLYNOMIAL_HPP
#define SINECERT_POLYNOMIAL_HPP

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "interval.hpp"

namespace sinecert {

/// Univariate polynomial with exact rational coefficients, stored in
/// ascending degree. The zero polynomial has no coefficients.
class RationalPolynomial {
public:
    RationalPolynomial() = default;

    explicit RationalPolynomial(std::vector<mpq_class> ascending) : c_(std::move(ascending)) { trim(); }

    RationalPolynomial(std::initializer_list<mpq_class> ascending) : c_(ascending) { trim(); }

    static RationalPolynomial constant(const mpq_class& v) { return RationalPolynomial({v}); }
    static RationalPolynomial monomial(const mpq_class& coeff, std::size_t degree)
    {
        std::vector<mpq_class> c(degree + 1, mpq_class(0));
        c[degree] = coeff;
        return RationalPolynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const std::vector<mpq_class>& coefficients() const { return c_; }

    mpq_class coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }

    mpq_class leading() const { return c_.empty() ? mpq_class(0) : c_.back(); }

    mpq_class operator()(const mpq_class& x) const
    {
        mpq_class r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            r = r * x + *it;
        }
        return r;
    }

    Interval operator()(const Interval& x) const
    {
        Interval r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            r = r * x + Interval(*it);
        }
        return r;
    }

    RationalPolynomial derivative() const
    {
        if (c_.size() <= 1) {
            return {};
        }
        std::vector<mpq_class> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            d[i - 1] = c_[i] * static_cast<long>(i);
        }
        return RationalPolynomial(std::move(d));
    }

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b)
    {
        std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = a.coefficient(i) + b.coefficient(i);
        }
        return RationalPolynomial(std::move(r));
    }

    friend RationalPolynomial operator-(const RationalPolynomial& a) { return a * RationalPolynomial::constant(-1); }

    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) { return a + (-b); }

    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, mpq_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return RationalPolynomial(std::move(r));
    }

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.c_ == b.c_; }

    /// Euclidean division: a = q * b + r with deg r < deg b.
    friend std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                                    const RationalPolynomial& b)
    {
        if (b.is_zero()) {
            throw std::invalid_argument("polynomial division by zero");
        }
        std::vector<mpq_class> rem = a.c_;
        const long db = b.degree();
        std::vector<mpq_class> quo(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0, mpq_class(0));
        for (long i = a.degree(); i >= db; --i) {
            mpq_class f = rem[static_cast<std::size_t>(i)] / b.leading();
            quo[static_cast<std::size_t>(i - db)] = f;
            if (f == 0) {
                continue;
            }
            for (long j = 0; j <= db; ++j) {
                rem[static_cast<std::size_t>(i - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
            }
        }
        return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
    }

    /// Human-readable form in the variable `var`, highest degree first.
    std::string to_string(const std::string& var = "x") const
    {
        if (c_.empty()) {
            return "0";
        }
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            const mpq_class& a = c_[static_cast<std::size_t>(i)];
            if (a == 0) {
                continue;
            }
            mpq_class mag = abs(a);
            if (out.empty()) {
                out += a < 0 ? "-" : "";
            } else {
                out += a < 0 ? " - " : " + ";
            }
            const bool unit = mag == 1 && i > 0;
            if (!unit) {
                out += format_rational(mag);
            }
            if (i > 0) {
                out += unit ? "" : "*";
                out += var;
                if (i > 1) {
                    out += "^" + std::to_string(i);
                }
            }
        }
        return out;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) {
            c_.pop_back();
        }
    }

    std::vector<mpq_class> c_;
};

/// Sturm chain p, p', -rem(p, p'), ... ending at the last nonzero remainder.
inline std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p)
{
    if (p.is_zero()) {
        throw std::invalid_argument("Sturm sequence of the zero polynomial");
    }
    std::vector<RationalPolynomial> seq{p};
    RationalPolynomial d = p.derivative();
    if (d.is_zero()) {
        return seq;
    }
    seq.push_back(d);
    while (true) {
        auto rem = divmod(seq[seq.size() - 2], seq.back()).second;
        if (rem.is_zero()) {
            break;
        }
        seq.push_back(-rem);
    }
    return seq;
}

/// Sign changes of the chain evaluated at x, zeros skipped.
inline int sign_variations(const std::vector<RationalPolynomial>& chain, const mpq_class& x)
{
    int changes = 0;
    int last = 0;
    for (const auto& q : chain) {
        const int s = sgn(q(x));
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++changes;
        }
        last = s;
    }
    return changes;
}

/// Number of distinct real roots of p in the open interval (a, b).
/// Throws std::invalid_argument if a >= b or either endpoint is a root.
inline int sturm_count(const RationalPolynomial& p, const mpq_class& a, const mpq_class& b)
{
    if (!(a < b)) {
        throw std::invalid_argument("Sturm interval must satisfy a < b");
    }
    if (p.is_zero()) {
        throw std::invalid_argument("Sturm count of the zero polynomial");
    }
    if (p(a) == 0 || p(b) == 0) {
        throw std::invalid_argument("Sturm interval endpoint is a root; perturb it");
    }
    const auto chain = sturm_sequence(p);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

struct SturmResult {
    RationalPolynomial polynomial;
    mpq_class a;
    mpq_class b;
    int roots = 0;
    mpq_class sample;
    mpq_class sample_value;
    bool positive = false;
};

/// Certifies p > 0 on (a, b): no roots there and a positive value at the midpoint.
inline SturmResult sturm_positive(const RationalPolynomial& p, const mpq_class& a, const mpq_class& b)
{
    SturmResult r;
    r.polynomial = p;
    r.a = a;
    r.b = b;
    r.roots = sturm_count(p, a, b);
    r.sample = (a + b) / 2;
    r.sample_value = p(r.sample);
    r.positive = r.roots == 0 && r.sample_value > 0;
    return r;
}

/// Isolates the real roots of p in (a, b) by Sturm bisection down to width
/// `tol`; each returned pair (lo, hi) brackets exactly one root in (lo, hi).
/// The endpoints a and b must not be roots.
inline std::vector<std::pair<mpq_class, mpq_class>> isolate_roots(const RationalPolynomial& p, const mpq_class& a,
                                                                  const mpq_class& b, const mpq_class& tol)
{
    const auto chain = sturm_sequence(p);
    std::vector<std::pair<mpq_class, mpq_class>> out;
    std::vector<std::pair<mpq_class, mpq_class>> work{{a, b}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        const int count = sign_variations(chain, lo) - sign_variations(chain, hi);
        if (count == 0) {
            continue;
        }
        if (count == 1 && hi - lo <= tol) {
            out.emplace_back(lo, hi);
            continue;
        }
        // split at a non-root so both halves keep root-free endpoints
        mpq_class mid = (lo + hi) / 2;
        for (long k = 3; p(mid) == 0; k += 2) {
            mid = lo + (hi - lo) / k;
        }
        work.emplace_back(mid, hi);
        work.emplace_back(lo, mid);
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
}

} // namespace sinecert

#endif // SINECERT_POLYNOMIAL_HPP
