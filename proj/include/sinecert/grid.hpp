#ifndef SINECERT_GRID_HPP
#define SINECERT_GRID_HPP

#include <map>
#include <optional>
#include <utility>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

#include "interval.hpp"
#include "sinepoly.hpp"

namespace sinecert {

inline constexpr long kDefaultGridCells = 8192;

struct CellBound {
    /// Cell index j; the cell is [j pi / N, (j + 1) pi / N].
    long cell = 0;
    Interval x;
    /// Enclosure of S over the cell.
    Interval value;
};

struct BruteMinResult {
    long n = 0;
    long cells = 0;
    /// Cell whose enclosure has the smallest lower bound.
    CellBound min;
    /// Cells whose enclosure is entirely negative.
    long negative_cells = 0;
    std::optional<CellBound> first_negative;
};

namespace detail {

// Tables of sin(i pi / N) and cos(i pi / N) for 0 <= i < 2N, with the
// exactly known values pinned.
struct TrigTables {
    long N;
    std::vector<Interval> sin;
    std::vector<Interval> cos;

    explicit TrigTables(long cells) : N(cells)
    {
        const Interval step = pi_interval() / Interval(cells);
        const auto len = static_cast<std::size_t>(2 * cells);
        sin.resize(len);
        cos.resize(len);
        if (cells % 2 != 0) {
            for (long i = 0; i < 2 * cells; ++i) {
                Interval t = Interval(i) * step;
                sin[static_cast<std::size_t>(i)] = sinecert::sin(t);
                cos[static_cast<std::size_t>(i)] = sinecert::cos(t);
            }
        } else {
            // First quadrant only; the rest follows from exact symmetries.
            const long q = cells / 2;
            for (long i = 1; i < q; ++i) {
                sin[static_cast<std::size_t>(i)] = sinecert::sin(Interval(i) * step);
            }
            sin[static_cast<std::size_t>(q)] = Interval(1);
            for (long i = q + 1; i <= cells; ++i) {
                sin[static_cast<std::size_t>(i)] = sin[static_cast<std::size_t>(cells - i)];
            }
            for (long i = cells + 1; i < 2 * cells; ++i) {
                sin[static_cast<std::size_t>(i)] = -sin[static_cast<std::size_t>(i - cells)];
            }
            for (long i = 0; i < 2 * cells; ++i) {
                cos[static_cast<std::size_t>(i)] = sin[static_cast<std::size_t>((i + q) % (2 * cells))];
            }
        }
        auto pin = [](std::vector<Interval>& tab, long i, long v) { tab[static_cast<std::size_t>(i)] = Interval(v); };
        pin(sin, 0, 0);
        pin(sin, cells, 0);
        pin(cos, 0, 1);
        pin(cos, cells, -1);
        if (cells % 2 == 0) {
            pin(sin, cells / 2, 1);
            pin(sin, 3 * cells / 2, -1);
            pin(cos, cells / 2, 0);
            pin(cos, 3 * cells / 2, 0);
        }
    }

    /// Tables are shared per (cells, precision) within a thread.
    static const TrigTables& cached(long cells)
    {
        thread_local std::map<std::pair<long, long>, TrigTables> cache;
        const auto key = std::make_pair(cells, working_precision());
        auto it = cache.find(key);
        if (it == cache.end()) {
            it = cache.emplace(key, TrigTables(cells)).first;
        }
        return it->second;
    }

    // Angles are handled as doubled indices (units of pi / (2N)) so that the
    // quarter-period points are integers. True when some offset2 + l * period2
    // lies in [a2, b2].
    static bool lattice_hit(long long a2, long long b2, long long offset2, long long period2)
    {
        long long r = (offset2 - a2) % period2;
        if (r < 0) {
            r += period2;
        }
        return a2 + r <= b2;
    }

    // Range of sin over angles [a, b] (units of pi / N), b - a < 2N.
    void sin_range(long long a, long long b, mpfr_ptr lo, mpfr_ptr hi) const
    {
        const auto& va = sin[static_cast<std::size_t>(a % (2 * N))];
        const auto& vb = sin[static_cast<std::size_t>(b % (2 * N))];
        mpfr_min(lo, va.lo(), vb.lo(), MPFR_RNDD);
        mpfr_max(hi, va.hi(), vb.hi(), MPFR_RNDU);
        if (lattice_hit(2 * a, 2 * b, N, 4 * N)) {
            mpfr_set_si(hi, 1, MPFR_RNDU);
        }
        if (lattice_hit(2 * a, 2 * b, 3 * N, 4 * N)) {
            mpfr_set_si(lo, -1, MPFR_RNDD);
        }
    }

    void cos_range(long long a, long long b, mpfr_ptr lo, mpfr_ptr hi) const
    {
        const auto& va = cos[static_cast<std::size_t>(a % (2 * N))];
        const auto& vb = cos[static_cast<std::size_t>(b % (2 * N))];
        mpfr_min(lo, va.lo(), vb.lo(), MPFR_RNDD);
        mpfr_max(hi, va.hi(), vb.hi(), MPFR_RNDU);
        if (lattice_hit(2 * a, 2 * b, 0, 4 * N)) {
            mpfr_set_si(hi, 1, MPFR_RNDU);
        }
        if (lattice_hit(2 * a, 2 * b, 2 * N, 4 * N)) {
            mpfr_set_si(lo, -1, MPFR_RNDD);
        }
    }
};

// acc_lo/acc_hi += [clo, chi] * [slo, shi] for a coefficient with clo >= 0.
// Separate directed multiply and add; mpfr_fma is several times slower.
inline void accumulate_positive(mpfr_ptr acc_lo, mpfr_ptr acc_hi, mpfr_srcptr clo, mpfr_srcptr chi, mpfr_srcptr slo,
                                mpfr_srcptr shi, mpfr_ptr scratch)
{
    mpfr_mul(scratch, mpfr_sgn(slo) >= 0 ? clo : chi, slo, MPFR_RNDD);
    mpfr_add(acc_lo, acc_lo, scratch, MPFR_RNDD);
    mpfr_mul(scratch, mpfr_sgn(shi) >= 0 ? chi : clo, shi, MPFR_RNDU);
    mpfr_add(acc_hi, acc_hi, scratch, MPFR_RNDU);
}

} // namespace detail

/// Encloses S_{n,beta} over each of `cells` uniform cells of [0, pi] and
/// reports the cell with the smallest lower bound and any cells whose
/// enclosure is entirely negative. Cells that a global Lipschitz bound already
/// shows nonnegative are not refined further; the others get the intersection
/// of a mean-value form expanded at both ends of the cell and the termwise
/// range bound. S(0) = S(pi) = 0 exactly, so cell 0 is always refined and the
/// reported minimum is never positive.
inline BruteMinResult brute_min(long n, const Interval& beta, long cells = kDefaultGridCells)
{
    if (n < 2) {
        throw std::invalid_argument("brute_min needs n >= 2");
    }
    if (cells < 64) {
        throw std::invalid_argument("brute_min needs at least 64 cells");
    }
    const detail::TrigTables& tab = detail::TrigTables::cached(cells);
    const CoefficientSequence seq(n, beta);
    // Coefficients a_k (k = 1..n-1) and k a_k, all positive.
    std::vector<Interval> a;
    std::vector<Interval> ka;
    for (long k = 1; k < n; ++k) {
        a.push_back(seq.a(k));
        ka.push_back(Interval(k) * seq.a(k));
    }
    const Interval h = pi_interval() / Interval(cells);
    const mpfr_prec_t prec = working_precision();
    using detail::MpfrTemp;
    MpfrTemp slo(prec), shi(prec), vlo(prec), vhi(prec), dlo(prec), dhi(prec), nlo(prec), nhi(prec), t(prec);

    // Node values S(j pi / N) for j = 0..N.
    std::vector<Interval> node(static_cast<std::size_t>(cells + 1));
    for (long j = 0; j <= cells; ++j) {
        Interval& out = node[static_cast<std::size_t>(j)];
        if (j == 0 || j == cells) {
            out = Interval(0);
            continue;
        }
        mpfr_set_zero(vlo.v, 1);
        mpfr_set_zero(vhi.v, 1);
        long idx = 0;
        for (long k = 1; k < n; ++k) {
            idx += j;
            if (idx >= 2 * cells) {
                idx -= 2 * cells;
            }
            const auto& s = tab.sin[static_cast<std::size_t>(idx)];
            const auto& c = a[static_cast<std::size_t>(k - 1)];
            detail::accumulate_positive(vlo.v, vhi.v, c.lo(), c.hi(), s.lo(), s.hi(), t.v);
        }
        out = Interval::from_endpoints(vlo.v, vhi.v);
    }

    BruteMinResult r;
    r.n = n;
    r.cells = cells;
    // |S'| <= L = sum k a_k, so on a cell S >= (S(x_j) + S(x_{j+1}) - h L) / 2.
    // Cells where that is already nonnegative keep this cheaper enclosure.
    Interval lip(0);
    for (const auto& c : ka) {
        lip += c;
    }
    const Interval half_hl = h * lip / Interval(2);
    bool have_min = false;
    for (long j = 0; j < cells; ++j) {
        {
            const Interval& left = node[static_cast<std::size_t>(j)];
            const Interval& right = node[static_cast<std::size_t>(j + 1)];
            mpfr_add(vlo.v, left.lo(), right.lo(), MPFR_RNDD);
            mpfr_div_2ui(vlo.v, vlo.v, 1, MPFR_RNDD);
            mpfr_sub(vlo.v, vlo.v, half_hl.hi(), MPFR_RNDD);
            if (mpfr_sgn(vlo.v) >= 0 && have_min) {
                continue;
            }
        }
        // derivative range over the cell
        mpfr_set_zero(dlo.v, 1);
        mpfr_set_zero(dhi.v, 1);
        for (long k = 1; k < n; ++k) {
            tab.cos_range(static_cast<long long>(k) * j, static_cast<long long>(k) * (j + 1), slo.v, shi.v);
            const auto& c = ka[static_cast<std::size_t>(k - 1)];
            detail::accumulate_positive(dlo.v, dhi.v, c.lo(), c.hi(), slo.v, shi.v, t.v);
        }
        const Interval& left = node[static_cast<std::size_t>(j)];
        const Interval& right = node[static_cast<std::size_t>(j + 1)];
        // forward: S(x_j) + [0, h] D ; backward: S(x_{j+1}) - [0, h] D
        mpfr_set(vlo.v, left.lo(), MPFR_RNDD);
        mpfr_set(vhi.v, left.hi(), MPFR_RNDU);
        if (mpfr_sgn(dlo.v) < 0) {
            mpfr_fma(vlo.v, h.hi(), dlo.v, vlo.v, MPFR_RNDD);
        }
        if (mpfr_sgn(dhi.v) > 0) {
            mpfr_fma(vhi.v, h.hi(), dhi.v, vhi.v, MPFR_RNDU);
        }
        mpfr_set(nlo.v, right.lo(), MPFR_RNDD);
        mpfr_set(nhi.v, right.hi(), MPFR_RNDU);
        if (mpfr_sgn(dhi.v) > 0) {
            mpfr_mul(t.v, h.hi(), dhi.v, MPFR_RNDU);
            mpfr_sub(nlo.v, nlo.v, t.v, MPFR_RNDD);
        }
        if (mpfr_sgn(dlo.v) < 0) {
            mpfr_mul(t.v, h.hi(), dlo.v, MPFR_RNDD);
            mpfr_sub(nhi.v, nhi.v, t.v, MPFR_RNDU);
        }
        mpfr_max(vlo.v, vlo.v, nlo.v, MPFR_RNDD);
        mpfr_min(vhi.v, vhi.v, nhi.v, MPFR_RNDU);
        if (mpfr_sgn(vlo.v) < 0) {
            // termwise range bound
            mpfr_set_zero(nlo.v, 1);
            mpfr_set_zero(nhi.v, 1);
            for (long k = 1; k < n; ++k) {
                tab.sin_range(static_cast<long long>(k) * j, static_cast<long long>(k) * (j + 1), slo.v, shi.v);
                const auto& c = a[static_cast<std::size_t>(k - 1)];
                detail::accumulate_positive(nlo.v, nhi.v, c.lo(), c.hi(), slo.v, shi.v, t.v);
            }
            mpfr_max(vlo.v, vlo.v, nlo.v, MPFR_RNDD);
            mpfr_min(vhi.v, vhi.v, nhi.v, MPFR_RNDU);
        }
        const bool is_new_min = !have_min || mpfr_less_p(vlo.v, r.min.value.lo());
        const bool negative = mpfr_sgn(vhi.v) < 0;
        if (is_new_min || (negative && !r.first_negative)) {
            CellBound cb{j, hull(Interval(j) * h, Interval(j + 1) * h), Interval::from_endpoints(vlo.v, vhi.v)};
            if (negative && !r.first_negative) {
                r.first_negative = cb;
            }
            if (is_new_min) {
                r.min = std::move(cb);
                have_min = true;
            }
        }
        if (negative) {
            ++r.negative_cells;
        }
    }
    return r;
}

struct SharpnessWitness {
    long cell = 0;
    Interval x;
    /// Cell midpoint.
    Interval midpoint;
    /// Enclosure of S over the whole cell (entirely negative).
    Interval value;
};

/// Returns a cell of [0, pi] on which S_{n,beta} is certainly negative, if any.
inline std::optional<SharpnessWitness> sharpness(long n, const Interval& beta, long cells = kDefaultGridCells)
{
    auto r = brute_min(n, beta, cells);
    if (!r.first_negative) {
        return std::nullopt;
    }
    const auto& c = *r.first_negative;
    return SharpnessWitness{c.cell, c.x, c.x.midpoint(), c.value};
}

} // namespace sinecert

#endif // SINECERT_GRID_HPP
