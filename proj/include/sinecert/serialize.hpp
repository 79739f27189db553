#ifndef SINECERT_SERIALIZE_HPP
#define SINECERT_SERIALIZE_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "certify.hpp"
#include "expr.hpp"
#include "interval.hpp"

namespace sinecert {

inline constexpr const char* kCertificateMagic = "sinecert-certificate v1";

/// The certificate text is malformed or incomplete.
class CertificateParseError : public std::runtime_error {
public:
    CertificateParseError(const std::string& what, long line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    long line() const { return line_; }

private:
    long line_;
};

/// Line-oriented certificate text:
///
///   sinecert-certificate v1
///   precision 128
///   variable y
///   domain 0 1/48
///   direction increasing
///   g1 <expression>
///   g2 <expression>
///   monotonicity certified|declared
///   points <m>
///   link <t_i> <t_i+1> g1 <lo> <hi> g2 <lo> <hi> diff <lo>
///   ...
///   end
///
/// Enclosure endpoints are round-trip decimals at the stated precision, so
/// parsing restores the recorded bits exactly.
inline std::string write_certificate(const DifCertificate& cert)
{
    std::ostringstream out;
    out << kCertificateMagic << '\n';
    out << "precision " << cert.precision << '\n';
    out << "variable " << cert.g1.var << '\n';
    out << "domain " << format_rational(cert.g1.lo) << ' ' << format_rational(cert.g1.hi) << '\n';
    out << "direction " << direction_name(cert.g1.direction) << '\n';
    out << "g1 " << cert.g1.expr.to_string(cert.g1.var) << '\n';
    out << "g2 " << cert.g2.expr.to_string(cert.g2.var) << '\n';
    out << "monotonicity " << (cert.monotonicity_certified ? "certified" : "declared") << '\n';
    out << "points " << cert.chain.size() << '\n';
    for (const auto& l : cert.links) {
        out << "link " << format_rational(l.left) << ' ' << format_rational(l.right) << " g1 "
            << mpfr_to_roundtrip(l.g1.lo()) << ' ' << mpfr_to_roundtrip(l.g1.hi()) << " g2 "
            << mpfr_to_roundtrip(l.g2.lo()) << ' ' << mpfr_to_roundtrip(l.g2.hi()) << " diff "
            << mpfr_to_roundtrip(l.diff.lo()) << '\n';
    }
    out << "end\n";
    return out.str();
}

namespace detail {

class CertificateReader {
public:
    explicit CertificateReader(const std::string& text)
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            lines_.push_back(line);
        }
    }

    long line_no() const { return static_cast<long>(pos_); }

    std::string next()
    {
        if (pos_ >= lines_.size()) {
            throw CertificateParseError("unexpected end of certificate", line_no() + 1);
        }
        return lines_[pos_++];
    }

    // Returns the remainder of a "key value" line.
    std::string field(const std::string& key)
    {
        std::string line = next();
        if (line.rfind(key + " ", 0) != 0) {
            throw CertificateParseError("expected '" + key + "'", line_no());
        }
        return line.substr(key.size() + 1);
    }

    mpq_class rational(const std::string& token)
    {
        auto q = parse_rational(token);
        if (!q) {
            throw CertificateParseError("malformed rational '" + token + "'", line_no());
        }
        return *q;
    }

    bool at_end() const { return pos_ >= lines_.size(); }

private:
    std::vector<std::string> lines_;
    std::size_t pos_ = 0;
};

inline std::vector<std::string> split_words(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) {
        out.push_back(w);
    }
    return out;
}

} // namespace detail

/// A certificate as read from text, with the link values exactly as recorded.
struct ParsedCertificate {
    DifCertificate cert;
};

/// Parses certificate text. The recorded link enclosures are kept as written;
/// nothing is re-evaluated here. Throws CertificateParseError.
inline ParsedCertificate parse_certificate(const std::string& text)
{
    detail::CertificateReader r(text);
    if (r.next() != kCertificateMagic) {
        throw CertificateParseError("missing certificate header", r.line_no());
    }
    ParsedCertificate p;
    DifCertificate& c = p.cert;
    try {
        c.precision = std::stol(r.field("precision"));
    } catch (const std::logic_error&) {
        throw CertificateParseError("malformed precision", r.line_no());
    }
    if (c.precision < kMinPrecisionBits) {
        throw CertificateParseError("precision below " + std::to_string(kMinPrecisionBits) + " bits", r.line_no());
    }
    const std::string var = r.field("variable");
    auto dom = detail::split_words(r.field("domain"));
    if (dom.size() != 2) {
        throw CertificateParseError("domain needs two endpoints", r.line_no());
    }
    const mpq_class lo = r.rational(dom[0]);
    const mpq_class hi = r.rational(dom[1]);
    const std::string dir = r.field("direction");
    Direction direction;
    if (dir == "increasing") {
        direction = Direction::increasing;
    } else if (dir == "decreasing") {
        direction = Direction::decreasing;
    } else {
        throw CertificateParseError("unknown direction '" + dir + "'", r.line_no());
    }
    auto read_fn = [&](const std::string& key) {
        std::string text_expr = r.field(key);
        try {
            return MonotoneFn{parse_expr(text_expr, var), direction, lo, hi, var};
        } catch (const ParseError& e) {
            throw CertificateParseError(std::string("bad expression: ") + e.what(), r.line_no());
        }
    };
    c.g1 = read_fn("g1");
    c.g2 = read_fn("g2");
    const std::string mono = r.field("monotonicity");
    if (mono != "certified" && mono != "declared") {
        throw CertificateParseError("monotonicity must be 'certified' or 'declared'", r.line_no());
    }
    c.monotonicity_certified = mono == "certified";
    long points = 0;
    try {
        points = std::stol(r.field("points"));
    } catch (const std::logic_error&) {
        throw CertificateParseError("malformed point count", r.line_no());
    }
    if (points < 2) {
        throw CertificateParseError("a chain needs at least two points", r.line_no());
    }
    for (long i = 0; i + 1 < points; ++i) {
        auto w = detail::split_words(r.next());
        if (w.size() != 11 || w[0] != "link" || w[3] != "g1" || w[6] != "g2" || w[9] != "diff") {
            throw CertificateParseError("malformed link record", r.line_no());
        }
        DifLink l;
        l.left = r.rational(w[1]);
        l.right = r.rational(w[2]);
        try {
            l.g1 = interval_from_roundtrip(w[4], w[5], c.precision);
            l.g2 = interval_from_roundtrip(w[7], w[8], c.precision);
            l.diff = interval_from_roundtrip(w[10], w[10], c.precision);
        } catch (const std::invalid_argument& e) {
            throw CertificateParseError(e.what(), r.line_no());
        }
        if (i == 0) {
            c.chain.push_back(l.left);
        } else if (l.left != c.chain.back()) {
            throw CertificateParseError("link does not start where the previous one ended", r.line_no());
        }
        c.chain.push_back(l.right);
        c.links.push_back(std::move(l));
    }
    if (r.next() != "end") {
        throw CertificateParseError("expected 'end'", r.line_no());
    }
    return p;
}

/// Re-validates a parsed certificate at its recorded precision: every link is
/// re-evaluated from scratch and must be strictly positive, and every recorded
/// value must agree bit for bit with the recomputation.
inline CheckResult check_parsed_certificate(const ParsedCertificate& p)
{
    PrecisionGuard guard{Precision(p.cert.precision)};
    CheckResult r = check_certificate(p.cert);
    if (r.verdict != Verdict::pass) {
        return r;
    }
    auto same = [](const Interval& a, const Interval& b) {
        return mpfr_equal_p(a.lo(), b.lo()) && mpfr_equal_p(a.hi(), b.hi());
    };
    for (std::size_t i = 0; i < r.links.size(); ++i) {
        const DifLink& rec = p.cert.links[i];
        const DifLink& fresh = r.links[i];
        if (!same(rec.g1, fresh.g1) || !same(rec.g2, fresh.g2) || !mpfr_equal_p(rec.diff.lo(), fresh.diff.lo())) {
            r.verdict = Verdict::fail;
            r.failing_link = static_cast<long>(i);
            r.message = "recorded values on link " + std::to_string(i) + " do not match re-evaluation";
            return r;
        }
    }
    return r;
}

} // namespace sinecert

#endif // SINECERT_SERIALIZE_HPP
