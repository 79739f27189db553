#ifndef SINECERT_REPORT_HPP
#define SINECERT_REPORT_HPP

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "certify.hpp"
#include "interval.hpp"
#include "polynomial.hpp"
#include "serialize.hpp"

namespace sinecert {

enum class Status { certified, numeric_pass, fail, inconclusive };

inline const char* status_name(Status s)
{
    switch (s) {
    case Status::certified:
        return "certified";
    case Status::numeric_pass:
        return "numeric-pass";
    case Status::fail:
        return "fail";
    case Status::inconclusive:
        return "inconclusive";
    }
    return "?";
}

inline bool status_ok(Status s) { return s == Status::certified || s == Status::numeric_pass; }

struct ReportConstant {
    std::string name;
    Interval value;
};

/// One checked inequality or property. `rigorous` is false for grid-only evidence.
struct ReportClaim {
    std::string name;
    Verdict verdict = Verdict::fail;
    bool rigorous = true;
    std::string detail;
};

struct SturmRecord {
    std::string name;
    SturmResult result;
};

struct LemmaReport {
    std::string id;
    Status status = Status::inconclusive;
    std::vector<ReportConstant> constants;
    std::vector<ReportClaim> claims;
    std::vector<DifCertificate> certificates;
    std::vector<SturmRecord> sturm;
    std::vector<std::string> notes;

    void constant(std::string name, Interval value) { constants.push_back({std::move(name), std::move(value)}); }

    void claim(std::string name, Verdict v, std::string detail = {}, bool rigorous = true)
    {
        claims.push_back({std::move(name), v, rigorous, std::move(detail)});
    }
    void claim(std::string name, bool ok, std::string detail = {}, bool rigorous = true)
    {
        claim(std::move(name), ok ? Verdict::pass : Verdict::fail, std::move(detail), rigorous);
    }

    void note(std::string text) { notes.push_back(std::move(text)); }

    const Interval* find_constant(const std::string& name) const
    {
        for (const auto& c : constants) {
            if (c.name == name) {
                return &c.value;
            }
        }
        return nullptr;
    }

    const ReportClaim* find_claim(const std::string& name) const
    {
        for (const auto& c : claims) {
            if (c.name == name) {
                return &c;
            }
        }
        return nullptr;
    }

    /// Derives the status from the claims and Sturm records.
    void finalize()
    {
        bool any_fail = false;
        bool any_open = false;
        bool numeric_only = false;
        for (const auto& c : claims) {
            any_fail = any_fail || c.verdict == Verdict::fail;
            any_open = any_open || c.verdict == Verdict::inconclusive;
            numeric_only = numeric_only || (!c.rigorous && c.verdict == Verdict::pass);
        }
        for (const auto& s : sturm) {
            any_fail = any_fail || !s.result.positive;
        }
        if (any_fail) {
            status = Status::fail;
        } else if (any_open) {
            status = Status::inconclusive;
        } else if (numeric_only) {
            status = Status::numeric_pass;
        } else {
            status = Status::certified;
        }
    }
};

inline std::string one_line(std::string s)
{
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

/// Line-oriented report text; embedded certificates use the certificate format.
inline std::string write_report(const LemmaReport& r)
{
    std::ostringstream out;
    out << "sinecert-report v1\n";
    out << "lemma " << r.id << '\n';
    out << "status " << status_name(r.status) << '\n';
    for (const auto& c : r.constants) {
        out << "constant " << c.name << ' ' << mpfr_to_roundtrip(c.value.lo()) << ' ' << mpfr_to_roundtrip(c.value.hi())
            << '\n';
    }
    for (const auto& c : r.claims) {
        out << "claim " << verdict_name(c.verdict) << (c.rigorous ? " rigorous " : " numeric ") << c.name;
        if (!c.detail.empty()) {
            out << " : " << one_line(c.detail);
        }
        out << '\n';
    }
    for (const auto& s : r.sturm) {
        out << "sturm " << s.name << " poly " << s.result.polynomial.to_string() << " on " << format_rational(s.result.a)
            << ' ' << format_rational(s.result.b) << " roots " << s.result.roots << " positive "
            << (s.result.positive ? "yes" : "no") << '\n';
    }
    for (const auto& n : r.notes) {
        out << "note " << one_line(n) << '\n';
    }
    out << "certificates " << r.certificates.size() << '\n';
    for (const auto& c : r.certificates) {
        out << write_certificate(c);
    }
    out << "end-report\n";
    return out.str();
}

/// Fixed-width table: id, status, passed claims / total, certificates, Sturm checks.
inline std::string summary_table(const std::vector<LemmaReport>& reports)
{
    std::ostringstream out;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-16s %-13s %9s %6s %6s\n", "id", "status", "claims", "certs", "sturm");
    out << buf;
    for (const auto& r : reports) {
        const auto passed = std::count_if(r.claims.begin(), r.claims.end(),
                                          [](const ReportClaim& c) { return c.verdict == Verdict::pass; });
        const std::string claims = std::to_string(passed) + "/" + std::to_string(r.claims.size());
        std::snprintf(buf, sizeof buf, "%-16s %-13s %9s %6zu %6zu\n", r.id.c_str(), status_name(r.status),
                      claims.c_str(), r.certificates.size(), r.sturm.size());
        out << buf;
    }
    return out.str();
}

} // namespace sinecert

#endif // SINECERT_REPORT_HPP
