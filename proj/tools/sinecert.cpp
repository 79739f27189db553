#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <sinecert/json_report.hpp>
#include <sinecert/sinecert.hpp>

namespace fs = std::filesystem;
using namespace sinecert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    long precision = kDefaultPrecisionBits;
    long cells = kDefaultGridCells;
    int max_points = 64;
    std::string out;
    bool json = false;
};

struct Range {
    long lo = 0;
    long hi = 0;
};

std::optional<Range> parse_range(const std::string& s)
{
    try {
        std::size_t used = 0;
        const auto dots = s.find("..");
        if (dots == std::string::npos) {
            const long v = std::stol(s, &used);
            if (used != s.size()) {
                return std::nullopt;
            }
            return Range{v, v};
        }
        const std::string a = s.substr(0, dots);
        const std::string b = s.substr(dots + 2);
        Range r;
        r.lo = std::stol(a, &used);
        if (used != a.size()) {
            return std::nullopt;
        }
        r.hi = std::stol(b, &used);
        if (used != b.size() || r.hi < r.lo) {
            return std::nullopt;
        }
        return r;
    } catch (const std::logic_error&) {
        return std::nullopt;
    }
}

void write_file(const fs::path& path, const std::string& text)
{
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) {
        throw std::runtime_error("cannot write " + path.string());
    }
}

// Display only; reports carry the exact endpoints.
double as_double(mpfr_srcptr v) { return mpfr_get_d(v, MPFR_RNDN); }

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

// beta certified >= beta1
bool at_least_beta1(const Exponent& e)
{
    return e.is_beta1() || certainly_less_equal(named_constant(NamedConstant::beta1), e.enclose());
}

int cmd_verify(const RunConfig& cfg, const std::string& id)
{
    if (id != "all" && !is_verification_id(id)) {
        std::cerr << "unknown id '" << id << "'; expected all";
        for (const auto& i : verification_ids()) {
            std::cerr << ", " << i;
        }
        std::cerr << '\n';
        return kExitUsage;
    }
    const auto reports = run_verification(id, cfg.max_points);
    const fs::path out = cfg.out.empty() ? fs::path("sinecert-reports") : fs::path(cfg.out);
    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && status_ok(r.status);
        if (cfg.json) {
            write_file(out / (r.id + ".json"), dump(to_json(r)));
        } else {
            write_file(out / (r.id + ".report"), write_report(r));
        }
        for (std::size_t i = 0; i < r.certificates.size(); ++i) {
            char name[64];
            std::snprintf(name, sizeof name, "%s-%02zu.cert", r.id.c_str(), i + 1);
            write_file(out / name, write_certificate(r.certificates[i]));
        }
        if (r.id == "h-certificates") {
            write_file(out / "h1-printed-chain.cert", write_certificate(printed_h1_certificate()));
        }
        for (const auto& c : r.claims) {
            if (c.verdict != Verdict::pass) {
                std::cout << r.id << ": " << verdict_name(c.verdict) << ' ' << c.name
                          << (c.detail.empty() ? "" : " (" + one_line(c.detail) + ")") << '\n';
            }
        }
    }
    std::cout << summary_table(reports);
    std::cout << "reports written to " << out.string() << '\n';
    return ok ? kExitOk : kExitFail;
}

int cmd_pipeline(const RunConfig& cfg, const std::string& n_spec, const std::string& beta_spec)
{
    const auto range = parse_range(n_spec);
    if (!range || range->lo < 7) {
        std::cerr << "--n must be an integer or a..b with n >= 7\n";
        return kExitUsage;
    }
    std::optional<Exponent> beta;
    try {
        beta = Exponent::parse(beta_spec);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
    bool all = true;
    const bool single = range->lo == range->hi;
    for (long n = range->lo; n <= range->hi; ++n) {
        const PipelineTrace t = pipeline(n, *beta);
        all = all && t.proved();
        const std::string text = cfg.json ? dump(to_json(t)) : write_trace(t);
        if (!cfg.out.empty()) {
            const std::string ext = cfg.json ? ".json" : ".trace";
            write_file(fs::path(cfg.out) / ("pipeline-" + std::to_string(n) + "-" + beta_spec + ext), text);
        }
        if (single) {
            std::cout << text;
        } else {
            std::cout << n << ' ' << (t.branch.empty() ? "none" : t.branch) << ' '
                      << (t.proved() ? "proved" : "not-proved: " + t.first_failure()) << '\n';
        }
    }
    return all ? kExitOk : kExitFail;
}

int cmd_scan(const RunConfig& cfg, const std::string& n_spec, const std::string& beta_spec)
{
    const auto range = parse_range(n_spec);
    if (!range || range->lo < 2) {
        std::cerr << "--n must be an integer or a..b with n >= 2\n";
        return kExitUsage;
    }
    if (cfg.cells < 64) {
        std::cerr << "--cells must be at least 64\n";
        return kExitUsage;
    }
    std::optional<Exponent> beta;
    try {
        beta = Exponent::parse(beta_spec);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
    const Interval b = beta->enclose();
    const bool above = at_least_beta1(*beta);
    long negative_n = 0;
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream table;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%5s %7s %-26s %9s  %s\n", "n", "cell", "min lower bound", "negative",
                  "witness");
    table << buf;
    for (long n = range->lo; n <= range->hi; ++n) {
        const BruteMinResult r = brute_min(n, b, cfg.cells);
        std::string witness = "-";
        if (r.first_negative) {
            ++negative_n;
            const auto& w = *r.first_negative;
            char wb[128];
            std::snprintf(wb, sizeof wb, "x = %.12f, S in [%.6e, %.6e]", as_double(w.x.midpoint().lo()),
                          as_double(w.value.lo()), as_double(w.value.hi()));
            witness = wb;
        }
        std::snprintf(buf, sizeof buf, "%5ld %7ld %-26.12e %9ld  %s\n", n, r.min.cell, as_double(r.min.value.lo()),
                      r.negative_cells, witness.c_str());
        table << buf;
        rows.push_back(to_json(r));
    }
    if (cfg.json) {
        nlohmann::json j{{"beta", beta_spec}, {"cells", cfg.cells}, {"results", rows}};
        std::cout << dump(j);
    } else {
        std::cout << table.str();
        std::cout << "beta " << beta_spec << (above ? " >= beta1" : " < beta1 or undecided") << "; " << negative_n
                  << " of " << (range->hi - range->lo + 1) << " n with a certified negative cell\n";
        if (negative_n > 0 && above) {
            std::cout << "certified negative cell at beta >= beta1: contradicts nonnegativity\n";
        }
    }
    if (!cfg.out.empty()) {
        write_file(fs::path(cfg.out) / ("scan-" + n_spec + "-" + beta_spec + (cfg.json ? ".json" : ".txt")),
                   cfg.json ? dump({{"beta", beta_spec}, {"cells", cfg.cells}, {"results", rows}}) : table.str());
    }
    return negative_n > 0 ? kExitFail : kExitOk;
}

// Splits a file into certificate blocks; a report embeds them verbatim.
std::vector<std::string> certificate_blocks(const std::string& text)
{
    std::vector<std::string> blocks;
    std::istringstream in(text);
    std::string line;
    std::string cur;
    bool inside = false;
    while (std::getline(in, line)) {
        if (line == kCertificateMagic) {
            if (inside) {
                blocks.push_back(cur);
            }
            inside = true;
            cur.clear();
        }
        if (inside) {
            cur += line + "\n";
            if (line == "end") {
                blocks.push_back(cur);
                inside = false;
            }
        }
    }
    if (inside) {
        blocks.push_back(cur);
    }
    return blocks;
}

int cmd_check(const std::string& path)
{
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::runtime_error& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
    std::vector<std::string> blocks = certificate_blocks(text);
    if (blocks.empty()) {
        blocks.push_back(text);
    }
    bool ok = true;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        ParsedCertificate p;
        try {
            p = parse_certificate(blocks[i]);
        } catch (const CertificateParseError& e) {
            std::cerr << path << ": certificate " << i + 1 << ": " << e.what() << '\n';
            return kExitUsage;
        }
        const CheckResult r = check_parsed_certificate(p);
        std::cout << "certificate " << i + 1 << ": " << verdict_name(r.verdict) << ", " << p.cert.chain.size()
                  << " points";
        if (!r.message.empty()) {
            std::cout << ", " << r.message;
        }
        std::cout << '\n';
        ok = ok && r.verdict == Verdict::pass;
    }
    return ok ? kExitOk : kExitFail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certified checks for nonnegative sine polynomials"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    cfg.precision = working_precision();
    app.add_option("--precision", cfg.precision, "working precision in bits (default 128, env SINECERT_PRECISION)")
        ->check(CLI::Range(kMinPrecisionBits, static_cast<long>(MPFR_PREC_MAX)));
    app.add_option("--cells", cfg.cells, "grid cells for scan")->check(CLI::PositiveNumber);
    app.add_option("--max-points", cfg.max_points, "maximum chain length for dif certificates")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", cfg.out, "output directory");
    app.add_flag("--json", cfg.json, "machine-readable reports");

    std::string verify_id;
    auto* verify = app.add_subcommand("verify", "run lemma verifications and write reports");
    verify->add_option("id", verify_id, "lemma id or all")->required();

    std::string n_spec;
    std::string beta_spec = "beta1";
    auto* pipe = app.add_subcommand("pipeline", "replay the nonnegativity argument for given n");
    pipe->add_option("--n", n_spec, "n or a..b")->required();
    pipe->add_option("--beta", beta_spec, "beta1, beta2 or a decimal");

    std::string scan_n;
    std::string scan_beta = "beta1";
    auto* scan = app.add_subcommand("scan", "grid lower bounds and sharpness witnesses");
    scan->add_option("--n", scan_n, "n or a..b")->required();
    scan->add_option("--beta", scan_beta, "beta1, beta2 or a decimal");

    std::string cert_path;
    auto* check = app.add_subcommand("check", "re-validate a certificate file");
    check->add_option("file", cert_path, "certificate or report file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        PrecisionGuard guard{Precision(cfg.precision)};
        if (*verify) {
            return cmd_verify(cfg, verify_id);
        }
        if (*pipe) {
            return cmd_pipeline(cfg, n_spec, beta_spec);
        }
        if (*scan) {
            return cmd_scan(cfg, scan_n, scan_beta);
        }
        if (*check) {
            return cmd_check(cert_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
