#include <gtest/gtest.h>

#include <sinecert/json_report.hpp>
#include <sinecert/sinecert.hpp>

using namespace sinecert;

namespace {

bool same(const Interval& a, const Interval& b)
{
    return mpfr_equal_p(a.lo(), b.lo()) && mpfr_equal_p(a.hi(), b.hi());
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        out.push_back(l);
    }
    return out;
}

std::string join(const std::vector<std::string>& ls)
{
    std::string s;
    for (const auto& l : ls) {
        s += l + '\n';
    }
    return s;
}

} // namespace

TEST(Certificate, RoundTripIsBitExact)
{
    for (const auto& cert : verify_h_certificates().certificates) {
        const std::string text = write_certificate(cert);
        const ParsedCertificate p = parse_certificate(text);
        EXPECT_EQ(p.cert.chain, cert.chain);
        EXPECT_EQ(p.cert.precision, cert.precision);
        EXPECT_EQ(p.cert.monotonicity_certified, cert.monotonicity_certified);
        ASSERT_EQ(p.cert.links.size(), cert.links.size());
        for (std::size_t i = 0; i < cert.links.size(); ++i) {
            EXPECT_TRUE(same(p.cert.links[i].g1, cert.links[i].g1));
            EXPECT_TRUE(same(p.cert.links[i].g2, cert.links[i].g2));
            EXPECT_TRUE(mpfr_equal_p(p.cert.links[i].diff.lo(), cert.links[i].diff.lo()));
        }
        EXPECT_EQ(write_certificate(p.cert), text);
        EXPECT_EQ(check_parsed_certificate(p).verdict, Verdict::pass);
    }
}

TEST(Certificate, RoundTripAtHigherPrecision)
{
    PrecisionGuard g{Precision(300)};
    const DifCertificate cert = printed_h1_certificate();
    const ParsedCertificate p = parse_certificate(write_certificate(cert));
    EXPECT_EQ(p.cert.precision, 300);
    EXPECT_EQ(check_parsed_certificate(p).verdict, Verdict::pass);
}

TEST(Certificate, TamperedValueFails)
{
    auto ls = lines(write_certificate(printed_h1_certificate()));
    // change the leading digit of the recorded difference on the first link
    for (auto& l : ls) {
        if (l.rfind("link ", 0) == 0) {
            const auto pos = l.find(" diff ") + 6;
            l[pos] = l[pos] == '9' ? '8' : static_cast<char>(l[pos] + 1);
            break;
        }
    }
    const ParsedCertificate p = parse_certificate(join(ls));
    const CheckResult r = check_parsed_certificate(p);
    EXPECT_EQ(r.verdict, Verdict::fail);
    EXPECT_EQ(r.failing_link, 0);
}

TEST(Certificate, TamperedChainFails)
{
    // dropping the interior points leaves a single link that does not hold
    DifCertificate cert = printed_h1_certificate();
    cert.chain = {cert.chain.front(), cert.chain.back()};
    cert.links = {evaluate_link(cert.g1, cert.g2, cert.chain[0], cert.chain[1])};
    const CheckResult r = check_parsed_certificate(parse_certificate(write_certificate(cert)));
    EXPECT_EQ(r.verdict, Verdict::fail);
}

TEST(Certificate, TruncatedOrMalformedTextIsAParseError)
{
    const std::string text = write_certificate(printed_h1_certificate());
    auto ls = lines(text);
    ls.pop_back();
    EXPECT_THROW(parse_certificate(join(ls)), CertificateParseError);
    ls.pop_back();
    EXPECT_THROW(parse_certificate(join(ls)), CertificateParseError);
    EXPECT_THROW(parse_certificate(""), CertificateParseError);
    EXPECT_THROW(parse_certificate("sinecert-certificate v2\n"), CertificateParseError);

    auto bad_dir = lines(text);
    for (auto& l : bad_dir) {
        if (l.rfind("direction ", 0) == 0) {
            l = "direction sideways";
        }
    }
    EXPECT_THROW(parse_certificate(join(bad_dir)), CertificateParseError);
}

TEST(Report, TextAndJsonCarryTheSameFields)
{
    const LemmaReport r = verify_b5();
    const std::string text = write_report(r);
    EXPECT_NE(text.find("b5"), std::string::npos);
    EXPECT_NE(text.find("certified"), std::string::npos);

    const nlohmann::json j = to_json(r);
    EXPECT_EQ(j.at("lemma"), "b5");
    EXPECT_EQ(j.at("status"), "certified");
    EXPECT_EQ(j.at("claims").size(), r.claims.size());
    EXPECT_EQ(j.at("constants").size(), r.constants.size());
    for (const auto& c : j.at("claims")) {
        EXPECT_TRUE(c.contains("name"));
        EXPECT_TRUE(c.contains("verdict"));
        EXPECT_TRUE(c.contains("rigorous"));
    }
}

TEST(Report, IntervalJsonRestoresEndpoints)
{
    const Interval v = exp(Interval(mpq_class(3, 7)));
    const nlohmann::json j = to_json(v);
    const Interval back = interval_from_roundtrip(j[0].get<std::string>(), j[1].get<std::string>(), v.precision());
    EXPECT_TRUE(same(v, back));
}

TEST(Report, PipelineJsonKeys)
{
    const nlohmann::json j = to_json(pipeline(9, Exponent::parse("beta1")));
    for (const char* key : {"n", "beta", "beta_enclosure", "m", "kappa", "fully_convex", "t_summands", "branch",
                            "anchor", "regions", "verdict"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j.at("verdict"), "proved");
    EXPECT_EQ(j.at("regions").size(), 3u);
}

TEST(Report, OutputIsDeterministic)
{
    EXPECT_EQ(write_report(verify_H7b()), write_report(verify_H7b()));
    EXPECT_EQ(to_json(brute_min(9, beta1(), 256)).dump(), to_json(brute_min(9, beta1(), 256)).dump());
    EXPECT_EQ(write_certificate(printed_h1_certificate()), write_certificate(printed_h1_certificate()));
}
