#ifndef SINECERT_JSON_REPORT_HPP
#define SINECERT_JSON_REPORT_HPP

#include <json.hpp>

#include "grid.hpp"
#include "pipeline.hpp"
#include "report.hpp"
#include "serialize.hpp"

namespace sinecert {

// Enclosure endpoints are round-trip decimal strings so no bits are lost.
inline nlohmann::json to_json(const Interval& v)
{
    return nlohmann::json::array({mpfr_to_roundtrip(v.lo()), mpfr_to_roundtrip(v.hi())});
}

inline nlohmann::json to_json(const DifCertificate& c)
{
    nlohmann::json j;
    j["precision"] = c.precision;
    j["variable"] = c.g1.var;
    j["domain"] = {format_rational(c.g1.lo), format_rational(c.g1.hi)};
    j["direction"] = direction_name(c.g1.direction);
    j["g1"] = c.g1.expr.to_string(c.g1.var);
    j["g2"] = c.g2.expr.to_string(c.g2.var);
    j["monotonicity"] = c.monotonicity_certified ? "certified" : "declared";
    nlohmann::json chain = nlohmann::json::array();
    for (const auto& t : c.chain) {
        chain.push_back(format_rational(t));
    }
    j["chain"] = chain;
    nlohmann::json links = nlohmann::json::array();
    for (const auto& l : c.links) {
        links.push_back({{"left", format_rational(l.left)},
                         {"right", format_rational(l.right)},
                         {"g1", to_json(l.g1)},
                         {"g2", to_json(l.g2)},
                         {"diff", mpfr_to_roundtrip(l.diff.lo())}});
    }
    j["links"] = links;
    return j;
}

inline nlohmann::json to_json(const LemmaReport& r)
{
    nlohmann::json j;
    j["lemma"] = r.id;
    j["status"] = status_name(r.status);
    nlohmann::json constants = nlohmann::json::array();
    for (const auto& c : r.constants) {
        constants.push_back({{"name", c.name}, {"value", to_json(c.value)}});
    }
    j["constants"] = constants;
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& c : r.claims) {
        claims.push_back({{"name", c.name},
                          {"verdict", verdict_name(c.verdict)},
                          {"rigorous", c.rigorous},
                          {"detail", c.detail}});
    }
    j["claims"] = claims;
    nlohmann::json sturm = nlohmann::json::array();
    for (const auto& s : r.sturm) {
        sturm.push_back({{"name", s.name},
                         {"polynomial", s.result.polynomial.to_string()},
                         {"interval", {format_rational(s.result.a), format_rational(s.result.b)}},
                         {"roots", s.result.roots},
                         {"positive", s.result.positive}});
    }
    j["sturm"] = sturm;
    j["notes"] = r.notes;
    nlohmann::json certs = nlohmann::json::array();
    for (const auto& c : r.certificates) {
        certs.push_back(to_json(c));
    }
    j["certificates"] = certs;
    return j;
}

inline nlohmann::json to_json(const RegionResult& r)
{
    nlohmann::json j;
    j["region"] = r.name;
    j["method"] = r.method;
    j["verdict"] = region_verdict_name(r.verdict);
    nlohmann::json bounds = nlohmann::json::array();
    for (const auto& b : r.bounds) {
        bounds.push_back({{"name", b.name}, {"value", to_json(b.value)}});
    }
    j["bounds"] = bounds;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"verdict", verdict_name(c.verdict)}, {"detail", c.detail}});
    }
    j["checks"] = checks;
    return j;
}

inline nlohmann::json to_json(const PipelineTrace& t)
{
    nlohmann::json j;
    j["n"] = t.n;
    j["beta"] = t.beta;
    j["beta_enclosure"] = to_json(t.beta_enclosure);
    j["m"] = t.m;
    j["kappa"] = t.kappa;
    j["fully_convex"] = t.fully_convex;
    j["t_summands"] = t.t_summands;
    j["branch"] = t.branch;
    j["anchor"] = t.anchor;
    j["error"] = t.error;
    j["regions"] = {to_json(t.far), to_json(t.middle), to_json(t.near)};
    j["verdict"] = t.proved() ? "proved" : "not-proved";
    return j;
}

inline nlohmann::json to_json(const CellBound& c)
{
    return {{"cell", c.cell}, {"x", to_json(c.x)}, {"value", to_json(c.value)}};
}

inline nlohmann::json to_json(const BruteMinResult& r)
{
    nlohmann::json j;
    j["n"] = r.n;
    j["cells"] = r.cells;
    j["min"] = to_json(r.min);
    j["negative_cells"] = r.negative_cells;
    j["first_negative"] = r.first_negative ? to_json(*r.first_negative) : nlohmann::json(nullptr);
    return j;
}

} // namespace sinecert

#endif // SINECERT_JSON_REPORT_HPP
