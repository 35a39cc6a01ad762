#include "ofrac/report_io.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace ofrac {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";

ordered_json report_to_json(const InequalityReport& r) {
    ordered_json j;
    j["theorem"] = theorem_name(r.theorem);
    j["alpha"] = r.alpha;
    j["p"] = r.p;
    j["a"] = r.a;
    j["b"] = r.b;
    j["function_id_f"] = r.function_id_f;
    j["function_id_g"] = r.function_id_g;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["ratio"] = r.ratio;
    j["tol"] = r.tol;
    j["verdict"] = verdict_name(r.verdict);
    j["error"] = r.error;
    return j;
}

Verdict verdict_from_name(const std::string& name) {
    if (name == "HOLDS") return Verdict::Holds;
    if (name == "VIOLATED") return Verdict::Violated;
    if (name == "INCONCLUSIVE") return Verdict::Inconclusive;
    throw std::invalid_argument("unknown verdict '" + name + "'");
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string campaign_to_json(const CampaignResult& result,
                             std::uint64_t seed) {
    ordered_json doc;
    doc["meta"] = {{"version", kVersion}, {"seed", seed}};
    ordered_json reports = ordered_json::array();
    for (const InequalityReport& r : result.reports)
        reports.push_back(report_to_json(r));
    doc["reports"] = std::move(reports);

    ordered_json summary;
    for (const auto& [name, s] : result.summary) {
        summary[name] = {{"count", s.count},
                         {"holds", s.holds},
                         {"violated", s.violated},
                         {"inconclusive", s.inconclusive},
                         {"errors", s.errors},
                         {"max_ratio", s.max_ratio}};
    }
    summary["a2_stated_violations"] = result.a2_stated_violations;
    summary["a2_stated_over_corrected"] = result.a2_stated_over_corrected;
    doc["summary"] = std::move(summary);
    return doc.dump(2) + "\n";
}

std::vector<InequalityReport> reports_from_json(const std::string& text) {
    const json doc = json::parse(text);
    std::vector<InequalityReport> out;
    for (const json& j : doc.at("reports")) {
        InequalityReport r;
        r.theorem = theorem_from_name(j.at("theorem").get<std::string>());
        r.alpha = j.at("alpha").get<double>();
        r.p = j.at("p").get<double>();
        r.a = j.at("a").get<double>();
        r.b = j.at("b").get<double>();
        r.function_id_f = j.at("function_id_f").get<std::string>();
        r.function_id_g = j.at("function_id_g").get<std::string>();
        r.lhs = j.at("lhs").get<double>();
        r.rhs = j.at("rhs").get<double>();
        r.ratio = j.at("ratio").get<double>();
        r.tol = j.at("tol").get<double>();
        r.verdict = verdict_from_name(j.at("verdict").get<std::string>());
        r.error = j.at("error").get<std::string>();
        out.push_back(std::move(r));
    }
    return out;
}

std::string campaign_to_csv(const CampaignResult& result) {
    std::string out =
        "theorem,alpha,p,a,b,function_id_f,function_id_g,lhs,rhs,ratio,tol,"
        "verdict,error\n";
    for (const InequalityReport& r : result.reports) {
        out += theorem_name(r.theorem);
        out += "," + fmt17(r.alpha) + "," + fmt17(r.p) + "," + fmt17(r.a) +
               "," + fmt17(r.b) + "," + r.function_id_f + "," +
               r.function_id_g + "," + fmt17(r.lhs) + "," + fmt17(r.rhs) +
               "," + fmt17(r.ratio) + "," + fmt17(r.tol) + ",";
        out += verdict_name(r.verdict);
        out += "," + r.error + "\n";
    }
    return out;
}

} // namespace ofrac
