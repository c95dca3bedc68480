#include "mlag/exposure.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mlag/errors.hpp"

#include <json.hpp>

namespace mlag {

const char* ability_name(AttackerAbility a) {
    switch (a) {
        case AttackerAbility::Naive: return "naive";
        case AttackerAbility::Advanced: return "advanced";
        case AttackerAbility::Professional: return "professional";
    }
    return "?";
}

std::optional<AttackerAbility> ability_from_string(const std::string& s) {
    if (s == "naive") return AttackerAbility::Naive;
    if (s == "advanced") return AttackerAbility::Advanced;
    if (s == "professional") return AttackerAbility::Professional;
    return std::nullopt;
}

AttackerProfile AttackerProfile::for_ability(AttackerAbility a) {
    double t = 0.0;
    switch (a) {
        case AttackerAbility::Professional: t = 0.0; break;
        case AttackerAbility::Advanced: t = 0.3; break;
        case AttackerAbility::Naive: t = 0.6; break;
    }
    return AttackerProfile{a, t, t, t, t, t};
}

double heaviside(double z) { return z < 0.0 ? 0.0 : 1.0; }

namespace {

// Severity-increasing normalization of the CVSS v3.1 qualitative levels.
double cvss_level(const std::string& metric, const std::string& level) {
    if (metric == "AV") {
        if (level == "N") return 1.0;
        if (level == "A") return 0.62;
        if (level == "L") return 0.55;
        if (level == "P") return 0.2;
    } else if (metric == "AC") {
        if (level == "L") return 0.9;
        if (level == "H") return 0.4;
    } else if (metric == "PR") {
        if (level == "N") return 1.0;
        if (level == "L") return 0.62;
        if (level == "H") return 0.27;
    } else if (metric == "E") {
        if (level == "H") return 1.0;
        if (level == "F") return 0.97;
        if (level == "P") return 0.94;
        if (level == "U") return 0.91;
    } else if (metric == "RC") {
        if (level == "C") return 1.0;
        if (level == "R") return 0.96;
        if (level == "U") return 0.92;
    }
    throw std::runtime_error("CVSS vector: unknown level \"" + level + "\" for metric " + metric);
}

}  // namespace

NetworkVulnerability normalize_cvss(const std::string& vector) {
    NetworkVulnerability v;
    bool has_av = false, has_ac = false, has_pr = false, has_cm = false, has_rc = false;

    std::istringstream ss(vector);
    std::string token;
    while (std::getline(ss, token, '/')) {
        if (token.empty() || token.rfind("CVSS:", 0) == 0) continue;
        auto colon = token.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("CVSS vector: malformed token \"" + token + "\"");
        std::string metric = token.substr(0, colon);
        std::string level = token.substr(colon + 1);
        if (metric == "AV") { v.av = cvss_level(metric, level); has_av = true; }
        else if (metric == "AC") { v.ac = cvss_level(metric, level); has_ac = true; }
        else if (metric == "PR") { v.pr = cvss_level(metric, level); has_pr = true; }
        else if (metric == "E") {
            if (level == "X") { v.cm = 0.7; }
            else v.cm = cvss_level(metric, level);
            has_cm = true;
        } else if (metric == "RC") {
            if (level == "X") { v.rc = 1.0; }
            else v.rc = cvss_level(metric, level);
            has_rc = true;
        }
        // Other base/temporal metrics are ignored.
    }
    if (!has_av || !has_ac || !has_pr)
        throw std::runtime_error("CVSS vector: AV, AC and PR are required: \"" + vector + "\"");
    if (!has_cm) v.cm = 0.7;   // E absent -> Not Defined
    if (!has_rc) v.rc = 1.0;   // RC absent -> Not Defined
    return v;
}

double network_lambda(const NetworkVulnerability& v, const AttackerProfile& a) {
    double lambda = 1.0;
    lambda *= heaviside(v.ac - a.t_ac) * v.ac;
    lambda *= heaviside(v.av - a.t_av) * v.av;
    lambda *= heaviside(v.pr - a.t_pr) * v.pr;
    lambda *= heaviside(v.cm - a.t_cm) * v.cm;
    lambda *= heaviside(v.rc - a.t_rc) * v.rc;
    return lambda;
}

double human_access_lambda(const HumanVulnerability& v) { return v.ac * v.av; }

double human_ac_value(const std::string& level) {
    if (level == "Low" || level == "low") return 1.0;  // easy to exploit = severe
    if (level == "High" || level == "high") return 0.4;
    throw std::runtime_error("human AC level must be Low or High, got \"" + level + "\"");
}

double human_av_value(const std::string& level) {
    if (level == "Proximity" || level == "proximity") return 0.6;
    if (level == "Knowledge" || level == "knowledge") return 1.0;
    throw std::runtime_error("human AV level must be Proximity or Knowledge, got \"" + level + "\"");
}

std::map<std::string, EdgeRate> rate_all_edges(const MultiLayerAttackGraph& g,
                                               const VulnerabilityDb& db,
                                               const AttackerProfile& profile,
                                               EdgeLayerRule rule) {
    std::map<std::string, EdgeRate> out;
    for (const auto& e : g.edges) {
        Layer layer = g.edge_layer(e, rule);
        double lambda;
        if (layer == Layer::Network) {
            auto it = db.network.find(e.vulnerability);
            if (it == db.network.end())
                throw CrossReferenceError("edge " + e.id + ": unresolved network vulnerability \"" +
                                         e.vulnerability + "\"");
            lambda = network_lambda(it->second, profile);
        } else {
            auto it = db.human.find(e.vulnerability);
            if (it == db.human.end())
                throw CrossReferenceError("edge " + e.id +
                                         ": unresolved human/access vulnerability \"" +
                                         e.vulnerability + "\"");
            lambda = human_access_lambda(it->second);
        }
        out[e.id] = EdgeRate{e.id, lambda};
    }
    return out;
}

using nlohmann::json;

VulnerabilityDb vulndb_from_json_text(const std::string& text) {
    json j = json::parse(text);
    VulnerabilityDb db;
    for (const auto& jn : j.value("network", json::array())) {
        std::string id = jn.at("id").get<std::string>();
        NetworkVulnerability v = normalize_cvss(jn.at("cvss_vector").get<std::string>());
        v.cve_id = jn.value("cve", id);
        db.network[id] = v;
    }
    for (const auto& jh : j.value("human", json::array())) {
        std::string id = jh.at("id").get<std::string>();
        HumanVulnerability v;
        v.name = jh.value("name", id);
        // ac/av accept either the qualitative level or a number in [0,1].
        auto attr = [&](const char* key, auto level_fn) {
            const auto& field = jh.at(key);
            if (field.is_number()) {
                double x = field.template get<double>();
                if (x < 0.0 || x > 1.0)
                    throw std::runtime_error("vulnerability " + id + ": " + key + " out of [0,1]");
                return x;
            }
            return level_fn(field.template get<std::string>());
        };
        v.ac = attr("ac", human_ac_value);
        v.av = attr("av", human_av_value);
        db.human[id] = v;
    }
    return db;
}

VulnerabilityDb load_vulndb(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open vulnerability db: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return vulndb_from_json_text(ss.str());
}

}  // namespace mlag
