#pragma once

#include <map>
#include <optional>
#include <string>

#include "mlag/graph.hpp"

namespace mlag {

// Network-edge attributes, normalized so higher means more severe.
struct NetworkVulnerability {
    std::string cve_id;
    double ac = 0.0;  // attack complexity
    double av = 0.0;  // attack vector
    double pr = 0.0;  // privilege required
    double cm = 0.0;  // exploit code maturity
    double rc = 0.0;  // report confidence
};

struct HumanVulnerability {
    std::string name;  // e.g. "No logout", "Sharing credentials"
    double ac = 0.0;
    double av = 0.0;
};

enum class AttackerAbility { Naive, Advanced, Professional };

const char* ability_name(AttackerAbility a);
std::optional<AttackerAbility> ability_from_string(const std::string& s);

// Per-attribute minimum severity an attacker can exploit. A more capable
// attacker has lower thresholds.
struct AttackerProfile {
    AttackerAbility ability = AttackerAbility::Professional;
    double t_ac = 0.0;
    double t_av = 0.0;
    double t_pr = 0.0;
    double t_cm = 0.0;
    double t_rc = 0.0;

    static AttackerProfile for_ability(AttackerAbility a);
};

struct EdgeRate {
    std::string edge_id;
    double lambda = 0.0;
};

struct VulnerabilityDb {
    std::map<std::string, NetworkVulnerability> network;  // keyed by db id
    std::map<std::string, HumanVulnerability> human;
};

// H(z): 0 if z < 0, 1 otherwise.
double heaviside(double z);

// Parse a CVSS v3 vector string (AV, AC, PR required; E -> CM and RC optional)
// into normalized attributes via a fixed severity-increasing lookup table.
NetworkVulnerability normalize_cvss(const std::string& vector);

// lambda = prod over {AC,AV,PR,CM,RC} of H(X - t_X) * X
double network_lambda(const NetworkVulnerability& v, const AttackerProfile& a);

// lambda = AC * AV; attacker ability is not considered on these layers.
double human_access_lambda(const HumanVulnerability& v);

// Severity mapping for the qualitative human/access attribute levels.
double human_ac_value(const std::string& level);   // "Low" | "High"
double human_av_value(const std::string& level);   // "Proximity" | "Knowledge"

// Network-layer edges use network_lambda; human and access edges use
// human_access_lambda. Throws if an edge's vulnerability ref is unresolved.
std::map<std::string, EdgeRate> rate_all_edges(const MultiLayerAttackGraph& g,
                                               const VulnerabilityDb& db,
                                               const AttackerProfile& profile,
                                               EdgeLayerRule rule = EdgeLayerRule::Destination);

// {network:[{id, cve, cvss_vector}], human:[{id, name, ac, av}]}
VulnerabilityDb vulndb_from_json_text(const std::string& text);
VulnerabilityDb load_vulndb(const std::string& path);

}  // namespace mlag
