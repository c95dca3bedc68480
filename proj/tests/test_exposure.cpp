#include <doctest.h>

#include <random>

#include "mlag/errors.hpp"
#include "mlag/exposure.hpp"

using namespace mlag;

TEST_CASE("heaviside") {
    CHECK(heaviside(-0.1) == 0.0);
    CHECK(heaviside(0.0) == 1.0);
    CHECK(heaviside(0.3) == 1.0);
}

TEST_CASE("normalize_cvss on a full vector") {
    auto v = normalize_cvss("AV:N/AC:L/PR:N/E:H/RC:C");
    CHECK(v.ac == doctest::Approx(0.9));
    CHECK(v.av == doctest::Approx(1.0));
    CHECK(v.pr == doctest::Approx(1.0));
    CHECK(v.cm == doctest::Approx(1.0));
    CHECK(v.rc == doctest::Approx(1.0));
}

TEST_CASE("normalize_cvss defaults for absent temporal metrics") {
    auto v = normalize_cvss("AV:P/AC:H/PR:H");
    CHECK(v.ac == doctest::Approx(0.4));
    CHECK(v.av == doctest::Approx(0.2));
    CHECK(v.pr == doctest::Approx(0.27));
    CHECK(v.cm == doctest::Approx(0.7));
    CHECK(v.rc == doctest::Approx(1.0));
}

TEST_CASE("normalize_cvss errors") {
    CHECK_THROWS(normalize_cvss("AV:N/AC:X/PR:N"));       // invalid level
    CHECK_THROWS(normalize_cvss("AV:N/AC:L"));            // PR missing
    CHECK_THROWS(normalize_cvss("AV:N/garbage/PR:N"));    // malformed token
    CHECK_NOTHROW(normalize_cvss("CVSS:3.1/AV:N/AC:L/PR:N"));  // prefix tolerated
}

TEST_CASE("network_lambda product and gating") {
    NetworkVulnerability all_one{"", 1, 1, 1, 1, 1};
    CHECK(network_lambda(all_one, AttackerProfile::for_ability(AttackerAbility::Naive)) == 1.0);
    CHECK(network_lambda(all_one, AttackerProfile::for_ability(AttackerAbility::Professional)) ==
          1.0);

    NetworkVulnerability gated{"", 0.5, 1, 1, 1, 1};
    AttackerProfile p = AttackerProfile::for_ability(AttackerAbility::Professional);
    p.t_ac = 0.6;
    CHECK(network_lambda(gated, p) == 0.0);

    NetworkVulnerability v{"", 0.9, 1, 1, 1, 1};
    CHECK(network_lambda(v, AttackerProfile::for_ability(AttackerAbility::Professional)) ==
          doctest::Approx(0.9));
}

TEST_CASE("attacker ability monotonicity on random vulnerabilities") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 1);
    auto prof = AttackerProfile::for_ability(AttackerAbility::Professional);
    auto adv = AttackerProfile::for_ability(AttackerAbility::Advanced);
    auto naive = AttackerProfile::for_ability(AttackerAbility::Naive);
    for (int i = 0; i < 1000; ++i) {
        NetworkVulnerability v{"", u(rng), u(rng), u(rng), u(rng), u(rng)};
        double lp = network_lambda(v, prof);
        double la = network_lambda(v, adv);
        double ln = network_lambda(v, naive);
        CHECK(lp >= la);
        CHECK(la >= ln);
        CHECK(lp >= 0.0);
        CHECK(lp <= 1.0);
    }
}

TEST_CASE("human_access_lambda is the AC*AV product") {
    CHECK(human_access_lambda({"", 1.0, 1.0}) == 1.0);
    CHECK(human_access_lambda({"", 1.0, 0.5}) == 0.5);
    CHECK(human_access_lambda({"", 0.4, 0.6}) == doctest::Approx(0.24));
}

TEST_CASE("qualitative human attribute levels") {
    CHECK(human_ac_value("Low") == 1.0);
    CHECK(human_ac_value("High") == 0.4);
    CHECK(human_av_value("Proximity") == 0.6);
    CHECK(human_av_value("Knowledge") == 1.0);
    CHECK_THROWS(human_ac_value("Medium"));
}

namespace {

MultiLayerAttackGraph mixed_graph() {
    MultiLayerAttackGraph g;
    g.nodes = {{"h1", Layer::Human, ""},
               {"h2", Layer::Human, ""},
               {"a1", Layer::Access, ""},
               {"n1", Layer::Network, ""}};
    g.edges = {{"e1", "h1", "h2", "hv1"},   // human layer
               {"e2", "h2", "a1", "hv2"},   // access layer (destination rule)
               {"e3", "a1", "n1", "nv1"}};  // network layer
    g.entry_nodes = {"h1"};
    g.target_nodes = {"n1"};
    return g;
}

VulnerabilityDb mixed_db() {
    VulnerabilityDb db;
    db.human["hv1"] = {"hv1", 1.0, 0.5};
    db.human["hv2"] = {"hv2", 0.4, 0.6};
    db.network["nv1"] = {"nv1", 0.9, 1.0, 1.0, 1.0, 1.0};
    return db;
}

}  // namespace

TEST_CASE("rate_all_edges covers every edge with the right formula") {
    auto rates = rate_all_edges(mixed_graph(), mixed_db(),
                                AttackerProfile::for_ability(AttackerAbility::Professional));
    REQUIRE(rates.size() == 3);
    CHECK(rates["e1"].lambda == doctest::Approx(0.5));
    CHECK(rates["e2"].lambda == doctest::Approx(0.24));
    CHECK(rates["e3"].lambda == doctest::Approx(0.9));
}

TEST_CASE("unresolved vulnerability names the edge and ref") {
    auto g = mixed_graph();
    g.edges[0].vulnerability = "missing";
    try {
        rate_all_edges(g, mixed_db(), AttackerProfile::for_ability(AttackerAbility::Professional));
        FAIL("expected CrossReferenceError");
    } catch (const CrossReferenceError& e) {
        std::string msg = e.what();
        CHECK(msg.find("e1") != std::string::npos);
        CHECK(msg.find("missing") != std::string::npos);
    }
}

TEST_CASE("vulnerability db JSON accepts levels and numbers") {
    auto db = vulndb_from_json_text(R"({
        "network": [{"id": "nv", "cve": "CVE-0", "cvss_vector": "AV:N/AC:L/PR:N"}],
        "human": [
            {"id": "h1", "name": "No logout", "ac": "Low", "av": "Proximity"},
            {"id": "h2", "name": "custom", "ac": 0.3, "av": 0.9}
        ]})");
    CHECK(db.network.at("nv").av == 1.0);
    CHECK(db.human.at("h1").ac == 1.0);
    CHECK(db.human.at("h1").av == 0.6);
    CHECK(db.human.at("h2").ac == 0.3);
    CHECK_THROWS(vulndb_from_json_text(R"({"human":[{"id":"x","ac":1.5,"av":0.2}]})"));
}
