#include "mlag/pipeline.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mlag {

PipelineResult run_pipeline(const PipelineInputs& in, const ControlsAssessment& assessment,
                            const PipelineConfig& cfg) {
    PipelineResult r;
    ControlsAssessment a = assessment;
    a.weights = cfg.weights;
    r.profiles = review_assessment(in.controls, a, in.spec_matrix, in.layer_matrix, cfg.review);
    r.rates = rate_all_edges(in.graph, in.vulns, cfg.attacker, cfg.edge_layer_rule);
    for (Layer l : {Layer::Human, Layer::Access, Layer::Network})
        r.governance[l] = governance_factor(r.profiles, l, cfg.aggregation);
    r.cv = compute_cv(a, cfg.cv_mode);
    r.edges = comprehensive_scores(in.graph, r.governance, r.rates, r.cv, cfg.aggregation,
                                   cfg.empty_pool, cfg.edge_layer_rule);
    return r;
}

using nlohmann::json;

PipelineConfig config_from_json_text(const std::string& text) {
    json j = json::parse(text);
    PipelineConfig cfg;
    cfg.review.alpha = j.value("alpha", cfg.review.alpha);
    cfg.review.tau = j.value("tau", cfg.review.tau);
    cfg.review.flag_threshold = j.value("flag_threshold", cfg.review.flag_threshold);
    cfg.review.tie_epsilon = j.value("tie_epsilon", cfg.review.tie_epsilon);
    if (j.contains("coverage_weights")) {
        const auto& w = j["coverage_weights"];
        cfg.weights.c = w.value("C", cfg.weights.c);
        cfg.weights.pc = w.value("PC", cfg.weights.pc);
        cfg.weights.nc = w.value("NC", cfg.weights.nc);
    }
    if (!cfg.weights.ordered())
        throw std::runtime_error("coverage weights must satisfy 1 >= C >= PC >= NC >= 0");
    if (j.contains("aggregation")) {
        auto f = aggregation_from_string(j["aggregation"].get<std::string>());
        if (!f) throw std::runtime_error("unknown aggregation \"" +
                                         j["aggregation"].get<std::string>() + "\"");
        cfg.aggregation = *f;
    }
    if (j.contains("attacker")) {
        const auto& ja = j["attacker"];
        if (ja.is_string()) {
            auto ab = ability_from_string(ja.get<std::string>());
            if (!ab) throw std::runtime_error("unknown attacker ability \"" +
                                              ja.get<std::string>() + "\"");
            cfg.attacker = AttackerProfile::for_ability(*ab);
        } else {
            if (ja.contains("ability")) {
                auto ab = ability_from_string(ja["ability"].get<std::string>());
                if (!ab) throw std::runtime_error("unknown attacker ability \"" +
                                                  ja["ability"].get<std::string>() + "\"");
                cfg.attacker = AttackerProfile::for_ability(*ab);
            }
            // Explicit per-attribute thresholds override the ability defaults.
            cfg.attacker.t_ac = ja.value("t_ac", cfg.attacker.t_ac);
            cfg.attacker.t_av = ja.value("t_av", cfg.attacker.t_av);
            cfg.attacker.t_pr = ja.value("t_pr", cfg.attacker.t_pr);
            cfg.attacker.t_cm = ja.value("t_cm", cfg.attacker.t_cm);
            cfg.attacker.t_rc = ja.value("t_rc", cfg.attacker.t_rc);
        }
    }
    if (j.contains("cv_mode")) {
        std::string m = j["cv_mode"].get<std::string>();
        if (m == "paper") cfg.cv_mode = CvMode::Paper;
        else if (m == "normalized") cfg.cv_mode = CvMode::Normalized;
        else throw std::runtime_error("cv_mode must be \"paper\" or \"normalized\"");
    }
    if (j.contains("empty_pool")) {
        std::string p = j["empty_pool"].get<std::string>();
        if (p == "zero_governance") cfg.empty_pool = EmptyPoolPolicy::ZeroGovernance;
        else if (p == "lambda_only") cfg.empty_pool = EmptyPoolPolicy::LambdaOnly;
        else throw std::runtime_error("empty_pool must be \"zero_governance\" or \"lambda_only\"");
    }
    if (j.contains("edge_layer_rule")) {
        std::string r = j["edge_layer_rule"].get<std::string>();
        if (r == "destination") cfg.edge_layer_rule = EdgeLayerRule::Destination;
        else if (r == "source") cfg.edge_layer_rule = EdgeLayerRule::Source;
        else throw std::runtime_error("edge_layer_rule must be \"destination\" or \"source\"");
    }
    cfg.seed = j.value("seed", cfg.seed);
    return cfg;
}

std::string config_to_json_text(const PipelineConfig& cfg) {
    json j;
    j["alpha"] = cfg.review.alpha;
    j["tau"] = cfg.review.tau;
    j["flag_threshold"] = cfg.review.flag_threshold;
    j["tie_epsilon"] = cfg.review.tie_epsilon;
    j["coverage_weights"] = {{"C", cfg.weights.c}, {"PC", cfg.weights.pc}, {"NC", cfg.weights.nc}};
    j["aggregation"] = aggregation_name(cfg.aggregation);
    j["attacker"] = {{"ability", ability_name(cfg.attacker.ability)},
                     {"t_ac", cfg.attacker.t_ac},
                     {"t_av", cfg.attacker.t_av},
                     {"t_pr", cfg.attacker.t_pr},
                     {"t_cm", cfg.attacker.t_cm},
                     {"t_rc", cfg.attacker.t_rc}};
    j["cv_mode"] = cfg.cv_mode == CvMode::Paper ? "paper" : "normalized";
    j["empty_pool"] =
        cfg.empty_pool == EmptyPoolPolicy::ZeroGovernance ? "zero_governance" : "lambda_only";
    j["edge_layer_rule"] =
        cfg.edge_layer_rule == EdgeLayerRule::Destination ? "destination" : "source";
    j["seed"] = cfg.seed;
    return j.dump(2);
}

PipelineConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return config_from_json_text(ss.str());
}

}  // namespace mlag
