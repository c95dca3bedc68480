#pragma once

#include <map>
#include <string>
#include <vector>

#include "mlag/alignment.hpp"
#include "mlag/controls.hpp"
#include "mlag/exposure.hpp"
#include "mlag/graph.hpp"
#include "mlag/review.hpp"
#include "mlag/scoring.hpp"

namespace mlag {

// Every free parameter of the methodology, with the defaults used throughout.
struct PipelineConfig {
    ReviewParams review;
    CoverageWeights weights;
    AggregationFn aggregation = AggregationFn::Mean;
    AttackerProfile attacker = AttackerProfile::for_ability(AttackerAbility::Professional);
    CvMode cv_mode = CvMode::Paper;
    EmptyPoolPolicy empty_pool = EmptyPoolPolicy::ZeroGovernance;
    EdgeLayerRule edge_layer_rule = EdgeLayerRule::Destination;
    std::uint64_t seed = 0;
};

PipelineConfig config_from_json_text(const std::string& text);
std::string config_to_json_text(const PipelineConfig& cfg);
PipelineConfig load_config(const std::string& path);

// Immutable per-run inputs shared by every stage.
struct PipelineInputs {
    MultiLayerAttackGraph graph;
    std::vector<SecurityControl> controls;
    AlignmentMatrix spec_matrix;   // run_time/design_time/operational/compliance
    AlignmentMatrix layer_matrix;  // human/access/network
    VulnerabilityDb vulns;
};

struct PipelineResult {
    std::vector<ControlProfile> profiles;
    std::map<Layer, GovernanceFactor> governance;
    std::map<std::string, EdgeRate> rates;
    std::vector<ScoredEdge> edges;
    double cv = 0.0;
};

// Stages a-e: review, edge rates, governance factors, comprehensive scores.
PipelineResult run_pipeline(const PipelineInputs& in, const ControlsAssessment& assessment,
                            const PipelineConfig& cfg);

}  // namespace mlag
