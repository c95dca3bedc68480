#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mlag/alignment.hpp"
#include "mlag/controls.hpp"
#include "mlag/graph.hpp"

namespace mlag {

enum class LifetimeClass { RunTime, DesignTime, NotDefined };
enum class ManagementClass { Operational, Compliance, NotDefined };

const char* lifetime_name(LifetimeClass c);
const char* management_name(ManagementClass c);

struct ControlClassification {
    LifetimeClass lifetime = LifetimeClass::NotDefined;
    ManagementClass management = ManagementClass::NotDefined;
    double winning_lifetime_value = 0.0;    // the higher of run_time/design_time
    double winning_management_value = 0.0;  // the higher of operational/compliance
};

struct LayerMapping {
    double h = 0.0;
    double a = 0.0;
    double n = 0.0;
    std::vector<Layer> member_layers;
    std::optional<Layer> most_fitting;
};

struct ControlProfile {
    std::string control_id;
    ControlClassification classification;
    LayerMapping mapping;
    double specificity = 0.0;
    double fitting = 0.0;
    double reliability = 0.0;
    AssessmentValue assessed = AssessmentValue::NC;
    bool flagged = false;
};

struct ReviewParams {
    double alpha = 0.5;            // maximum specificity value, in (0,1]
    double tau = 0.0;              // layer membership: alignment strictly above tau
    double flag_threshold = 0.5;   // reliability below this flags the control
    double tie_epsilon = 1e-9;     // near-tie window for NotDefined classification
};

// Argmax of (run_time, design_time) and (operational, compliance); values
// within tie_epsilon of each other classify as NotDefined.
ControlClassification classify_control(double run_time, double design_time, double operational,
                                       double compliance, double tie_epsilon = 1e-9);

// Table lookup over the classification; result is one of {alpha, alpha/2, alpha/4}.
double specificity_degree(const ControlClassification& cl, double alpha);

LayerMapping make_layer_mapping(double h, double a, double n, double tau = 0.0);

// Spread of the layer alignment values: max - min.
double fitting_degree(const LayerMapping& m);

// Mean of lifetime value, management value, strongest layer alignment and
// the coverage weight of the assessed value.
double reliability_degree(const ControlClassification& cl, const LayerMapping& m,
                          AssessmentValue assessed, const CoverageWeights& weights);

// Runs stages a-c for every control: classification, layer mapping, the three
// degrees and the revision flag. Output sorted by control id.
std::vector<ControlProfile> review_assessment(const std::vector<SecurityControl>& controls,
                                              const ControlsAssessment& assessment,
                                              const AlignmentMatrix& spec_matrix,
                                              const AlignmentMatrix& layer_matrix,
                                              const ReviewParams& params);

}  // namespace mlag
