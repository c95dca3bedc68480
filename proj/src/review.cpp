#include "mlag/review.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mlag/errors.hpp"

namespace mlag {

const char* lifetime_name(LifetimeClass c) {
    switch (c) {
        case LifetimeClass::RunTime: return "run_time";
        case LifetimeClass::DesignTime: return "design_time";
        case LifetimeClass::NotDefined: return "not_defined";
    }
    return "?";
}

const char* management_name(ManagementClass c) {
    switch (c) {
        case ManagementClass::Operational: return "operational";
        case ManagementClass::Compliance: return "compliance";
        case ManagementClass::NotDefined: return "not_defined";
    }
    return "?";
}

ControlClassification classify_control(double run_time, double design_time, double operational,
                                       double compliance, double tie_epsilon) {
    ControlClassification cl;
    if (std::abs(run_time - design_time) <= tie_epsilon) {
        cl.lifetime = LifetimeClass::NotDefined;
        cl.winning_lifetime_value = run_time;  // the shared value
    } else if (run_time > design_time) {
        cl.lifetime = LifetimeClass::RunTime;
        cl.winning_lifetime_value = run_time;
    } else {
        cl.lifetime = LifetimeClass::DesignTime;
        cl.winning_lifetime_value = design_time;
    }
    if (std::abs(operational - compliance) <= tie_epsilon) {
        cl.management = ManagementClass::NotDefined;
        cl.winning_management_value = operational;
    } else if (operational > compliance) {
        cl.management = ManagementClass::Operational;
        cl.winning_management_value = operational;
    } else {
        cl.management = ManagementClass::Compliance;
        cl.winning_management_value = compliance;
    }
    return cl;
}

double specificity_degree(const ControlClassification& cl, double alpha) {
    if (alpha <= 0.0 || alpha > 1.0) throw std::invalid_argument("alpha must be in (0,1]");
    // Lookup table: alpha for (run time, operational), halved for each
    // design-time/compliance/not-defined feature, floor alpha/4.
    if (cl.management == ManagementClass::Operational)
        return cl.lifetime == LifetimeClass::RunTime ? alpha : alpha / 2.0;
    // Compliance and NotDefined management share a row.
    return cl.lifetime == LifetimeClass::RunTime ? alpha / 2.0 : alpha / 4.0;
}

LayerMapping make_layer_mapping(double h, double a, double n, double tau) {
    for (double v : {h, a, n})
        if (v < 0.0 || v > 1.0) throw std::out_of_range("layer alignment out of [0,1]");
    LayerMapping m;
    m.h = h;
    m.a = a;
    m.n = n;
    if (h > tau) m.member_layers.push_back(Layer::Human);
    if (a > tau) m.member_layers.push_back(Layer::Access);
    if (n > tau) m.member_layers.push_back(Layer::Network);
    double top = std::max({h, a, n});
    if (top > 0.0) {
        if (top == h) m.most_fitting = Layer::Human;
        else if (top == a) m.most_fitting = Layer::Access;
        else m.most_fitting = Layer::Network;
    }
    return m;
}

double fitting_degree(const LayerMapping& m) {
    return std::max({m.h, m.a, m.n}) - std::min({m.h, m.a, m.n});
}

double reliability_degree(const ControlClassification& cl, const LayerMapping& m,
                          AssessmentValue assessed, const CoverageWeights& weights) {
    double l_max = std::max({m.h, m.a, m.n});
    return (cl.winning_lifetime_value + cl.winning_management_value + l_max +
            weights.of(assessed)) /
           4.0;
}

std::vector<ControlProfile> review_assessment(const std::vector<SecurityControl>& controls,
                                              const ControlsAssessment& assessment,
                                              const AlignmentMatrix& spec_matrix,
                                              const AlignmentMatrix& layer_matrix,
                                              const ReviewParams& params) {
    std::vector<ControlProfile> out;
    for (const auto& c : controls) {
        auto entry = assessment.entries.find(c.id);
        if (entry == assessment.entries.end())
            throw CrossReferenceError("assessment has no entry for control " + c.id);
        if (!spec_matrix.has_row(c.id))
            throw CrossReferenceError("specificity alignment matrix has no row for control " + c.id);
        if (!layer_matrix.has_row(c.id))
            throw CrossReferenceError("layer alignment matrix has no row for control " + c.id);

        ControlProfile p;
        p.control_id = c.id;
        p.assessed = entry->second;
        p.classification = classify_control(
            spec_matrix.value(c.id, "run_time"), spec_matrix.value(c.id, "design_time"),
            spec_matrix.value(c.id, "operational"), spec_matrix.value(c.id, "compliance"),
            params.tie_epsilon);
        p.mapping = make_layer_mapping(layer_matrix.value(c.id, "human"),
                                       layer_matrix.value(c.id, "access"),
                                       layer_matrix.value(c.id, "network"), params.tau);
        p.specificity = specificity_degree(p.classification, params.alpha);
        p.fitting = fitting_degree(p.mapping);
        p.reliability = reliability_degree(p.classification, p.mapping, p.assessed,
                                           assessment.weights);
        p.flagged = p.reliability < params.flag_threshold;
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(),
              [](const ControlProfile& a, const ControlProfile& b) {
                  return a.control_id < b.control_id;
              });
    return out;
}

}  // namespace mlag
