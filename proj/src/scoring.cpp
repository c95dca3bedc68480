#include "mlag/scoring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mlag {

const char* aggregation_name(AggregationFn f) {
    switch (f) {
        case AggregationFn::Mean: return "mean";
        case AggregationFn::Min: return "min";
        case AggregationFn::Max: return "max";
    }
    return "?";
}

std::optional<AggregationFn> aggregation_from_string(const std::string& s) {
    if (s == "mean" || s == "avg" || s == "average") return AggregationFn::Mean;
    if (s == "min") return AggregationFn::Min;
    if (s == "max") return AggregationFn::Max;
    return std::nullopt;
}

double aggregate(AggregationFn f, std::initializer_list<double> values) {
    if (values.size() == 0) throw std::invalid_argument("aggregate: empty input");
    switch (f) {
        case AggregationFn::Mean:
            return std::accumulate(values.begin(), values.end(), 0.0) /
                   static_cast<double>(values.size());
        case AggregationFn::Min: return std::min(values);
        case AggregationFn::Max: return std::max(values);
    }
    throw std::logic_error("aggregate: unknown function");
}

GovernanceFactor governance_factor(const std::vector<ControlProfile>& profiles, Layer layer,
                                   AggregationFn f) {
    GovernanceFactor gov;
    gov.layer = layer;
    double sum = 0.0;
    for (const auto& p : profiles) {
        const auto& members = p.mapping.member_layers;
        if (std::find(members.begin(), members.end(), layer) == members.end()) continue;
        sum += aggregate(f, {p.specificity, p.fitting, p.reliability});
        ++gov.pool_size;
    }
    // Outer aggregation is always the mean, whatever the inner f.
    gov.value = gov.pool_size == 0 ? 0.0 : sum / static_cast<double>(gov.pool_size);
    return gov;
}

std::vector<ScoredEdge> comprehensive_scores(const MultiLayerAttackGraph& g,
                                             const std::map<Layer, GovernanceFactor>& gov,
                                             const std::map<std::string, EdgeRate>& rates,
                                             double cv, AggregationFn f,
                                             EmptyPoolPolicy empty_pool, EdgeLayerRule rule) {
    if (cv < 0.0) throw std::invalid_argument("cv must be non-negative");
    std::vector<ScoredEdge> out;
    for (const auto& e : g.edges) {
        ScoredEdge se;
        se.edge_id = e.id;
        se.layer = g.edge_layer(e, rule);
        auto rate = rates.find(e.id);
        if (rate == rates.end()) throw std::runtime_error("no rate for edge " + e.id);
        se.lambda = rate->second.lambda;

        auto gf = gov.find(se.layer);
        bool pool_empty = gf == gov.end() || gf->second.pool_size == 0;
        se.governance = pool_empty ? 0.0 : gf->second.value;
        if (pool_empty && empty_pool == EmptyPoolPolicy::LambdaOnly)
            se.score = se.lambda * cv;
        else
            se.score = aggregate(f, {se.governance, se.lambda}) * cv;
        out.push_back(se);
    }
    std::sort(out.begin(), out.end(),
              [](const ScoredEdge& a, const ScoredEdge& b) { return a.edge_id < b.edge_id; });
    return out;
}

}  // namespace mlag
