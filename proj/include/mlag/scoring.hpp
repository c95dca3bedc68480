#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mlag/exposure.hpp"
#include "mlag/graph.hpp"
#include "mlag/review.hpp"

namespace mlag {

enum class AggregationFn { Mean, Min, Max };

const char* aggregation_name(AggregationFn f);
std::optional<AggregationFn> aggregation_from_string(const std::string& s);

double aggregate(AggregationFn f, std::initializer_list<double> values);

// What to do for a layer with no mapped controls: score it as governance 0,
// or let the comprehensive score degenerate to lambda alone.
enum class EmptyPoolPolicy { ZeroGovernance, LambdaOnly };

struct GovernanceFactor {
    Layer layer = Layer::Human;
    double value = 0.0;
    std::size_t pool_size = 0;
};

struct ScoredEdge {
    std::string edge_id;
    Layer layer = Layer::Human;
    double lambda = 0.0;
    double governance = 0.0;
    double score = 0.0;
};

// Mean over the controls mapped into the layer of f(spec, fit, rel).
GovernanceFactor governance_factor(const std::vector<ControlProfile>& profiles, Layer layer,
                                   AggregationFn f);

// score = f(gov(layer), lambda) * cv per edge; ordered by edge id.
std::vector<ScoredEdge> comprehensive_scores(const MultiLayerAttackGraph& g,
                                             const std::map<Layer, GovernanceFactor>& gov,
                                             const std::map<std::string, EdgeRate>& rates,
                                             double cv, AggregationFn f,
                                             EmptyPoolPolicy empty_pool = EmptyPoolPolicy::ZeroGovernance,
                                             EdgeLayerRule rule = EdgeLayerRule::Destination);

}  // namespace mlag
