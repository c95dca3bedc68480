#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace mlag {

enum class Layer { Human, Access, Network };

const char* layer_name(Layer l);
std::optional<Layer> layer_from_string(const std::string& s);

struct GraphNode {
    std::string id;
    Layer layer = Layer::Human;
    std::string label;

    bool operator==(const GraphNode&) const = default;
};

struct GraphEdge {
    std::string id;
    std::string source;
    std::string target;
    std::string vulnerability;  // key into the vulnerability database

    bool operator==(const GraphEdge&) const = default;
};

// Which end of a cross-layer edge determines the layer the edge belongs to.
enum class EdgeLayerRule { Destination, Source };

struct Violation {
    std::string subject;  // node or edge id
    std::string rule;
};

// A path is an ordered list of edge ids; consecutive edges chain
// target -> source and no node repeats.
using AttackPath = std::vector<std::string>;

class MultiLayerAttackGraph {
public:
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
    std::vector<std::string> entry_nodes;   // human layer
    std::vector<std::string> target_nodes;  // network layer

    const GraphNode* find_node(const std::string& id) const;
    const GraphEdge* find_edge(const std::string& id) const;

    // Layer an edge belongs to, under the given assignment rule.
    Layer edge_layer(const GraphEdge& e, EdgeLayerRule rule = EdgeLayerRule::Destination) const;

    bool operator==(const MultiLayerAttackGraph&) const = default;
};

std::vector<Violation> validate_graph(const MultiLayerAttackGraph& g);

// All node-simple entry->target paths with at most max_len edges,
// ordered lexicographically by edge-id sequence. Throws std::invalid_argument
// if the graph fails validation. max_len = 0 means "number of nodes".
std::vector<AttackPath> enumerate_attack_paths(const MultiLayerAttackGraph& g,
                                               std::size_t max_len = 0);

std::vector<std::string> edges_in_layer(const MultiLayerAttackGraph& g, Layer l,
                                        EdgeLayerRule rule = EdgeLayerRule::Destination);

// JSON document form: {nodes:[{id,layer,label}], edges:[{id,source,target,vuln}],
// entry_nodes:[], target_nodes:[]}
MultiLayerAttackGraph graph_from_json_text(const std::string& text);
std::string graph_to_json_text(const MultiLayerAttackGraph& g);
MultiLayerAttackGraph load_graph(const std::string& path);

}  // namespace mlag
