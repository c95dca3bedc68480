#include "mlag/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

namespace mlag {

const char* layer_name(Layer l) {
    switch (l) {
        case Layer::Human: return "human";
        case Layer::Access: return "access";
        case Layer::Network: return "network";
    }
    return "?";
}

std::optional<Layer> layer_from_string(const std::string& s) {
    if (s == "human") return Layer::Human;
    if (s == "access") return Layer::Access;
    if (s == "network") return Layer::Network;
    return std::nullopt;
}

const GraphNode* MultiLayerAttackGraph::find_node(const std::string& id) const {
    for (const auto& n : nodes)
        if (n.id == id) return &n;
    return nullptr;
}

const GraphEdge* MultiLayerAttackGraph::find_edge(const std::string& id) const {
    for (const auto& e : edges)
        if (e.id == id) return &e;
    return nullptr;
}

Layer MultiLayerAttackGraph::edge_layer(const GraphEdge& e, EdgeLayerRule rule) const {
    const auto* n = find_node(rule == EdgeLayerRule::Destination ? e.target : e.source);
    if (!n) throw std::invalid_argument("edge " + e.id + " references unknown node");
    return n->layer;
}

std::vector<Violation> validate_graph(const MultiLayerAttackGraph& g) {
    std::vector<Violation> out;

    std::unordered_set<std::string> node_ids;
    for (const auto& n : g.nodes) {
        if (!node_ids.insert(n.id).second)
            out.push_back({n.id, "duplicate node id"});
    }
    std::unordered_set<std::string> edge_ids;
    for (const auto& e : g.edges) {
        if (!edge_ids.insert(e.id).second)
            out.push_back({e.id, "duplicate edge id"});
        for (const std::string& end : {e.source, e.target}) {
            if (!node_ids.count(end))
                out.push_back({e.id, "references unknown node " + end});
        }
    }

    // Parallel edges must carry distinct vulnerabilities.
    std::set<std::tuple<std::string, std::string, std::string>> seen;
    for (const auto& e : g.edges) {
        if (!seen.insert({e.source, e.target, e.vulnerability}).second)
            out.push_back({e.id, "parallel edge with duplicate vulnerability " + e.vulnerability});
    }

    // No progression backwards from network to human.
    for (const auto& e : g.edges) {
        const auto* s = g.find_node(e.source);
        const auto* t = g.find_node(e.target);
        if (s && t && s->layer == Layer::Network && t->layer == Layer::Human)
            out.push_back({e.id, "edge from network layer back to human layer"});
    }

    for (const auto& id : g.entry_nodes) {
        const auto* n = g.find_node(id);
        if (!n)
            out.push_back({id, "entry node does not exist"});
        else if (n->layer != Layer::Human)
            out.push_back({id, "entry node not in human layer"});
    }
    for (const auto& id : g.target_nodes) {
        const auto* n = g.find_node(id);
        if (!n)
            out.push_back({id, "target node does not exist"});
        else if (n->layer != Layer::Network)
            out.push_back({id, "target node not in network layer"});
    }
    return out;
}

std::vector<AttackPath> enumerate_attack_paths(const MultiLayerAttackGraph& g,
                                               std::size_t max_len) {
    if (!validate_graph(g).empty())
        throw std::invalid_argument("enumerate_attack_paths: graph is invalid");
    if (max_len == 0) max_len = g.nodes.size();

    // Outgoing adjacency, edges sorted by id so DFS emits lexicographic order.
    std::unordered_map<std::string, std::vector<const GraphEdge*>> adj;
    for (const auto& e : g.edges) adj[e.source].push_back(&e);
    for (auto& [_, v] : adj)
        std::sort(v.begin(), v.end(),
                  [](const GraphEdge* a, const GraphEdge* b) { return a->id < b->id; });

    std::unordered_set<std::string> targets(g.target_nodes.begin(), g.target_nodes.end());

    std::vector<AttackPath> paths;
    AttackPath current;
    std::unordered_set<std::string> visited;

    auto dfs = [&](auto&& self, const std::string& node) -> void {
        if (targets.count(node) && !current.empty()) paths.push_back(current);
        if (current.size() >= max_len) return;
        auto it = adj.find(node);
        if (it == adj.end()) return;
        for (const GraphEdge* e : it->second) {
            if (visited.count(e->target)) continue;
            visited.insert(e->target);
            current.push_back(e->id);
            self(self, e->target);
            current.pop_back();
            visited.erase(e->target);
        }
    };

    std::vector<std::string> entries = g.entry_nodes;
    std::sort(entries.begin(), entries.end());
    for (const auto& entry : entries) {
        visited = {entry};
        current.clear();
        dfs(dfs, entry);
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

std::vector<std::string> edges_in_layer(const MultiLayerAttackGraph& g, Layer l,
                                        EdgeLayerRule rule) {
    std::vector<std::string> out;
    for (const auto& e : g.edges)
        if (g.edge_layer(e, rule) == l) out.push_back(e.id);
    std::sort(out.begin(), out.end());
    return out;
}

using nlohmann::json;

MultiLayerAttackGraph graph_from_json_text(const std::string& text) {
    json j = json::parse(text);
    MultiLayerAttackGraph g;
    for (const auto& jn : j.at("nodes")) {
        GraphNode n;
        n.id = jn.at("id").get<std::string>();
        auto layer = layer_from_string(jn.at("layer").get<std::string>());
        if (!layer)
            throw std::runtime_error("node " + n.id + ": unknown layer \"" +
                                     jn.at("layer").get<std::string>() + "\"");
        n.layer = *layer;
        n.label = jn.value("label", n.id);
        g.nodes.push_back(std::move(n));
    }
    for (const auto& je : j.at("edges")) {
        GraphEdge e;
        e.id = je.at("id").get<std::string>();
        e.source = je.at("source").get<std::string>();
        e.target = je.at("target").get<std::string>();
        e.vulnerability = je.at("vuln").get<std::string>();
        g.edges.push_back(std::move(e));
    }
    g.entry_nodes = j.value("entry_nodes", std::vector<std::string>{});
    g.target_nodes = j.value("target_nodes", std::vector<std::string>{});
    return g;
}

std::string graph_to_json_text(const MultiLayerAttackGraph& g) {
    json j;
    j["nodes"] = json::array();
    for (const auto& n : g.nodes)
        j["nodes"].push_back({{"id", n.id}, {"layer", layer_name(n.layer)}, {"label", n.label}});
    j["edges"] = json::array();
    for (const auto& e : g.edges)
        j["edges"].push_back(
            {{"id", e.id}, {"source", e.source}, {"target", e.target}, {"vuln", e.vulnerability}});
    j["entry_nodes"] = g.entry_nodes;
    j["target_nodes"] = g.target_nodes;
    return j.dump(2);
}

MultiLayerAttackGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return graph_from_json_text(ss.str());
}

}  // namespace mlag
