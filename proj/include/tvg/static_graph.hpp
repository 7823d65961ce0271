#ifndef TVG_STATIC_GRAPH_HPP
#define TVG_STATIC_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tvg {

using NodeId = std::uint32_t;

// Simple (di)graph with labeled nodes and aggregated integer edge weights.
// Self-loops are dropped at insertion; parallel edges merge by summing weights.
class StaticGraph {
public:
    struct Edge {
        NodeId a;
        NodeId b; // directed: a -> b; undirected: a <= b
        std::int64_t weight;
    };

    explicit StaticGraph(bool directed = false) : directed_(directed) {}

    bool directed() const { return directed_; }

    NodeId add_node(std::string_view label);
    std::optional<NodeId> find_node(std::string_view label) const;
    const std::string& label(NodeId id) const { return labels_[id]; }

    // Returns false when the edge was a self-loop (dropped and counted).
    bool add_edge(NodeId a, NodeId b, std::int64_t weight = 1);

    std::size_t node_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t dropped_self_loops() const { return dropped_self_loops_; }

    bool has_edge(NodeId a, NodeId b) const;
    std::int64_t edge_weight(NodeId a, NodeId b) const; // 0 when absent

    // Neighbor lists ignoring direction, sorted, no duplicates.
    std::vector<std::vector<NodeId>> undirected_adjacency() const;
    // Out-neighbors; identical to undirected_adjacency() for undirected graphs.
    std::vector<std::vector<NodeId>> out_adjacency() const;

    std::vector<std::int64_t> degrees() const; // undirected view

private:
    std::uint64_t edge_key(NodeId a, NodeId b) const;

    bool directed_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<Edge> edges_;
    std::unordered_map<std::uint64_t, std::size_t> edge_index_;
    std::size_t dropped_self_loops_ = 0;
};

} // namespace tvg

#endif // TVG_STATIC_GRAPH_HPP
