#include "tvg/static_graph.hpp"

#include <algorithm>
#include <utility>

namespace tvg {

NodeId StaticGraph::add_node(std::string_view label) {
    auto it = index_.find(std::string(label));
    if (it != index_.end()) return it->second;
    const NodeId id = static_cast<NodeId>(labels_.size());
    labels_.emplace_back(label);
    index_.emplace(labels_.back(), id);
    return id;
}

std::optional<NodeId> StaticGraph::find_node(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::uint64_t StaticGraph::edge_key(NodeId a, NodeId b) const {
    if (!directed_ && a > b) std::swap(a, b);
    return (std::uint64_t(a) << 32) | std::uint64_t(b);
}

bool StaticGraph::add_edge(NodeId a, NodeId b, std::int64_t weight) {
    if (a == b) {
        ++dropped_self_loops_;
        return false;
    }
    if (!directed_ && a > b) std::swap(a, b);
    const std::uint64_t key = edge_key(a, b);
    auto [it, inserted] = edge_index_.try_emplace(key, edges_.size());
    if (inserted) {
        edges_.push_back(Edge{a, b, weight});
    } else {
        edges_[it->second].weight += weight;
    }
    return true;
}

bool StaticGraph::has_edge(NodeId a, NodeId b) const {
    return edge_index_.count(edge_key(a, b)) > 0;
}

std::int64_t StaticGraph::edge_weight(NodeId a, NodeId b) const {
    auto it = edge_index_.find(edge_key(a, b));
    return it == edge_index_.end() ? 0 : edges_[it->second].weight;
}

std::vector<std::vector<NodeId>> StaticGraph::undirected_adjacency() const {
    std::vector<std::vector<NodeId>> adj(labels_.size());
    for (const Edge& e : edges_) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    for (auto& nbrs : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return adj;
}

std::vector<std::vector<NodeId>> StaticGraph::out_adjacency() const {
    if (!directed_) return undirected_adjacency();
    std::vector<std::vector<NodeId>> adj(labels_.size());
    for (const Edge& e : edges_) adj[e.a].push_back(e.b);
    for (auto& nbrs : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return adj;
}

std::vector<std::int64_t> StaticGraph::degrees() const {
    std::vector<std::int64_t> deg(labels_.size(), 0);
    for (const Edge& e : edges_) {
        ++deg[e.a];
        ++deg[e.b];
    }
    return deg;
}

} // namespace tvg
