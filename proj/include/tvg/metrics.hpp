#ifndef TVG_METRICS_HPP
#define TVG_METRICS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tvg/static_graph.hpp"

namespace tvg {

// Undefined metrics are empty optionals, never fabricated zeros.

struct Partition {
    std::vector<int> community; // node -> dense community id
    int community_count = 0;
};

Partition single_community(const StaticGraph& g);

// Newman-Girvan modularity of an undirected (or symmetrized) graph,
// unweighted edges; empty when the graph has no edges.
std::optional<double> modularity(const StaticGraph& g, const Partition& p);

// Greedy local moving with aggregation (Louvain-style), resolution 1.0.
// Node visit order is a permutation derived from the seed; the result is
// bitwise deterministic for a fixed seed.
Partition detect_communities(const StaticGraph& g, std::uint64_t seed = 0);

// Mean local clustering; directed graphs are symmetrized, degree-<2 nodes
// contribute 0. Empty on an empty graph.
std::optional<double> average_clustering(const StaticGraph& g);
std::optional<double> average_clustering_serial(const StaticGraph& g);

// 2e/(v(v-1)) undirected, e/(v(v-1)) directed; empty when v < 2.
std::optional<double> density(const StaticGraph& g);

struct PathStats {
    std::optional<std::int64_t> diameter;
    std::optional<double> average_path_length;
    std::int64_t reachable_pairs = 0;   // ordered for directed graphs
    std::int64_t unreachable_pairs = 0; // distinct-node pairs only
};

// Unweighted shortest paths over reachable pairs; disconnected graphs report
// the unreachable-pair count alongside. OpenMP over BFS sources.
PathStats path_stats(const StaticGraph& g);
PathStats path_stats_serial(const StaticGraph& g);

double average_degree(const StaticGraph& g);   // 2e/v (v >= 1, else 0)
double node_edge_ratio(const StaticGraph& g);  // e/v

// Least-squares slope of log(frequency) vs log(degree) over degrees >= 1;
// empty with fewer than two distinct positive degrees.
std::optional<double> power_law_exponent(const StaticGraph& g);
std::optional<double> fit_power_law_loglog(
    std::span<const std::pair<std::int64_t, std::int64_t>> degree_freq);

std::int64_t connected_components(const StaticGraph& g); // weak for directed
std::int64_t cyclomatic_number(const StaticGraph& g);    // e - v + p

std::optional<double> alpha_index(const StaticGraph& g); // mu/((v-1)(v-2)/2), v>=3
double beta_index(const StaticGraph& g);                 // e/v
std::optional<double> gamma_index(const StaticGraph& g); // 100e/(3(v-2)), v>=3

// Subgraph induced by the largest connected component (weak for directed).
StaticGraph largest_component(const StaticGraph& g);

struct MetricSeries {
    std::string metric;
    std::vector<std::string> labels;
    std::vector<std::optional<double>> values;
};

// Registered metric names: clustering, density, modularity, diameter,
// avg_path_length, average_degree, node_edge_ratio, power_law, cyclomatic,
// alpha, beta, gamma. Unknown names throw ConfigError.
bool is_known_metric(const std::string& name);
std::vector<std::string> known_metrics();
std::optional<double> evaluate_metric(const StaticGraph& g,
                                      const std::string& name,
                                      std::uint64_t seed = 0);

// One value per footprint window, evaluated in parallel, assembled in order.
MetricSeries metric_series(std::span<const StaticGraph> footprints,
                           std::span<const std::string> labels,
                           const std::string& metric, std::uint64_t seed = 0);

} // namespace tvg

#endif // TVG_METRICS_HPP
