#include "tvg/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tvg/errors.hpp"

namespace tvg {

Partition single_community(const StaticGraph& g) {
    Partition p;
    p.community.assign(g.node_count(), 0);
    p.community_count = g.node_count() > 0 ? 1 : 0;
    return p;
}

std::optional<double> modularity(const StaticGraph& g, const Partition& p) {
    const std::size_t n = g.node_count();
    if (p.community.size() != n)
        throw InvalidArgumentError("partition does not cover the graph");
    const double m = static_cast<double>(g.edge_count());
    if (m == 0) return std::nullopt;
    std::vector<double> intra(p.community_count, 0.0);
    std::vector<double> degree_sum(p.community_count, 0.0);
    for (const auto& e : g.edges()) {
        const int ca = p.community[e.a];
        const int cb = p.community[e.b];
        if (ca == cb) intra[ca] += 1.0;
        degree_sum[ca] += 1.0;
        degree_sum[cb] += 1.0;
    }
    double q = 0.0;
    for (int c = 0; c < p.community_count; ++c) {
        const double frac = degree_sum[c] / (2.0 * m);
        q += intra[c] / m - frac * frac;
    }
    return q;
}

// ---- community detection -------------------------------------------------

namespace {

// Weighted undirected adjacency used during aggregation rounds.
struct LouvainGraph {
    std::vector<std::vector<std::pair<int, double>>> adj; // no self pairs
    std::vector<double> self_weight;                      // aggregated loops
    double total_weight = 0;                              // sum of edge weights
};

LouvainGraph to_louvain(const StaticGraph& g) {
    LouvainGraph lg;
    lg.adj.resize(g.node_count());
    lg.self_weight.assign(g.node_count(), 0.0);
    std::map<std::pair<int, int>, double> acc;
    for (const auto& e : g.edges()) {
        int a = static_cast<int>(e.a), b = static_cast<int>(e.b);
        if (a > b) std::swap(a, b);
        acc[{a, b}] += 1.0; // unweighted modularity: each edge counts once
    }
    for (const auto& [key, w] : acc) {
        lg.adj[key.first].emplace_back(key.second, w);
        lg.adj[key.second].emplace_back(key.first, w);
        lg.total_weight += w;
    }
    return lg;
}

// One local-moving pass + aggregation; returns the node->community map and
// the aggregated graph.
bool local_moving(const LouvainGraph& g, std::vector<int>& community,
                  std::mt19937_64& rng) {
    const int n = static_cast<int>(g.adj.size());
    const double two_m = 2.0 * g.total_weight;
    std::vector<double> community_degree(n, 0.0);
    std::vector<double> node_degree(n, 0.0);
    for (int u = 0; u < n; ++u) {
        for (const auto& [v, w] : g.adj[u]) node_degree[u] += w;
        node_degree[u] += 2.0 * g.self_weight[u];
    }
    for (int u = 0; u < n; ++u) community_degree[community[u]] += node_degree[u];

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    bool any_move = false;
    bool improved = true;
    while (improved) {
        improved = false;
        for (int u : order) {
            const int old_c = community[u];
            // Weight from u into each neighboring community.
            std::map<int, double> links;
            links[old_c] += 0.0;
            for (const auto& [v, w] : g.adj[u]) links[community[v]] += w;
            community_degree[old_c] -= node_degree[u];
            double best_gain = 0.0;
            int best_c = old_c;
            const double base = links.count(old_c) ? links[old_c] : 0.0;
            for (const auto& [c, w_in] : links) {
                const double gain =
                    (w_in - base) -
                    node_degree[u] * (community_degree[c] - community_degree[old_c]) /
                        two_m;
                if (gain > best_gain + 1e-12 ||
                    (std::abs(gain - best_gain) <= 1e-12 && c < best_c &&
                     gain > 1e-12)) {
                    best_gain = gain;
                    best_c = c;
                }
            }
            community_degree[best_c] += node_degree[u];
            if (best_c != old_c) {
                community[u] = best_c;
                improved = true;
                any_move = true;
            }
        }
    }
    return any_move;
}

LouvainGraph aggregate(const LouvainGraph& g, const std::vector<int>& community,
                       std::vector<int>& dense) {
    // Renumber to dense ids.
    std::map<int, int> remap;
    dense.resize(community.size());
    for (std::size_t u = 0; u < community.size(); ++u) {
        auto [it, inserted] =
            remap.try_emplace(community[u], static_cast<int>(remap.size()));
        dense[u] = it->second;
    }
    LouvainGraph out;
    out.adj.resize(remap.size());
    out.self_weight.assign(remap.size(), 0.0);
    std::map<std::pair<int, int>, double> acc;
    for (std::size_t u = 0; u < g.adj.size(); ++u) {
        out.self_weight[dense[u]] += g.self_weight[u];
        for (const auto& [v, w] : g.adj[u]) {
            if (v < static_cast<int>(u)) continue; // each undirected pair once
            const int cu = dense[u], cv = dense[v];
            if (cu == cv) {
                out.self_weight[cu] += w;
            } else {
                acc[{std::min(cu, cv), std::max(cu, cv)}] += w;
            }
        }
    }
    for (const auto& [key, w] : acc) {
        out.adj[key.first].emplace_back(key.second, w);
        out.adj[key.second].emplace_back(key.first, w);
    }
    out.total_weight = g.total_weight;
    return out;
}

} // namespace

Partition detect_communities(const StaticGraph& g, std::uint64_t seed) {
    const std::size_t n = g.node_count();
    Partition result;
    result.community.resize(n);
    std::iota(result.community.begin(), result.community.end(), 0);
    result.community_count = static_cast<int>(n);
    if (n == 0 || g.edge_count() == 0) {
        return result;
    }

    std::mt19937_64 rng(seed);
    LouvainGraph level = to_louvain(g);
    std::vector<int> node_to_level(n);
    std::iota(node_to_level.begin(), node_to_level.end(), 0);

    while (true) {
        std::vector<int> community(level.adj.size());
        std::iota(community.begin(), community.end(), 0);
        const bool moved = local_moving(level, community, rng);
        if (!moved) break;
        std::vector<int> dense;
        const std::size_t old_size = level.adj.size();
        level = aggregate(level, community, dense);
        for (std::size_t u = 0; u < n; ++u)
            node_to_level[u] = dense[node_to_level[u]];
        if (level.adj.size() == old_size) break; // no shrink, stable
    }

    // Dense renumber of final assignment.
    std::map<int, int> remap;
    for (std::size_t u = 0; u < n; ++u) {
        auto [it, ignored] =
            remap.try_emplace(node_to_level[u], static_cast<int>(remap.size()));
        result.community[u] = it->second;
    }
    result.community_count = static_cast<int>(remap.size());
    return result;
}

// ---- clustering ----------------------------------------------------------

namespace {
double local_clustering(const std::vector<std::vector<NodeId>>& adj, NodeId u) {
    const auto& nbrs = adj[u];
    const std::size_t d = nbrs.size();
    if (d < 2) return 0.0;
    std::size_t links = 0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            const auto& a = adj[nbrs[i]];
            if (std::binary_search(a.begin(), a.end(), nbrs[j])) ++links;
        }
    }
    return 2.0 * static_cast<double>(links) / (double(d) * double(d - 1));
}
} // namespace

std::optional<double> average_clustering_serial(const StaticGraph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) return std::nullopt;
    const auto adj = g.undirected_adjacency();
    double sum = 0.0;
    for (NodeId u = 0; u < n; ++u) sum += local_clustering(adj, u);
    return sum / static_cast<double>(n);
}

std::optional<double> average_clustering(const StaticGraph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) return std::nullopt;
    const auto adj = g.undirected_adjacency();
    double sum = 0.0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : sum) schedule(dynamic, 64)
#endif
    for (std::int64_t u = 0; u < static_cast<std::int64_t>(n); ++u)
        sum += local_clustering(adj, static_cast<NodeId>(u));
    return sum / static_cast<double>(n);
}

std::optional<double> density(const StaticGraph& g) {
    const double v = static_cast<double>(g.node_count());
    if (v < 2) return std::nullopt;
    const double e = static_cast<double>(g.edge_count());
    return g.directed() ? e / (v * (v - 1)) : 2.0 * e / (v * (v - 1));
}

// ---- shortest paths ------------------------------------------------------

namespace {

// BFS from one source; accumulates eccentricity, distance sum, reached count.
void bfs_accumulate(const std::vector<std::vector<NodeId>>& adj, NodeId src,
                    std::vector<std::int32_t>& dist, std::int64_t& ecc,
                    std::int64_t& dist_sum, std::int64_t& reached) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<NodeId> queue;
    dist[src] = 0;
    queue.push(src);
    ecc = 0;
    dist_sum = 0;
    reached = 0;
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop();
        for (NodeId v : adj[u]) {
            if (dist[v] >= 0) continue;
            dist[v] = dist[u] + 1;
            ecc = std::max<std::int64_t>(ecc, dist[v]);
            dist_sum += dist[v];
            ++reached;
            queue.push(v);
        }
    }
}

PathStats path_stats_impl(const StaticGraph& g, bool parallel) {
    const std::size_t n = g.node_count();
    PathStats stats;
    if (n == 0) return stats;
    const auto adj = g.out_adjacency();

    std::int64_t diameter = 0;
    std::int64_t total_dist = 0;
    std::int64_t reachable = 0;

#ifdef _OPENMP
#pragma omp parallel if (parallel)
    {
        std::vector<std::int32_t> dist(n);
        std::int64_t local_diam = 0, local_dist = 0, local_reach = 0;
#pragma omp for schedule(dynamic, 16) nowait
        for (std::int64_t u = 0; u < static_cast<std::int64_t>(n); ++u) {
            std::int64_t ecc, dsum, reach;
            bfs_accumulate(adj, static_cast<NodeId>(u), dist, ecc, dsum, reach);
            local_diam = std::max(local_diam, ecc);
            local_dist += dsum;
            local_reach += reach;
        }
#pragma omp critical
        {
            diameter = std::max(diameter, local_diam);
            total_dist += local_dist;
            reachable += local_reach;
        }
    }
#else
    (void)parallel;
    std::vector<std::int32_t> dist(n);
    for (NodeId u = 0; u < n; ++u) {
        std::int64_t ecc, dsum, reach;
        bfs_accumulate(adj, u, dist, ecc, dsum, reach);
        diameter = std::max(diameter, ecc);
        total_dist += dsum;
        reachable += reach;
    }
#endif

    // BFS counts ordered pairs; undirected graphs fold them to unordered.
    const std::int64_t total_pairs_ordered =
        static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1);
    if (!g.directed()) {
        reachable /= 2;
        total_dist /= 2;
    }
    const std::int64_t total_pairs =
        g.directed() ? total_pairs_ordered : total_pairs_ordered / 2;
    stats.reachable_pairs = reachable;
    stats.unreachable_pairs = total_pairs - reachable;
    if (reachable > 0) {
        stats.diameter = diameter;
        stats.average_path_length =
            static_cast<double>(total_dist) / static_cast<double>(reachable);
    }
    return stats;
}

} // namespace

PathStats path_stats(const StaticGraph& g) { return path_stats_impl(g, true); }
PathStats path_stats_serial(const StaticGraph& g) {
    return path_stats_impl(g, false);
}

// ---- degree-based metrics ------------------------------------------------

double average_degree(const StaticGraph& g) {
    if (g.node_count() == 0) return 0.0;
    return 2.0 * static_cast<double>(g.edge_count()) /
           static_cast<double>(g.node_count());
}

double node_edge_ratio(const StaticGraph& g) {
    if (g.node_count() == 0) return 0.0;
    return static_cast<double>(g.edge_count()) /
           static_cast<double>(g.node_count());
}

std::optional<double> fit_power_law_loglog(
    std::span<const std::pair<std::int64_t, std::int64_t>> degree_freq) {
    std::vector<std::pair<double, double>> points;
    for (const auto& [degree, freq] : degree_freq)
        if (degree >= 1 && freq >= 1)
            points.emplace_back(std::log(double(degree)), std::log(double(freq)));
    if (points.size() < 2) return std::nullopt;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : points) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double k = static_cast<double>(points.size());
    const double denom = k * sxx - sx * sx;
    if (std::abs(denom) < 1e-12) return std::nullopt;
    return (k * sxy - sx * sy) / denom;
}

std::optional<double> power_law_exponent(const StaticGraph& g) {
    std::map<std::int64_t, std::int64_t> freq;
    for (std::int64_t d : g.degrees())
        if (d >= 1) ++freq[d];
    std::vector<std::pair<std::int64_t, std::int64_t>> hist(freq.begin(),
                                                            freq.end());
    return fit_power_law_loglog(hist);
}

// ---- components and index metrics ----------------------------------------

namespace {
std::vector<int> component_ids(const StaticGraph& g, int& count) {
    const std::size_t n = g.node_count();
    std::vector<int> comp(n, -1);
    const auto adj = g.undirected_adjacency();
    count = 0;
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            for (NodeId v : adj[u]) {
                if (comp[v] < 0) {
                    comp[v] = count;
                    stack.push_back(v);
                }
            }
        }
        ++count;
    }
    return comp;
}
} // namespace

std::int64_t connected_components(const StaticGraph& g) {
    int count = 0;
    component_ids(g, count);
    return count;
}

std::int64_t cyclomatic_number(const StaticGraph& g) {
    return static_cast<std::int64_t>(g.edge_count()) -
           static_cast<std::int64_t>(g.node_count()) + connected_components(g);
}

std::optional<double> alpha_index(const StaticGraph& g) {
    const double v = static_cast<double>(g.node_count());
    if (v < 3) return std::nullopt;
    const double max_cycles = (v - 1) * (v - 2) / 2.0;
    return static_cast<double>(cyclomatic_number(g)) / max_cycles;
}

double beta_index(const StaticGraph& g) { return node_edge_ratio(g); }

std::optional<double> gamma_index(const StaticGraph& g) {
    const double v = static_cast<double>(g.node_count());
    if (v < 3) return std::nullopt;
    return 100.0 * static_cast<double>(g.edge_count()) / (3.0 * (v - 2));
}

StaticGraph largest_component(const StaticGraph& g) {
    int count = 0;
    const auto comp = component_ids(g, count);
    if (count == 0) return StaticGraph(g.directed());
    std::vector<std::int64_t> size(count, 0);
    for (int c : comp) ++size[c];
    const int best =
        static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());
    StaticGraph out(g.directed());
    for (NodeId u = 0; u < g.node_count(); ++u)
        if (comp[u] == best) out.add_node(g.label(u));
    for (const auto& e : g.edges())
        if (comp[e.a] == best)
            out.add_edge(*out.find_node(g.label(e.a)), *out.find_node(g.label(e.b)),
                         e.weight);
    return out;
}

// ---- metric registry and series ------------------------------------------

std::vector<std::string> known_metrics() {
    return {"clustering",     "density",   "modularity",     "diameter",
            "avg_path_length", "average_degree", "node_edge_ratio",
            "power_law",      "cyclomatic", "alpha",         "beta",
            "gamma"};
}

bool is_known_metric(const std::string& name) {
    const auto metrics = known_metrics();
    return std::find(metrics.begin(), metrics.end(), name) != metrics.end();
}

std::optional<double> evaluate_metric(const StaticGraph& g,
                                      const std::string& name,
                                      std::uint64_t seed) {
    if (name == "clustering") return average_clustering(g);
    if (name == "density") return density(g);
    if (name == "modularity") {
        if (g.edge_count() == 0) return std::nullopt;
        return modularity(g, detect_communities(g, seed));
    }
    if (name == "diameter") {
        const auto d = path_stats(g).diameter;
        if (!d) return std::nullopt;
        return static_cast<double>(*d);
    }
    if (name == "avg_path_length") return path_stats(g).average_path_length;
    if (name == "average_degree") {
        if (g.node_count() == 0) return std::nullopt;
        return average_degree(g);
    }
    if (name == "node_edge_ratio") {
        if (g.node_count() == 0) return std::nullopt;
        return node_edge_ratio(g);
    }
    if (name == "power_law") return power_law_exponent(g);
    if (name == "cyclomatic") {
        if (g.node_count() == 0) return std::nullopt;
        return static_cast<double>(cyclomatic_number(g));
    }
    if (name == "alpha") return alpha_index(g);
    if (name == "beta") {
        if (g.node_count() == 0) return std::nullopt;
        return beta_index(g);
    }
    if (name == "gamma") return gamma_index(g);
    throw ConfigError("unknown metric: " + name);
}

MetricSeries metric_series(std::span<const StaticGraph> footprints,
                           std::span<const std::string> labels,
                           const std::string& metric, std::uint64_t seed) {
    if (footprints.empty())
        throw InvalidArgumentError("metric series needs at least one footprint");
    if (labels.size() != footprints.size())
        throw InvalidArgumentError("label count must match footprint count");
    if (!is_known_metric(metric)) throw ConfigError("unknown metric: " + metric);

    MetricSeries series;
    series.metric = metric;
    series.labels.assign(labels.begin(), labels.end());
    series.values.resize(footprints.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(footprints.size()); ++i)
        series.values[i] = evaluate_metric(footprints[i], metric, seed);
    return series;
}

} // namespace tvg
