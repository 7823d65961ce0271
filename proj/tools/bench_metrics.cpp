// Compares the OpenMP metric kernels against their serial references on
// generated graphs. Run with: tvg_bench [nodes] [edge probability]
#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#include "tvg/metrics.hpp"
#include "tvg/static_graph.hpp"

using namespace tvg;
using Clock = std::chrono::steady_clock;

namespace {

StaticGraph make_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    StaticGraph g(false);
    for (int i = 0; i < n; ++i) g.add_node("n" + std::to_string(i));
    std::bernoulli_distribution edge(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng)) g.add_edge(NodeId(i), NodeId(j));
    return g;
}

template <typename F>
double time_ms(F&& fn) {
    const auto start = Clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

} // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 2000;
    const double p = argc > 2 ? std::atof(argv[2]) : 0.01;
    const auto g = make_graph(n, p, 12345);
    std::cout << "graph: " << g.node_count() << " nodes, " << g.edge_count()
              << " edges\n";
#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "openmp: not enabled in this build\n";
#endif

    PathStats parallel_stats, serial_stats;
    const double t_paths_par = time_ms([&] { parallel_stats = path_stats(g); });
    const double t_paths_ser =
        time_ms([&] { serial_stats = path_stats_serial(g); });
    if (parallel_stats.diameter != serial_stats.diameter ||
        parallel_stats.reachable_pairs != serial_stats.reachable_pairs) {
        std::cerr << "path_stats variants disagree\n";
        return 1;
    }
    std::cout << "path_stats:          " << t_paths_par << " ms parallel, "
              << t_paths_ser << " ms serial (x"
              << t_paths_ser / t_paths_par << ")\n";

    std::optional<double> c_par, c_ser;
    const double t_clust_par = time_ms([&] { c_par = average_clustering(g); });
    const double t_clust_ser =
        time_ms([&] { c_ser = average_clustering_serial(g); });
    if (c_par.has_value() != c_ser.has_value() ||
        (c_par && std::abs(*c_par - *c_ser) > 1e-9)) {
        std::cerr << "clustering variants disagree\n";
        return 1;
    }
    std::cout << "average_clustering:  " << t_clust_par << " ms parallel, "
              << t_clust_ser << " ms serial (x"
              << t_clust_ser / t_clust_par << ")\n";
    return 0;
}
