#ifndef TVG_PIPELINE_HPP
#define TVG_PIPELINE_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tvg/corpus.hpp"
#include "tvg/metrics.hpp"
#include "tvg/static_graph.hpp"
#include "tvg/tvg.hpp"

namespace tvg {

struct AnalysisConfig {
    // Inputs: either records (canonical) or edges+dates (+abstracts_dir).
    std::string records;
    std::string edges;
    std::string dates;
    std::string abstracts_dir;

    std::int64_t window_days = 0;   // 0 = calendar windows
    int window_months = 12;         // 12 = yearly, 6 = semesters
    std::int64_t threshold = 150;   // interaction-graph strength cutoff
    std::uint64_t seed = 0;         // community detection
    bool all_entities = false;      // footprint node scoping
    std::string outdir = ".";

    void validate() const; // ConfigError on bad values
};

// Flat key=value text; '#' comments; unknown keys rejected.
AnalysisConfig parse_config(std::istream& in);
AnalysisConfig load_config(const std::string& path);
void apply_config_entry(AnalysisConfig& cfg, const std::string& key,
                        const std::string& value);

Corpus load_corpus(const AnalysisConfig& cfg);

// Calendar-aligned cuts covering [begin, end): first cut at begin, then at
// month boundaries of the chosen cadence, last cut at end.
std::vector<TimeInstant> calendar_cuts(TimeInstant begin, TimeInstant end,
                                       int months);
std::vector<TimeInstant> fixed_cuts(TimeInstant begin, TimeInstant end,
                                    std::int64_t days);
std::vector<TimeInstant> make_cuts(const AnalysisConfig& cfg, TimeInstant begin,
                                   TimeInstant end);
// A window [t_k, t_{k+1}) is labeled by its start year (12-month cadence)
// or "YYYY-MM" otherwise.
std::vector<std::string> window_labels(std::span<const TimeInstant> cuts,
                                       int months);

// CSV rows: window,metric,value,defined ('.' decimal separator, RFC quoting).
void write_series_csv(std::span<const MetricSeries> series, std::ostream& out);

struct MetricsReport {
    std::map<std::string, std::vector<MetricSeries>> per_graph; // ga/gc/gi
};

// Per-window clustering, density, modularity for G_c^t, G_a^t and G_i; the
// G_i series additionally carry average_degree, avg_path_length, power_law
// and node_edge_ratio. Writes one CSV per graph into cfg.outdir.
MetricsReport run_metrics_report(const AnalysisConfig& cfg,
                                 const Corpus& corpus);

struct PhaseTransition {
    std::size_t left_index;  // boundary between labels[left] and labels[left+1]
    std::string left_label;
    std::string right_label;
    double delta;            // signed first difference across the boundary
};

// Boundary with the maximum absolute first difference between consecutive
// defined points; ties break to the earliest boundary. Empty with fewer than
// two defined points.
std::optional<PhaseTransition> locate_phase_transition(const MetricSeries& s);

// Citations received per bin (by citing paper's submission date).
MetricSeries citation_trend(const Corpus& corpus, const std::string& paper_id,
                            int bin_months = 6);
// Most internally cited paper; ties break to the smallest id.
std::optional<std::string> most_cited_paper(const Corpus& corpus);

struct SnapshotRow {
    std::string label;
    std::int64_t vertices = 0;
    std::int64_t edges = 0;
    std::optional<std::int64_t> diameter;
    std::optional<std::int64_t> cyclomatic;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> gamma;
};

struct SnapshotTable {
    std::vector<SnapshotRow> rows;
};

// Largest connected component per snapshot, evaluated with the index metrics.
SnapshotTable community_snapshot_table(std::span<const StaticGraph> snapshots,
                                       std::span<const std::string> labels);
void write_snapshot_csv(const SnapshotTable& table, std::ostream& out);

std::string csv_escape(const std::string& field);
std::string format_value(std::optional<double> v);

} // namespace tvg

#endif // TVG_PIPELINE_HPP
