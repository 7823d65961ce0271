// Command-line front end: corpus ingest, derived-graph builds, footprint
// series, metric reports, citation trends, snapshot tables and exports.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tvg/errors.hpp"
#include "tvg/graph_io.hpp"
#include "tvg/metrics.hpp"
#include "tvg/pipeline.hpp"
#include "tvg/transforms.hpp"

using namespace tvg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUndefinedOnly = 2;

// Window spec: "1y", "6m" or a plain day count.
void apply_window(AnalysisConfig& cfg, const std::string& spec) {
    if (spec.empty()) return;
    if (spec == "1y") {
        cfg.window_days = 0;
        cfg.window_months = 12;
    } else if (spec.back() == 'm') {
        cfg.window_days = 0;
        cfg.window_months = std::stoi(spec.substr(0, spec.size() - 1));
        if (cfg.window_months <= 0)
            throw ConfigError("window months must be positive: " + spec);
    } else if (spec.back() == 'y') {
        cfg.window_days = 0;
        cfg.window_months = 12 * std::stoi(spec.substr(0, spec.size() - 1));
    } else {
        cfg.window_days = std::stoll(spec);
        if (cfg.window_days <= 0)
            throw ConfigError("window days must be positive: " + spec);
    }
}

TimeVaryingGraph build_tvg(const std::string& graph, const Corpus& corpus,
                           std::int64_t threshold) {
    if (graph == "ga") return build_temporal_coauthorship(corpus);
    if (graph == "gc") return build_temporal_citation(corpus);
    if (graph == "gi")
        return filter_most_cited(build_interaction(corpus), threshold);
    throw ConfigError("unknown graph: " + graph + " (expected ga, gc or gi)");
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw IoError("cannot write " + path);
    return file;
}

int cmd_ingest(const AnalysisConfig& cfg, const std::string& out_path) {
    const Corpus corpus = load_corpus(cfg);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw IoError("cannot write " + out_path);
        export_corpus_canonical(corpus, out);
    }
    std::cout << corpus.report().to_text();
    return kExitOk;
}

int cmd_build(const AnalysisConfig& cfg, const std::string& kind,
              const std::string& format, const std::string& out_path) {
    const Corpus corpus = load_corpus(cfg);
    const GraphFormat fmt = parse_graph_format(format);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    if (kind == "coauthorship") {
        export_graph(build_coauthorship(corpus), fmt, out);
    } else if (kind == "citation") {
        export_graph(build_citation(corpus), fmt, out);
    } else if (kind == "interaction") {
        export_graph(filter_most_cited(build_interaction(corpus), cfg.threshold),
                     fmt, out);
    } else {
        throw ConfigError("unknown build kind: " + kind);
    }
    return kExitOk;
}

int cmd_footprints(const AnalysisConfig& cfg, const std::string& graph,
                   const std::string& out_path) {
    const Corpus corpus = load_corpus(cfg);
    const auto tvg = build_tvg(graph, corpus, cfg.threshold);
    const auto [lo, hi] = corpus.lifetime();
    const auto cuts = make_cuts(cfg, lo, hi);
    const auto labels =
        window_labels(cuts, cfg.window_days > 0 ? 0 : cfg.window_months);
    const auto scope =
        cfg.all_entities ? NodeScope::AllEntities : NodeScope::WindowActive;
    const auto seq = tvg.footprint_sequence(cuts, scope);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    out << "window,vertices,edges\n";
    for (std::size_t i = 0; i < seq.size(); ++i)
        out << csv_escape(labels[i]) << ',' << seq[i].node_count() << ','
            << seq[i].edge_count() << '\n';
    return kExitOk;
}

int cmd_metrics(const AnalysisConfig& cfg, const std::string& graph,
                const std::vector<std::string>& metric_names,
                const std::string& out_path) {
    const Corpus corpus = load_corpus(cfg);
    const auto tvg = build_tvg(graph, corpus, cfg.threshold);
    const auto [lo, hi] = corpus.lifetime();
    const auto cuts = make_cuts(cfg, lo, hi);
    const auto labels =
        window_labels(cuts, cfg.window_days > 0 ? 0 : cfg.window_months);
    const auto scope =
        cfg.all_entities ? NodeScope::AllEntities : NodeScope::WindowActive;
    const auto seq = tvg.footprint_sequence(cuts, scope);

    std::vector<std::string> names = metric_names;
    if (names.empty()) names = {"clustering", "density", "modularity"};
    std::vector<MetricSeries> series;
    bool any_defined = false;
    for (const auto& name : names) {
        series.push_back(metric_series(seq, labels, name, cfg.seed));
        for (const auto& v : series.back().values)
            if (v.has_value()) any_defined = true;
    }
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    write_series_csv(series, out);
    if (!any_defined) {
        std::cerr << "warning: every requested value is undefined\n";
        return kExitUndefinedOnly;
    }
    return kExitOk;
}

int cmd_trend(const AnalysisConfig& cfg, std::string paper_id,
              const std::string& bin, const std::string& out_path) {
    const Corpus corpus = load_corpus(cfg);
    if (paper_id.empty()) {
        const auto top = most_cited_paper(corpus);
        if (!top) throw LookupError("corpus has no internally cited paper");
        paper_id = *top;
        std::cerr << "most cited paper: " << paper_id << "\n";
    }
    int bin_months = 6;
    if (!bin.empty()) {
        AnalysisConfig tmp;
        apply_window(tmp, bin);
        if (tmp.window_days > 0)
            throw ConfigError("trend bins are calendar-based; use e.g. 6m");
        bin_months = tmp.window_months;
    }
    const auto series = citation_trend(corpus, paper_id, bin_months);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    write_series_csv(std::vector<MetricSeries>{series}, out);
    return kExitOk;
}

int cmd_snapshot_table(AnalysisConfig cfg, const std::string& window,
                       bool per_window, const std::string& out_path) {
    if (!window.empty())
        apply_window(cfg, window);
    else if (cfg.window_days == 0 && cfg.window_months == 12)
        cfg.window_months = 6; // snapshot cadence default
    const Corpus corpus = load_corpus(cfg);
    const auto gi = filter_most_cited(build_interaction(corpus), cfg.threshold);
    const auto [lo, hi] = corpus.lifetime();
    const auto cuts = make_cuts(cfg, lo, hi);
    const auto labels =
        window_labels(cuts, cfg.window_days > 0 ? 0 : cfg.window_months);
    std::vector<StaticGraph> snapshots;
    for (std::size_t i = 1; i < cuts.size(); ++i)
        snapshots.push_back(per_window ? gi.footprint(cuts[i - 1], cuts[i])
                                       : gi.footprint(lo, cuts[i]));
    const auto table = community_snapshot_table(snapshots, labels);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    write_snapshot_csv(table, out);
    return kExitOk;
}

int cmd_export(const AnalysisConfig& cfg, const std::string& graph,
               const std::string& format, const std::string& out_path) {
    const Corpus corpus = load_corpus(cfg);
    const GraphFormat fmt = parse_graph_format(format);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    export_graph(build_tvg(graph, corpus, cfg.threshold), fmt, out);
    return kExitOk;
}

int cmd_report(const AnalysisConfig& cfg) {
    const Corpus corpus = load_corpus(cfg);
    const auto report = run_metrics_report(cfg, corpus);
    for (const auto& [graph, series_list] : report.per_graph) {
        for (const auto& series : series_list) {
            if (series.metric != "clustering") continue;
            const auto pt = locate_phase_transition(series);
            if (pt)
                std::cout << graph << " clustering: largest change "
                          << pt->left_label << " -> " << pt->right_label
                          << " (delta " << pt->delta << ")\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Temporal graph analytics for publication corpora"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand name

    std::string config_path;
    AnalysisConfig cfg;
    std::string window_spec;
    app.add_option("--config", config_path, "flat key=value config file");
    app.add_option("--records", cfg.records, "canonical record file");
    app.add_option("--edges", cfg.edges, "citation edge file");
    app.add_option("--dates", cfg.dates, "submission dates file");
    app.add_option("--abstracts", cfg.abstracts_dir, "abstract metadata dir");
    app.add_option("--outdir", cfg.outdir, "report output directory");
    app.add_option("--threshold", cfg.threshold, "interaction strength cutoff");
    app.add_option("--seed", cfg.seed, "community detection seed");
    app.add_option("--window", window_spec, "window: 1y, 6m or a day count");
    app.add_flag("--all-entities", cfg.all_entities,
                 "keep every entity in each footprint");

    std::string out_path, kind = "coauthorship", format = "edgelist";
    std::string graph = "gi", paper_id, bin, ingest_out;
    std::vector<std::string> metric_names;
    bool per_window = false;

    auto* ingest = app.add_subcommand("ingest", "load a corpus, print the report");
    ingest->add_option("--out", ingest_out, "write canonical records here");

    auto* build = app.add_subcommand("build", "build and export a derived graph");
    build->add_option("--kind", kind, "coauthorship, citation or interaction");
    build->add_option("--format", format, "graphml, dot or edgelist");
    build->add_option("--out", out_path, "output file (default stdout)");

    auto* footprints =
        app.add_subcommand("footprints", "per-window footprint sizes");
    footprints->add_option("--graph", graph, "ga, gc or gi");
    footprints->add_option("--out", out_path, "output file (default stdout)");

    auto* metrics = app.add_subcommand("metrics", "per-window metric series");
    metrics->add_option("--graph", graph, "ga, gc or gi");
    metrics->add_option("--metric", metric_names,
                        "metric names (default clustering, density, modularity)");
    metrics->add_option("--out", out_path, "output file (default stdout)");

    auto* trend = app.add_subcommand("trend", "citation trend of one paper");
    trend->add_option("--paper", paper_id, "paper id (default: most cited)");
    trend->add_option("--bin", bin, "bin width, e.g. 6m");
    trend->add_option("--out", out_path, "output file (default stdout)");

    auto* snapshot =
        app.add_subcommand("snapshot-table", "community evolution table");
    snapshot->add_flag("--per-window", per_window,
                       "per-window instead of cumulative snapshots");
    snapshot->add_option("--out", out_path, "output file (default stdout)");

    auto* exp = app.add_subcommand("export", "export a temporal graph");
    exp->add_option("--graph", graph, "ga, gc or gi");
    exp->add_option("--format", format, "graphml, dot or edgelist");
    exp->add_option("--out", out_path, "output file (default stdout)");

    auto* report =
        app.add_subcommand("report", "full metric report CSVs into --outdir");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) {
            // config provides the defaults; explicit flags win
            AnalysisConfig from_file = load_config(config_path);
            if (cfg.records.empty()) cfg.records = from_file.records;
            if (cfg.edges.empty()) cfg.edges = from_file.edges;
            if (cfg.dates.empty()) cfg.dates = from_file.dates;
            if (cfg.abstracts_dir.empty())
                cfg.abstracts_dir = from_file.abstracts_dir;
            if (cfg.outdir == ".") cfg.outdir = from_file.outdir;
            if (!app.count("--threshold")) cfg.threshold = from_file.threshold;
            if (!app.count("--seed")) cfg.seed = from_file.seed;
            if (!app.count("--all-entities"))
                cfg.all_entities = from_file.all_entities;
            if (window_spec.empty()) {
                cfg.window_days = from_file.window_days;
                cfg.window_months = from_file.window_months;
            }
        }
        apply_window(cfg, window_spec);
        cfg.validate();

        if (ingest->parsed()) return cmd_ingest(cfg, ingest_out);
        if (build->parsed()) return cmd_build(cfg, kind, format, out_path);
        if (footprints->parsed()) return cmd_footprints(cfg, graph, out_path);
        if (metrics->parsed())
            return cmd_metrics(cfg, graph, metric_names, out_path);
        if (trend->parsed()) return cmd_trend(cfg, paper_id, bin, out_path);
        if (snapshot->parsed())
            return cmd_snapshot_table(cfg, window_spec, per_window, out_path);
        if (exp->parsed()) return cmd_export(cfg, graph, format, out_path);
        if (report->parsed()) return cmd_report(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitOk;
}
