#include "tvg/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tvg/errors.hpp"
#include "tvg/transforms.hpp"

namespace tvg {

void AnalysisConfig::validate() const {
    if (window_days < 0) throw ConfigError("window length must be > 0");
    if (window_days == 0 && window_months <= 0)
        throw ConfigError("window length must be > 0");
    if (threshold < 0) throw ConfigError("threshold must be >= 0");
    if (records.empty() && (edges.empty() || dates.empty()))
        throw ConfigError("need records= or edges=+dates= inputs");
}

void apply_config_entry(AnalysisConfig& cfg, const std::string& key,
                        const std::string& value) {
    auto to_int = [&](const std::string& v) {
        try {
            return std::stoll(v);
        } catch (const std::exception&) {
            throw ConfigError("bad integer for config key " + key + ": " + v);
        }
    };
    if (key == "records") cfg.records = value;
    else if (key == "edges") cfg.edges = value;
    else if (key == "dates") cfg.dates = value;
    else if (key == "abstracts_dir") cfg.abstracts_dir = value;
    else if (key == "window_days") cfg.window_days = to_int(value);
    else if (key == "window_months") cfg.window_months = static_cast<int>(to_int(value));
    else if (key == "threshold") cfg.threshold = to_int(value);
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(to_int(value));
    else if (key == "all_entities") cfg.all_entities = (value == "1" || value == "true");
    else if (key == "outdir") cfg.outdir = value;
    else throw ConfigError("unknown config key: " + key);
}

AnalysisConfig parse_config(std::istream& in) {
    AnalysisConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              " is not key=value");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        auto strip = [](std::string& s) {
            const auto sb = s.find_first_not_of(" \t");
            const auto se = s.find_last_not_of(" \t");
            s = (sb == std::string::npos) ? "" : s.substr(sb, se - sb + 1);
        };
        strip(key);
        strip(value);
        apply_config_entry(cfg, key, value);
    }
    return cfg;
}

AnalysisConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    return parse_config(in);
}

Corpus load_corpus(const AnalysisConfig& cfg) {
    CorpusPaths paths;
    paths.canonical = cfg.records;
    paths.edges = cfg.edges;
    paths.dates = cfg.dates;
    paths.abstracts_dir = cfg.abstracts_dir;
    return load_corpus(paths);
}

// ---- windowing -----------------------------------------------------------

std::vector<TimeInstant> calendar_cuts(TimeInstant begin, TimeInstant end,
                                       int months) {
    if (begin >= end) throw InvalidArgumentError("empty window span");
    if (months <= 0) throw InvalidArgumentError("cadence must be positive");
    std::vector<TimeInstant> cuts{begin};
    CivilDate c = to_date(begin);
    // Advance to the next aligned month boundary (Jan for yearly, Jan/Jul
    // for semesters, every N months otherwise).
    int month_index = (c.year * 12) + static_cast<int>(c.month) - 1;
    month_index = (month_index / months + 1) * months;
    for (;;) {
        const int year = month_index / 12;
        const unsigned month = static_cast<unsigned>(month_index % 12) + 1;
        const TimeInstant cut = from_date(year, month, 1);
        if (cut >= end) break;
        if (cut > begin) cuts.push_back(cut);
        month_index += months;
    }
    cuts.push_back(end);
    return cuts;
}

std::vector<TimeInstant> fixed_cuts(TimeInstant begin, TimeInstant end,
                                    std::int64_t days) {
    if (begin >= end) throw InvalidArgumentError("empty window span");
    if (days <= 0) throw InvalidArgumentError("window length must be > 0");
    std::vector<TimeInstant> cuts{begin};
    for (TimeInstant t = begin + days; t < end; t = t + days) cuts.push_back(t);
    cuts.push_back(end);
    return cuts;
}

std::vector<TimeInstant> make_cuts(const AnalysisConfig& cfg, TimeInstant begin,
                                   TimeInstant end) {
    if (cfg.window_days > 0) return fixed_cuts(begin, end, cfg.window_days);
    return calendar_cuts(begin, end, cfg.window_months);
}

std::vector<std::string> window_labels(std::span<const TimeInstant> cuts,
                                       int months) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const CivilDate c = to_date(cuts[i]);
        if (months == 12) {
            labels.push_back(std::to_string(c.year));
        } else {
            char buf[16];
            std::snprintf(buf, sizeof(buf), "%04d-%02u", c.year, c.month);
            labels.push_back(buf);
        }
    }
    return labels;
}

// ---- CSV -----------------------------------------------------------------

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_value(std::optional<double> v) {
    if (!v) return "";
    std::ostringstream out;
    out.imbue(std::locale::classic()); // '.' decimal separator
    out.precision(12);
    out << *v;
    return out.str();
}

void write_series_csv(std::span<const MetricSeries> series, std::ostream& out) {
    out << "window,metric,value,defined\n";
    for (const MetricSeries& s : series) {
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            out << csv_escape(s.labels[i]) << ',' << csv_escape(s.metric) << ','
                << format_value(s.values[i]) << ','
                << (s.values[i] ? 1 : 0) << '\n';
        }
    }
}

// ---- reports -------------------------------------------------------------

MetricsReport run_metrics_report(const AnalysisConfig& cfg,
                                 const Corpus& corpus) {
    if (!corpus.has_lifetime())
        throw ConfigError("corpus has no dated papers; nothing to window");
    const auto [begin, end] = corpus.lifetime();
    const auto cuts = make_cuts(cfg, begin, end);
    const auto labels =
        window_labels(cuts, cfg.window_days > 0 ? 0 : cfg.window_months);
    const NodeScope scope =
        cfg.all_entities ? NodeScope::AllEntities : NodeScope::WindowActive;

    const TimeVaryingGraph gc = build_temporal_citation(corpus);
    const TimeVaryingGraph ga = build_temporal_coauthorship(corpus);
    const TimeVaryingGraph gi =
        filter_most_cited(build_interaction(corpus), cfg.threshold);

    const std::vector<std::string> base_metrics = {"clustering", "density",
                                                   "modularity"};
    const std::vector<std::string> gi_extra = {"average_degree",
                                               "avg_path_length", "power_law",
                                               "node_edge_ratio"};

    MetricsReport report;
    std::filesystem::create_directories(cfg.outdir);
    auto run = [&](const std::string& name, const TimeVaryingGraph& g,
                   bool extra) {
        const auto footprints = g.footprint_sequence(cuts, scope);
        std::vector<MetricSeries> all;
        for (const std::string& m : base_metrics)
            all.push_back(metric_series(footprints, labels, m, cfg.seed));
        if (extra)
            for (const std::string& m : gi_extra)
                all.push_back(metric_series(footprints, labels, m, cfg.seed));
        std::ofstream out(std::filesystem::path(cfg.outdir) / (name + ".csv"));
        if (!out) throw IoError("cannot write CSV for " + name);
        write_series_csv(all, out);
        report.per_graph[name] = std::move(all);
    };
    run("gc", gc, false);
    run("ga", ga, false);
    run("gi", gi, true);
    return report;
}

std::optional<PhaseTransition> locate_phase_transition(const MetricSeries& s) {
    std::optional<PhaseTransition> best;
    std::optional<std::size_t> prev;
    std::size_t defined = 0;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (!s.values[i]) continue;
        ++defined;
        if (prev) {
            const double delta = *s.values[i] - *s.values[*prev];
            if (!best || std::abs(delta) > std::abs(best->delta)) {
                best = PhaseTransition{*prev, s.labels[*prev], s.labels[i], delta};
            }
        }
        prev = i;
    }
    if (defined < 2) return std::nullopt;
    return best;
}

MetricSeries citation_trend(const Corpus& corpus, const std::string& paper_id,
                            int bin_months) {
    const PaperRecord& target = corpus.paper(paper_id); // LookupError if unknown
    (void)target;
    if (!corpus.has_lifetime())
        throw ConfigError("corpus has no dated papers");
    const auto [begin, end] = corpus.lifetime();
    const auto cuts = calendar_cuts(begin, end, bin_months);
    const auto labels = window_labels(cuts, bin_months);

    MetricSeries series;
    series.metric = "citations";
    series.labels = labels;
    series.values.assign(labels.size(), 0.0);
    for (const auto& [id, rec] : corpus.papers()) {
        if (!rec.date) continue;
        for (const std::string& ref : rec.references) {
            if (ref != paper_id) continue;
            const auto it =
                std::upper_bound(cuts.begin(), cuts.end(), *rec.date);
            if (it == cuts.begin() || it == cuts.end()) continue;
            const std::size_t bin = static_cast<std::size_t>(it - cuts.begin()) - 1;
            series.values[bin] = *series.values[bin] + 1.0;
        }
    }
    return series;
}

std::optional<std::string> most_cited_paper(const Corpus& corpus) {
    std::map<std::string, std::int64_t> counts;
    for (const auto& [id, rec] : corpus.papers())
        for (const std::string& ref : rec.references)
            if (corpus.contains(ref)) ++counts[ref];
    std::optional<std::string> best;
    std::int64_t best_count = -1;
    for (const auto& [id, count] : counts) { // map order: smallest id wins ties
        if (count > best_count) {
            best = id;
            best_count = count;
        }
    }
    return best;
}

SnapshotTable community_snapshot_table(std::span<const StaticGraph> snapshots,
                                       std::span<const std::string> labels) {
    if (snapshots.empty())
        throw InvalidArgumentError("snapshot table needs at least one snapshot");
    if (labels.size() != snapshots.size())
        throw InvalidArgumentError("label count must match snapshot count");
    SnapshotTable table;
    for (std::size_t i = 0; i < snapshots.size(); ++i) {
        SnapshotRow row;
        row.label = labels[i];
        if (snapshots[i].node_count() > 0) {
            const StaticGraph comp = largest_component(snapshots[i]);
            row.vertices = static_cast<std::int64_t>(comp.node_count());
            row.edges = static_cast<std::int64_t>(comp.edge_count());
            if (comp.node_count() > 0) {
                row.diameter = path_stats(comp).diameter;
                row.cyclomatic = cyclomatic_number(comp);
                row.alpha = alpha_index(comp);
                row.beta = beta_index(comp);
                row.gamma = gamma_index(comp);
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_snapshot_csv(const SnapshotTable& table, std::ostream& out) {
    out << "window,vertices,edges,diameter,cyclomatic,alpha,beta,gamma\n";
    for (const SnapshotRow& r : table.rows) {
        auto opt_int = [](std::optional<std::int64_t> v) {
            return v ? std::to_string(*v) : std::string();
        };
        out << csv_escape(r.label) << ',' << r.vertices << ',' << r.edges << ','
            << opt_int(r.diameter) << ',' << opt_int(r.cyclomatic) << ','
            << format_value(r.alpha) << ','
            << (r.vertices > 0 ? format_value(r.beta) : std::string()) << ','
            << format_value(r.gamma) << '\n';
    }
}

} // namespace tvg
