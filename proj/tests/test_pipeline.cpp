#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "tvg/graph_io.hpp"
#include "tvg/pipeline.hpp"
#include "tvg/transforms.hpp"

using namespace tvg;

namespace {

const char* kToyCorpus =
    "p1\t1992-03-01\tA. One;B. Two\t\n"
    "p2\t1993-05-01\tB. Two;C. Three\tp1\n"
    "p3\t1994-07-01\tA. One\tp1,p2\n"
    "p4\t1995-09-01\tD. Four;A. One\tp1\n"
    "p5\t1996-11-01\tC. Three\tp4,p1\n";

Corpus toy_corpus() {
    std::istringstream in(kToyCorpus);
    return load_corpus_canonical(in);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// Minimal GraphML reader for round-trip checks; handles exactly what our
// exporter writes.
struct ParsedGraph {
    bool directed = false;
    std::map<std::string, std::string> node_labels;
    std::map<std::pair<std::string, std::string>, std::int64_t> edges;
};

ParsedGraph parse_graphml(const std::string& text) {
    ParsedGraph g;
    g.directed = text.find("edgedefault=\"directed\"") != std::string::npos;
    std::size_t pos = 0;
    while ((pos = text.find("<node id=\"", pos)) != std::string::npos) {
        pos += 10;
        const auto id_end = text.find('"', pos);
        const std::string id = text.substr(pos, id_end - pos);
        const auto lbl_start = text.find("<data key=\"label\">", id_end) + 18;
        const auto lbl_end = text.find("</data>", lbl_start);
        g.node_labels[id] = text.substr(lbl_start, lbl_end - lbl_start);
    }
    pos = 0;
    while ((pos = text.find("<edge source=\"", pos)) != std::string::npos) {
        pos += 14;
        const auto s_end = text.find('"', pos);
        const std::string src = text.substr(pos, s_end - pos);
        const auto t_start = text.find("target=\"", s_end) + 8;
        const auto t_end = text.find('"', t_start);
        const std::string dst = text.substr(t_start, t_end - t_start);
        const auto w_start = text.find("<data key=\"weight\">", t_end) + 19;
        const auto w_end = text.find("</data>", w_start);
        const std::int64_t w = std::stoll(text.substr(w_start, w_end - w_start));
        auto key = std::make_pair(g.node_labels[src], g.node_labels[dst]);
        if (!g.directed && key.first > key.second)
            std::swap(key.first, key.second);
        g.edges[key] = w;
    }
    return g;
}

} // namespace

TEST_CASE("config parsing") {
    SUBCASE("flat key=value with comments") {
        std::istringstream in(
            "# inputs\n"
            "records = corpus.records\n"
            "threshold=10\n"
            "window_months = 6\n"
            "seed=7\n"
            "outdir=out\n");
        const auto cfg = parse_config(in);
        CHECK(cfg.records == "corpus.records");
        CHECK(cfg.threshold == 10);
        CHECK(cfg.window_months == 6);
        CHECK(cfg.seed == 7);
        CHECK_NOTHROW(cfg.validate());
    }
    SUBCASE("unknown key rejected") {
        std::istringstream in("wat=1\n");
        CHECK_THROWS_AS(parse_config(in), ConfigError);
    }
    SUBCASE("invalid values rejected") {
        AnalysisConfig cfg;
        cfg.records = "x";
        cfg.threshold = -1;
        CHECK_THROWS_AS(cfg.validate(), ConfigError);
        AnalysisConfig no_inputs;
        CHECK_THROWS_AS(no_inputs.validate(), ConfigError);
    }
}

TEST_CASE("window cuts and labels") {
    SUBCASE("yearly windows labeled by start year") {
        const auto cuts =
            calendar_cuts(from_date(1992, 1, 1), from_date(2003, 6, 1), 12);
        CHECK(cuts.size() == 13); // 12 windows
        const auto labels = window_labels(cuts, 12);
        CHECK(labels.front() == "1992");
        CHECK(labels.back() == "2003");
    }
    SUBCASE("semester windows labeled by start month") {
        const auto cuts =
            calendar_cuts(from_date(2000, 4, 1), from_date(2001, 4, 1), 6);
        const auto labels = window_labels(cuts, 6);
        CHECK(labels.front() == "2000-04");
        CHECK(labels[1] == "2000-07");
    }
    SUBCASE("fixed-day windows") {
        const auto cuts = fixed_cuts(TimeInstant{0}, TimeInstant{100}, 30);
        CHECK(cuts.size() == 5); // 0,30,60,90,100
    }
}

TEST_CASE("metrics report on the toy corpus") {
    const auto corpus = toy_corpus();
    AnalysisConfig cfg;
    cfg.records = "unused";
    cfg.outdir = (std::filesystem::temp_directory_path() / "tvg_report_test").string();
    cfg.threshold = 0;
    std::filesystem::remove_all(cfg.outdir);

    const auto report = run_metrics_report(cfg, corpus);
    REQUIRE(report.per_graph.count("ga") == 1);
    REQUIRE(report.per_graph.count("gc") == 1);
    REQUIRE(report.per_graph.count("gi") == 1);

    SUBCASE("CSV files with the stable header") {
        for (const char* name : {"ga", "gc", "gi"}) {
            const auto path = std::filesystem::path(cfg.outdir) /
                              (std::string(name) + ".csv");
            REQUIRE(std::filesystem::exists(path));
            const std::string text = slurp(path);
            CHECK(text.rfind("window,metric,value,defined\n", 0) == 0);
        }
    }
    SUBCASE("determinism: byte-identical CSVs on rerun") {
        std::map<std::string, std::string> first;
        for (const char* name : {"ga", "gc", "gi"})
            first[name] = slurp(std::filesystem::path(cfg.outdir) /
                                (std::string(name) + ".csv"));
        run_metrics_report(cfg, corpus);
        for (const char* name : {"ga", "gc", "gi"})
            CHECK(first[name] == slurp(std::filesystem::path(cfg.outdir) /
                                       (std::string(name) + ".csv")));
    }
    SUBCASE("series lengths match the yearly partition") {
        // lifetime 1992-03-01 .. 1996-11-02 -> windows 1992..1996
        for (const auto& series : report.per_graph.at("ga"))
            CHECK(series.values.size() == 5);
    }
}

TEST_CASE("phase transition locator") {
    MetricSeries s;
    s.metric = "clustering";
    SUBCASE("max absolute first difference") {
        s.labels = {"a", "b", "c", "d", "e"};
        s.values = {1.0, 1.0, 1.0, 0.2, 0.2};
        const auto pt = locate_phase_transition(s);
        REQUIRE(pt.has_value());
        CHECK(pt->left_index == 2);
        CHECK(pt->left_label == "c");
        CHECK(pt->right_label == "d");
        CHECK(pt->delta == doctest::Approx(-0.8));
    }
    SUBCASE("constant series: earliest boundary, zero delta") {
        s.labels = {"a", "b", "c"};
        s.values = {0.5, 0.5, 0.5};
        const auto pt = locate_phase_transition(s);
        REQUIRE(pt.has_value());
        CHECK(pt->left_index == 0);
        CHECK(pt->delta == doctest::Approx(0.0));
    }
    SUBCASE("undefined gaps skipped") {
        s.labels = {"a", "b", "c"};
        s.values = {1.0, std::nullopt, 0.0};
        const auto pt = locate_phase_transition(s);
        REQUIRE(pt.has_value());
        CHECK(pt->left_label == "a");
        CHECK(pt->right_label == "c");
    }
    SUBCASE("fewer than two defined points undefined") {
        s.labels = {"a", "b"};
        s.values = {1.0, std::nullopt};
        CHECK_FALSE(locate_phase_transition(s).has_value());
    }
}

TEST_CASE("citation trend") {
    const auto corpus = toy_corpus();
    SUBCASE("counts per semester bin") {
        const auto series = citation_trend(corpus, "p1", 6);
        double total = 0;
        for (const auto& v : series.values) total += *v;
        CHECK(total == 4); // p2, p3, p4, p5 all cite p1
    }
    SUBCASE("uncited paper gives an all-zero series") {
        const auto series = citation_trend(corpus, "p5", 6);
        for (const auto& v : series.values) CHECK(*v == 0.0);
    }
    SUBCASE("unknown id") {
        CHECK_THROWS_AS(citation_trend(corpus, "nope", 6), LookupError);
    }
    SUBCASE("argmax matches brute-force citation counting") {
        std::mt19937_64 rng(77);
        for (int trial = 0; trial < 10; ++trial) {
            const auto rc = oracles::random_corpus(rng, 30, 8);
            std::map<std::string, std::int64_t> counts;
            for (const auto& [id, rec] : rc.papers())
                for (const auto& ref : rec.references)
                    if (rc.contains(ref)) ++counts[ref];
            std::string best;
            std::int64_t best_count = -1;
            for (const auto& [id, c] : counts)
                if (c > best_count) {
                    best = id;
                    best_count = c;
                }
            const auto found = most_cited_paper(rc);
            if (best_count <= 0) continue;
            REQUIRE(found.has_value());
            CHECK(*found == best);
        }
    }
}

TEST_CASE("snapshot table") {
    const auto corpus = toy_corpus();
    const auto gi = filter_most_cited(build_interaction(corpus), 0);
    const auto [lo, hi] = corpus.lifetime();
    const auto cuts = calendar_cuts(lo, hi, 6);
    std::vector<StaticGraph> cumulative;
    std::vector<std::string> labels;
    const auto all_labels = window_labels(cuts, 6);
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        cumulative.push_back(gi.footprint(lo, cuts[i]));
        labels.push_back(all_labels[i - 1]);
    }
    const auto table = community_snapshot_table(cumulative, labels);
    REQUIRE(table.rows.size() == cumulative.size());

    SUBCASE("row arithmetic self-consistent") {
        for (const auto& row : table.rows) {
            if (row.cyclomatic) {
                // largest component has p=1
                CHECK(*row.cyclomatic == row.edges - row.vertices + 1);
            }
            if (row.vertices > 0 && row.beta) {
                CHECK(*row.beta ==
                      doctest::Approx(double(row.edges) / double(row.vertices)));
            }
        }
    }
    SUBCASE("singleton snapshot leaves cycle metrics undefined") {
        StaticGraph singleton(false);
        singleton.add_node("only");
        const std::vector<StaticGraph> snaps{singleton};
        const std::vector<std::string> lbl{"w"};
        const auto t = community_snapshot_table(snaps, lbl);
        CHECK_FALSE(t.rows[0].alpha.has_value());
        CHECK_FALSE(t.rows[0].gamma.has_value());
        CHECK(t.rows[0].vertices == 1);
    }
    SUBCASE("CSV serialization") {
        std::ostringstream out;
        write_snapshot_csv(table, out);
        CHECK(out.str().rfind("window,vertices,edges,diameter,cyclomatic,alpha,"
                              "beta,gamma\n", 0) == 0);
    }
}

TEST_CASE("graph export") {
    SUBCASE("edgelist of a triangle") {
        StaticGraph g(false);
        g.add_node("a");
        g.add_node("b");
        g.add_node("c");
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        std::ostringstream out;
        export_graph(g, GraphFormat::EdgeList, out);
        CHECK(out.str() == "a\tb\t1\nb\tc\t1\na\tc\t1\n");
    }
    SUBCASE("GraphML round trip of a weighted graph") {
        const auto corpus = toy_corpus();
        const auto gi = build_interaction(corpus).support_graph(true);
        std::ostringstream out;
        export_graph(gi, GraphFormat::GraphML, out);
        const auto parsed = parse_graphml(out.str());
        CHECK(parsed.node_labels.size() == gi.node_count());
        CHECK(parsed.edges.size() == gi.edge_count());
        for (const auto& e : gi.edges()) {
            auto key = std::minmax(gi.label(e.a), gi.label(e.b));
            REQUIRE(parsed.edges.count(key) == 1);
            CHECK(parsed.edges.at(key) == e.weight);
        }
    }
    SUBCASE("TVG export carries first_seen presence starts") {
        const auto corpus = toy_corpus();
        const auto ga = build_temporal_coauthorship(corpus);
        std::ostringstream out;
        export_graph(ga, GraphFormat::EdgeList, out);
        std::istringstream lines(out.str());
        std::string line;
        std::size_t count = 0;
        while (std::getline(lines, line)) {
            std::istringstream fields(line);
            std::string a, b, w, first_seen;
            REQUIRE(std::getline(fields, a, '\t'));
            REQUIRE(std::getline(fields, b, '\t'));
            REQUIRE(std::getline(fields, w, '\t'));
            REQUIRE(std::getline(fields, first_seen, '\t'));
            const auto rel_a = ga.find_entity(a);
            const auto rel_b = ga.find_entity(b);
            REQUIRE(rel_a.has_value());
            REQUIRE(rel_b.has_value());
            const auto date = parse_iso_date(first_seen);
            REQUIRE(date.has_value());
            ++count;
        }
        CHECK(count == ga.relation_count());
    }
    SUBCASE("unknown format") {
        CHECK_THROWS_AS(parse_graph_format("png"), ConfigError);
    }
}

TEST_CASE("dot export is well-formed enough") {
    StaticGraph g(true);
    g.add_node("x");
    g.add_node("y \"quoted\"");
    g.add_edge(0, 1, 3);
    std::ostringstream out;
    export_graph(g, GraphFormat::Dot, out);
    const std::string text = out.str();
    CHECK(text.rfind("digraph", 0) == 0);
    CHECK(text.find("n0 -> n1 [weight=3]") != std::string::npos);
    CHECK(text.find("\\\"quoted\\\"") != std::string::npos);
}
