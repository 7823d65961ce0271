#include "tvg/graph_io.hpp"

#include <fstream>
#include <ostream>
#include <vector>

#include "tvg/errors.hpp"

namespace tvg {

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

// Format-independent view of what gets exported.
struct ExportEdge {
    std::uint32_t a;
    std::uint32_t b;
    std::int64_t weight;
    std::string first_seen; // empty unless exporting a TVG
};

struct ExportView {
    bool directed;
    std::vector<std::string> labels;
    std::vector<ExportEdge> edges;
};

void write_graphml(const ExportView& v, std::ostream& out) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
        << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n"
        << "  <key id=\"first_seen\" for=\"edge\" attr.name=\"first_seen\" attr.type=\"string\"/>\n"
        << "  <graph edgedefault=\"" << (v.directed ? "directed" : "undirected")
        << "\">\n";
    for (std::size_t u = 0; u < v.labels.size(); ++u) {
        out << "    <node id=\"n" << u << "\"><data key=\"label\">"
            << xml_escape(v.labels[u]) << "</data></node>\n";
    }
    for (const auto& e : v.edges) {
        out << "    <edge source=\"n" << e.a << "\" target=\"n" << e.b
            << "\"><data key=\"weight\">" << e.weight << "</data>";
        if (!e.first_seen.empty())
            out << "<data key=\"first_seen\">" << e.first_seen << "</data>";
        out << "</edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
}

void write_dot(const ExportView& v, std::ostream& out) {
    out << (v.directed ? "digraph" : "graph") << " g {\n";
    for (std::size_t u = 0; u < v.labels.size(); ++u)
        out << "  n" << u << " [label=\"" << dot_escape(v.labels[u]) << "\"];\n";
    const char* arrow = v.directed ? " -> " : " -- ";
    for (const auto& e : v.edges) {
        out << "  n" << e.a << arrow << "n" << e.b << " [weight=" << e.weight;
        if (!e.first_seen.empty()) out << ", first_seen=\"" << e.first_seen << "\"";
        out << "];\n";
    }
    out << "}\n";
}

void write_edgelist(const ExportView& v, std::ostream& out) {
    for (const auto& e : v.edges) {
        out << v.labels[e.a] << '\t' << v.labels[e.b] << '\t' << e.weight;
        if (!e.first_seen.empty()) out << '\t' << e.first_seen;
        out << '\n';
    }
}

void dispatch(const ExportView& v, GraphFormat format, std::ostream& out) {
    switch (format) {
        case GraphFormat::GraphML: write_graphml(v, out); break;
        case GraphFormat::Dot: write_dot(v, out); break;
        case GraphFormat::EdgeList: write_edgelist(v, out); break;
    }
    if (!out) throw IoError("graph export stream failure");
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output file: " + path);
    return out;
}

} // namespace

GraphFormat parse_graph_format(const std::string& name) {
    if (name == "graphml") return GraphFormat::GraphML;
    if (name == "dot") return GraphFormat::Dot;
    if (name == "edgelist") return GraphFormat::EdgeList;
    throw ConfigError("unknown graph format: " + name);
}

void export_graph(const StaticGraph& g, GraphFormat format, std::ostream& out) {
    ExportView v;
    v.directed = g.directed();
    v.labels = g.labels();
    v.edges.reserve(g.edge_count());
    for (const auto& e : g.edges())
        v.edges.push_back(ExportEdge{e.a, e.b, e.weight, {}});
    dispatch(v, format, out);
}

void export_graph(const StaticGraph& g, GraphFormat format,
                  const std::string& path) {
    auto out = open_out(path);
    export_graph(g, format, out);
}

void export_graph(const TimeVaryingGraph& g, GraphFormat format,
                  std::ostream& out) {
    ExportView v;
    v.directed = g.directed();
    v.labels.reserve(g.entity_count());
    for (EntityId u = 0; u < g.entity_count(); ++u)
        v.labels.push_back(g.entity_name(u));
    v.edges.reserve(g.relation_count());
    for (RelationId id = 0; id < g.relation_count(); ++id) {
        const Relation& r = g.relation(id);
        v.edges.push_back(ExportEdge{
            r.a, r.b, g.final_strength(id),
            format_iso_date(g.presence_set(id).first_start())});
    }
    dispatch(v, format, out);
}

void export_graph(const TimeVaryingGraph& g, GraphFormat format,
                  const std::string& path) {
    auto out = open_out(path);
    export_graph(g, format, out);
}

} // namespace tvg
