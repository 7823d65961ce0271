#ifndef TVG_GRAPH_IO_HPP
#define TVG_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "tvg/static_graph.hpp"
#include "tvg/tvg.hpp"

namespace tvg {

enum class GraphFormat { GraphML, Dot, EdgeList };

GraphFormat parse_graph_format(const std::string& name); // ConfigError

// Node ids are stable (label order); weights exported as edge attributes.
void export_graph(const StaticGraph& g, GraphFormat format, std::ostream& out);
void export_graph(const StaticGraph& g, GraphFormat format,
                  const std::string& path);

// TVG export: each edge carries a first_seen ISO-date attribute (presence
// start) and its final strength as weight.
void export_graph(const TimeVaryingGraph& g, GraphFormat format,
                  std::ostream& out);
void export_graph(const TimeVaryingGraph& g, GraphFormat format,
                  const std::string& path);

} // namespace tvg

#endif // TVG_GRAPH_IO_HPP
