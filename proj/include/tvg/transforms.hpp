#ifndef TVG_TRANSFORMS_HPP
#define TVG_TRANSFORMS_HPP

#include <cstdint>

#include "tvg/corpus.hpp"
#include "tvg/static_graph.hpp"
#include "tvg/tvg.hpp"

namespace tvg {

// Side counts produced while building derived graphs.
struct TransformReport {
    std::int64_t undated_skipped = 0;      // relations/steps without a usable date
    std::int64_t solo_cited_excluded = 0;  // citations to single-author papers
    std::int64_t dangling_skipped = 0;     // references outside the corpus
};

// Undirected author graph; clique per paper's author list.
StaticGraph build_coauthorship(const Corpus& corpus);

// Directed paper graph; one edge per within-corpus reference.
StaticGraph build_citation(const Corpus& corpus);

// Author TVG; each co-authoring pair present from its first joint
// submission date onward, relation label lists the contributing paper ids.
TimeVaryingGraph build_temporal_coauthorship(const Corpus& corpus,
                                             TransformReport* report = nullptr);

// Paper TVG; a citation is present from the citing paper's date onward.
TimeVaryingGraph build_temporal_citation(const Corpus& corpus,
                                         TransformReport* report = nullptr);

// Cited-collaborations graph: undirected author TVG where each relation's
// strength counts citations received by the pair's joint papers, stepping at
// the citing paper's submission date. Solo-authored cited papers contribute
// no pair and are counted in the report.
TimeVaryingGraph build_interaction(const Corpus& corpus,
                                   TransformReport* report = nullptr);

// Keeps relations with final strength >= threshold plus their endpoints;
// presence and strength series carry over.
TimeVaryingGraph filter_most_cited(const TimeVaryingGraph& interaction,
                                   std::int64_t threshold);

} // namespace tvg

#endif // TVG_TRANSFORMS_HPP
