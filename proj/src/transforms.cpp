#include "tvg/transforms.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tvg {

StaticGraph build_coauthorship(const Corpus& corpus) {
    StaticGraph g(false);
    for (const auto& [id, rec] : corpus.papers()) {
        std::vector<NodeId> nodes;
        nodes.reserve(rec.author_keys.size());
        for (const std::string& key : rec.author_keys)
            nodes.push_back(g.add_node(key));
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = i + 1; j < nodes.size(); ++j)
                g.add_edge(nodes[i], nodes[j], 1);
    }
    return g;
}

StaticGraph build_citation(const Corpus& corpus) {
    StaticGraph g(true);
    for (const auto& [id, rec] : corpus.papers()) g.add_node(id);
    for (const auto& [id, rec] : corpus.papers()) {
        const NodeId from = *g.find_node(id);
        for (const std::string& ref : rec.references) {
            if (!corpus.contains(ref)) continue; // dangling, already reported
            g.add_edge(from, *g.find_node(ref), 1);
        }
    }
    return g;
}

TimeVaryingGraph build_temporal_coauthorship(const Corpus& corpus,
                                             TransformReport* report) {
    TimeVaryingGraph tvg(false);
    // Pair -> contributing papers, chronological by corpus order.
    std::map<std::pair<std::string, std::string>,
             std::pair<TimeInstant, std::vector<std::string>>> pairs;
    for (const auto& [id, rec] : corpus.papers()) {
        for (const std::string& key : rec.author_keys) tvg.add_entity(key);
        if (!rec.date) {
            if (report && rec.author_keys.size() > 1) ++report->undated_skipped;
            continue;
        }
        for (std::size_t i = 0; i < rec.author_keys.size(); ++i) {
            for (std::size_t j = i + 1; j < rec.author_keys.size(); ++j) {
                auto key = std::minmax(rec.author_keys[i], rec.author_keys[j]);
                auto [it, inserted] =
                    pairs.try_emplace(key, *rec.date, std::vector<std::string>{});
                if (!inserted) it->second.first = std::min(it->second.first, *rec.date);
                it->second.second.push_back(id);
            }
        }
    }
    for (const auto& [pair, info] : pairs) {
        const EntityId a = *tvg.find_entity(pair.first);
        const EntityId b = *tvg.find_entity(pair.second);
        std::string label;
        for (const std::string& pid : info.second) {
            if (!label.empty()) label += ',';
            label += pid;
        }
        tvg.add_presence(a, b, label, info.first);
    }
    if (corpus.has_lifetime()) {
        auto [lo, hi] = corpus.lifetime();
        tvg.set_lifetime(lo, hi);
    }
    return tvg;
}

TimeVaryingGraph build_temporal_citation(const Corpus& corpus,
                                         TransformReport* report) {
    TimeVaryingGraph tvg(true);
    for (const auto& [id, rec] : corpus.papers()) tvg.add_entity(id);
    for (const auto& [id, rec] : corpus.papers()) {
        const EntityId from = *tvg.find_entity(id);
        for (const std::string& ref : rec.references) {
            if (!corpus.contains(ref)) continue;
            if (!rec.date) {
                if (report) ++report->undated_skipped;
                continue;
            }
            tvg.add_presence(from, *tvg.find_entity(ref), "", *rec.date);
        }
    }
    if (corpus.has_lifetime()) {
        auto [lo, hi] = corpus.lifetime();
        tvg.set_lifetime(lo, hi);
    }
    return tvg;
}

TimeVaryingGraph build_interaction(const Corpus& corpus,
                                   TransformReport* report) {
    TimeVaryingGraph tvg(false);
    for (const auto& [id, rec] : corpus.papers())
        for (const std::string& key : rec.author_keys) tvg.add_entity(key);

    // Collaboration relations, present from the pair's first joint paper.
    for (const auto& [id, rec] : corpus.papers()) {
        if (!rec.date) {
            if (report && rec.author_keys.size() > 1) ++report->undated_skipped;
            continue;
        }
        for (std::size_t i = 0; i < rec.author_keys.size(); ++i)
            for (std::size_t j = i + 1; j < rec.author_keys.size(); ++j)
                tvg.add_presence(*tvg.find_entity(rec.author_keys[i]),
                                 *tvg.find_entity(rec.author_keys[j]), "",
                                 *rec.date);
    }
    // Strength steps at the citing paper's submission date.
    for (const auto& [citing_id, citing] : corpus.papers()) {
        for (const std::string& ref : citing.references) {
            if (!corpus.contains(ref)) {
                if (report) ++report->dangling_skipped;
                continue;
            }
            const PaperRecord& cited = corpus.paper(ref);
            if (cited.author_keys.size() < 2) {
                if (report) ++report->solo_cited_excluded;
                continue;
            }
            if (!citing.date || !cited.date) {
                if (report) ++report->undated_skipped;
                continue;
            }
            for (std::size_t i = 0; i < cited.author_keys.size(); ++i) {
                for (std::size_t j = i + 1; j < cited.author_keys.size(); ++j) {
                    const auto rel = tvg.find_relation(
                        *tvg.find_entity(cited.author_keys[i]),
                        *tvg.find_entity(cited.author_keys[j]), "");
                    if (rel) tvg.add_strength_step(*rel, *citing.date);
                }
            }
        }
    }
    if (corpus.has_lifetime()) {
        auto [lo, hi] = corpus.lifetime();
        tvg.set_lifetime(lo, hi);
    }
    return tvg;
}

TimeVaryingGraph filter_most_cited(const TimeVaryingGraph& interaction,
                                   std::int64_t threshold) {
    if (threshold < 0) throw InvalidArgumentError("threshold must be >= 0");
    TimeVaryingGraph out(interaction.directed());
    for (RelationId id = 0; id < interaction.relation_count(); ++id) {
        if (interaction.final_strength(id) < threshold) continue;
        const Relation& r = interaction.relation(id);
        const EntityId a = out.add_entity(interaction.entity_name(r.a));
        const EntityId b = out.add_entity(interaction.entity_name(r.b));
        RelationId nid = 0;
        for (const auto& iv : interaction.presence_set(id).intervals())
            nid = out.add_presence(a, b, r.label, iv.start, iv.end);
        for (TimeInstant step : interaction.strength_steps(id))
            out.add_strength_step(nid, step);
    }
    try {
        auto [lo, hi] = interaction.lifetime();
        out.set_lifetime(lo, hi);
    } catch (const InvalidArgumentError&) {
        // Empty interaction graph has no lifetime to carry over.
    }
    return out;
}

} // namespace tvg
