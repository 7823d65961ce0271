#ifndef TVG_TVG_HPP
#define TVG_TVG_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tvg/errors.hpp"
#include "tvg/static_graph.hpp"
#include "tvg/time.hpp"

namespace tvg {

using EntityId = std::uint32_t;
using RelationId = std::uint32_t;

// (a, b, label) identifies a relation; undirected relations store a <= b.
struct Relation {
    EntityId a;
    EntityId b;
    std::string label;
};

// Disjoint sorted half-open [start, end) intervals; end may be the
// TimeInstant::infinity() sentinel.
class PresenceIntervalSet {
public:
    struct Interval {
        TimeInstant start;
        TimeInstant end;
    };

    void add(TimeInstant start, TimeInstant end);
    bool contains(TimeInstant t) const;
    bool intersects(TimeInstant t1, TimeInstant t2) const;
    // Earliest instant >= t at which presence holds.
    std::optional<TimeInstant> first_at_or_after(TimeInstant t) const;
    TimeInstant first_start() const;

    bool empty() const { return intervals_.empty(); }
    const std::vector<Interval>& intervals() const { return intervals_; }

private:
    std::vector<Interval> intervals_;
};

enum class NodeScope {
    AllEntities,  // footprint keeps the full entity set as nodes
    WindowActive, // only endpoints of edges present in the window
};

struct JourneyStep {
    RelationId relation;
    TimeInstant time;
};

// Validated time-respecting walk; construct via TimeVaryingGraph::make_journey.
class Journey {
public:
    const std::vector<JourneyStep>& steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }
    std::size_t hop_count() const { return steps_.size(); }
    TimeInstant departure() const;
    TimeInstant arrival() const;

private:
    friend class TimeVaryingGraph;
    explicit Journey(std::vector<JourneyStep> steps) : steps_(std::move(steps)) {}
    std::vector<JourneyStep> steps_;
};

struct JourneyLengths {
    std::size_t topological;
    std::int64_t temporal;
};

// Hop count and end-to-end duration; throws InvalidArgumentError on an
// empty journey.
JourneyLengths journey_lengths(const Journey& j);

struct EarliestArrival {
    Journey journey; // empty when source == target
    TimeInstant departure;
    TimeInstant arrival;
};

// Immutable after the build phase; every query is safe under concurrent reads.
class TimeVaryingGraph {
public:
    explicit TimeVaryingGraph(bool directed = false) : directed_(directed) {}

    bool directed() const { return directed_; }

    EntityId add_entity(std::string_view name);
    std::optional<EntityId> find_entity(std::string_view name) const;
    const std::string& entity_name(EntityId id) const { return entity_names_[id]; }
    std::size_t entity_count() const { return entity_names_.size(); }

    // Creates the relation on first use and extends its presence set.
    RelationId add_presence(EntityId a, EntityId b, std::string_view label,
                            TimeInstant start,
                            TimeInstant end = TimeInstant::infinity());

    std::optional<RelationId> find_relation(EntityId a, EntityId b,
                                            std::string_view label) const;
    std::size_t relation_count() const { return relations_.size(); }
    const Relation& relation(RelationId id) const { return relations_[id]; }
    const PresenceIntervalSet& presence_set(RelationId id) const {
        return presence_[id];
    }

    void set_lifetime(TimeInstant begin, TimeInstant end);
    // Explicit lifetime if set, otherwise the hull of all finite interval
    // endpoints (+1 day past the last start).
    std::pair<TimeInstant, TimeInstant> lifetime() const;

    bool presence(RelationId id, TimeInstant t) const;
    bool presence(const Relation& r, TimeInstant t) const; // LookupError if unknown

    StaticGraph footprint(TimeInstant t1, TimeInstant t2,
                          NodeScope scope = NodeScope::WindowActive) const;
    std::vector<StaticGraph> footprint_sequence(
        std::span<const TimeInstant> cuts,
        NodeScope scope = NodeScope::WindowActive) const;

    // Cumulative citation counters attached to a relation (interaction graph).
    void add_strength_step(RelationId id, TimeInstant at);
    std::int64_t strength_at(RelationId id, TimeInstant t) const;
    std::int64_t final_strength(RelationId id) const;
    const std::vector<TimeInstant>& strength_steps(RelationId id) const;

    // Static view: one weighted edge per relation, weight = final strength
    // (minimum 1 for never-cited relations when weight_by_strength is false).
    StaticGraph support_graph(bool weight_by_strength = false) const;

    Journey make_journey(std::vector<JourneyStep> steps) const;
    std::optional<EarliestArrival> earliest_arrival_journey(
        EntityId source, EntityId target, TimeInstant depart_after) const;

private:
    void ensure_relation(RelationId id) const;

    bool directed_;
    std::vector<std::string> entity_names_;
    std::unordered_map<std::string, EntityId> entity_index_;
    std::vector<Relation> relations_;
    std::vector<PresenceIntervalSet> presence_;
    std::unordered_map<std::string, RelationId> relation_index_;
    std::vector<std::vector<TimeInstant>> strength_steps_; // sorted on insert
    std::optional<std::pair<TimeInstant, TimeInstant>> lifetime_;
};

} // namespace tvg

#endif // TVG_TVG_HPP
