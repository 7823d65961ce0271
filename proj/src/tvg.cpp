#include "tvg/tvg.hpp"

#include <algorithm>
#include <queue>
#include <utility>

namespace tvg {

// ---- PresenceIntervalSet -------------------------------------------------

void PresenceIntervalSet::add(TimeInstant start, TimeInstant end) {
    if (start >= end) throw InvalidArgumentError("empty presence interval");
    Interval nv{start, end};
    std::vector<Interval> merged;
    merged.reserve(intervals_.size() + 1);
    for (const Interval& iv : intervals_) {
        if (iv.end < nv.start || nv.end < iv.start) {
            merged.push_back(iv);
        } else { // overlap or adjacency: absorb
            nv.start = std::min(nv.start, iv.start);
            nv.end = std::max(nv.end, iv.end);
        }
    }
    merged.push_back(nv);
    std::sort(merged.begin(), merged.end(),
              [](const Interval& x, const Interval& y) { return x.start < y.start; });
    intervals_ = std::move(merged);
}

bool PresenceIntervalSet::contains(TimeInstant t) const {
    auto it = std::upper_bound(
        intervals_.begin(), intervals_.end(), t,
        [](TimeInstant v, const Interval& iv) { return v < iv.start; });
    if (it == intervals_.begin()) return false;
    --it;
    return t < it->end;
}

bool PresenceIntervalSet::intersects(TimeInstant t1, TimeInstant t2) const {
    for (const Interval& iv : intervals_) {
        if (iv.start >= t2) break;
        if (iv.end > t1) return true;
    }
    return false;
}

std::optional<TimeInstant> PresenceIntervalSet::first_at_or_after(
    TimeInstant t) const {
    for (const Interval& iv : intervals_) {
        if (t < iv.end) return std::max(t, iv.start);
    }
    return std::nullopt;
}

TimeInstant PresenceIntervalSet::first_start() const {
    if (intervals_.empty()) throw InvalidArgumentError("empty presence set");
    return intervals_.front().start;
}

// ---- Journey -------------------------------------------------------------

TimeInstant Journey::departure() const {
    if (steps_.empty()) throw InvalidArgumentError("empty journey");
    return steps_.front().time;
}

TimeInstant Journey::arrival() const {
    if (steps_.empty()) throw InvalidArgumentError("empty journey");
    return steps_.back().time;
}

JourneyLengths journey_lengths(const Journey& j) {
    if (j.empty()) throw InvalidArgumentError("empty journey has no lengths");
    return JourneyLengths{j.hop_count(), j.arrival() - j.departure()};
}

// ---- TimeVaryingGraph ----------------------------------------------------

namespace {
std::string make_relation_key(EntityId a, EntityId b, std::string_view label) {
    std::string key = std::to_string(a);
    key += '\x1f';
    key += std::to_string(b);
    key += '\x1f';
    key += label;
    return key;
}
} // namespace

EntityId TimeVaryingGraph::add_entity(std::string_view name) {
    auto it = entity_index_.find(std::string(name));
    if (it != entity_index_.end()) return it->second;
    const EntityId id = static_cast<EntityId>(entity_names_.size());
    entity_names_.emplace_back(name);
    entity_index_.emplace(entity_names_.back(), id);
    return id;
}

std::optional<EntityId> TimeVaryingGraph::find_entity(std::string_view name) const {
    auto it = entity_index_.find(std::string(name));
    if (it == entity_index_.end()) return std::nullopt;
    return it->second;
}

void TimeVaryingGraph::ensure_relation(RelationId id) const {
    if (id >= relations_.size()) throw LookupError("unknown relation id");
}

RelationId TimeVaryingGraph::add_presence(EntityId a, EntityId b,
                                          std::string_view label,
                                          TimeInstant start, TimeInstant end) {
    if (a >= entity_names_.size() || b >= entity_names_.size())
        throw LookupError("relation endpoint is not a known entity");
    if (!directed_ && a > b) std::swap(a, b);
    const std::string key = make_relation_key(a, b, label);
    auto [it, inserted] = relation_index_.try_emplace(
        key, static_cast<RelationId>(relations_.size()));
    if (inserted) {
        relations_.push_back(Relation{a, b, std::string(label)});
        presence_.emplace_back();
        strength_steps_.emplace_back();
    }
    presence_[it->second].add(start, end);
    return it->second;
}

std::optional<RelationId> TimeVaryingGraph::find_relation(
    EntityId a, EntityId b, std::string_view label) const {
    if (!directed_ && a > b) std::swap(a, b);
    auto it = relation_index_.find(make_relation_key(a, b, label));
    if (it == relation_index_.end()) return std::nullopt;
    return it->second;
}

void TimeVaryingGraph::set_lifetime(TimeInstant begin, TimeInstant end) {
    if (begin >= end) throw InvalidArgumentError("lifetime must be non-empty");
    lifetime_ = {begin, end};
}

std::pair<TimeInstant, TimeInstant> TimeVaryingGraph::lifetime() const {
    if (lifetime_) return *lifetime_;
    bool any = false;
    TimeInstant lo = TimeInstant::infinity();
    TimeInstant hi{0};
    for (const auto& pset : presence_) {
        for (const auto& iv : pset.intervals()) {
            any = true;
            lo = std::min(lo, iv.start);
            hi = std::max(hi, iv.end.is_infinite() ? iv.start + 1 : iv.end);
        }
    }
    if (!any) throw InvalidArgumentError("lifetime of an empty TVG is undefined");
    return {lo, hi};
}

bool TimeVaryingGraph::presence(RelationId id, TimeInstant t) const {
    ensure_relation(id);
    return presence_[id].contains(t);
}

bool TimeVaryingGraph::presence(const Relation& r, TimeInstant t) const {
    auto id = find_relation(r.a, r.b, r.label);
    if (!id) throw LookupError("unknown relation");
    return presence_[*id].contains(t);
}

StaticGraph TimeVaryingGraph::footprint(TimeInstant t1, TimeInstant t2,
                                        NodeScope scope) const {
    if (t1 >= t2) throw InvalidArgumentError("footprint window must satisfy t1 < t2");
    StaticGraph g(directed_);
    if (scope == NodeScope::AllEntities) {
        for (const auto& name : entity_names_) g.add_node(name);
    }
    for (RelationId id = 0; id < relations_.size(); ++id) {
        if (!presence_[id].intersects(t1, t2)) continue;
        const Relation& r = relations_[id];
        const NodeId na = g.add_node(entity_names_[r.a]);
        const NodeId nb = g.add_node(entity_names_[r.b]);
        g.add_edge(na, nb, 1);
    }
    return g;
}

std::vector<StaticGraph> TimeVaryingGraph::footprint_sequence(
    std::span<const TimeInstant> cuts, NodeScope scope) const {
    if (cuts.size() < 2)
        throw InvalidArgumentError("footprint partition needs at least two cuts");
    for (std::size_t i = 1; i < cuts.size(); ++i)
        if (cuts[i - 1] >= cuts[i])
            throw InvalidArgumentError("partition cuts must be strictly increasing");
    std::vector<StaticGraph> seq;
    seq.reserve(cuts.size() - 1);
    for (std::size_t i = 1; i < cuts.size(); ++i)
        seq.push_back(footprint(cuts[i - 1], cuts[i], scope));
    return seq;
}

void TimeVaryingGraph::add_strength_step(RelationId id, TimeInstant at) {
    ensure_relation(id);
    auto& steps = strength_steps_[id];
    steps.insert(std::upper_bound(steps.begin(), steps.end(), at), at);
}

std::int64_t TimeVaryingGraph::strength_at(RelationId id, TimeInstant t) const {
    ensure_relation(id);
    const auto& steps = strength_steps_[id];
    return std::upper_bound(steps.begin(), steps.end(), t) - steps.begin();
}

std::int64_t TimeVaryingGraph::final_strength(RelationId id) const {
    ensure_relation(id);
    return static_cast<std::int64_t>(strength_steps_[id].size());
}

const std::vector<TimeInstant>& TimeVaryingGraph::strength_steps(
    RelationId id) const {
    ensure_relation(id);
    return strength_steps_[id];
}

StaticGraph TimeVaryingGraph::support_graph(bool weight_by_strength) const {
    StaticGraph g(directed_);
    for (RelationId id = 0; id < relations_.size(); ++id) {
        const Relation& r = relations_[id];
        const NodeId na = g.add_node(entity_names_[r.a]);
        const NodeId nb = g.add_node(entity_names_[r.b]);
        const std::int64_t w = weight_by_strength ? final_strength(id) : 1;
        g.add_edge(na, nb, w);
    }
    return g;
}

Journey TimeVaryingGraph::make_journey(std::vector<JourneyStep> steps) const {
    if (steps.empty()) throw InvalidArgumentError("a journey needs at least one step");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        ensure_relation(steps[i].relation);
        if (!presence_[steps[i].relation].contains(steps[i].time))
            throw InvalidArgumentError("journey step uses an absent relation");
        if (i > 0 && steps[i].time < steps[i - 1].time)
            throw InvalidArgumentError("journey step times must be non-decreasing");
    }
    // Walk check: track the set of nodes the journey can stand on.
    std::vector<EntityId> at;
    {
        const Relation& r0 = relations_[steps[0].relation];
        if (directed_) {
            at = {r0.b};
        } else {
            at = {r0.a, r0.b};
        }
    }
    for (std::size_t i = 1; i < steps.size(); ++i) {
        const Relation& r = relations_[steps[i].relation];
        std::vector<EntityId> next;
        for (EntityId u : at) {
            if (directed_) {
                if (r.a == u) next.push_back(r.b);
            } else {
                if (r.a == u) next.push_back(r.b);
                if (r.b == u) next.push_back(r.a);
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.empty())
            throw InvalidArgumentError("journey relations do not form a walk");
        at = std::move(next);
    }
    return Journey(std::move(steps));
}

std::optional<EarliestArrival> TimeVaryingGraph::earliest_arrival_journey(
    EntityId source, EntityId target, TimeInstant depart_after) const {
    if (source >= entity_names_.size() || target >= entity_names_.size())
        throw LookupError("unknown entity");
    if (source == target) {
        // Empty-journey convention: already there at the departure bound.
        return EarliestArrival{Journey(std::vector<JourneyStep>{}), depart_after,
                               depart_after};
    }

    std::vector<std::vector<RelationId>> incidence(entity_names_.size());
    for (RelationId id = 0; id < relations_.size(); ++id) {
        incidence[relations_[id].a].push_back(id);
        if (!directed_) incidence[relations_[id].b].push_back(id);
    }

    const TimeInstant inf = TimeInstant::infinity();
    std::vector<TimeInstant> best(entity_names_.size(), inf);
    struct Pred {
        RelationId relation;
        TimeInstant time;
        EntityId from;
    };
    std::vector<std::optional<Pred>> pred(entity_names_.size());
    using QEntry = std::pair<std::int64_t, EntityId>;
    std::priority_queue<QEntry, std::vector<QEntry>, std::greater<>> queue;
    best[source] = depart_after;
    queue.emplace(depart_after.value, source);

    while (!queue.empty()) {
        auto [tval, u] = queue.top();
        queue.pop();
        if (TimeInstant{tval} != best[u]) continue;
        if (u == target) break;
        for (RelationId id : incidence[u]) {
            const Relation& r = relations_[id];
            const EntityId v = (r.a == u) ? r.b : r.a;
            const auto cross = presence_[id].first_at_or_after(best[u]);
            if (!cross) continue;
            if (*cross < best[v]) {
                best[v] = *cross;
                pred[v] = Pred{id, *cross, u};
                queue.emplace(cross->value, v);
            }
        }
    }

    if (best[target] == inf) return std::nullopt;
    std::vector<JourneyStep> steps;
    for (EntityId cur = target; cur != source;) {
        const Pred& p = *pred[cur];
        steps.push_back(JourneyStep{p.relation, p.time});
        cur = p.from;
    }
    std::reverse(steps.begin(), steps.end());
    Journey j = make_journey(std::move(steps));
    const TimeInstant dep = j.departure();
    const TimeInstant arr = j.arrival();
    return EarliestArrival{std::move(j), dep, arr};
}

} // namespace tvg
