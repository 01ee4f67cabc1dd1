#include "sr3/hardness.hpp"

#include <algorithm>
#include <string>

namespace sr3 {

void PITInstance::validate() const {
    if (vertex_count < 0 || vertex_count % 3 != 0)
        throw InputError("vertex count must be a non-negative multiple of 3");
    std::vector<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw InputError("edge endpoint out of range");
        if (u == v) throw InputError("loops are not allowed");
        seen.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw InputError("duplicate edge");
}

bool PITInstance::has_edge(int u, int v) const {
    for (auto [a, b] : edges)
        if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
}

std::pair<Instance, ReductionMap> reduce_pit(const PITInstance& g) {
    g.validate();
    ReductionMap map{g.q()};
    std::vector<Arc> arcs;
    arcs.reserve(39 * map.q * 3);

    for (int v = 0; v < g.vertex_count; ++v) {
        const AgentId a1 = map.companion1(v), a2 = map.companion2(v), b = map.hub(v);
        arcs.push_back({a1, a2, 1});
        arcs.push_back({a1, b, 1});
        arcs.push_back({a2, a1, 1});
        arcs.push_back({a2, b, 1});
        arcs.push_back({b, a1, 1});
        arcs.push_back({b, a2, 1});
    }
    for (auto [u, v] : g.edges) {
        arcs.push_back({map.hub(u), map.hub(v), 1});
        arcs.push_back({map.hub(v), map.hub(u), 1});
    }
    // Each gadget member values its successor, the one after, and its
    // predecessor on the 5-cycle.
    for (int r = 0; r < 6 * map.q; ++r)
        for (int s = 1; s <= 5; ++s) {
            auto wrap = [](int x) { return (x - 1) % 5 + 1; };
            arcs.push_back({map.gadget(r, s), map.gadget(r, wrap(s + 1)), 1});
            arcs.push_back({map.gadget(r, s), map.gadget(r, wrap(s + 2)), 1});
            arcs.push_back({map.gadget(r, s), map.gadget(r, wrap(s + 4)), 1});
        }

    return {Instance::from_arcs(map.agent_count(), Mode::Binary, arcs), map};
}

bool validate_pit(const PITInstance& g, const std::vector<Triple>& partition) {
    g.validate();
    if (static_cast<int>(partition.size()) != g.q()) return false;
    std::vector<char> seen(g.vertex_count, 0);
    for (const Triple& t : partition) {
        auto [i, j, k] = std::tuple{t.members[0], t.members[1], t.members[2]};
        if (k >= g.vertex_count) return false;
        if (seen[i] || seen[j] || seen[k]) return false;
        seen[i] = seen[j] = seen[k] = 1;
        if (!g.has_edge(i, j) || !g.has_edge(i, k) || !g.has_edge(j, k)) return false;
    }
    return true;
}

Matching encode_pit_solution(const PITInstance& g, const std::vector<Triple>& partition,
                             const ReductionMap& map) {
    if (!validate_pit(g, partition))
        throw InputError("partition is not a valid triangle partition of the graph");
    std::vector<Triple> triples;
    triples.reserve(13 * map.q);
    for (const Triple& t : partition)
        triples.emplace_back(map.hub(t.members[0]), map.hub(t.members[1]),
                             map.hub(t.members[2]));
    for (int r = 0; r < 6 * map.q; ++r)
        triples.emplace_back(map.gadget(r, 1), map.gadget(r, 2), map.gadget(r, 3));
    for (int v = 0; v < g.vertex_count; ++v) {
        // Vertex v picks up the leftover members of its two gadgets
        // (gadgets 2v and 2v+1).
        triples.emplace_back(map.companion1(v), map.gadget(2 * v + 1, 4),
                             map.gadget(2 * v + 1, 5));
        triples.emplace_back(map.companion2(v), map.gadget(2 * v, 4), map.gadget(2 * v, 5));
    }
    return Matching(std::move(triples));
}

std::vector<Triple> decode_stable_matching(const PITInstance& g, const ReductionMap& map,
                                           const Matching& m) {
    g.validate();
    std::vector<Triple> partition;
    std::vector<char> hub_seen(g.vertex_count, 0);
    for (const Triple& t : m.triples()) {
        int v0 = map.vertex_of_hub(t.members[0]);
        int v1 = map.vertex_of_hub(t.members[1]);
        int v2 = map.vertex_of_hub(t.members[2]);
        const int hubs = (v0 >= 0) + (v1 >= 0) + (v2 >= 0);
        if (hubs == 0) continue;
        if (hubs != 3)
            throw StructureError("a hub agent is grouped with non-hub agents; the matching "
                                 "does not have the reduced structure");
        partition.emplace_back(v0, v1, v2);
        hub_seen[v0] = hub_seen[v1] = hub_seen[v2] = 1;
    }
    for (int v = 0; v < g.vertex_count; ++v)
        if (!hub_seen[v])
            throw StructureError("hub of vertex " + std::to_string(v) +
                                 " is not in any hub triple");
    if (!validate_pit(g, partition))
        throw StructureError("recovered vertex triples do not induce triangles");
    return partition;
}

} // namespace sr3
