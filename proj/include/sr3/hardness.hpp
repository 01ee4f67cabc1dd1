#ifndef SR3_HARDNESS_HPP
#define SR3_HARDNESS_HPP

#include <utility>
#include <vector>

#include "sr3/core.hpp"

namespace sr3 {

/// A Partition-Into-Triangles input: a simple undirected graph on 3q
/// vertices. The question it encodes is whether the vertices split into q
/// disjoint triangles.
struct PITInstance {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges; // each (min,max), no duplicates

    int q() const { return vertex_count / 3; }
    void validate() const; // throws InputError
    bool has_edge(int u, int v) const;
};

/// Agent-role bookkeeping for the gadget instance built from a PIT graph.
///
/// Layout: vertex v owns ids 3v (first companion), 3v+1 (second companion),
/// 3v+2 (hub). Five-agent gadget r (0-based, r < 6q) owns ids
/// 9q + 5r .. 9q + 5r + 4. Total 39q agents.
struct ReductionMap {
    int q = 0;

    AgentId companion1(int vertex) const { return 3 * vertex; }
    AgentId companion2(int vertex) const { return 3 * vertex + 1; }
    AgentId hub(int vertex) const { return 3 * vertex + 2; }

    /// Gadget member s in 1..5 of gadget r in [0, 6q).
    AgentId gadget(int r, int s) const { return 9 * q + 5 * r + (s - 1); }

    int agent_count() const { return 39 * q; }

    /// Vertex whose hub this agent is, or -1.
    int vertex_of_hub(AgentId a) const {
        return (a < 9 * q && a % 3 == 2) ? a / 3 : -1;
    }
    /// Gadget index owning this agent, or -1.
    int gadget_of(AgentId a) const { return a >= 9 * q ? (a - 9 * q) / 5 : -1; }
};

/// Builds the binary (asymmetric) instance on 39q agents whose stable
/// matchings correspond exactly to partitions of G into triangles.
std::pair<Instance, ReductionMap> reduce_pit(const PITInstance& g);

/// True iff `partition` splits the vertices into q triples that each induce
/// a triangle in g.
bool validate_pit(const PITInstance& g, const std::vector<Triple>& partition);

/// The 13q-triple stable matching witnessing a PIT solution: one triple of
/// hubs per triangle, the first three members of every gadget, and the
/// companions paired with the remaining gadget members.
Matching encode_pit_solution(const PITInstance& g, const std::vector<Triple>& partition,
                             const ReductionMap& map);

/// Recovers the vertex partition from a stable maximum matching on the
/// reduced instance: the q triples consisting solely of hubs. Raises
/// StructureError if the matching does not have that shape or the recovered
/// partition is not a valid PIT solution.
std::vector<Triple> decode_stable_matching(const PITInstance& g, const ReductionMap& map,
                                           const Matching& m);

} // namespace sr3

#endif
