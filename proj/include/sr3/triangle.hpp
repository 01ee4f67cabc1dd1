#ifndef SR3_TRIANGLE_HPP
#define SR3_TRIANGLE_HPP

#include <optional>
#include <vector>

#include "sr3/core.hpp"

namespace sr3 {

/// A maximal set of disjoint triangles together with the removal mask that
/// defines the residual instance view (ids are never re-indexed).
struct TrianglePacking {
    std::vector<Triple> triples;
    std::vector<char> removed; // size n; true for agents taken by a triangle

    bool contains_agent(AgentId a) const { return removed[a] != 0; }
};

/// Lexicographically least triple of mutually unit-valuing agents, or
/// nullopt if the instance (restricted to non-excluded agents) has none.
/// Binary-symmetric only. O(n^3).
std::optional<Triple> find_triangle(const Instance& inst,
                                    const std::vector<char>* excluded = nullptr);

/// Repeatedly removes the lexicographically least remaining triangle until
/// none remain. The residual view (non-removed agents) is triangle-free.
/// Binary-symmetric only. O(n^3) total.
TrianglePacking eliminate_triangles(const Instance& inst);

} // namespace sr3

#endif
