#ifndef SR3_SOLVER_HPP
#define SR3_SOLVER_HPP

#include <functional>
#include <vector>

#include "sr3/core.hpp"
#include "sr3/triangle.hpp"

namespace sr3 {

/// Snapshot passed to SolveOptions::on_repair just before a repair call:
/// the instance view, the stable P-matching over the already-inserted
/// agents, and the newly inserted agent acting as pivot.
struct RepairEvent {
    const Instance& inst;
    const std::vector<char>& excluded; // complement of the inserted prefix
    const Matching& before;
    AgentId pivot;
};

struct SolveOptions {
    /// Re-verify stability, the P-property, and triangle-freeness after
    /// every insertion step. O(n^3) per step; off by default.
    bool debug_checks = false;

    /// Called for every insertion that requires a repair, before repairing.
    std::function<void(const RepairEvent&)> on_repair;
};

/// Stable P-matching for a triangle-free binary-symmetric instance view.
///
/// Agents are inserted in ascending id order starting from the empty
/// matching; each insertion either groups the new agent with two agents it
/// can strictly improve, repairs the matching with the new agent as pivot,
/// or leaves the matching unchanged. O(n^3).
Matching find_stable_triangle_free(const Instance& inst,
                                   const std::vector<char>* excluded = nullptr,
                                   const SolveOptions& options = {});

/// Stable P-matching for an arbitrary binary-symmetric instance: removes a
/// maximal triangle packing, solves the triangle-free residual, and returns
/// the union. With `complete`, unmatched agents are then grouped into
/// triples (still stable, but no longer a P-matching). O(n^3).
Matching find_stable(const Instance& inst, bool complete = false,
                     const SolveOptions& options = {});

} // namespace sr3

#endif
