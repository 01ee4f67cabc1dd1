#ifndef SR3_REPAIR_HPP
#define SR3_REPAIR_HPP

#include <optional>
#include <string>
#include <vector>

#include "sr3/core.hpp"

namespace sr3 {

/// Final state of one repair run, for case-coverage tests and golden files.
///
/// `path` is the chain S of agents walked by the main loop: |S| = 3c, each
/// consecutive pair is unit-valued, and every block of three is a triple of
/// the input matching. The witnesses record which agents the chosen case
/// construction used; absent ones are -1.
struct RepairTrace {
    int case_id = 0; // 1..7
    AgentId pivot = -1;
    AgentId j1 = -1, j2 = -1, j3 = -1, j4 = -1;
    std::vector<AgentId> path;
    int b = 0;                // block index for case 6, 0 otherwise
    AgentId z1 = -1, z2 = -1; // zero-utility neighbors of the path tail block
    AgentId y1 = -1, y2 = -1; // zero-utility partners for pivot / j2 closures
    AgentId z4 = -1, z5 = -1; // witnesses materialized by cases 3 and 6
};

/// "case <k> S=[a,b,c,...]" -- the golden-file form of a trace.
std::string to_string(const RepairTrace& trace);

/// All agents that could serve as the pivot of `repair` for this matching:
/// zero-utility agents contained in every blocking triple, each such triple
/// being {pivot, x, y} with utilities (1, 0) and unit links pivot-x and x-y.
/// Empty if the matching is stable or not of that shape. Requires a
/// triangle-free binary-symmetric view and a P-matching; violations raise
/// InputError. O(n^3) -- verification use.
std::vector<AgentId> repairable_pivots(const Instance& inst, const Matching& m,
                                       const std::vector<char>* excluded = nullptr);

/// Lowest-id entry of `repairable_pivots`, or nullopt if none.
std::optional<AgentId> is_repairable(const Instance& inst, const Matching& m,
                                     const std::vector<char>* excluded = nullptr);

/// Turns a repairable P-matching into a stable P-matching in O(n^2).
///
/// The caller guarantees (inst restricted by `excluded`) is triangle-free
/// binary-symmetric and that (m, pivot) is repairable; `verify_preconditions`
/// re-checks that in O(n^3) for debugging. Internal witness searches that the
/// construction guarantees raise InternalError if they ever fail, so a bad
/// input can not produce a silently unstable result.
Matching repair(const Instance& inst, const Matching& m, AgentId pivot,
                const std::vector<char>* excluded = nullptr,
                bool verify_preconditions = false);

/// As `repair`, additionally reporting which of the seven constructions
/// built the result and the final chain state.
std::pair<Matching, RepairTrace> trace_repair(const Instance& inst, const Matching& m,
                                              AgentId pivot,
                                              const std::vector<char>* excluded = nullptr,
                                              bool verify_preconditions = false);

} // namespace sr3

#endif
