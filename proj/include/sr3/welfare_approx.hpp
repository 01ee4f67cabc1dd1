#ifndef SR3_WELFARE_APPROX_HPP
#define SR3_WELFARE_APPROX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "sr3/core.hpp"
#include "sr3/oracle.hpp"

namespace sr3 {

/// Disjoint unit-valued pairs drawn from a designated agent subset.
struct PairMatching {
    std::vector<std::pair<AgentId, AgentId>> pairs; // each (min,max), sorted
    int size() const { return static_cast<int>(pairs.size()); }
};

enum class PairStrategy {
    Maximum,       ///< true maximum cardinality (augmenting paths + blossoms)
    GreedyMaximal, ///< greedy maximal variant, for experimentation
};

/// Matching of maximum (or greedily maximal) cardinality in the unit-valued
/// graph induced by `subset`. Deterministic given id order.
/// Binary-symmetric only.
PairMatching maximum_2d_matching(const Instance& inst, const std::vector<AgentId>& subset,
                                 PairStrategy strategy = PairStrategy::Maximum);

/// Stable matching with utilitarian welfare at least half the best stable
/// welfare. Builds a stable P-matching first, then zips floor(|U|/3) pairs
/// over the unmatched agents U with floor(|U|/3) singletons, producing
/// exactly floor(n/3) triples overall. O(n^3).
std::pair<Matching, WelfareReport> find_stable_uw(const Instance& inst,
                                                  PairStrategy strategy = PairStrategy::Maximum);

struct ApproxReport {
    Matching m_a;
    long long welfare_a = 0;
    std::optional<long long> welfare_opt;     // present when the oracle ran
    std::optional<bool> ratio_bound_satisfied; // 2 * welfare_a >= welfare_opt
};

/// Runs find_stable_uw and, when requested, the exact oracle for comparison.
ApproxReport approx_report(const Instance& inst, bool with_oracle,
                           EnumerationBudget budget = EnumerationBudget::maximum_only(),
                           PairStrategy strategy = PairStrategy::Maximum);

} // namespace sr3

#endif
