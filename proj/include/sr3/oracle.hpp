#ifndef SR3_ORACLE_HPP
#define SR3_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sr3/core.hpp"

namespace sr3 {

/// Caps for the brute-force oracles. Inputs beyond the cap are refused with a
/// BudgetError rather than running unbounded.
struct EnumerationBudget {
    int max_agents = 15;
    std::uint64_t max_matchings = 20'000'000;

    /// Default cap for maximum-size-only enumeration (about 1.4M matchings
    /// at the 15-agent cap).
    static EnumerationBudget maximum_only() { return {15, 20'000'000}; }

    /// Default cap for all-sizes enumeration, which grows much faster.
    static EnumerationBudget all_sizes() { return {12, 20'000'000}; }
};

enum class EnumerationMode {
    MaximumOnly, ///< exactly floor(n/3) triples; every leftover choice visited
    AllSizes,    ///< every matching of every size, including the empty one
};

/// Streams every matching on n agents exactly once, deterministically.
///
/// Decisions are made for the lowest undecided agent: partner pairs ascending
/// first, then (where allowed) the leave-unmatched choice. In maximum-only
/// mode the stream is lexicographically ascending on the flattened triple
/// list. Iterative with an explicit stack; memory stays flat.
class MatchingEnumerator {
public:
    MatchingEnumerator(int agent_count, EnumerationMode mode,
                       EnumerationBudget budget = EnumerationBudget::maximum_only());

    /// Next matching, or nullopt when exhausted.
    std::optional<Matching> next();

private:
    struct Frame {
        AgentId anchor;
        AgentId b, c;    // current partner pair; (-1,-1) before first choice
        bool unmatched;  // true while exploring the leave-unmatched choice
    };

    bool advance_top();
    void push_agent();
    bool apply_pair(Frame& f);

    int n_;
    EnumerationMode mode_;
    int unmatched_allowed_;
    int unmatched_used_ = 0;
    std::uint64_t yielded_ = 0;
    std::uint64_t cap_;
    std::vector<char> decided_;
    int undecided_count_;
    std::vector<Triple> chosen_;
    std::vector<Frame> stack_;
    bool done_ = false;
    bool started_ = false;
};

/// Every stable matching of any size, sorted canonically.
std::vector<Matching> all_stable_matchings(const Instance& inst,
                                           EnumerationBudget budget = EnumerationBudget::all_sizes());

/// True iff some maximum-size matching is stable (equivalently, iff any
/// stable matching exists).
bool exists_stable(const Instance& inst,
                   EnumerationBudget budget = EnumerationBudget::maximum_only());

/// A stable matching with maximum utilitarian welfare and that welfare.
/// Ties resolve to the canonically least matching. Throws InputError if no
/// stable matching exists.
std::pair<Matching, long long> max_uw_stable(const Instance& inst,
                                             EnumerationBudget budget = EnumerationBudget::maximum_only());

/// Maximum number of disjoint unit-valued pairs within `subset`, by
/// exhaustive search. Subset sizes above the budget cap are refused.
int max_pair_matching_bruteforce(const Instance& inst, const std::vector<AgentId>& subset,
                                 int max_subset = 12);

} // namespace sr3

#endif
