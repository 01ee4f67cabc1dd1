#ifndef SR3_CORE_HPP
#define SR3_CORE_HPP

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "sr3/instance.hpp"

namespace sr3 {

/// An unordered set of three distinct agents, stored sorted ascending so that
/// equality and ordering are structural.
struct Triple {
    std::array<AgentId, 3> members{};

    Triple() = default;
    Triple(AgentId a, AgentId b, AgentId c);

    bool contains(AgentId a) const {
        return members[0] == a || members[1] == a || members[2] == a;
    }

    /// The two members other than `a`; `a` must be a member.
    std::pair<AgentId, AgentId> others(AgentId a) const;

    auto operator<=>(const Triple&) const = default;
};

/// A set of pairwise disjoint triples plus an agent -> triple index.
/// Agents absent from every triple are unmatched. Immutable once built.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<Triple> triples);

    const std::vector<Triple>& triples() const { return triples_; }
    int size() const { return static_cast<int>(triples_.size()); }
    bool empty() const { return triples_.empty(); }

    bool is_matched(AgentId a) const {
        return a >= 0 && a < static_cast<AgentId>(assignment_.size()) && assignment_[a] >= 0;
    }

    /// Triple containing `a`, or nullptr if unmatched.
    const Triple* triple_of(AgentId a) const {
        return is_matched(a) ? &triples_[assignment_[a]] : nullptr;
    }

    /// Largest agent id referenced plus one (0 for the empty matching).
    int max_agent_bound() const { return static_cast<int>(assignment_.size()); }

    bool operator==(const Matching& other) const { return triples_ == other.triples_; }

    /// Canonical order: lexicographic on the sorted triple list.
    bool operator<(const Matching& other) const { return triples_ < other.triples_; }

private:
    std::vector<Triple> triples_;        // sorted ascending
    std::vector<std::int32_t> assignment_; // agent -> index into triples_, -1 unmatched
};

/// Welfare accounting for a matching: the total, a per-triple welfare
/// histogram, and each agent's utility.
struct WelfareReport {
    long long total = 0;
    std::map<int, int> histogram; // triple welfare -> count
    std::vector<int> per_agent;
};

/// Sum of val(a, x) over x in coalition, excluding a itself.
int utility(const Instance& inst, AgentId a, const std::vector<AgentId>& coalition);

/// Utility of a's triple in m, or 0 if a is unmatched.
int utility_in_matching(const Instance& inst, const Matching& m, AgentId a);

/// Lexicographically least triple whose members all strictly prefer it to
/// their current assignment, or nullopt if none. Agents flagged in `excluded`
/// are outside the instance view and never considered. O(n^3).
std::optional<Triple> find_blocking_triple(const Instance& inst, const Matching& m,
                                           const std::vector<char>* excluded = nullptr);

/// True iff no blocking triple exists.
bool is_stable(const Instance& inst, const Matching& m,
               const std::vector<char>* excluded = nullptr);

/// True iff every matched agent has strictly positive utility.
bool is_p_matching(const Instance& inst, const Matching& m);

/// Groups unmatched agents into triples in ascending id order until fewer
/// than three remain. A stable input yields a stable output.
Matching complete_matching(const Instance& inst, const Matching& m);

WelfareReport welfare(const Instance& inst, const Matching& m);

/// Welfare of a single triple (sum of its members' in-triple utilities).
int triple_welfare(const Instance& inst, const Triple& t);

/// Per-agent utilities for `m` over `inst` (0 for unmatched agents).
std::vector<int> utilities(const Instance& inst, const Matching& m);

} // namespace sr3

#endif
