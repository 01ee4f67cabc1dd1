#include "sr3/oracle.hpp"

#include <algorithm>
#include <string>

namespace sr3 {

MatchingEnumerator::MatchingEnumerator(int agent_count, EnumerationMode mode,
                                       EnumerationBudget budget)
    : n_(agent_count), mode_(mode), cap_(budget.max_matchings), decided_(agent_count, 0),
      undecided_count_(agent_count) {
    if (n_ < 0) throw InputError("agent count must be non-negative");
    if (n_ > budget.max_agents)
        throw BudgetError("enumeration over " + std::to_string(n_) +
                          " agents exceeds the budget cap of " +
                          std::to_string(budget.max_agents));
    unmatched_allowed_ = mode_ == EnumerationMode::MaximumOnly ? n_ % 3 : n_;
}

void MatchingEnumerator::push_agent() {
    AgentId a = 0;
    while (decided_[a]) ++a;
    stack_.push_back({a, -1, -1, false});
}

bool MatchingEnumerator::advance_top() {
    Frame& f = stack_.back();
    const AgentId a = f.anchor;
    if (f.unmatched) {
        decided_[a] = 0;
        ++undecided_count_;
        --unmatched_used_;
        stack_.pop_back();
        return false;
    }
    AgentId start_b = a + 1;
    AgentId resume_c = -1;
    if (f.b != -1) {
        decided_[a] = decided_[f.b] = decided_[f.c] = 0;
        undecided_count_ += 3;
        chosen_.pop_back();
        start_b = f.b;
        resume_c = f.c;
    }
    for (AgentId b = start_b; b < n_; ++b) {
        if (decided_[b]) continue;
        AgentId c = (b == start_b && resume_c != -1) ? resume_c + 1 : b + 1;
        for (; c < n_; ++c) {
            if (decided_[c]) continue;
            f.b = b;
            f.c = c;
            decided_[a] = decided_[b] = decided_[c] = 1;
            undecided_count_ -= 3;
            chosen_.emplace_back(a, b, c);
            return true;
        }
        resume_c = -1;
    }
    if (unmatched_used_ < unmatched_allowed_) {
        f.unmatched = true;
        decided_[a] = 1;
        --undecided_count_;
        ++unmatched_used_;
        return true;
    }
    stack_.pop_back();
    return false;
}

std::optional<Matching> MatchingEnumerator::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
    } else {
        if (stack_.empty()) { // n_ == 0 yielded its single empty matching
            done_ = true;
            return std::nullopt;
        }
        while (!stack_.empty() && !advance_top()) {}
        if (stack_.empty()) {
            done_ = true;
            return std::nullopt;
        }
    }
    while (undecided_count_ > 0) {
        push_agent();
        while (!stack_.empty() && !advance_top()) {}
        if (stack_.empty()) {
            done_ = true;
            return std::nullopt;
        }
    }
    if (++yielded_ > cap_)
        throw BudgetError("enumeration exceeded the cap of " + std::to_string(cap_) +
                          " matchings");
    return Matching(chosen_);
}

std::vector<Matching> all_stable_matchings(const Instance& inst, EnumerationBudget budget) {
    MatchingEnumerator en(inst.agent_count(), EnumerationMode::AllSizes, budget);
    std::vector<Matching> stable;
    while (auto m = en.next())
        if (is_stable(inst, *m)) stable.push_back(std::move(*m));
    std::sort(stable.begin(), stable.end());
    return stable;
}

bool exists_stable(const Instance& inst, EnumerationBudget budget) {
    MatchingEnumerator en(inst.agent_count(), EnumerationMode::MaximumOnly, budget);
    while (auto m = en.next())
        if (is_stable(inst, *m)) return true;
    return false;
}

std::pair<Matching, long long> max_uw_stable(const Instance& inst, EnumerationBudget budget) {
    // Maximum-size matchings suffice: completing a stable matching never
    // lowers welfare or breaks stability. The stream is canonically
    // ascending, so keeping the first stable matching at each new best
    // welfare realizes the canonical tie-break. Stability is only re-checked
    // when the welfare record is beaten.
    MatchingEnumerator en(inst.agent_count(), EnumerationMode::MaximumOnly, budget);
    std::optional<Matching> best;
    long long best_welfare = -1;
    while (auto m = en.next()) {
        long long w = 0;
        for (const Triple& t : m->triples()) w += triple_welfare(inst, t);
        if (w > best_welfare && is_stable(inst, *m)) {
            best_welfare = w;
            best = std::move(*m);
        }
    }
    if (!best) throw InputError("no stable matching exists in this instance");
    return {std::move(*best), best_welfare};
}

namespace {

int best_pairing(std::uint32_t avail, const std::vector<std::uint32_t>& adj,
                 std::vector<std::int8_t>& memo) {
    if (avail == 0) return 0;
    if (memo[avail] >= 0) return memo[avail];
    const int v = __builtin_ctz(avail);
    const std::uint32_t without_v = avail & ~(1u << v);
    int best = best_pairing(without_v, adj, memo); // leave v unpaired
    std::uint32_t partners = adj[v] & without_v;
    while (partners) {
        const int u = __builtin_ctz(partners);
        partners &= partners - 1;
        best = std::max(best, 1 + best_pairing(without_v & ~(1u << u), adj, memo));
    }
    memo[avail] = static_cast<std::int8_t>(best);
    return best;
}

} // namespace

int max_pair_matching_bruteforce(const Instance& inst, const std::vector<AgentId>& subset,
                                 int max_subset) {
    inst.require_mode(Mode::BinarySymmetric);
    const int m = static_cast<int>(subset.size());
    if (m > max_subset)
        throw BudgetError("pair-matching brute force refused beyond " +
                          std::to_string(max_subset) + " vertices");
    for (AgentId a : subset) inst.require_agent(a);
    std::vector<std::uint32_t> adj(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && inst.val(subset[i], subset[j]) == 1) adj[i] |= 1u << j;
    std::vector<std::int8_t> memo(std::size_t{1} << m, -1);
    return best_pairing(m == 32 ? ~0u : (1u << m) - 1, adj, memo);
}

} // namespace sr3
