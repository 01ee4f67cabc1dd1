#include "sr3/welfare_approx.hpp"

#include <algorithm>
#include <queue>

#include "sr3/solver.hpp"

namespace sr3 {

namespace {

// Maximum cardinality matching on a general graph: alternating BFS trees
// with blossom contraction tracked through base[]. O(V^3). All scans run in
// ascending vertex order, so the result is deterministic.
class BlossomMatcher {
public:
    explicit BlossomMatcher(const std::vector<std::vector<int>>& adj)
        : n_(static_cast<int>(adj.size())), adj_(adj), match_(n_, -1), parent_(n_, -1),
          base_(n_, 0), used_(n_, 0), blossom_(n_, 0) {}

    std::vector<int> run() {
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1) grow_tree(v);
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<char> on_path(n_, 0);
        int cur = a;
        while (true) {
            cur = base_[cur];
            on_path[cur] = 1;
            if (match_[cur] == -1) break;
            cur = parent_[match_[cur]];
        }
        cur = b;
        while (true) {
            cur = base_[cur];
            if (on_path[cur]) return cur;
            cur = parent_[match_[cur]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = 1;
            blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    void grow_tree(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = 1;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    // Odd cycle: contract the blossom down to the common base.
                    int cur_base = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i)
                        if (blossom_[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used_[i]) {
                                used_[i] = 1;
                                queue.push(i);
                            }
                        }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) {
                        augment(to);
                        return;
                    }
                    used_[match_[to]] = 1;
                    queue.push(match_[to]);
                }
            }
        }
    }

    void augment(int leaf) {
        int v = leaf;
        while (v != -1) {
            int pv = parent_[v];
            int next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }

    int n_;
    const std::vector<std::vector<int>>& adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, blossom_;
};

} // namespace

PairMatching maximum_2d_matching(const Instance& inst, const std::vector<AgentId>& subset,
                                 PairStrategy strategy) {
    inst.require_mode(Mode::BinarySymmetric);
    const int m = static_cast<int>(subset.size());
    std::vector<int> local(inst.agent_count(), -1);
    for (int i = 0; i < m; ++i) {
        inst.require_agent(subset[i]);
        if (local[subset[i]] != -1) throw InputError("duplicate agent in subset");
        local[subset[i]] = i;
    }
    std::vector<std::vector<int>> adj(m);
    for (int i = 0; i < m; ++i)
        for (AgentId q : inst.neighbors(subset[i]))
            if (local[q] != -1) adj[i].push_back(local[q]); // neighbors() ascending

    std::vector<int> mate(m, -1);
    if (strategy == PairStrategy::Maximum) {
        mate = BlossomMatcher(adj).run();
    } else {
        for (int v = 0; v < m; ++v) {
            if (mate[v] != -1) continue;
            for (int u : adj[v])
                if (mate[u] == -1) {
                    mate[v] = u;
                    mate[u] = v;
                    break;
                }
        }
    }

    PairMatching out;
    for (int v = 0; v < m; ++v)
        if (mate[v] > v) out.pairs.emplace_back(subset[v], subset[mate[v]]);
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

std::pair<Matching, WelfareReport> find_stable_uw(const Instance& inst, PairStrategy strategy) {
    Matching m1 = find_stable(inst);
    std::vector<AgentId> unmatched;
    for (AgentId a = 0; a < inst.agent_count(); ++a)
        if (!m1.is_matched(a)) unmatched.push_back(a);

    PairMatching best_pairs = maximum_2d_matching(inst, unmatched, strategy);
    const int target = static_cast<int>(unmatched.size()) / 3;

    std::vector<std::pair<AgentId, AgentId>> pairs;
    if (best_pairs.size() >= target) {
        pairs.assign(best_pairs.pairs.begin(), best_pairs.pairs.begin() + target);
    } else {
        pairs = best_pairs.pairs;
        std::vector<char> taken(inst.agent_count(), 0);
        for (auto [a, b] : pairs) taken[a] = taken[b] = 1;
        std::vector<AgentId> leftover;
        for (AgentId a : unmatched)
            if (!taken[a]) leftover.push_back(a);
        const int needed = target - best_pairs.size();
        for (int k = 0; k < needed; ++k)
            pairs.emplace_back(leftover[2 * k], leftover[2 * k + 1]);
        std::sort(pairs.begin(), pairs.end());
    }

    std::vector<char> paired(inst.agent_count(), 0);
    for (auto [a, b] : pairs) paired[a] = paired[b] = 1;
    std::vector<AgentId> singles;
    for (AgentId a : unmatched)
        if (!paired[a]) singles.push_back(a);

    std::vector<Triple> triples = m1.triples();
    for (int k = 0; k < target; ++k)
        triples.emplace_back(pairs[k].first, pairs[k].second, singles[k]);
    Matching m_a(std::move(triples));
    WelfareReport report = welfare(inst, m_a);
    return {std::move(m_a), std::move(report)};
}

ApproxReport approx_report(const Instance& inst, bool with_oracle, EnumerationBudget budget,
                           PairStrategy strategy) {
    auto [m_a, report] = find_stable_uw(inst, strategy);
    ApproxReport out;
    out.m_a = std::move(m_a);
    out.welfare_a = report.total;
    if (with_oracle) {
        auto [m_opt, w_opt] = max_uw_stable(inst, budget);
        out.welfare_opt = w_opt;
        out.ratio_bound_satisfied = 2 * out.welfare_a >= w_opt;
    }
    return out;
}

} // namespace sr3
