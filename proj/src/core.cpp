#include "sr3/core.hpp"

#include <algorithm>
#include <string>

namespace sr3 {

Triple::Triple(AgentId a, AgentId b, AgentId c) : members{a, b, c} {
    std::sort(members.begin(), members.end());
    if (members[0] == members[1] || members[1] == members[2])
        throw InputError("triple members must be distinct");
    if (members[0] < 0) throw InputError("negative agent id in triple");
}

std::pair<AgentId, AgentId> Triple::others(AgentId a) const {
    if (members[0] == a) return {members[1], members[2]};
    if (members[1] == a) return {members[0], members[2]};
    if (members[2] == a) return {members[0], members[1]};
    throw InputError("agent " + std::to_string(a) + " not in triple");
}

Matching::Matching(std::vector<Triple> triples) : triples_(std::move(triples)) {
    std::sort(triples_.begin(), triples_.end());
    AgentId bound = 0;
    for (const Triple& t : triples_) bound = std::max(bound, t.members[2] + 1);
    assignment_.assign(bound, -1);
    for (std::size_t idx = 0; idx < triples_.size(); ++idx)
        for (AgentId a : triples_[idx].members) {
            if (assignment_[a] != -1)
                throw InputError("agent " + std::to_string(a) + " appears in two triples");
            assignment_[a] = static_cast<std::int32_t>(idx);
        }
}

int utility(const Instance& inst, AgentId a, const std::vector<AgentId>& coalition) {
    inst.require_agent(a);
    int sum = 0;
    for (AgentId x : coalition) {
        inst.require_agent(x);
        if (x != a) sum += inst.val(a, x);
    }
    return sum;
}

namespace {

int utility_in_triple(const Instance& inst, const Triple& t, AgentId a) {
    auto [x, y] = t.others(a);
    return inst.val(a, x) + inst.val(a, y);
}

} // namespace

int utility_in_matching(const Instance& inst, const Matching& m, AgentId a) {
    inst.require_agent(a);
    const Triple* t = m.triple_of(a);
    return t ? utility_in_triple(inst, *t, a) : 0;
}

std::vector<int> utilities(const Instance& inst, const Matching& m) {
    std::vector<int> u(inst.agent_count(), 0);
    for (const Triple& t : m.triples())
        for (AgentId a : t.members) {
            inst.require_agent(a);
            u[a] = utility_in_triple(inst, t, a);
        }
    return u;
}

std::optional<Triple> find_blocking_triple(const Instance& inst, const Matching& m,
                                           const std::vector<char>* excluded) {
    const int n = inst.agent_count();
    std::vector<int> u = utilities(inst, m);
    // In binary modes an agent with utility 2 can never strictly improve.
    const bool binary = inst.mode() != Mode::General;
    auto alive = [&](AgentId a) { return !excluded || !(*excluded)[a]; };
    for (AgentId x = 0; x < n; ++x) {
        if (!alive(x) || (binary && u[x] >= 2)) continue;
        for (AgentId y = x + 1; y < n; ++y) {
            if (!alive(y) || (binary && u[y] >= 2)) continue;
            const int vxy = inst.val(x, y);
            const int vyx = inst.val(y, x);
            for (AgentId z = y + 1; z < n; ++z) {
                if (!alive(z) || (binary && u[z] >= 2)) continue;
                if (vxy + inst.val(x, z) <= u[x]) continue;
                if (vyx + inst.val(y, z) <= u[y]) continue;
                if (inst.val(z, x) + inst.val(z, y) <= u[z]) continue;
                return Triple(x, y, z);
            }
        }
    }
    return std::nullopt;
}

bool is_stable(const Instance& inst, const Matching& m, const std::vector<char>* excluded) {
    return !find_blocking_triple(inst, m, excluded).has_value();
}

bool is_p_matching(const Instance& inst, const Matching& m) {
    for (const Triple& t : m.triples())
        for (AgentId a : t.members)
            if (utility_in_matching(inst, m, a) <= 0) return false;
    return true;
}

Matching complete_matching(const Instance& inst, const Matching& m) {
    if (m.max_agent_bound() > inst.agent_count())
        throw InputError("matching references agents outside the instance");
    std::vector<AgentId> unmatched;
    for (AgentId a = 0; a < inst.agent_count(); ++a)
        if (!m.is_matched(a)) unmatched.push_back(a);
    std::vector<Triple> triples = m.triples();
    for (std::size_t i = 0; i + 2 < unmatched.size(); i += 3)
        triples.emplace_back(unmatched[i], unmatched[i + 1], unmatched[i + 2]);
    return Matching(std::move(triples));
}

int triple_welfare(const Instance& inst, const Triple& t) {
    int sum = 0;
    for (AgentId a : t.members) sum += utility_in_triple(inst, t, a);
    return sum;
}

WelfareReport welfare(const Instance& inst, const Matching& m) {
    WelfareReport report;
    report.per_agent = utilities(inst, m);
    for (int u : report.per_agent) report.total += u;
    for (const Triple& t : m.triples()) report.histogram[triple_welfare(inst, t)] += 1;
    return report;
}

} // namespace sr3
