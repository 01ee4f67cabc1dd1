#include "sr3/solver.hpp"

#include "sr3/repair.hpp"

namespace sr3 {

Matching find_stable_triangle_free(const Instance& inst, const std::vector<char>* excluded,
                                   const SolveOptions& options) {
    inst.require_mode(Mode::BinarySymmetric);
    const int n = inst.agent_count();
    if (options.debug_checks && find_triangle(inst, excluded))
        throw InputError("instance view is not triangle-free");

    // outside[a] is true until agent a is inserted; excluded agents never
    // flip. The complement is the active prefix every scan ranges over.
    std::vector<char> outside(n, 1);
    std::vector<int> u(n, 0);
    std::vector<Triple> current;

    auto inserted = [&](AgentId q) { return !outside[q]; };
    auto rebuild_utilities = [&] {
        u.assign(n, 0);
        for (const Triple& t : current)
            for (AgentId a : t.members) {
                auto [x, y] = t.others(a);
                u[a] = inst.val(a, x) + inst.val(a, y);
            }
    };

    int active_seen = 0;
    for (AgentId i = 0; i < n; ++i) {
        if (excluded && (*excluded)[i]) continue;
        if (++active_seen <= 2) { // empty matching over the first two agents
            outside[i] = 0;
            continue;
        }

        AgentId l1 = -1, l2 = -1;
        for (AgentId q : inst.neighbors(i)) {
            if (!inserted(q) || u[q] != 0) continue;
            if (l1 == -1) {
                l1 = q;
            } else {
                l2 = q;
                break;
            }
        }

        if (l2 != -1) {
            // Two zero-utility unit neighbors: adopt both.
            current.emplace_back(i, l1, l2);
            outside[i] = 0;
            u[i] = inst.val(i, l1) + inst.val(i, l2);
            u[l1] = inst.val(l1, i) + inst.val(l1, l2);
            u[l2] = inst.val(l2, i) + inst.val(l2, l1);
        } else {
            // One zero-utility neighbor with its own zero-utility partner.
            AgentId l3 = -1, l4 = -1;
            for (AgentId q : inst.neighbors(i)) {
                if (!inserted(q) || u[q] != 0) continue;
                for (AgentId r : inst.neighbors(q)) {
                    if (r == i || !inserted(r) || u[r] != 0) continue;
                    l3 = q;
                    l4 = r;
                    break;
                }
                if (l3 != -1) break;
            }
            if (l3 != -1) {
                current.emplace_back(i, l3, l4);
                outside[i] = 0;
                u[i] = inst.val(i, l3) + inst.val(i, l4);
                u[l3] = inst.val(l3, i) + inst.val(l3, l4);
                u[l4] = inst.val(l4, i) + inst.val(l4, l3);
            } else {
                // A utility-one neighbor with a zero-utility partner means the
                // matching is now repairable with the new agent as pivot.
                AgentId l5 = -1;
                for (AgentId q : inst.neighbors(i)) {
                    if (!inserted(q) || u[q] != 1) continue;
                    for (AgentId r : inst.neighbors(q)) {
                        if (r == i || !inserted(r) || u[r] != 0) continue;
                        l5 = q;
                        break;
                    }
                    if (l5 != -1) break;
                }
                outside[i] = 0;
                if (l5 != -1) {
                    Matching before(current);
                    if (options.on_repair) options.on_repair({inst, outside, before, i});
                    Matching repaired =
                        repair(inst, before, i, &outside, options.debug_checks);
                    current = repaired.triples();
                    rebuild_utilities();
                }
                // Otherwise nothing the new agent touches can block; keep M.
            }
        }

        if (options.debug_checks) {
            Matching snapshot(current);
            if (!is_stable(inst, snapshot, &outside))
                throw InternalError("insertion step produced an unstable matching");
            if (!is_p_matching(inst, snapshot))
                throw InternalError("insertion step produced a non-P matching");
        }
    }
    return Matching(std::move(current));
}

Matching find_stable(const Instance& inst, bool complete, const SolveOptions& options) {
    TrianglePacking packing = eliminate_triangles(inst);
    Matching residual_matching = find_stable_triangle_free(inst, &packing.removed, options);
    std::vector<Triple> triples = residual_matching.triples();
    triples.insert(triples.end(), packing.triples.begin(), packing.triples.end());
    Matching result(std::move(triples));
    if (options.debug_checks) {
        if (!is_stable(inst, result)) throw InternalError("solver produced an unstable matching");
        if (!is_p_matching(inst, result)) throw InternalError("solver output is not a P-matching");
    }
    if (complete) result = complete_matching(inst, result);
    return result;
}

} // namespace sr3
