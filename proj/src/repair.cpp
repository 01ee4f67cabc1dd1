#include "sr3/repair.hpp"

#include <algorithm>
#include <sstream>

#include "sr3/triangle.hpp"

namespace sr3 {

std::string to_string(const RepairTrace& trace) {
    std::ostringstream out;
    out << "case " << trace.case_id << " S=[";
    for (std::size_t i = 0; i < trace.path.size(); ++i) {
        if (i) out << ",";
        out << trace.path[i];
    }
    out << "]";
    return out.str();
}

std::vector<AgentId> repairable_pivots(const Instance& inst, const Matching& m,
                                       const std::vector<char>* excluded) {
    inst.require_mode(Mode::BinarySymmetric);
    for (const Triple& t : m.triples())
        for (AgentId a : t.members) {
            inst.require_agent(a);
            if (excluded && (*excluded)[a])
                throw InputError("matching uses an agent outside the instance view");
        }
    if (find_triangle(inst, excluded))
        throw InputError("instance view is not triangle-free");
    if (!is_p_matching(inst, m)) throw InputError("matching is not a P-matching");

    const std::vector<int> u = utilities(inst, m);
    const int n = inst.agent_count();
    auto alive = [&](AgentId a) { return !excluded || !(*excluded)[a]; };

    std::vector<Triple> blockers;
    for (AgentId x = 0; x < n; ++x) {
        if (!alive(x) || u[x] >= 2) continue;
        for (AgentId y = x + 1; y < n; ++y) {
            if (!alive(y) || u[y] >= 2) continue;
            for (AgentId z = y + 1; z < n; ++z) {
                if (!alive(z) || u[z] >= 2) continue;
                if (inst.val(x, y) + inst.val(x, z) <= u[x]) continue;
                if (inst.val(y, x) + inst.val(y, z) <= u[y]) continue;
                if (inst.val(z, x) + inst.val(z, y) <= u[z]) continue;
                blockers.emplace_back(x, y, z);
            }
        }
    }
    if (blockers.empty()) return {};

    std::vector<AgentId> pivots;
    for (AgentId a : blockers.front().members) {
        if (u[a] != 0) continue;
        bool ok = true;
        for (const Triple& blocker : blockers) {
            if (!blocker.contains(a)) {
                ok = false;
                break;
            }
            auto [x, y] = blocker.others(a);
            AgentId one = -1, zero = -1;
            if (u[x] == 1 && u[y] == 0) {
                one = x;
                zero = y;
            } else if (u[x] == 0 && u[y] == 1) {
                one = y;
                zero = x;
            } else {
                ok = false;
                break;
            }
            if (inst.val(a, one) != 1 || inst.val(one, zero) != 1) {
                ok = false;
                break;
            }
        }
        if (ok) pivots.push_back(a);
    }
    std::sort(pivots.begin(), pivots.end());
    return pivots;
}

std::optional<AgentId> is_repairable(const Instance& inst, const Matching& m,
                                     const std::vector<char>* excluded) {
    std::vector<AgentId> pivots = repairable_pivots(inst, m, excluded);
    if (pivots.empty()) return std::nullopt;
    return pivots.front();
}

namespace {

// Working state for one repair run. The chain `path` (1-based positions via
// at()) always satisfies: consecutive agents are unit-valued, every aligned
// block of three is a triple of the input matching, and no agent repeats.
struct RepairRun {
    const Instance& inst;
    const Matching& m;
    const std::vector<char>* excluded;
    std::vector<int> u;            // utility in m
    std::vector<AgentId> zero_nbr; // lowest zero-utility neighbor != pivot, -1 if none
    std::vector<int> pos;          // 1-based position in path, 0 if absent
    std::vector<AgentId> path;
    RepairTrace trace;

    bool alive(AgentId a) const { return !excluded || !(*excluded)[a]; }
    AgentId at(int position1) const { return path[position1 - 1]; }

    void append(AgentId a) {
        path.push_back(a);
        pos[a] = static_cast<int>(path.size());
    }

    // Lowest-id live zero-utility neighbor of `a`, skipping `skip1`/`skip2`.
    AgentId zero_neighbor_excluding(AgentId a, AgentId skip1, AgentId skip2) const {
        for (AgentId q : inst.neighbors(a)) {
            if (!alive(q) || q == skip1 || q == skip2) continue;
            if (u[q] == 0) return q;
        }
        return -1;
    }
};

// The utility-2 agent of j1's triple comes first; ties (impossible in a
// triangle-free P-matching, where every triple is a 2-edge path) fall back
// to the lower id.
std::pair<AgentId, AgentId> split_center_first(const RepairRun& run, const Triple& t,
                                               AgentId endpoint) {
    auto [x, y] = t.others(endpoint);
    if (run.u[x] == 2) return {x, y};
    if (run.u[y] == 2) return {y, x};
    throw InternalError("matching triple has no utility-2 agent; not a P-matching "
                        "over a triangle-free instance");
}

} // namespace

std::pair<Matching, RepairTrace> trace_repair(const Instance& inst, const Matching& m,
                                              AgentId pivot, const std::vector<char>* excluded,
                                              bool verify_preconditions) {
    inst.require_mode(Mode::BinarySymmetric);
    inst.require_agent(pivot);
    if (verify_preconditions) {
        std::vector<AgentId> pivots = repairable_pivots(inst, m, excluded);
        if (std::find(pivots.begin(), pivots.end(), pivot) == pivots.end())
            throw InputError("(matching, pivot) is not repairable");
    }

    const int n = inst.agent_count();
    RepairRun run{inst, m, excluded, utilities(inst, m), {}, std::vector<int>(n, 0), {}, {}};
    run.trace.pivot = pivot;

    run.zero_nbr.assign(n, -1);
    for (AgentId a = 0; a < n; ++a) {
        if (!run.alive(a)) continue;
        run.zero_nbr[a] = run.zero_neighbor_excluding(a, pivot, -1);
    }

    // Initial blocking triple {pivot, j1, j2}: first unit neighbor of the
    // pivot with utility one and a zero-utility witness of its own.
    AgentId j1 = -1, j2 = -1;
    for (AgentId q : inst.neighbors(pivot)) {
        if (!run.alive(q) || run.u[q] != 1) continue;
        if (run.zero_nbr[q] == -1) continue;
        j1 = q;
        j2 = run.zero_nbr[q];
        break;
    }
    if (j1 == -1)
        throw InternalError("no blocking triple of the repairable shape around the pivot");
    const Triple* j1_triple = m.triple_of(j1);
    if (!j1_triple) throw InternalError("blocking partner is unmatched");
    auto [j3, j4] = split_center_first(run, *j1_triple, j1);
    run.trace.j1 = j1;
    run.trace.j2 = j2;
    run.trace.j3 = j3;
    run.trace.j4 = j4;

    run.append(j1);
    run.append(j3);
    run.append(j4);
    int c = 1;

    AgentId z1 = -1, z2 = -1, y1 = -1, y2 = -1, w1 = -1;
    int b = 0;
    const int max_iterations = (n - 2) / 3 + 1;
    for (int iteration = 0;; ++iteration) {
        if (iteration > max_iterations)
            throw InternalError("chain walk exceeded its iteration bound");
        const AgentId mid = run.at(3 * c - 1);
        const AgentId tail = run.at(3 * c);

        z1 = run.zero_nbr[mid];
        z2 = run.zero_neighbor_excluding(tail, pivot, j2);
        y1 = inst.val(tail, pivot) == 1 ? run.zero_nbr[pivot] : -1;
        y2 = inst.val(tail, j2) == 1 ? run.zero_nbr[j2] : -1;
        b = 0;
        w1 = -1;
        for (AgentId q : inst.neighbors(tail)) {
            if (!run.alive(q)) continue;
            const int p = run.pos[q];
            if (p > 0 && p % 3 == 0 && p / 3 < c && inst.val(q, j2) == 1)
                if (b == 0 || p / 3 < b) b = p / 3;
        }
        for (AgentId q : inst.neighbors(tail)) {
            if (!run.alive(q) || run.pos[q] != 0 || run.u[q] != 1) continue;
            if (run.zero_nbr[q] == -1) continue;
            w1 = q;
            break;
        }

        if (z1 != -1 || z2 != -1 || y1 != -1 || y2 != -1 || b > 0 || w1 == -1) break;

        const Triple* next = m.triple_of(w1);
        if (!next) throw InternalError("chain candidate is unmatched");
        auto [w2, w3] = split_center_first(run, *next, w1);
        run.append(w1);
        run.append(w2);
        run.append(w3);
        ++c;
    }

    run.trace.path = run.path;
    run.trace.z1 = z1;
    run.trace.z2 = z2;
    run.trace.y1 = y1;
    run.trace.y2 = y2;
    run.trace.b = 0;

    std::vector<Triple> triples;
    auto chain = [&](int from_block, int to_block, int offset) {
        for (int d = from_block; d <= to_block; ++d)
            triples.emplace_back(run.at(3 * d + offset), run.at(3 * d + offset + 1),
                                 run.at(3 * d + offset + 2));
    };

    if (z1 != -1 && z1 != j2) {
        run.trace.case_id = 1;
        triples.emplace_back(pivot, j1, j2);
        chain(1, c - 1, -1); // {S(3d-1), S(3d), S(3d+1)}
        triples.emplace_back(z1, run.at(3 * c - 1), run.at(3 * c));
    } else if (z2 != -1) {
        run.trace.case_id = 2;
        triples.emplace_back(pivot, j1, j2);
        chain(1, c - 1, -1);
        triples.emplace_back(run.at(3 * c - 1), run.at(3 * c), z2);
    } else if (z1 != -1) { // z1 == j2
        run.trace.case_id = 3;
        if (c < 2) throw InternalError("case 3 reached with a single-block chain");
        const AgentId z4 = run.zero_neighbor_excluding(run.at(3 * c - 2), pivot, j2);
        if (z4 == -1) throw InternalError("case 3 witness does not exist");
        run.trace.z4 = z4;
        triples.emplace_back(pivot, j1, j3);
        chain(1, c - 2, 0); // {S(3d), S(3d+1), S(3d+2)}
        triples.emplace_back(run.at(3 * c - 3), run.at(3 * c - 2), z4);
        triples.emplace_back(run.at(3 * c - 1), run.at(3 * c), j2);
    } else if (y1 != -1) {
        run.trace.case_id = 4;
        triples.emplace_back(j2, j1, j3);
        chain(1, c - 1, 0);
        triples.emplace_back(run.at(3 * c), pivot, y1);
    } else if (y2 != -1) {
        run.trace.case_id = 5;
        triples.emplace_back(pivot, j1, j3);
        chain(1, c - 1, 0);
        triples.emplace_back(run.at(3 * c), j2, y2);
    } else if (b > 0) {
        run.trace.case_id = 6;
        run.trace.b = b;
        const AgentId z5 = run.zero_neighbor_excluding(run.at(3 * b + 1), pivot, j2);
        if (z5 == -1) throw InternalError("case 6 witness does not exist");
        run.trace.z5 = z5;
        triples.emplace_back(pivot, j1, j3);
        chain(1, b - 1, 0);
        triples.emplace_back(z5, run.at(3 * b + 1), run.at(3 * b + 2));
        chain(b + 1, c - 1, 0);
        triples.emplace_back(run.at(3 * c), run.at(3 * b), j2);
    } else {
        run.trace.case_id = 7;
        if (w1 != -1) throw InternalError("case 7 reached with a chain candidate available");
        triples.emplace_back(pivot, j1, j3);
        chain(1, c - 1, 0);
    }

    for (const Triple& t : m.triples())
        if (run.pos[t.members[0]] == 0) triples.push_back(t);

    return {Matching(std::move(triples)), std::move(run.trace)};
}

Matching repair(const Instance& inst, const Matching& m, AgentId pivot,
                const std::vector<char>* excluded, bool verify_preconditions) {
    return trace_repair(inst, m, pivot, excluded, verify_preconditions).first;
}

} // namespace sr3
