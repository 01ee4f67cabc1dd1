#include "sr3/triangle.hpp"

namespace sr3 {

std::optional<Triple> find_triangle(const Instance& inst, const std::vector<char>* excluded) {
    inst.require_mode(Mode::BinarySymmetric);
    const int n = inst.agent_count();
    auto alive = [&](AgentId a) { return !excluded || !(*excluded)[a]; };
    for (AgentId x = 0; x < n; ++x) {
        if (!alive(x)) continue;
        for (AgentId y = x + 1; y < n; ++y) {
            if (!alive(y) || inst.val(x, y) != 1) continue;
            for (AgentId z = y + 1; z < n; ++z)
                if (alive(z) && inst.val(y, z) == 1 && inst.val(z, x) == 1)
                    return Triple(x, y, z);
        }
    }
    return std::nullopt;
}

TrianglePacking eliminate_triangles(const Instance& inst) {
    inst.require_mode(Mode::BinarySymmetric);
    const int n = inst.agent_count();
    TrianglePacking packing;
    packing.removed.assign(n, 0);
    // One lexicographic pass is equivalent to repeatedly removing the least
    // remaining triangle: a triple passed over with all members alive was
    // removed on the spot, so no earlier triangle can survive.
    for (AgentId x = 0; x < n; ++x) {
        if (packing.removed[x]) continue;
        for (AgentId y = x + 1; y < n; ++y) {
            if (packing.removed[y] || inst.val(x, y) != 1) continue;
            for (AgentId z = y + 1; z < n; ++z) {
                if (packing.removed[z] || inst.val(y, z) != 1 || inst.val(z, x) != 1) continue;
                packing.triples.emplace_back(x, y, z);
                packing.removed[x] = packing.removed[y] = packing.removed[z] = 1;
                break;
            }
            if (packing.removed[x]) break;
        }
    }
    return packing;
}

} // namespace sr3
