#include "sr3/generator.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "sr3/repair.hpp"

namespace sr3 {

const char* to_string(Family family) {
    switch (family) {
    case Family::Random: return "random";
    case Family::PlantedPit: return "planted-pit";
    case Family::RepairCase: return "repair-case";
    case Family::LongChain: return "long-chain";
    }
    return "?";
}

std::optional<Family> family_from_string(std::string_view text) {
    if (text == "random") return Family::Random;
    if (text == "planted-pit") return Family::PlantedPit;
    if (text == "repair-case") return Family::RepairCase;
    if (text == "long-chain") return Family::LongChain;
    return std::nullopt;
}

double uniform01(std::uint64_t raw) {
    return static_cast<double>(raw >> 11) * (1.0 / 9007199254740992.0); // 2^53
}

namespace {

using Edges = std::vector<std::pair<AgentId, AgentId>>;

Instance random_instance(const GeneratorConfig& config) {
    if (config.n < 0) throw InputError("n must be non-negative");
    if (config.p < 0.0 || config.p > 1.0) throw InputError("p must lie in [0,1]");
    std::mt19937_64 rng(config.seed);
    if (config.mode == Mode::BinarySymmetric) {
        Edges edges;
        for (AgentId i = 0; i < config.n; ++i)
            for (AgentId j = i + 1; j < config.n; ++j)
                if (uniform01(rng()) < config.p) edges.emplace_back(i, j);
        return Instance::from_edges(config.n, edges);
    }
    std::vector<Arc> arcs;
    for (AgentId i = 0; i < config.n; ++i)
        for (AgentId j = 0; j < config.n; ++j) {
            if (i == j) continue;
            if (uniform01(rng()) >= config.p) continue;
            int value = 1;
            if (config.mode == Mode::General) {
                static constexpr int kValues[] = {-2, -1, 1, 2};
                value = kValues[rng() % 4];
            }
            arcs.push_back({i, j, value});
        }
    return Instance::from_arcs(config.n, config.mode, arcs);
}

struct Fixture {
    int min_n;
    Edges edges;
    std::vector<Triple> matching;
    AgentId pivot;
};

// Minimal inputs that drive the repair walk into each of its seven closing
// constructions. Agents beyond min_n are padded in as isolated agents: they
// join no blocking triple and no candidate scan, so the trace is unchanged.
Fixture repair_fixture(int case_id) {
    switch (case_id) {
    case 1:
        return {6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}}, {Triple(1, 3, 4)}, 0};
    case 2:
        return {6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}}, {Triple(1, 3, 4)}, 0};
    case 3:
        return {9,
                {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}, {2, 6}},
                {Triple(1, 3, 4), Triple(5, 6, 7)},
                0};
    case 4:
        return {6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {0, 4}, {0, 5}}, {Triple(1, 3, 4)}, 0};
    case 5:
        return {6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {2, 4}, {2, 5}}, {Triple(1, 3, 4)}, 0};
    case 6:
        return {9,
                {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}, {4, 7}, {5, 8}},
                {Triple(1, 3, 4), Triple(5, 6, 7)},
                0};
    case 7:
        return {5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}, {Triple(1, 3, 4)}, 0};
    default:
        throw InputError("repair case must be in 1..7");
    }
}

// Chain of C matched triples linked tail-to-head, a pivot adjacent to the
// first head, one shared zero-utility agent adjacent to the first head, and
// a pendant zero-utility witness on every later head. The walk traverses
// every block and closes with case 7.
Fixture long_chain_fixture(int blocks) {
    Fixture f;
    f.min_n = 4 * blocks + 1;
    f.pivot = 0;
    auto head = [](int d) { return 3 * d - 2; };
    auto center = [](int d) { return 3 * d - 1; };
    auto tail = [](int d) { return 3 * d; };
    const AgentId shared_zero = 3 * blocks + 1;
    f.edges.emplace_back(0, head(1));
    f.edges.emplace_back(head(1), shared_zero);
    for (int d = 1; d <= blocks; ++d) {
        f.edges.emplace_back(head(d), center(d));
        f.edges.emplace_back(center(d), tail(d));
        f.matching.emplace_back(head(d), center(d), tail(d));
        if (d < blocks) f.edges.emplace_back(tail(d), head(d + 1));
        if (d >= 2) f.edges.emplace_back(head(d), 3 * blocks + d); // pendant witness
    }
    return f;
}

Generated build_fixture(const GeneratorConfig& config, Fixture fixture, int expected_case) {
    if (config.n != 0 && config.n < fixture.min_n)
        throw InputError(std::string("family ") + to_string(config.family) + " needs n >= " +
                         std::to_string(fixture.min_n));
    const int n = std::max(config.n, fixture.min_n);
    Generated out{Instance::from_edges(n, fixture.edges), Matching(fixture.matching),
                  fixture.pivot, expected_case};
    if (config.validate && n <= 200) {
        std::vector<AgentId> pivots = repairable_pivots(out.inst, *out.matching);
        if (std::find(pivots.begin(), pivots.end(), fixture.pivot) == pivots.end())
            throw InternalError("generated fixture is not repairable with its pivot");
        auto [repaired, trace] = trace_repair(out.inst, *out.matching, fixture.pivot);
        if (trace.case_id != expected_case)
            throw InternalError("generated fixture hit case " + std::to_string(trace.case_id) +
                                ", expected " + std::to_string(expected_case));
        if (!is_stable(out.inst, repaired) || !is_p_matching(out.inst, repaired))
            throw InternalError("generated fixture did not repair to a stable P-matching");
    }
    return out;
}

} // namespace

std::pair<PITInstance, std::vector<Triple>> generate_planted_pit(int q, double noise_p,
                                                                 std::uint64_t seed,
                                                                 bool unique_solution) {
    if (q <= 0) throw InputError("q must be positive");
    if (noise_p < 0.0 || noise_p > 1.0) throw InputError("noise probability must lie in [0,1]");
    std::mt19937_64 rng(seed);
    const int n = 3 * q;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng() % (i + 1)]);

    PITInstance g;
    g.vertex_count = n;
    std::vector<Triple> planted;
    std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
    auto add_edge = [&](int u, int v) {
        g.edges.emplace_back(std::min(u, v), std::max(u, v));
        adjacent[u][v] = adjacent[v][u] = 1;
    };
    for (int t = 0; t < q; ++t) {
        int a = perm[3 * t], b = perm[3 * t + 1], c = perm[3 * t + 2];
        planted.emplace_back(a, b, c);
        add_edge(a, b);
        add_edge(a, c);
        add_edge(b, c);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (adjacent[u][v]) continue;
            if (uniform01(rng()) >= noise_p) continue;
            if (unique_solution) {
                bool creates_triangle = false;
                for (int w = 0; w < n && !creates_triangle; ++w)
                    creates_triangle = adjacent[u][w] && adjacent[v][w];
                if (creates_triangle) continue;
            }
            add_edge(u, v);
        }
    std::sort(g.edges.begin(), g.edges.end());
    std::sort(planted.begin(), planted.end());
    return {std::move(g), std::move(planted)};
}

Generated generate(const GeneratorConfig& config) {
    switch (config.family) {
    case Family::Random:
        return {random_instance(config), std::nullopt, std::nullopt, std::nullopt};
    case Family::PlantedPit: {
        if (config.q <= 0) throw InputError("planted-pit requires q >= 1");
        auto [g, planted] = generate_planted_pit(config.q, config.p, config.seed,
                                                 config.unique_solution);
        Edges edges(g.edges.begin(), g.edges.end());
        return {Instance::from_edges(g.vertex_count, edges), std::nullopt, std::nullopt,
                std::nullopt};
    }
    case Family::RepairCase:
        return build_fixture(config, repair_fixture(config.repair_case), config.repair_case);
    case Family::LongChain: {
        if (config.n != 0 && config.n < 9)
            throw InputError("family long-chain needs n >= 9");
        const int blocks = std::max(2, (std::max(config.n, 9) - 1) / 4);
        return build_fixture(config, long_chain_fixture(blocks), 7);
    }
    }
    throw InputError("unknown generator family");
}

} // namespace sr3
