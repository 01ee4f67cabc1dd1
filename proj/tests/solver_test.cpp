#include "doctest.h"

#include <random>

#include "sr3/oracle.hpp"
#include "sr3/repair.hpp"
#include "sr3/solver.hpp"
#include "test_util.hpp"

using namespace sr3;
using namespace sr3::test;

TEST_CASE("triangle-free solver on small paths") {
    SolveOptions debug;
    debug.debug_checks = true;
    CHECK(find_stable_triangle_free(path3(), nullptr, debug) == Matching({Triple(0, 1, 2)}));
    CHECK(find_stable_triangle_free(edgeless(3), nullptr, debug) == Matching());
    CHECK(find_stable_triangle_free(path(6), nullptr, debug) ==
          Matching({Triple(0, 1, 2), Triple(3, 4, 5)}));
    CHECK(find_stable_triangle_free(edgeless(0), nullptr, debug) == Matching());
    CHECK(find_stable_triangle_free(edgeless(2), nullptr, debug) == Matching());
    CHECK_THROWS_AS(find_stable_triangle_free(triangle3(), nullptr, debug), InputError);
}

TEST_CASE("find_stable handles triangles and completion") {
    CHECK(find_stable(triangle3()) == Matching({Triple(0, 1, 2)}));
    CHECK(find_stable(fig9()) == Matching({Triple(2, 4, 5)}));
    CHECK(find_stable(path(6)) == Matching({Triple(0, 1, 2), Triple(3, 4, 5)}));
    CHECK_THROWS_AS(find_stable(directed_cycle3()), InputError);

    Matching completed = find_stable(fig9(), true);
    CHECK(completed.size() == 3);
    CHECK(is_stable(fig9(), completed));
    // completion may break the P-property but never stability
    Matching completed7 = find_stable(path(7), true);
    CHECK(completed7.size() == 2);
    CHECK(is_stable(path(7), completed7));
}

TEST_CASE("exhaustive five-agent sweep with per-step verification") {
    SolveOptions debug;
    debug.debug_checks = true;
    for (std::uint64_t bits = 0; bits < (1u << 10); ++bits) {
        Instance inst = instance_from_bits(5, bits);
        Matching m = find_stable(inst, false, debug);
        CHECK(is_stable(inst, m));
        CHECK(is_p_matching(inst, m));
    }
}

TEST_CASE("random instances solve to stable P-matchings") {
    std::mt19937_64 rng(53);
    for (int round = 0; round < 300; ++round) {
        const int n = 10 + static_cast<int>(rng() % 31);
        const double p = 0.05 + 0.9 * uniform01(rng());
        Instance inst = random_symmetric(n, p, rng());
        Matching m = find_stable(inst);
        CHECK(is_stable(inst, m));
        CHECK(is_p_matching(inst, m));
    }
}

TEST_CASE("solver output is certified by the oracle at small sizes") {
    std::mt19937_64 rng(59);
    for (int round = 0; round < 50; ++round) {
        Instance inst = random_symmetric(9, 0.4, rng());
        Matching m = find_stable(inst);
        CHECK(exists_stable(inst));
        CHECK(independent_is_stable(inst, m));
        Matching completed = complete_matching(inst, m);
        CHECK(independent_is_stable(inst, completed));
    }
}

TEST_CASE("repair interceptions re-verify as repairable inputs") {
    std::mt19937_64 rng(61);
    int harvested = 0;
    for (int round = 0; round < 200 && harvested < 25; ++round) {
        const int n = 12 + static_cast<int>(rng() % 12);
        Instance inst = random_symmetric(n, 2.0 / n, rng());
        SolveOptions options;
        options.debug_checks = true;
        options.on_repair = [&](const RepairEvent& event) {
            ++harvested;
            std::vector<AgentId> pivots =
                repairable_pivots(event.inst, event.before, &event.excluded);
            CHECK(std::find(pivots.begin(), pivots.end(), event.pivot) != pivots.end());
        };
        Matching m = find_stable(inst, false, options);
        CHECK(is_stable(inst, m));
    }
    CHECK(harvested >= 25);
}
