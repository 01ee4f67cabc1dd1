#include "doctest.h"

#include <random>

#include "sr3/core.hpp"
#include "test_util.hpp"

using namespace sr3;
using namespace sr3::test;

TEST_CASE("utility sums valuations over the coalition") {
    CHECK(utility(triangle3(), 0, {1, 2}) == 2);
    CHECK(utility(path3(), 0, {1, 2}) == 1);
    CHECK(utility(edgeless(3), 0, {1, 2}) == 0);
    // own membership in the coalition is ignored
    CHECK(utility(triangle3(), 0, {0, 1, 2}) == 2);
    CHECK_THROWS_AS(utility(triangle3(), 7, {1, 2}), InputError);
    CHECK_THROWS_AS(utility(triangle3(), 0, {1, 9}), InputError);
}

TEST_CASE("utility_in_matching reads the assigned triple") {
    CHECK(utility_in_matching(triangle3(), Matching(), 0) == 0);
    Matching m({Triple(0, 1, 2)});
    CHECK(utility_in_matching(path3(), m, 1) == 2);
    CHECK(utility_in_matching(path3(), m, 0) == 1);
}

TEST_CASE("triple and matching validation") {
    CHECK_THROWS_AS(Triple(1, 1, 2), InputError);
    CHECK_THROWS_AS(Matching({Triple(0, 1, 2), Triple(2, 3, 4)}), InputError);
    Matching m({Triple(3, 4, 5), Triple(0, 1, 2)});
    CHECK(m.triples()[0] == Triple(0, 1, 2)); // canonical order
    CHECK(m.is_matched(4));
    CHECK_FALSE(m.is_matched(6));
}

TEST_CASE("find_blocking_triple returns the least blocker") {
    CHECK(find_blocking_triple(triangle3(), Matching()) == Triple(0, 1, 2));
    CHECK_FALSE(find_blocking_triple(path3(), Matching({Triple(0, 1, 2)})).has_value());
    // the lone triangle of fig9 satisfies everyone it touches
    CHECK_FALSE(find_blocking_triple(fig9(), Matching({Triple(2, 4, 5)})).has_value());
    CHECK(independent_is_stable(fig9(), Matching({Triple(2, 4, 5)})));
}

TEST_CASE("is_stable matches the blocking scan") {
    CHECK(is_stable(triangle3(), Matching({Triple(0, 1, 2)})));
    CHECK_FALSE(is_stable(triangle3(), Matching()));
    CHECK(is_stable(edgeless(3), Matching()));
}

TEST_CASE("is_p_matching requires positive utility for matched agents") {
    CHECK_FALSE(is_p_matching(edgeless(3), Matching({Triple(0, 1, 2)})));
    CHECK(is_p_matching(triangle3(), Matching()));
    CHECK(is_p_matching(path3(), Matching({Triple(0, 1, 2)})));
}

TEST_CASE("complete_matching groups leftovers in id order") {
    Instance e6 = edgeless(6);
    Matching m = complete_matching(e6, Matching({Triple(0, 1, 2)}));
    CHECK(m.triples() == std::vector<Triple>{Triple(0, 1, 2), Triple(3, 4, 5)});

    Matching m7 = complete_matching(edgeless(7), Matching());
    CHECK(m7.size() == 2);
    CHECK_FALSE(m7.is_matched(6));

    Matching completed = complete_matching(e6, Matching());
    CHECK(is_stable(e6, completed));
    CHECK(complete_matching(e6, completed) == completed); // idempotent
}

TEST_CASE("complete_matching keeps prior triples and stability on random inputs") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        Instance inst = random_symmetric(9, 0.4, rng());
        Matching m = random_matching(9, rng);
        Matching full = complete_matching(inst, m);
        CHECK(full.size() == 3);
        for (const Triple& t : m.triples())
            CHECK(std::find(full.triples().begin(), full.triples().end(), t) !=
                  full.triples().end());
        for (AgentId a = 0; a < 9; ++a)
            if (m.is_matched(a))
                CHECK(utility_in_matching(inst, full, a) == utility_in_matching(inst, m, a));
    }
}

TEST_CASE("welfare totals and histogram") {
    WelfareReport opt = welfare(fig9(), Matching({Triple(0, 1, 2), Triple(3, 4, 7), Triple(5, 6, 8)}));
    CHECK(opt.total == 12);
    CHECK(opt.histogram == std::map<int, int>{{4, 3}});

    WelfareReport t3 = welfare(triangle3(), Matching({Triple(0, 1, 2)}));
    CHECK(t3.total == 6);
    CHECK(t3.histogram == std::map<int, int>{{6, 1}});

    WelfareReport triangle_only = welfare(fig9(), Matching({Triple(2, 4, 5)}));
    CHECK(triangle_only.total == 6);

    long long per_agent_sum = 0;
    for (int u : opt.per_agent) per_agent_sum += u;
    CHECK(per_agent_sum == opt.total);
}

TEST_CASE("binary utilities stay in {0,1,2} and symmetric welfare is even") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 300; ++round) {
        Instance inst = random_symmetric(8, 0.5, rng());
        Matching m = random_matching(8, rng);
        WelfareReport report = welfare(inst, m);
        for (int u : report.per_agent) {
            CHECK(u >= 0);
            CHECK(u <= 2);
        }
        for (auto [w, count] : report.histogram) {
            CHECK((w == 0 || w == 2 || w == 4 || w == 6));
            CHECK(count > 0);
        }
        CHECK(report.total % 2 == 0);
    }
}

TEST_CASE("a triple blocking M' but not M contains an agent worse off in M'") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 2000; ++round) {
        const int n = 5 + static_cast<int>(rng() % 4);
        Instance inst = random_symmetric(n, 0.5, rng());
        Matching m = random_matching(n, rng);
        Matching m_prime = random_matching(n, rng);
        for (AgentId x = 0; x < n; ++x)
            for (AgentId y = x + 1; y < n; ++y)
                for (AgentId z = y + 1; z < n; ++z) {
                    if (!blocks(inst, m_prime, x, y, z) || blocks(inst, m, x, y, z)) continue;
                    bool someone_worse = false;
                    for (AgentId a : {x, y, z})
                        someone_worse |= utility_in_matching(inst, m_prime, a) <
                                         utility_in_matching(inst, m, a);
                    CHECK(someone_worse);
                }
    }
}

TEST_CASE("excluded agents never join a blocking triple") {
    Instance inst = triangle3();
    std::vector<char> excluded{1, 0, 0}; // agent 0 removed from the view
    CHECK_FALSE(find_blocking_triple(inst, Matching(), &excluded).has_value());
}

TEST_CASE("stability agrees with the independent scan on random inputs") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 500; ++round) {
        Instance inst = random_symmetric(7, 0.5, rng());
        Matching m = random_matching(7, rng);
        CHECK(is_stable(inst, m) == independent_is_stable(inst, m));
    }
}
