#include "doctest.h"

#include <random>

#include "sr3/generator.hpp"
#include "sr3/io.hpp"
#include "test_util.hpp"

using namespace sr3;
using namespace sr3::test;

TEST_CASE("instance files parse and serialize canonically") {
    const char* text = "3dsras v1\nn 3\nmode binary-symmetric\ne 0 1\ne 1 2\n";
    Instance inst = parse_instance(text);
    CHECK(inst == path3());
    CHECK(serialize_instance(inst) == text);

    // comments and odd ordering collapse to the canonical form
    Instance commented = parse_instance("3dsras v1\n# a path\nn 3\nmode binary-symmetric\ne 1 2\ne 0 1\n");
    CHECK(serialize_instance(commented) == text);

    Instance general = Instance::from_arcs(3, Mode::General, {{0, 1, -2}, {2, 0, 3}});
    CHECK(parse_instance(serialize_instance(general)) == general);
    Instance binary = directed_cycle3();
    CHECK(parse_instance(serialize_instance(binary)) == binary);
}

TEST_CASE("instance parse errors carry line numbers") {
    auto line_of = [](const char* text) {
        try {
            parse_instance(text);
            return -1;
        } catch (const ParseError& e) {
            return e.line();
        }
    };
    CHECK(line_of("nope v1\nn 0\nmode binary\n") == 1);
    CHECK(line_of("3dsras v1\nn 3\nmode wat\n") == 3);
    CHECK(line_of("3dsras v1\nn 3\nmode binary-symmetric\ne 0 3\n") == 4);
    CHECK(line_of("3dsras v1\nn 3\nmode binary-symmetric\ne 0 1\ne 1 0\n") == 5);
    CHECK(line_of("3dsras v1\nn 3\nmode binary-symmetric\na 0 1 1\n") == 4);
    CHECK(line_of("3dsras v1\nn 3\nmode binary\ne 0 1\n") == 4);
    CHECK(line_of("3dsras v1\nn 3\nmode binary\na 0 1 2\n") == 4);
    CHECK(line_of("3dsras v1\nn 3\nmode general\na 0 1 0\n") == 4);
    CHECK(line_of("3dsras v1\nn 3\nmode binary\na 0 0 1\n") == 4);
}

TEST_CASE("matching files roundtrip and validate") {
    Matching m({Triple(0, 1, 2), Triple(3, 4, 5)});
    CHECK(parse_matching(serialize_matching(m), 6) == m);
    CHECK(serialize_matching(Matching()) == "3dsras-matching v1\n");
    CHECK_THROWS_AS(parse_matching("3dsras-matching v1\nt 2 1 0\n", 3), ParseError);
    CHECK_THROWS_AS(parse_matching("3dsras-matching v1\nt 0 1 5\n", 3), ParseError);
    CHECK_THROWS_AS(parse_matching("3dsras-matching v1\nt 0 1 2\nt 2 3 4\n", 6), ParseError);
}

TEST_CASE("pit files roundtrip") {
    PITInstance g{6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}};
    CHECK(serialize_pit(g) == "pit v1\nn 6\ne 0 1\ne 0 2\ne 1 2\ne 3 4\ne 3 5\ne 4 5\n");
    PITInstance parsed = parse_pit(serialize_pit(g));
    CHECK(parsed.vertex_count == 6);
    CHECK(parsed.edges == g.edges);
    CHECK_THROWS_AS(parse_pit("pit v1\nn 4\n"), ParseError);
    CHECK_THROWS_AS(parse_pit("pit v1\nn 3\ne 0 0\n"), ParseError);
}

TEST_CASE("matching file roundtrip on random matchings") {
    std::mt19937_64 rng(83);
    for (int round = 0; round < 100; ++round) {
        Matching m = random_matching(12, rng);
        CHECK(parse_matching(serialize_matching(m), 12) == m);
    }
}

TEST_CASE("random generation is reproducible") {
    GeneratorConfig config;
    config.family = Family::Random;
    config.n = 20;
    config.p = 0.35;
    config.seed = 123456789;
    std::string first = serialize_instance(generate(config).inst);
    std::string second = serialize_instance(generate(config).inst);
    CHECK(first == second);
    config.seed += 1;
    CHECK(serialize_instance(generate(config).inst) != first);

    config.mode = Mode::Binary;
    CHECK(generate(config).inst.mode() == Mode::Binary);
    config.mode = Mode::General;
    Instance general = generate(config).inst;
    CHECK(parse_instance(serialize_instance(general)) == general);
}

TEST_CASE("repair-case generation validates and pads") {
    GeneratorConfig config;
    config.family = Family::RepairCase;
    config.repair_case = 1;
    Generated minimal = generate(config);
    CHECK(minimal.inst.agent_count() == 6);
    CHECK(minimal.expected_case == 1);
    CHECK(minimal.inst ==
          Instance::from_edges(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}}));

    config.n = 11; // padded with isolated agents
    Generated padded = generate(config);
    CHECK(padded.inst.agent_count() == 11);

    config.n = 4;
    CHECK_THROWS_AS(generate(config), InputError);
    config.n = 0;
    config.repair_case = 9;
    CHECK_THROWS_AS(generate(config), InputError);
}

TEST_CASE("long-chain generation scales with n") {
    GeneratorConfig config;
    config.family = Family::LongChain;
    config.n = 41;
    Generated gen = generate(config);
    CHECK(gen.inst.agent_count() == 41);
    CHECK(gen.expected_case == 7);
    CHECK(gen.matching->size() == 10);
    config.n = 5;
    CHECK_THROWS_AS(generate(config), InputError);
}

TEST_CASE("planted-pit generation loads the graph as an instance") {
    GeneratorConfig config;
    config.family = Family::PlantedPit;
    config.q = 2;
    config.p = 0.2;
    config.seed = 7;
    Generated gen = generate(config);
    CHECK(gen.inst.agent_count() == 6);
    CHECK(gen.inst.mode() == Mode::BinarySymmetric);
    auto [g, planted] = generate_planted_pit(2, 0.2, 7);
    CHECK(gen.inst.edges() == g.edges);
}
