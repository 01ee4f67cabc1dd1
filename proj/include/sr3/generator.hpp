#ifndef SR3_GENERATOR_HPP
#define SR3_GENERATOR_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sr3/core.hpp"
#include "sr3/hardness.hpp"

namespace sr3 {

enum class Family {
    Random,     ///< edge/arc probability p, seeded
    PlantedPit, ///< PIT graph with a planted partition, loaded as instance
    RepairCase, ///< minimal fixture driving repair into a chosen case 1..7
    LongChain,  ///< scalable repair input whose chain walk spans the instance
};

const char* to_string(Family family);
std::optional<Family> family_from_string(std::string_view text);

/// Seeded, reproducible instance generation. Identical configs produce
/// identical instances: randomness comes from a mt19937_64 engine (a fixed,
/// portable algorithm) and hand-rolled draws, never platform distributions.
struct GeneratorConfig {
    Family family = Family::Random;
    int n = 0;
    double p = 0.0;
    Mode mode = Mode::BinarySymmetric;
    std::uint64_t seed = 0;
    int repair_case = 0;    ///< 1..7, RepairCase family only
    int q = 0;              ///< PlantedPit family: 3q vertices
    bool unique_solution = false; ///< PlantedPit: reject noise edges that add triangles
    bool validate = true;   ///< RepairCase/LongChain: re-verify the fixture after building
};

struct Generated {
    Instance inst;
    std::optional<Matching> matching; ///< repair families: the input matching
    std::optional<AgentId> pivot;     ///< repair families: the repair pivot
    std::optional<int> expected_case; ///< repair families: case the trace must report
};

Generated generate(const GeneratorConfig& config);

/// PIT graph on 3q vertices containing the returned planted partition, plus
/// noise edges drawn with probability `noise_p`. With `unique_solution`,
/// noise edges that would create a new triangle are rejected.
std::pair<PITInstance, std::vector<Triple>> generate_planted_pit(int q, double noise_p,
                                                                 std::uint64_t seed,
                                                                 bool unique_solution = false);

/// Portable [0,1) draw from a mt19937_64 engine (53-bit mantissa).
double uniform01(std::uint64_t raw);

} // namespace sr3

#endif
