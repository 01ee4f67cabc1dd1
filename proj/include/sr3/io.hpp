#ifndef SR3_IO_HPP
#define SR3_IO_HPP

#include <string>
#include <string_view>

#include "sr3/core.hpp"
#include "sr3/hardness.hpp"

namespace sr3 {

// Text formats. All ids are 0-based. '#' starts a comment line; blank lines
// are ignored. Serialization is canonical: fixed directive order, body lines
// sorted ascending, no comments -- so parse(serialize(x)) == x byte-for-byte.
//
// Instance ("3dsras v1"):
//     3dsras v1
//     n <agents>
//     mode <binary-symmetric|binary|general>
//     e <i> <j>        (symmetric mode: one line per unit edge)
//     a <i> <j> <v>    (binary/general modes: one line per nonzero arc)
//
// Matching ("3dsras-matching v1"): lines "t <i> <j> <k>" with i < j < k.
//
// PIT graph ("pit v1"): "n <3q>" then "e <u> <v>" lines.

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

Matching parse_matching(std::string_view text, int agent_count);
std::string serialize_matching(const Matching& m);

PITInstance parse_pit(std::string_view text);
std::string serialize_pit(const PITInstance& g);

/// Triples of vertex ids in matching-file syntax; used for PIT partitions.
std::vector<Triple> parse_triple_list(std::string_view text, int vertex_count);
std::string serialize_triple_list(const std::vector<Triple>& triples);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace sr3

#endif
