#include "sr3/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sr3 {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

// Splits into non-comment, non-blank lines of whitespace tokens.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view raw = text.substr(start, end - start);
        start = end + 1;
        std::istringstream stream{std::string(raw)};
        std::vector<std::string> tokens;
        std::string tok;
        while (stream >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        lines.push_back({number, std::move(tokens)});
        if (end == text.size()) break;
    }
    return lines;
}

int parse_int(const Line& line, const std::string& token, const char* what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line.number, std::string("expected ") + what + ", got '" + token + "'");
    }
}

void expect_header(const std::vector<Line>& lines, const char* name, const char* version) {
    if (lines.empty() || lines[0].tokens.size() != 2 || lines[0].tokens[0] != name ||
        lines[0].tokens[1] != version)
        throw ParseError(lines.empty() ? 1 : lines[0].number,
                         std::string("expected header '") + name + " " + version + "'");
}

int parse_count_line(const std::vector<Line>& lines, std::size_t idx) {
    if (idx >= lines.size() || lines[idx].tokens.size() != 2 || lines[idx].tokens[0] != "n")
        throw ParseError(idx < lines.size() ? lines[idx].number : 1, "expected 'n <count>'");
    int n = parse_int(lines[idx], lines[idx].tokens[1], "agent count");
    if (n < 0) throw ParseError(lines[idx].number, "count must be non-negative");
    return n;
}

} // namespace

Instance parse_instance(std::string_view text) {
    const std::vector<Line> lines = tokenize(text);
    expect_header(lines, "3dsras", "v1");
    const int n = parse_count_line(lines, 1);
    if (lines.size() < 3 || lines[2].tokens.size() != 2 || lines[2].tokens[0] != "mode")
        throw ParseError(lines.size() >= 3 ? lines[2].number : 1, "expected 'mode <mode>'");
    auto mode = mode_from_string(lines[2].tokens[1]);
    if (!mode) throw ParseError(lines[2].number, "unknown mode '" + lines[2].tokens[1] + "'");

    std::vector<int> table(static_cast<std::size_t>(n) * n, 0);
    auto check_ids = [&](const Line& line, int i, int j) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw ParseError(line.number, "agent id out of range");
        if (i == j) throw ParseError(line.number, "self valuation is not allowed");
    };
    for (std::size_t idx = 3; idx < lines.size(); ++idx) {
        const Line& line = lines[idx];
        if (line.tokens[0] == "e") {
            if (*mode != Mode::BinarySymmetric)
                throw ParseError(line.number, "'e' lines require binary-symmetric mode");
            if (line.tokens.size() != 3) throw ParseError(line.number, "expected 'e <i> <j>'");
            int i = parse_int(line, line.tokens[1], "agent id");
            int j = parse_int(line, line.tokens[2], "agent id");
            check_ids(line, i, j);
            if (table[static_cast<std::size_t>(i) * n + j] != 0)
                throw ParseError(line.number, "duplicate edge");
            table[static_cast<std::size_t>(i) * n + j] = 1;
            table[static_cast<std::size_t>(j) * n + i] = 1;
        } else if (line.tokens[0] == "a") {
            if (*mode == Mode::BinarySymmetric)
                throw ParseError(line.number, "'a' lines are not allowed in symmetric mode");
            if (line.tokens.size() != 4)
                throw ParseError(line.number, "expected 'a <i> <j> <v>'");
            int i = parse_int(line, line.tokens[1], "agent id");
            int j = parse_int(line, line.tokens[2], "agent id");
            int v = parse_int(line, line.tokens[3], "valuation");
            check_ids(line, i, j);
            if (v == 0) throw ParseError(line.number, "zero arcs must be omitted");
            if (*mode == Mode::Binary && v != 1)
                throw ParseError(line.number, "binary mode requires unit arcs");
            if (table[static_cast<std::size_t>(i) * n + j] != 0)
                throw ParseError(line.number, "duplicate arc");
            table[static_cast<std::size_t>(i) * n + j] = v;
        } else {
            throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
        }
    }
    try {
        return Instance(n, *mode, std::move(table));
    } catch (const InputError& e) {
        throw ParseError(lines[2].number, e.what());
    }
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << "3dsras v1\n";
    out << "n " << inst.agent_count() << "\n";
    out << "mode " << to_string(inst.mode()) << "\n";
    if (inst.mode() == Mode::BinarySymmetric) {
        for (auto [i, j] : inst.edges()) out << "e " << i << " " << j << "\n";
    } else {
        for (const Arc& a : inst.arcs()) out << "a " << a.from << " " << a.to << " " << a.value << "\n";
    }
    return out.str();
}

namespace {

std::vector<Triple> parse_triples(std::string_view text, int bound, const char* what) {
    const std::vector<Line> lines = tokenize(text);
    expect_header(lines, "3dsras-matching", "v1");
    std::vector<Triple> triples;
    for (std::size_t idx = 1; idx < lines.size(); ++idx) {
        const Line& line = lines[idx];
        if (line.tokens[0] != "t" || line.tokens.size() != 4)
            throw ParseError(line.number, "expected 't <i> <j> <k>'");
        int i = parse_int(line, line.tokens[1], what);
        int j = parse_int(line, line.tokens[2], what);
        int k = parse_int(line, line.tokens[3], what);
        if (!(i < j && j < k)) throw ParseError(line.number, "triple must be ascending");
        if (i < 0 || k >= bound) throw ParseError(line.number, std::string(what) + " out of range");
        triples.emplace_back(i, j, k);
    }
    return triples;
}

} // namespace

Matching parse_matching(std::string_view text, int agent_count) {
    std::vector<Triple> triples = parse_triples(text, agent_count, "agent id");
    try {
        return Matching(std::move(triples));
    } catch (const InputError& e) {
        throw ParseError(1, e.what());
    }
}

std::string serialize_matching(const Matching& m) {
    std::ostringstream out;
    out << "3dsras-matching v1\n";
    for (const Triple& t : m.triples())
        out << "t " << t.members[0] << " " << t.members[1] << " " << t.members[2] << "\n";
    return out.str();
}

std::vector<Triple> parse_triple_list(std::string_view text, int vertex_count) {
    return parse_triples(text, vertex_count, "vertex id");
}

std::string serialize_triple_list(const std::vector<Triple>& triples) {
    std::vector<Triple> sorted = triples;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream out;
    out << "3dsras-matching v1\n";
    for (const Triple& t : sorted)
        out << "t " << t.members[0] << " " << t.members[1] << " " << t.members[2] << "\n";
    return out.str();
}

PITInstance parse_pit(std::string_view text) {
    const std::vector<Line> lines = tokenize(text);
    expect_header(lines, "pit", "v1");
    PITInstance g;
    g.vertex_count = parse_count_line(lines, 1);
    for (std::size_t idx = 2; idx < lines.size(); ++idx) {
        const Line& line = lines[idx];
        if (line.tokens[0] != "e" || line.tokens.size() != 3)
            throw ParseError(line.number, "expected 'e <u> <v>'");
        int u = parse_int(line, line.tokens[1], "vertex id");
        int v = parse_int(line, line.tokens[2], "vertex id");
        g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    try {
        g.validate();
    } catch (const InputError& e) {
        throw ParseError(lines[0].number, e.what());
    }
    return g;
}

std::string serialize_pit(const PITInstance& g) {
    PITInstance sorted = g;
    sorted.validate();
    std::sort(sorted.edges.begin(), sorted.edges.end());
    std::ostringstream out;
    out << "pit v1\n";
    out << "n " << sorted.vertex_count << "\n";
    for (auto [u, v] : sorted.edges) out << "e " << u << " " << v << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open file for writing: " + path);
    out << content;
}

} // namespace sr3
