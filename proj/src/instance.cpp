#include "sr3/instance.hpp"

#include <algorithm>
#include <string>

namespace sr3 {

const char* to_string(Mode mode) {
    switch (mode) {
    case Mode::BinarySymmetric: return "binary-symmetric";
    case Mode::Binary: return "binary";
    case Mode::General: return "general";
    }
    return "?";
}

std::optional<Mode> mode_from_string(std::string_view text) {
    if (text == "binary-symmetric") return Mode::BinarySymmetric;
    if (text == "binary") return Mode::Binary;
    if (text == "general") return Mode::General;
    return std::nullopt;
}

Instance::Instance(int agent_count, Mode mode, std::vector<int> valuations)
    : n_(agent_count), mode_(mode), val_(std::move(valuations)) {
    if (n_ < 0) throw InputError("agent count must be non-negative");
    if (val_.size() != static_cast<std::size_t>(n_) * n_)
        throw InputError("valuation table size does not match agent count");
    for (AgentId i = 0; i < n_; ++i) {
        if (val(i, i) != 0) throw InputError("diagonal valuations must be zero");
        for (AgentId j = 0; j < n_; ++j) {
            if (i == j) continue;
            int v = val(i, j);
            if (mode_ != Mode::General && v != 0 && v != 1)
                throw InputError("valuation out of {0,1} for agent " + std::to_string(i));
            if (mode_ == Mode::BinarySymmetric && v != val(j, i))
                throw InputError("asymmetric valuation between agents " + std::to_string(i) +
                                 " and " + std::to_string(j));
        }
    }
    if (mode_ == Mode::BinarySymmetric) {
        adj_.resize(n_);
        for (AgentId i = 0; i < n_; ++i)
            for (AgentId j = 0; j < n_; ++j)
                if (j != i && val(i, j) == 1) adj_[i].push_back(j);
    }
}

Instance Instance::empty(int agent_count, Mode mode) {
    return Instance(agent_count, mode,
                    std::vector<int>(static_cast<std::size_t>(agent_count) * agent_count, 0));
}

Instance Instance::from_edges(int agent_count,
                              const std::vector<std::pair<AgentId, AgentId>>& edges) {
    std::vector<int> table(static_cast<std::size_t>(agent_count) * agent_count, 0);
    for (auto [i, j] : edges) {
        if (i < 0 || j < 0 || i >= agent_count || j >= agent_count || i == j)
            throw InputError("invalid edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
        table[static_cast<std::size_t>(i) * agent_count + j] = 1;
        table[static_cast<std::size_t>(j) * agent_count + i] = 1;
    }
    return Instance(agent_count, Mode::BinarySymmetric, std::move(table));
}

Instance Instance::from_arcs(int agent_count, Mode mode, const std::vector<Arc>& arcs) {
    std::vector<int> table(static_cast<std::size_t>(agent_count) * agent_count, 0);
    for (const Arc& a : arcs) {
        if (a.from < 0 || a.to < 0 || a.from >= agent_count || a.to >= agent_count ||
            a.from == a.to)
            throw InputError("invalid arc " + std::to_string(a.from) + " -> " +
                             std::to_string(a.to));
        table[static_cast<std::size_t>(a.from) * agent_count + a.to] = a.value;
    }
    return Instance(agent_count, mode, std::move(table));
}

void Instance::require_agent(AgentId a) const {
    if (!valid_agent(a)) throw InputError("agent id " + std::to_string(a) + " out of range");
}

void Instance::require_mode(Mode mode) const {
    if (mode_ != mode)
        throw InputError(std::string("operation requires mode ") + to_string(mode) + ", got " +
                         to_string(mode_));
}

const std::vector<AgentId>& Instance::neighbors(AgentId a) const {
    require_mode(Mode::BinarySymmetric);
    require_agent(a);
    return adj_[a];
}

std::vector<std::pair<AgentId, AgentId>> Instance::edges() const {
    require_mode(Mode::BinarySymmetric);
    std::vector<std::pair<AgentId, AgentId>> out;
    for (AgentId i = 0; i < n_; ++i)
        for (AgentId j : adj_[i])
            if (i < j) out.emplace_back(i, j);
    return out;
}

std::vector<Arc> Instance::arcs() const {
    std::vector<Arc> out;
    for (AgentId i = 0; i < n_; ++i)
        for (AgentId j = 0; j < n_; ++j)
            if (i != j && val(i, j) != 0) out.push_back({i, j, val(i, j)});
    return out;
}

} // namespace sr3
