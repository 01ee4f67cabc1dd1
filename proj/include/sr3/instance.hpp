#ifndef SR3_INSTANCE_HPP
#define SR3_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "sr3/errors.hpp"

namespace sr3 {

/// Dense 0-based agent index. External notation that labels agents from 1
/// maps to ids by subtracting one.
using AgentId = std::int32_t;

/// Valuation restrictions an instance declares and enforces.
enum class Mode {
    BinarySymmetric, ///< val in {0,1} and val(i,j) == val(j,i)
    Binary,          ///< val in {0,1}, possibly asymmetric
    General,         ///< arbitrary integer valuations
};

const char* to_string(Mode mode);
std::optional<Mode> mode_from_string(std::string_view text);

/// A directed valuation entry (from, to, value).
struct Arc {
    AgentId from = 0;
    AgentId to = 0;
    int value = 0;
};

/// An immutable set of agents with an integer valuation table.
///
/// The diagonal is fixed to zero and never read by any operation. For
/// binary-symmetric instances the unit valuations form an undirected graph
/// whose sorted adjacency lists are precomputed; `neighbors` exposes them.
class Instance {
public:
    /// Builds an instance from a flat row-major n*n table, validating the
    /// declared mode's invariants.
    Instance(int agent_count, Mode mode, std::vector<int> valuations);

    /// An instance with all valuations zero.
    static Instance empty(int agent_count, Mode mode);

    /// Binary-symmetric instance from an undirected unit edge list.
    static Instance from_edges(int agent_count,
                               const std::vector<std::pair<AgentId, AgentId>>& edges);

    /// Binary or general instance from a directed arc list.
    static Instance from_arcs(int agent_count, Mode mode, const std::vector<Arc>& arcs);

    int agent_count() const { return n_; }
    Mode mode() const { return mode_; }

    int val(AgentId from, AgentId to) const { return val_[static_cast<std::size_t>(from) * n_ + to]; }

    bool valid_agent(AgentId a) const { return a >= 0 && a < n_; }
    void require_agent(AgentId a) const;
    void require_mode(Mode mode) const;

    /// Unit-valued neighbors in ascending id order. Binary-symmetric only.
    const std::vector<AgentId>& neighbors(AgentId a) const;

    /// Undirected unit edges (i < j), ascending. Binary-symmetric only.
    std::vector<std::pair<AgentId, AgentId>> edges() const;

    /// All nonzero arcs in row-major order.
    std::vector<Arc> arcs() const;

    bool operator==(const Instance& other) const = default;

private:
    int n_;
    Mode mode_;
    std::vector<int> val_;
    std::vector<std::vector<AgentId>> adj_; // populated for BinarySymmetric
};

} // namespace sr3

#endif
