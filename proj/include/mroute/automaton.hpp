#pragma once

#include <unordered_map>
#include <vector>

#include "mroute/maneuver.hpp"

namespace mroute {

// Automaton state handle; kRootContext is the empty context.
using ContextId = int;
inline constexpr ContextId kRootContext = 0;

// Prefix trie over the edge-id alphabet with failure links. States are
// the distinct proper prefixes (>= 1 edge) of maneuver walks plus the
// root; full-maneuver strings get trie nodes so completions can be
// collected, but contexts are always normalized to proper-prefix nodes.
class ContextAutomaton {
public:
    ContextAutomaton(const Graph& g, const ManeuverSet& ms);

    struct Step {
        ContextId next;                     // LongestPrefix(X . f)
        std::vector<ManeuverId> completed;  // M in Suffix(X . f), incl. zero-edge at head(f)
        double penalty;                     // sum of completed penalties (may be +inf)
    };

    // x must be the root or end at tail(f).
    Step advance(ContextId x, EdgeId f) const;

    // All context states ending at v, plus the root; proper-prefix node
    // insertion order, root first.
    std::vector<ContextId> contexts_at(VertexId v) const;

    // Edges leaving v that continue an entered restricted maneuver in
    // context x. Empty for the root context; at most one element on
    // proper networks.
    std::vector<EdgeId> restricted_direction(VertexId v, ContextId x) const;

    // Number of context states (root + proper-prefix nodes).
    int context_count() const { return static_cast<int>(context_nodes_.size()); }
    // Dense index of a context state in [0, context_count).
    int context_index(ContextId x) const { return nodes_[x].ctx_index; }
    const std::vector<ContextId>& context_nodes() const { return context_nodes_; }

    bool is_context(ContextId x) const { return nodes_[x].proper_prefix; }
    int context_length(ContextId x) const { return nodes_[x].depth; }
    VertexId context_end(ContextId x) const { return nodes_[x].end_vertex; } // -1 for root
    // The walk a non-root context denotes.
    Walk context_walk(const Graph& g, ContextId x) const;
    // "∅" or comma-joined vertex names, e.g. "(b,c,d)".
    std::string context_name(const Graph& g, ContextId x) const;

    // Looks a walk up as a context state; nullopt when the edge sequence
    // is not a proper prefix of any maneuver.
    std::optional<ContextId> find_context(const Walk& w) const;

    int node_count() const { return static_cast<int>(nodes_.size()); }

private:
    struct Node {
        int parent = -1;
        EdgeId via = -1;
        int depth = 0;
        VertexId end_vertex = -1;
        bool proper_prefix = false;
        int ctx_index = -1;
        ContextId fail = kRootContext;
        ContextId norm = kRootContext;   // nearest proper-prefix node along fail chain, incl. self
        int output_link = -1;            // nearest fail-chain node with outputs
        std::vector<ManeuverId> outputs; // maneuvers ending exactly here
        // entered restricted maneuvers: (maneuver, its next edge)
        std::vector<std::pair<ManeuverId, EdgeId>> forced;
        std::unordered_map<EdgeId, ContextId> next;
    };

    ContextId goto_state(ContextId x, EdgeId f) const;

    const Graph& graph_;
    const ManeuverSet& maneuvers_;
    std::vector<Node> nodes_;
    std::vector<ContextId> context_nodes_;             // dense-index -> node
    std::vector<std::vector<ContextId>> contexts_by_vertex_; // non-root contexts ending at v
};

} // namespace mroute
