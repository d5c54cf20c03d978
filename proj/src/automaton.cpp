#include "mroute/automaton.hpp"

#include <algorithm>
#include <deque>

namespace mroute {

ContextAutomaton::ContextAutomaton(const Graph& g, const ManeuverSet& ms)
    : graph_(g), maneuvers_(ms), contexts_by_vertex_(g.vertex_count()) {
    nodes_.emplace_back();
    nodes_[0].proper_prefix = true; // root = empty context

    // Trie over maneuver edge sequences. Nodes for strict prefixes are
    // context states; the node of a full maneuver is a context state only
    // when the same string is also a strict prefix of another maneuver.
    for (const Maneuver& m : ms.all()) {
        if (m.walk.is_trivial())
            continue; // zero-edge maneuvers live in the per-vertex index
        ContextId at = kRootContext;
        const auto& es = m.walk.edges();
        for (size_t i = 0; i < es.size(); ++i) {
            EdgeId f = es[i];
            auto it = nodes_[at].next.find(f);
            if (it == nodes_[at].next.end()) {
                ContextId fresh = static_cast<int>(nodes_.size());
                nodes_[at].next.emplace(f, fresh);
                Node n;
                n.parent = at;
                n.via = f;
                n.depth = nodes_[at].depth + 1;
                n.end_vertex = g.edge(f).head;
                nodes_.push_back(std::move(n));
                at = fresh;
            } else {
                at = it->second;
            }
            if (i + 1 < es.size())
                nodes_[at].proper_prefix = true;
            if (m.cls() == ManeuverClass::restricted && i + 1 < es.size())
                nodes_[at].forced.emplace_back(m.id, es[i + 1]);
        }
        nodes_[at].outputs.push_back(m.id);
    }

    // Failure links, breadth-first.
    std::deque<ContextId> q;
    for (auto& [f, c] : nodes_[0].next) {
        (void)f;
        q.push_back(c);
    }
    while (!q.empty()) {
        ContextId n = q.front();
        q.pop_front();
        const Node& nd = nodes_[n];
        if (nd.parent != kRootContext) {
            ContextId w = nodes_[nd.parent].fail;
            while (w != kRootContext && !nodes_[w].next.count(nd.via))
                w = nodes_[w].fail;
            auto it = nodes_[w].next.find(nd.via);
            nodes_[n].fail = (it != nodes_[w].next.end() && it->second != n) ? it->second : kRootContext;
        }
        ContextId fl = nodes_[n].fail;
        nodes_[n].norm = nodes_[n].proper_prefix ? n : nodes_[fl].norm;
        nodes_[n].output_link = nodes_[fl].outputs.empty() ? nodes_[fl].output_link : fl;
        for (auto& [f, c] : nodes_[n].next) {
            (void)f;
            q.push_back(c);
        }
    }

    for (ContextId n = 0; n < node_count(); ++n) {
        if (!nodes_[n].proper_prefix)
            continue;
        nodes_[n].ctx_index = static_cast<int>(context_nodes_.size());
        context_nodes_.push_back(n);
        if (n != kRootContext)
            contexts_by_vertex_[nodes_[n].end_vertex].push_back(n);
    }
}

ContextId ContextAutomaton::goto_state(ContextId x, EdgeId f) const {
    ContextId n = x;
    while (true) {
        auto it = nodes_[n].next.find(f);
        if (it != nodes_[n].next.end())
            return it->second;
        if (n == kRootContext)
            return kRootContext;
        n = nodes_[n].fail;
    }
}

ContextAutomaton::Step ContextAutomaton::advance(ContextId x, EdgeId f) const {
    const Edge& e = graph_.edge(f);
    if (x != kRootContext && nodes_[x].end_vertex != e.tail)
        throw input_error("advance: context ends at " + graph_.name(nodes_[x].end_vertex) +
                          " but edge leaves " + graph_.name(e.tail));
    ContextId hit = goto_state(x, f);
    Step step;
    step.penalty = 0.0;
    ContextId n = hit;
    while (n != -1) {
        for (ManeuverId m : nodes_[n].outputs) {
            step.completed.push_back(m);
            step.penalty += maneuvers_[m].penalty.value();
        }
        n = nodes_[n].output_link;
    }
    for (ManeuverId m : maneuvers_.zero_edge_at(e.head)) {
        step.completed.push_back(m);
        step.penalty += maneuvers_[m].penalty.value();
    }
    step.next = nodes_[hit].norm;
    return step;
}

std::vector<ContextId> ContextAutomaton::contexts_at(VertexId v) const {
    if (!graph_.has_vertex(v))
        throw input_error("contexts_at: unknown vertex");
    std::vector<ContextId> r;
    r.push_back(kRootContext);
    const auto& xs = contexts_by_vertex_[v];
    r.insert(r.end(), xs.begin(), xs.end());
    return r;
}

std::vector<EdgeId> ContextAutomaton::restricted_direction(VertexId v, ContextId x) const {
    if (x != kRootContext && nodes_[x].end_vertex != v)
        throw input_error("restricted_direction: context does not end at vertex");
    std::vector<EdgeId> r;
    for (ContextId n = x; n != kRootContext; n = nodes_[n].fail)
        for (const auto& [m, f] : nodes_[n].forced) {
            (void)m;
            r.push_back(f);
        }
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

Walk ContextAutomaton::context_walk(const Graph& g, ContextId x) const {
    std::vector<EdgeId> es;
    for (ContextId n = x; n != kRootContext; n = nodes_[n].parent)
        es.push_back(nodes_[n].via);
    std::reverse(es.begin(), es.end());
    if (es.empty())
        throw input_error("root context denotes no walk");
    return Walk::of(g, g.edge(es.front()).tail, std::move(es));
}

std::string ContextAutomaton::context_name(const Graph& g, ContextId x) const {
    if (x == kRootContext)
        return "∅";
    return context_walk(g, x).to_string(g);
}

std::optional<ContextId> ContextAutomaton::find_context(const Walk& w) const {
    ContextId at = kRootContext;
    for (EdgeId f : w.edges()) {
        auto it = nodes_[at].next.find(f);
        if (it == nodes_[at].next.end())
            return std::nullopt;
        at = it->second;
    }
    if (!nodes_[at].proper_prefix)
        return std::nullopt;
    return at;
}

} // namespace mroute
