#include "mroute/graph.hpp"

#include <algorithm>
#include <cmath>

namespace mroute {

VertexId Graph::add_vertex(const std::string& name) {
    if (auto it = by_name_.find(name); it != by_name_.end())
        throw input_error("duplicate vertex name: " + name);
    VertexId v = vertex_count();
    names_.push_back(name);
    out_.emplace_back();
    by_name_.emplace(name, v);
    return v;
}

EdgeId Graph::add_edge(VertexId tail, VertexId head, double weight, const std::string& label) {
    if (!has_vertex(tail) || !has_vertex(head))
        throw input_error("edge endpoint out of range");
    if (!(weight >= 0.0) || !std::isfinite(weight))
        throw input_error("edge weight must be non-negative and finite");
    if (!label.empty()) {
        if (by_label_.count(label))
            throw input_error("duplicate edge label: " + label);
    }
    EdgeId e = edge_count();
    edges_.push_back(Edge{e, tail, head, weight, label});
    out_[tail].push_back(e);
    if (!label.empty())
        by_label_.emplace(label, e);
    return e;
}

const std::vector<EdgeId>& Graph::out_edges(VertexId v) const {
    if (!has_vertex(v))
        throw input_error("unknown vertex handle " + std::to_string(v));
    return out_[v];
}

std::optional<VertexId> Graph::find_vertex(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

std::optional<EdgeId> Graph::find_edge_label(const std::string& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end())
        return std::nullopt;
    return it->second;
}

std::vector<EdgeId> Graph::edges_between(VertexId tail, VertexId head) const {
    std::vector<EdgeId> r;
    for (EdgeId e : out_edges(tail))
        if (edges_[e].head == head)
            r.push_back(e);
    return r;
}

VertexId Graph::vertex_checked(const std::string& name) const {
    auto v = find_vertex(name);
    if (!v)
        throw input_error("unknown vertex: " + name);
    return *v;
}

Walk Walk::of(const Graph& g, VertexId start, std::vector<EdgeId> edges) {
    if (!g.has_vertex(start))
        throw input_error("walk start vertex out of range");
    VertexId at = start;
    for (EdgeId e : edges) {
        if (e < 0 || e >= g.edge_count())
            throw input_error("walk edge id out of range");
        if (g.edge(e).tail != at)
            throw input_error("walk edge " + std::to_string(e) + " does not continue from " + g.name(at));
        at = g.edge(e).head;
    }
    return Walk(start, std::move(edges));
}

Walk Walk::of_vertex_names(const Graph& g, const std::vector<std::string>& names) {
    if (names.empty())
        throw input_error("walk needs at least one vertex");
    VertexId start = g.vertex_checked(names[0]);
    std::vector<EdgeId> edges;
    VertexId at = start;
    for (size_t i = 1; i < names.size(); ++i) {
        VertexId next = g.vertex_checked(names[i]);
        auto cands = g.edges_between(at, next);
        if (cands.empty())
            throw input_error("no edge " + g.name(at) + " -> " + g.name(next));
        if (cands.size() > 1)
            throw input_error("ambiguous edge " + g.name(at) + " -> " + g.name(next) +
                              " (parallel edges; use the edge-label form)");
        edges.push_back(cands[0]);
        at = next;
    }
    return Walk(start, std::move(edges));
}

VertexId Walk::end(const Graph& g) const {
    return edges_.empty() ? start_ : g.edge(edges_.back()).head;
}

std::vector<VertexId> Walk::vertex_seq(const Graph& g) const {
    std::vector<VertexId> vs;
    vs.reserve(edges_.size() + 1);
    vs.push_back(start_);
    for (EdgeId e : edges_)
        vs.push_back(g.edge(e).head);
    return vs;
}

std::string Walk::to_string(const Graph& g) const {
    std::string s = "(";
    bool first = true;
    for (VertexId v : vertex_seq(g)) {
        if (!first)
            s += ",";
        s += g.name(v);
        first = false;
    }
    s += ")";
    return s;
}

Walk concat(const Graph& g, const Walk& p1, const Walk& p2) {
    if (p1.end(g) != p2.start())
        throw input_error("concat: first walk ends at " + g.name(p1.end(g)) +
                          ", second starts at " + g.name(p2.start()));
    std::vector<EdgeId> edges = p1.edges();
    edges.insert(edges.end(), p2.edges().begin(), p2.edges().end());
    return Walk::of(g, p1.start(), std::move(edges));
}

double walk_weight(const Graph& g, const Walk& p) {
    double w = 0.0;
    for (EdgeId e : p.edges())
        w += g.edge(e).weight;
    return w;
}

std::vector<Walk> prefixes(const Graph& g, const Walk& p) {
    std::vector<Walk> r;
    for (int i = 0; i <= p.edge_count(); ++i) {
        std::vector<EdgeId> es(p.edges().begin(), p.edges().begin() + i);
        r.push_back(Walk::of(g, p.start(), std::move(es)));
    }
    return r;
}

std::vector<Walk> suffixes(const Graph& g, const Walk& p) {
    std::vector<Walk> r;
    auto vs = p.vertex_seq(g);
    for (int i = 0; i <= p.edge_count(); ++i) {
        std::vector<EdgeId> es(p.edges().begin() + (p.edge_count() - i), p.edges().end());
        r.push_back(Walk::of(g, vs[p.edge_count() - i], std::move(es)));
    }
    return r;
}

bool is_subwalk(const Graph& g, const Walk& q, const Walk& p) {
    if (q.is_trivial()) {
        auto vs = p.vertex_seq(g);
        return std::find(vs.begin(), vs.end(), q.start()) != vs.end();
    }
    const auto& qs = q.edges();
    const auto& ps = p.edges();
    return std::search(ps.begin(), ps.end(), qs.begin(), qs.end()) != ps.end();
}

} // namespace mroute
