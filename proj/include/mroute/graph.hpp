#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mroute/errors.hpp"

namespace mroute {

using VertexId = int;
using EdgeId = int;

struct Edge {
    EdgeId id = -1;
    VertexId tail = -1;
    VertexId head = -1;
    double weight = 0.0; // non-negative, finite
    std::string label;   // optional, unique when present
};

// Directed multigraph. Vertices and edges are dense integer handles;
// out-adjacency keeps insertion order, which is the determinism anchor
// for traces and tie-breaking.
class Graph {
public:
    VertexId add_vertex(const std::string& name);
    EdgeId add_edge(VertexId tail, VertexId head, double weight, const std::string& label = "");

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& name(VertexId v) const { return names_.at(v); }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<EdgeId>& out_edges(VertexId v) const;

    std::optional<VertexId> find_vertex(const std::string& name) const;
    std::optional<EdgeId> find_edge_label(const std::string& label) const;
    // All edges tail->head, in insertion order.
    std::vector<EdgeId> edges_between(VertexId tail, VertexId head) const;

    VertexId vertex_checked(const std::string& name) const;

    bool has_vertex(VertexId v) const { return v >= 0 && v < vertex_count(); }

private:
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> out_;
    std::unordered_map<std::string, VertexId> by_name_;
    std::unordered_map<std::string, EdgeId> by_label_;
};

// A walk is a start vertex plus an edge-id sequence; the edge ids make
// walks unambiguous under parallel edges. An empty sequence is the
// trivial walk at `start`.
class Walk {
public:
    Walk() = default;

    // Checks the incidence chain; throws input_error on a break.
    static Walk of(const Graph& g, VertexId start, std::vector<EdgeId> edges);
    static Walk trivial(VertexId v) { return Walk(v, {}); }
    // Vertex-name sequence, e.g. {"a","b","c"}; rejects ambiguity under
    // parallel edges and missing edges.
    static Walk of_vertex_names(const Graph& g, const std::vector<std::string>& names);

    VertexId start() const { return start_; }
    const std::vector<EdgeId>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool is_trivial() const { return edges_.empty(); }

    VertexId end(const Graph& g) const;
    std::vector<VertexId> vertex_seq(const Graph& g) const;
    std::string to_string(const Graph& g) const; // "(a,b,c)"

    bool operator==(const Walk& o) const { return start_ == o.start_ && edges_ == o.edges_; }

private:
    Walk(VertexId start, std::vector<EdgeId> edges) : start_(start), edges_(std::move(edges)) {}
    VertexId start_ = -1;
    std::vector<EdgeId> edges_;
};

// p1 must end where p2 starts.
Walk concat(const Graph& g, const Walk& p1, const Walk& p2);

// Sum of edge weights, repeated edges counted per occurrence.
double walk_weight(const Graph& g, const Walk& p);

// All i-prefixes / i-suffixes, i = 0..edge_count, shortest first.
std::vector<Walk> prefixes(const Graph& g, const Walk& p);
std::vector<Walk> suffixes(const Graph& g, const Walk& p);

// q occurs as a contiguous run of p's edge sequence; a trivial q is a
// subwalk iff its vertex lies on p.
bool is_subwalk(const Graph& g, const Walk& q, const Walk& p);

} // namespace mroute
