#pragma once

#include <cstdint>
#include <optional>

#include "mroute/query.hpp"
#include "mroute/road_network.hpp"

namespace mroute {

// Product of the graph with the context automaton: walks in G from
// (s, empty) correspond one-to-one with paths from the matching state,
// with equal penalized weight (zero-edge penalties at the source are a
// separate offset). Prohibited completions have no arc; restricted
// forcing prunes out-arcs. Arc weights may be negative.
class StateGraph {
public:
    explicit StateGraph(const RoadNetwork& net);

    struct Arc {
        int to;
        EdgeId edge;
        double weight;
    };

    int state_count() const { return static_cast<int>(states_.size()); }
    PairKey state(int i) const { return states_[i]; }
    int state_of(VertexId v, ContextId x) const;
    const std::vector<Arc>& arcs_from(int i) const { return arcs_[i]; }
    const std::vector<int>& states_at(VertexId v) const { return by_vertex_[v]; }
    const RoadNetwork& network() const { return net_; }

private:
    RoadNetwork net_;
    std::vector<PairKey> states_;
    std::vector<std::vector<Arc>> arcs_;
    std::vector<std::vector<int>> by_vertex_;
};

StateGraph build_state_graph(const RoadNetwork& net);

// Label-correcting distance from (s, empty) to the best state at t,
// tolerant of negative arcs. Throws oracle_error on a reachable negative
// cycle (impossible on proper networks).
double bellman_ford_distance(const StateGraph& sg, VertexId s, VertexId t);

// Definition-literal penalized weight: scans every position of every
// maneuver. Independent of the automaton path.
double brute_penalized_weight(const RoadNetwork& net, const Walk& p);
// Definition-literal validity check, same independence.
bool brute_is_valid(const RoadNetwork& net, const Walk& p);

// Exhaustive minimum over all valid walks from s to t with at most
// max_edges edges, with a witness. Pass max_edges <= 0 to use the
// state-count bound (exact when no negative cycles exist). Refuses
// instances over the enumeration cap.
std::pair<double, std::optional<Walk>> enumerate_optimum(const RoadNetwork& net, VertexId s,
                                                         VertexId t, int max_edges = 0);

struct DijkstraResult {
    double distance = kInf;
    std::optional<Walk> walk;
    long long heap_pops = 0;
};

// Maneuver-blind baseline.
DijkstraResult classical_dijkstra(const Graph& g, VertexId s, VertexId t);

// Strong connectivity refined by maneuvers: every in-context at an edge
// head must reach every out-context at an edge tail through a valid walk.
bool is_strongly_connected(const RoadNetwork& net);

struct GenParams {
    int vertices_min = 4, vertices_max = 10;
    int edges_min = 8, edges_max = 18;
    double weight_min = 0.0, weight_max = 4.0; // sampled on a 0.5 grid
    int maneuvers_min = 1, maneuvers_max = 6;
    int maneuver_edges_min = 0, maneuver_edges_max = 4;
    // class mix, normalized internally
    double p_negative = 0.25, p_positive = 0.25, p_restricted = 0.25, p_prohibited = 0.25;
    std::uint64_t seed = 1;
    int repair_rounds = 24;
};

// Seeded random proper network; identical params and seed give an
// identical network. Penalties of negative maneuvers are repaired up to
// the rule-iii bound; structurally conflicting maneuvers are dropped.
// Appends `gen <seed> <step> <choice>` lines to log when given.
RoadNetwork random_proper_network(const GenParams& params, std::vector<std::string>* log = nullptr);

} // namespace mroute
