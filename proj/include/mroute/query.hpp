#pragma once

#include <cstdint>
#include <optional>

#include "mroute/road_network.hpp"

namespace mroute {

struct PairKey {
    VertexId vertex = -1;
    ContextId context = kRootContext;
    bool operator==(const PairKey&) const = default;
};

struct QueryStats {
    long long pairs_scanned = 0;
    long long relaxations = 0;
    long long heap_pops = 0;
    int c_m = 0;
    long long pair_bound = 0;
};

struct QueryResult {
    double distance = kInf;
    std::optional<Walk> walk; // present iff distance finite
    QueryStats stats;
};

struct TraceRow {
    int step = 0;
    std::string scanned; // "(c,(b,c))"
    double distance = 0.0;
    std::vector<std::pair<std::string, double>> frontier; // live entries, pop order
};

// Frontier ordering: (distance, context edge count, insertion sequence) —
// a deterministic linear extension of the suffix partial order, since a
// proper suffix always has strictly fewer edges.
struct FrontierEntry {
    double distance;
    int context_length;
    std::uint64_t seq;
};
bool frontier_less(const FrontierEntry& a, const FrontierEntry& b);

// Maneuver-aware best-first search over vertex-context pairs. The caller
// is responsible for properness (run check_proper first, or accept
// best-effort results on improper networks).
QueryResult shortest_valid_walk(const RoadNetwork& net, VertexId s, VertexId t);

// Same search, returning one row per scanned pair.
std::vector<TraceRow> scan_trace(const RoadNetwork& net, VertexId s, VertexId t,
                                 QueryResult* result = nullptr);

} // namespace mroute
