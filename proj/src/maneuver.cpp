#include "mroute/maneuver.hpp"

#include <algorithm>

namespace mroute {

std::string to_string(ManeuverClass c) {
    switch (c) {
    case ManeuverClass::negative: return "negative";
    case ManeuverClass::positive: return "positive";
    case ManeuverClass::restricted: return "restricted";
    case ManeuverClass::prohibited: return "prohibited";
    }
    return "?";
}

ManeuverSet::ManeuverSet(const Graph& g, std::vector<Maneuver> maneuvers)
    : maneuvers_(std::move(maneuvers)),
      per_vertex_(g.vertex_count()),
      per_first_edge_(g.edge_count()),
      zero_edge_(g.vertex_count()),
      zero_edge_penalty_(g.vertex_count(), 0.0) {
    for (int i = 0; i < size(); ++i) {
        Maneuver& m = maneuvers_[i];
        m.id = i;
        // re-validate against this graph; walks constructed elsewhere may
        // belong to another graph instance
        Walk::of(g, m.walk.start(), m.walk.edges());
        auto vs = m.walk.vertex_seq(g);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        for (VertexId v : vs)
            per_vertex_[v].push_back(i);
        if (m.walk.is_trivial()) {
            zero_edge_[m.walk.start()].push_back(i);
            zero_edge_penalty_[m.walk.start()] += m.penalty.value();
        } else {
            per_first_edge_[m.walk.edges().front()].push_back(i);
            pair_bound_ += m.walk.edge_count() - 1;
        }
    }
    pair_bound_ += g.vertex_count();
    for (const auto& ids : per_vertex_)
        c_m_ = std::max(c_m_, static_cast<int>(ids.size()));
}

} // namespace mroute
