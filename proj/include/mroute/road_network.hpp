#pragma once

#include <memory>

#include "mroute/automaton.hpp"
#include "mroute/maneuver.hpp"

namespace mroute {

// (G, w, M) plus the prefix automaton, built eagerly. Immutable after
// construction; copies share the underlying data, so one network can
// serve many concurrent queries. Changing the maneuver set means
// constructing a new network.
class RoadNetwork {
public:
    RoadNetwork(Graph graph, std::vector<Maneuver> maneuvers);

    const Graph& graph() const { return data_->graph; }
    const ManeuverSet& maneuvers() const { return data_->maneuvers; }
    const ContextAutomaton& automaton() const { return *data_->automaton; }

private:
    struct Data {
        Graph graph;
        ManeuverSet maneuvers;
        std::optional<ContextAutomaton> automaton;
    };
    std::shared_ptr<const Data> data_;
};

// Every edge reversed with identical weight, every maneuver walk
// reversed with identical penalty; vertex names, edge labels and handle
// order are preserved, so reversing twice reproduces the original.
RoadNetwork reverse(const RoadNetwork& net);

// |p|_w plus the penalties of all maneuver occurrences (per position)
// contained in p as subwalks, including zero-edge maneuvers at every
// visit of their vertex. May be +inf.
double penalized_weight(const RoadNetwork& net, const Walk& p);

// Finite penalized weight, and every entered restricted maneuver is
// completed in place or runs to the end of p.
bool is_valid(const RoadNetwork& net, const Walk& p);

// A nontrivial prefix of one walk is a subwalk of the other, which does
// not contain it whole (either orientation).
bool divergent(const Graph& g, const Walk& q1, const Walk& q2);

// Some nontrivial prefix of q2 equals a suffix of q1.
bool overhangs(const Graph& g, const Walk& q1, const Walk& q2);

struct PropernessViolation {
    int rule = 0; // 1..3, printed as "i".."iii"
    std::vector<ManeuverId> maneuvers;
    std::string detail;
};

struct PropernessReport {
    bool proper = true;
    std::vector<PropernessViolation> violations;
};

std::string rule_name(int rule);

// Definition-4 validation: i - conflicting restricted maneuvers (divergent
// pairs, plus any context with two forced directions), ii - overhanging
// negative maneuvers (ordered pairs, self included), iii - penalty lower
// bound per maneuver.
PropernessReport check_proper(const RoadNetwork& net);

} // namespace mroute
