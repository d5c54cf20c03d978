#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "mroute/graph.hpp"

namespace mroute {

using ManeuverId = int;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class ManeuverClass { negative, positive, restricted, prohibited };

std::string to_string(ManeuverClass c);

// Extended-real penalty: finite (possibly negative) or +infinity.
class Penalty {
public:
    Penalty() : value_(0.0) {}
    explicit Penalty(double v) : value_(v) {
        if (std::isnan(v))
            throw input_error("penalty must not be NaN");
        if (v == -kInf)
            throw input_error("penalty must not be -inf");
    }
    static Penalty infinite() { return Penalty(kInf); }

    double value() const { return value_; }
    bool is_infinite() const { return value_ == kInf; }

    ManeuverClass classify() const {
        if (is_infinite())
            return ManeuverClass::prohibited;
        if (value_ == 0.0)
            return ManeuverClass::restricted;
        return value_ < 0.0 ? ManeuverClass::negative : ManeuverClass::positive;
    }

private:
    double value_;
};

struct Maneuver {
    ManeuverId id = -1;
    Walk walk;       // zero or more edges; zero-edge = single vertex
    Penalty penalty;

    ManeuverClass cls() const { return penalty.classify(); }
};

// Maneuver collection plus the per-vertex / per-first-edge indices the
// search and the generator need.
class ManeuverSet {
public:
    ManeuverSet() = default;
    ManeuverSet(const Graph& g, std::vector<Maneuver> maneuvers);

    int size() const { return static_cast<int>(maneuvers_.size()); }
    const Maneuver& operator[](ManeuverId m) const { return maneuvers_.at(m); }
    const std::vector<Maneuver>& all() const { return maneuvers_; }

    // Maneuvers M with v in V(M).
    const std::vector<ManeuverId>& touching(VertexId v) const { return per_vertex_.at(v); }
    // Maneuvers with >= 1 edge whose first edge is e.
    const std::vector<ManeuverId>& starting_with(EdgeId e) const { return per_first_edge_.at(e); }
    // Zero-edge maneuvers at v, and the sum of their penalties.
    const std::vector<ManeuverId>& zero_edge_at(VertexId v) const { return zero_edge_.at(v); }
    double zero_edge_penalty(VertexId v) const { return zero_edge_penalty_.at(v); }

    // max over v of |{M : v in V(M)}| (the complexity parameter).
    int max_per_vertex() const { return c_m_; }
    // |V| + sum over maneuvers with >= 1 edge of (edge count - 1).
    long long pair_bound() const { return pair_bound_; }

private:
    std::vector<Maneuver> maneuvers_;
    std::vector<std::vector<ManeuverId>> per_vertex_;
    std::vector<std::vector<ManeuverId>> per_first_edge_;
    std::vector<std::vector<ManeuverId>> zero_edge_;
    std::vector<double> zero_edge_penalty_;
    int c_m_ = 0;
    long long pair_bound_ = 0;
};

} // namespace mroute
