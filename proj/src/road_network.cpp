#include "mroute/road_network.hpp"

#include <algorithm>
#include <set>

#include "mroute/io.hpp"

namespace mroute {

RoadNetwork::RoadNetwork(Graph graph, std::vector<Maneuver> maneuvers) {
    auto data = std::make_shared<Data>();
    data->graph = std::move(graph);
    data->maneuvers = ManeuverSet(data->graph, std::move(maneuvers));
    data->automaton.emplace(data->graph, data->maneuvers);
    data_ = std::move(data);
}

RoadNetwork reverse(const RoadNetwork& net) {
    const Graph& g = net.graph();
    Graph rg;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        rg.add_vertex(g.name(v));
    for (const Edge& e : g.edges())
        rg.add_edge(e.head, e.tail, e.weight, e.label);
    std::vector<Maneuver> rms;
    for (const Maneuver& m : net.maneuvers().all()) {
        std::vector<EdgeId> es(m.walk.edges().rbegin(), m.walk.edges().rend());
        VertexId start = m.walk.end(g); // same handle in rg
        rms.push_back(Maneuver{-1, Walk::of(rg, start, std::move(es)), m.penalty});
    }
    return RoadNetwork(std::move(rg), std::move(rms));
}

double penalized_weight(const RoadNetwork& net, const Walk& p) {
    const ContextAutomaton& aut = net.automaton();
    double total = walk_weight(net.graph(), p);
    total += net.maneuvers().zero_edge_penalty(p.start());
    ContextId x = kRootContext;
    for (EdgeId f : p.edges()) {
        auto step = aut.advance(x, f);
        total += step.penalty;
        x = step.next;
    }
    return total;
}

bool is_valid(const RoadNetwork& net, const Walk& p) {
    if (!(penalized_weight(net, p) < kInf))
        return false;
    const auto& pe = p.edges();
    const int m = static_cast<int>(pe.size());
    for (const Maneuver& r : net.maneuvers().all()) {
        if (r.cls() != ManeuverClass::restricted || r.walk.is_trivial())
            continue;
        const auto& re = r.walk.edges();
        const int n = static_cast<int>(re.size());
        for (int i = 0; i < m; ++i) {
            if (pe[i] != re[0])
                continue;
            int k = 1;
            while (k < n && i + k < m && pe[i + k] == re[k])
                ++k;
            // entered at i; must be completed there or run to the end
            if (k < n && i + k < m)
                return false;
        }
    }
    return true;
}

bool divergent(const Graph& g, const Walk& q1, const Walk& q2) {
    auto one_way = [&](const Walk& a, const Walk& b) {
        if (a.is_trivial())
            return false;
        Walk first = Walk::of(g, a.start(), {a.edges().front()});
        return is_subwalk(g, first, b) && !is_subwalk(g, a, b);
    };
    return one_way(q1, q2) || one_way(q2, q1);
}

bool overhangs(const Graph& g, const Walk& q1, const Walk& q2) {
    (void)g;
    const auto& e1 = q1.edges();
    const auto& e2 = q2.edges();
    int lim = static_cast<int>(std::min(e1.size(), e2.size()));
    for (int k = 1; k <= lim; ++k)
        if (std::equal(e2.begin(), e2.begin() + k, e1.end() - k))
            return true;
    return false;
}

std::string rule_name(int rule) {
    switch (rule) {
    case 1: return "i";
    case 2: return "ii";
    case 3: return "iii";
    }
    return "?";
}

namespace {

RoadNetwork without_maneuver(const RoadNetwork& net, ManeuverId drop) {
    const Graph& g = net.graph();
    Graph copy;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        copy.add_vertex(g.name(v));
    for (const Edge& e : g.edges())
        copy.add_edge(e.tail, e.head, e.weight, e.label);
    std::vector<Maneuver> ms;
    for (const Maneuver& m : net.maneuvers().all())
        if (m.id != drop)
            ms.push_back(Maneuver{-1, Walk::of(copy, m.walk.start(), m.walk.edges()), m.penalty});
    return RoadNetwork(std::move(copy), std::move(ms));
}

} // namespace

PropernessReport check_proper(const RoadNetwork& net) {
    PropernessReport rep;
    const Graph& g = net.graph();
    const ManeuverSet& ms = net.maneuvers();
    const ContextAutomaton& aut = net.automaton();

    std::vector<ManeuverId> restricted, negative;
    for (const Maneuver& m : ms.all()) {
        if (m.cls() == ManeuverClass::restricted)
            restricted.push_back(m.id);
        else if (m.cls() == ManeuverClass::negative)
            negative.push_back(m.id);
    }

    // i. divergent restricted pairs
    std::set<std::pair<ManeuverId, ManeuverId>> reported;
    for (size_t a = 0; a < restricted.size(); ++a)
        for (size_t b = a + 1; b < restricted.size(); ++b) {
            ManeuverId i = restricted[a], j = restricted[b];
            if (divergent(g, ms[i].walk, ms[j].walk)) {
                rep.violations.push_back({1, {i, j},
                    "restricted maneuvers " + ms[i].walk.to_string(g) + " and " +
                        ms[j].walk.to_string(g) + " are divergent"});
                reported.emplace(i, j);
            }
        }

    // i. any context with two forced continuations is a routing deadlock
    // even when the pairwise predicate misses it (self-overlap, repeats)
    for (ContextId x : aut.context_nodes()) {
        if (x == kRootContext)
            continue;
        VertexId v = aut.context_end(x);
        auto dirs = aut.restricted_direction(v, x);
        if (dirs.size() < 2)
            continue;
        // recover the maneuvers forcing different edges at x
        Walk xw = aut.context_walk(g, x);
        const auto& xe = xw.edges();
        std::set<ManeuverId> who;
        for (ManeuverId r : restricted) {
            const auto& re = ms[r].walk.edges();
            if (re.empty())
                continue;
            int lim = static_cast<int>(std::min(xe.size(), re.size() - 1));
            for (int k = 1; k <= lim; ++k)
                if (std::equal(re.begin(), re.begin() + k, xe.end() - k))
                    who.insert(r);
        }
        std::vector<ManeuverId> ids(who.begin(), who.end());
        std::pair<ManeuverId, ManeuverId> key{ids.front(), ids.back()};
        if (reported.count(key))
            continue;
        reported.insert(key);
        std::string edges;
        for (EdgeId f : dirs) {
            if (!edges.empty())
                edges += ", ";
            edges += g.name(g.edge(f).tail) + "->" + g.name(g.edge(f).head);
        }
        rep.violations.push_back({1, ids,
            "context " + aut.context_name(g, x) + " forces " +
                std::to_string(dirs.size()) + " directions (" + edges + ")"});
    }

    // ii. overhanging negative maneuvers, ordered pairs, self included
    for (ManeuverId a : negative)
        for (ManeuverId b : negative)
            if (overhangs(g, ms[a].walk, ms[b].walk))
                rep.violations.push_back({2, {a, b},
                    "negative maneuver " + ms[b].walk.to_string(g) + " overhangs " +
                        ms[a].walk.to_string(g)});

    // iii. penalty lower bound
    for (const Maneuver& m : ms.all()) {
        if (m.penalty.is_infinite())
            continue;
        RoadNetwork rest = without_maneuver(net, m.id);
        double bound = penalized_weight(rest, m.walk);
        if (m.penalty.value() < -bound)
            rep.violations.push_back({3, {m.id},
                "penalty " + format_value(m.penalty.value()) + " of " + m.walk.to_string(g) +
                    " is below -" + format_value(bound)});
    }

    rep.proper = rep.violations.empty();
    return rep;
}

} // namespace mroute
