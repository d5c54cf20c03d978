#include "mroute/query.hpp"

#include <algorithm>
#include <unordered_set>

namespace mroute {

bool frontier_less(const FrontierEntry& a, const FrontierEntry& b) {
    if (a.distance != b.distance)
        return a.distance < b.distance;
    if (a.context_length != b.context_length)
        return a.context_length < b.context_length;
    return a.seq < b.seq;
}

namespace {

struct HeapEntry {
    FrontierEntry ord;
    int key;
};

// std::push_heap keeps the *greatest* on top, so invert.
struct HeapCmp {
    bool operator()(const HeapEntry& a, const HeapEntry& b) const {
        return frontier_less(b.ord, a.ord);
    }
};

class Search {
public:
    Search(const RoadNetwork& net, VertexId s, VertexId t, std::vector<TraceRow>* trace)
        : g_(net.graph()), ms_(net.maneuvers()), aut_(net.automaton()),
          s_(s), t_(t), trace_(trace) {
        if (!g_.has_vertex(s) || !g_.has_vertex(t))
            throw input_error("query endpoint out of range");
        n_keys_ = aut_.context_count() + g_.vertex_count();
        dist_.assign(n_keys_, kInf);
        pred_key_.assign(n_keys_, -1);
        pred_edge_.assign(n_keys_, -1);
        in_t_.assign(n_keys_, 0);
        result_.stats.c_m = ms_.max_per_vertex();
        result_.stats.pair_bound = ms_.pair_bound();
    }

    QueryResult run() {
        int sk = key(s_, kRootContext);
        dist_[sk] = ms_.zero_edge_penalty(s_);
        push(sk, dist_[sk], 0);

        bool t_reached = false;
        int end_key = -1;
        int step = 0;
        while (!heap_.empty() && !t_reached) {
            HeapEntry e = pop();
            ++result_.stats.heap_pops;
            if (in_t_[e.key] || e.ord.distance > dist_[e.key])
                continue; // lazily deleted
            ++result_.stats.pairs_scanned;
            auto [u, x] = decode(e.key);

            std::vector<EdgeId> frontier_edges = aut_.restricted_direction(u, x);
            const std::vector<EdgeId>& edges =
                frontier_edges.empty() ? g_.out_edges(u) : frontier_edges;
            for (EdgeId f : edges) {
                relax(u, x, f);
                for (ManeuverId m : ms_.starting_with(f)) {
                    const Maneuver& man = ms_[m];
                    if (man.cls() == ManeuverClass::negative && man.walk.edge_count() > 1)
                        process_negative(x, man);
                }
            }

            in_t_[e.key] = 1;
            if (u == t_) {
                t_reached = true;
                end_key = e.key;
            }
            if (trace_)
                trace_->push_back(make_row(++step, u, x, dist_[e.key]));
        }

        if (t_reached && dist_[end_key] < kInf) {
            result_.distance = dist_[end_key];
            result_.walk = construct_walk(end_key);
        }
        return result_;
    }

private:
    int key(VertexId v, ContextId x) const {
        return x == kRootContext ? aut_.context_count() + v : aut_.context_index(x);
    }
    std::pair<VertexId, ContextId> decode(int k) const {
        if (k >= aut_.context_count())
            return {k - aut_.context_count(), kRootContext};
        ContextId x = aut_.context_nodes()[k];
        return {aut_.context_end(x), x};
    }

    void push(int k, double d, int ctxlen) {
        heap_.push_back({FrontierEntry{d, ctxlen, seq_++}, k});
        std::push_heap(heap_.begin(), heap_.end(), HeapCmp{});
    }
    HeapEntry pop() {
        std::pop_heap(heap_.begin(), heap_.end(), HeapCmp{});
        HeapEntry e = heap_.back();
        heap_.pop_back();
        return e;
    }

    // Returns the new context so negative-maneuver processing can chain.
    ContextId relax(VertexId u, ContextId x, EdgeId f) {
        ++result_.stats.relaxations;
        auto step = aut_.advance(x, f);
        double delta = g_.edge(f).weight + step.penalty;
        double cand = dist_[key(u, x)] + delta;
        int tk = key(g_.edge(f).head, step.next);
        if (cand < dist_[tk]) {
            dist_[tk] = cand;
            pred_key_[tk] = key(u, x);
            pred_edge_[tk] = f;
            push(tk, cand, aut_.context_length(step.next));
        }
        return step.next;
    }

    // Relax the remaining edges of a negative maneuver whose first edge
    // was just relaxed from context x0. Touched pairs enter the frontier
    // but are never marked scanned here. Aborts when the running estimate
    // bounces to infinity or a restricted maneuver forces off the walk.
    void process_negative(ContextId x0, const Maneuver& m) {
        const auto& es = m.walk.edges();
        ContextId x = aut_.advance(x0, es[0]).next;
        VertexId v = g_.edge(es[0]).head;
        for (size_t i = 1; i < es.size(); ++i) {
            if (!(dist_[key(v, x)] < kInf))
                return;
            auto forced = aut_.restricted_direction(v, x);
            if (!forced.empty() &&
                std::find(forced.begin(), forced.end(), es[i]) == forced.end())
                return;
            x = relax(v, x, es[i]);
            v = g_.edge(es[i]).head;
        }
    }

    Walk construct_walk(int end_key) const {
        std::vector<EdgeId> edges;
        std::unordered_set<int> seen;
        int k = end_key;
        while (pred_key_[k] != -1) {
            if (!seen.insert(k).second)
                throw internal_error("predecessor chain contains a cycle");
            edges.push_back(pred_edge_[k]);
            k = pred_key_[k];
        }
        if (k != key(s_, kRootContext))
            throw internal_error("predecessor chain does not reach the source");
        std::reverse(edges.begin(), edges.end());
        return Walk::of(g_, s_, std::move(edges));
    }

    TraceRow make_row(int step, VertexId u, ContextId x, double d) const {
        TraceRow row;
        row.step = step;
        row.scanned = "(" + g_.name(u) + "," + aut_.context_name(g_, x) + ")";
        row.distance = d;
        // live frontier entries in pop order, one per key
        std::vector<HeapEntry> live;
        std::unordered_set<int> kept;
        std::vector<HeapEntry> sorted = heap_;
        std::sort(sorted.begin(), sorted.end(),
                  [](const HeapEntry& a, const HeapEntry& b) { return frontier_less(a.ord, b.ord); });
        for (const HeapEntry& e : sorted) {
            if (in_t_[e.key] || e.ord.distance > dist_[e.key])
                continue;
            if (!kept.insert(e.key).second)
                continue;
            live.push_back(e);
        }
        for (const HeapEntry& e : live) {
            auto [v, cx] = decode(e.key);
            row.frontier.emplace_back("(" + g_.name(v) + "," + aut_.context_name(g_, cx) + ")",
                                      e.ord.distance);
        }
        return row;
    }

    const Graph& g_;
    const ManeuverSet& ms_;
    const ContextAutomaton& aut_;
    VertexId s_, t_;
    std::vector<TraceRow>* trace_;

    int n_keys_ = 0;
    std::vector<double> dist_;
    std::vector<int> pred_key_;
    std::vector<EdgeId> pred_edge_;
    std::vector<char> in_t_;
    std::vector<HeapEntry> heap_;
    std::uint64_t seq_ = 0;
    QueryResult result_;
};

} // namespace

QueryResult shortest_valid_walk(const RoadNetwork& net, VertexId s, VertexId t) {
    return Search(net, s, t, nullptr).run();
}

std::vector<TraceRow> scan_trace(const RoadNetwork& net, VertexId s, VertexId t,
                                 QueryResult* result) {
    std::vector<TraceRow> rows;
    QueryResult r = Search(net, s, t, &rows).run();
    if (result)
        *result = r;
    return rows;
}

} // namespace mroute
