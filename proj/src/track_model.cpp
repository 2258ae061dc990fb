#include "confluent/track_model.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace confluent {

int TrackNetwork::add_terminal(int vertex) {
    TrackNode n;
    n.id = static_cast<int>(nodes_.size());
    n.type = NodeType::Terminal;
    n.terminal_vertex = vertex;
    nodes_.push_back(n);
    incident_.emplace_back();
    transitions_.emplace_back();
    return n.id;
}

int TrackNetwork::add_junction(JunctionKind kind) {
    TrackNode n;
    n.id = static_cast<int>(nodes_.size());
    n.type = NodeType::Junction;
    n.kind = kind;
    nodes_.push_back(n);
    incident_.emplace_back();
    transitions_.emplace_back();
    return n.id;
}

int TrackNetwork::add_segment(int a, int b) {
    if (a < 0 || b < 0 || a >= static_cast<int>(nodes_.size()) ||
        b >= static_cast<int>(nodes_.size()) || a == b)
        throw std::invalid_argument("bad segment endpoints");
    Segment s;
    s.id = static_cast<int>(segments_.size());
    s.a = a;
    s.b = b;
    segments_.push_back(s);
    incident_[a].push_back(s.id);
    incident_[b].push_back(s.id);
    return s.id;
}

namespace {

bool segment_at(const Segment& s, int node) { return s.a == node || s.b == node; }

}  // namespace

void TrackNetwork::allow(int node, int seg1, int seg2) {
    if (seg1 == seg2) throw std::invalid_argument("transition needs two distinct segments");
    if (!segment_at(segments_.at(seg1), node) || !segment_at(segments_.at(seg2), node))
        throw std::invalid_argument("transition references a segment not incident to the node");
    transitions_[node].insert({std::min(seg1, seg2), std::max(seg1, seg2)});
}

void TrackNetwork::allow_ordered(int node, int seg_in, int seg_out) {
    if (!directed_) {
        allow(node, seg_in, seg_out);
        return;
    }
    if (seg_in == seg_out) throw std::invalid_argument("transition needs two distinct segments");
    if (!segment_at(segments_.at(seg_in), node) || !segment_at(segments_.at(seg_out), node))
        throw std::invalid_argument("transition references a segment not incident to the node");
    transitions_[node].insert({seg_in, seg_out});
}

bool TrackNetwork::transition_ok(int node, int seg_in, int seg_out) const {
    if (nodes_[node].type == NodeType::Terminal) return true;
    if (directed_) return transitions_[node].count({seg_in, seg_out}) != 0;
    return transitions_[node].count({std::min(seg_in, seg_out), std::max(seg_in, seg_out)}) != 0;
}

Graph TrackNetwork::underlying_graph() const {
    Graph g = Graph::undirected(static_cast<int>(nodes_.size()));
    for (const auto& s : segments_) g.add_edge(s.a, s.b);
    return g;
}

std::string TrackNetwork::to_json() const {
    nlohmann::json j;
    j["directed"] = directed_;
    j["nodes"] = nlohmann::json::array();
    auto kind_name = [](JunctionKind k) {
        switch (k) {
            case JunctionKind::Clique: return "clique";
            case JunctionKind::Biclique: return "biclique";
            case JunctionKind::DirectedBiclique: return "directed_biclique";
            case JunctionKind::Apex: return "apex";
            case JunctionKind::Port: return "port";
            case JunctionKind::Collector: return "collector";
            case JunctionKind::Joiner: return "joiner";
            case JunctionKind::Fan: return "fan";
        }
        return "?";
    };
    for (const auto& n : nodes_) {
        nlohmann::json jn;
        jn["id"] = n.id;
        jn["type"] = n.type == NodeType::Terminal ? "terminal" : "junction";
        if (n.type == NodeType::Junction)
            jn["kind"] = kind_name(n.kind);
        else
            jn["vertex"] = n.terminal_vertex;
        j["nodes"].push_back(std::move(jn));
    }
    j["segments"] = nlohmann::json::array();
    for (const auto& s : segments_) {
        nlohmann::json js;
        js["id"] = s.id;
        js["a"] = s.a;
        js["b"] = s.b;
        if (directed_) js["directed"] = true;
        j["segments"].push_back(std::move(js));
    }
    j["transitions"] = nlohmann::json::object();
    for (size_t node = 0; node < transitions_.size(); ++node) {
        if (transitions_[node].empty()) continue;
        nlohmann::json arr = nlohmann::json::array();
        for (auto [a, b] : transitions_[node]) arr.push_back({a, b});
        j["transitions"][std::to_string(node)] = std::move(arr);
    }
    return j.dump(2);
}

namespace {

// Darts: (segment, direction). Direction 0 runs a->b, 1 runs b->a; directed
// networks only use direction 0.
struct DartWalker {
    const TrackNetwork& net;
    explicit DartWalker(const TrackNetwork& t) : net(t) {}

    int head(int dart) const {
        const Segment& s = net.segments()[dart >> 1];
        return (dart & 1) ? s.a : s.b;
    }
    int tail(int dart) const {
        const Segment& s = net.segments()[dart >> 1];
        return (dart & 1) ? s.b : s.a;
    }
    int dart_from(int node, int seg) const {
        const Segment& s = net.segments()[seg];
        return (s.a == node) ? (seg << 1) : ((seg << 1) | 1);
    }
    bool traversable(int dart) const { return !net.is_directed() || !(dart & 1); }
};

// Exact check: is there a transition-respecting path from `src` to terminal
// `dst` that reuses no segment? Backtracking over darts.
bool no_reuse_path_exists(const TrackNetwork& net, int src, int dst) {
    DartWalker w(net);
    std::vector<bool> used(net.segments().size(), false);
    std::function<bool(int)> go = [&](int dart) -> bool {
        int node = w.head(dart);
        if (net.nodes()[node].type == NodeType::Terminal) return node == dst;
        int seg = dart >> 1;
        for (int nxt : net.incident(node)) {
            if (used[nxt] || nxt == seg) continue;
            int nd = w.dart_from(node, nxt);
            if (!w.traversable(nd)) continue;
            if (!net.transition_ok(node, seg, nxt)) continue;
            used[nxt] = true;
            if (go(nd)) return true;
            used[nxt] = false;
        }
        return false;
    };
    for (int seg : net.incident(src)) {
        int d = w.dart_from(src, seg);
        if (!w.traversable(d)) continue;
        used[seg] = true;
        if (go(d)) return true;
        used[seg] = false;
    }
    return false;
}

}  // namespace

RealizedEdgeSet realized_edges(const TrackNetwork& t) {
    RealizedEdgeSet result;
    DartWalker w(t);
    int nseg = static_cast<int>(t.segments().size());

    for (const auto& start : t.nodes()) {
        if (start.type != NodeType::Terminal) continue;
        // Dart reachability gives candidate targets (a superset: walks may
        // reuse segments); each candidate is then certified by an exact
        // no-reuse path, taking the BFS walk itself when already simple.
        std::vector<int> parent(2 * nseg, -2);  // -2 unvisited, -1 root dart
        std::vector<int> queue;
        for (int seg : t.incident(start.id)) {
            int d = w.dart_from(start.id, seg);
            if (!w.traversable(d)) continue;
            if (parent[d] == -2) {
                parent[d] = -1;
                queue.push_back(d);
            }
        }
        std::set<int> candidates;
        std::map<int, int> first_arrival;  // terminal node -> dart
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int dart = queue[qi];
            int node = w.head(dart);
            if (t.nodes()[node].type == NodeType::Terminal) {
                if (node != start.id && !candidates.count(node)) {
                    candidates.insert(node);
                    first_arrival[node] = dart;
                }
                continue;  // paths end at terminals
            }
            int seg = dart >> 1;
            for (int nxt : t.incident(node)) {
                if (nxt == seg) continue;
                int nd = w.dart_from(node, nxt);
                if (!w.traversable(nd)) continue;
                if (!t.transition_ok(node, seg, nxt)) continue;
                if (parent[nd] == -2) {
                    parent[nd] = dart;
                    queue.push_back(nd);
                }
            }
        }
        for (int target : candidates) {
            bool simple = true;
            std::set<int> seen_segments;
            for (int d = first_arrival[target]; d != -1; d = parent[d])
                if (!seen_segments.insert(d >> 1).second) {
                    simple = false;
                    break;
                }
            bool ok = simple || no_reuse_path_exists(t, start.id, target);
            if (!ok) continue;
            int u = start.terminal_vertex;
            int v = t.nodes()[target].terminal_vertex;
            if (u == v) continue;
            if (t.is_directed())
                result.pairs.insert({u, v});
            else
                result.pairs.insert({std::min(u, v), std::max(u, v)});
        }
    }
    return result;
}

RealizedEdgeSet edge_set_of(const Graph& g) {
    RealizedEdgeSet s;
    for (auto e : g.edges()) s.pairs.insert(e);
    return s;
}

TrackNetwork from_reduction(const ReductionResult& r) {
    if (r.status != ReductionStatus::Planar)
        throw std::invalid_argument("from_reduction: failed reductions rejected");
    TagState tags;
    Graph rebuilt = replay(r.original, r.steps, &tags);
    if (rebuilt != r.reduced)
        throw std::invalid_argument("from_reduction: steps do not replay to the reduced graph");

    TrackNetwork net(r.original.is_directed());
    int n0 = r.original.vertex_count();
    for (int v = 0; v < n0; ++v) net.add_terminal(v);
    std::map<int, const ReductionStep*> step_of;
    for (const auto& s : r.steps) {
        JunctionKind kind = s.kind == StepKind::Clique
                                ? JunctionKind::Clique
                                : (s.kind == StepKind::Biclique ? JunctionKind::Biclique
                                                                : JunctionKind::DirectedBiclique);
        int id = net.add_junction(kind);
        if (id != s.junction_id)
            throw std::invalid_argument("from_reduction: junction ids out of order");
        step_of[id] = &s;
    }
    std::map<Edge, int> seg_of_edge;
    for (auto [u, v] : r.reduced.edges()) seg_of_edge[{u, v}] = net.add_segment(u, v);

    for (const auto& node : net.nodes()) {
        if (node.type != NodeType::Junction) continue;
        const auto& inc = net.incident(node.id);
        if (node.kind == JunctionKind::Clique) {
            for (size_t i = 0; i < inc.size(); ++i)
                for (size_t j = i + 1; j < inc.size(); ++j) net.allow(node.id, inc[i], inc[j]);
        } else if (node.kind == JunctionKind::Biclique) {
            const auto& table = tags.side.at(node.id);
            std::vector<int> a_side, b_side;
            for (int seg : inc) {
                const Segment& s = net.segments()[seg];
                int other = s.a == node.id ? s.b : s.a;
                (table.at(other) == 0 ? a_side : b_side).push_back(seg);
            }
            for (int sa : a_side)
                for (int sb : b_side) net.allow(node.id, sa, sb);
        } else {  // DirectedBiclique
            std::vector<int> in_side, out_side;
            for (int seg : inc) {
                const Segment& s = net.segments()[seg];
                (s.b == node.id ? in_side : out_side).push_back(seg);
            }
            for (int si : in_side)
                for (int so : out_side) net.allow_ordered(node.id, si, so);
        }
    }
    return net;
}

TrackNetwork build_interval_track(const IntervalModel& m) {
    if (m.intervals.empty()) throw std::invalid_argument("interval track needs >= 1 interval");
    for (const auto& [a, b] : m.intervals)
        if (a > b) throw std::invalid_argument("interval with a > b");

    // Rank the distinct endpoint values.
    std::vector<Rational> values;
    for (const auto& [a, b] : m.intervals) {
        values.push_back(a);
        values.push_back(b);
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    auto rank = [&](const Rational& x) {
        return static_cast<int>(std::lower_bound(values.begin(), values.end(), x) - values.begin());
    };
    int R = static_cast<int>(values.size());

    TrackNetwork net(false);
    std::vector<int> terminal(m.intervals.size());
    for (size_t k = 0; k < m.intervals.size(); ++k)
        terminal[k] = net.add_terminal(static_cast<int>(k));

    // Apex lattice over all spans [i,j]. Children trim one endpoint; the
    // roles at an apex: PL extends left, PR extends right, CL trims left,
    // CR trims right.
    std::map<std::pair<int, int>, int> apex;
    for (int i = 0; i < R; ++i)
        for (int j = i; j < R; ++j) apex[{i, j}] = net.add_junction(JunctionKind::Apex);

    std::map<std::pair<int, int>, int> seg_cl, seg_cr;  // keyed by the parent span
    for (int i = 0; i < R; ++i)
        for (int j = i + 1; j < R; ++j) {
            seg_cl[{i, j}] = net.add_segment(apex[{i, j}], apex[{i + 1, j}]);
            seg_cr[{i, j}] = net.add_segment(apex[{i, j}], apex[{i, j - 1}]);
        }
    std::vector<int> foot(m.intervals.size());
    for (size_t k = 0; k < m.intervals.size(); ++k) {
        auto span = std::pair{rank(m.intervals[k].first), rank(m.intervals[k].second)};
        foot[k] = net.add_segment(terminal[k], apex[span]);
    }

    for (int i = 0; i < R; ++i)
        for (int j = i; j < R; ++j) {
            int node = apex[{i, j}];
            std::vector<int> parents, children;
            if (i > 0) parents.push_back(seg_cl[{i - 1, j}]);      // PL
            if (j + 1 < R) parents.push_back(seg_cr[{i, j + 1}]);  // PR
            if (i < j) {
                children.push_back(seg_cl[{i, j}]);
                children.push_back(seg_cr[{i, j}]);
            }
            for (int p : parents)
                for (int c : children) net.allow(node, p, c);
            if (parents.size() == 2) net.allow(node, parents[0], parents[1]);  // the turn
            // Terminal feet connect to everything at their apex.
            std::vector<int> feet;
            for (int seg : net.incident(node)) {
                const Segment& s = net.segments()[seg];
                int other = s.a == node ? s.b : s.a;
                if (net.nodes()[other].type == NodeType::Terminal) feet.push_back(seg);
            }
            for (int f : feet)
                for (int seg : net.incident(node))
                    if (seg != f) net.allow(node, f, seg);
        }
    return net;
}

namespace {

struct CotreeParts {
    std::vector<int> terminal_node;
    std::vector<int> port_node;
    std::vector<int> foot_segment;
};

// Builds the connector construction for `tree` (rooted at 0) into `net`.
// Per vertex: a terminal and a port; per internal vertex: a collector.
// Segments: foot T(v)-P(v); base P(v)-K(parent v); skip P(v)-K(c) for
// internal children c; lift K(v)-K(parent v).
CotreeParts build_cotree_into(TrackNetwork& net, const Graph& tree) {
    int n = tree.vertex_count();
    if (tree.is_directed() || tree.edge_count() != n - 1)
        throw std::invalid_argument("cotree construction needs a tree");

    std::vector<int> parent(n, -1), order;
    std::vector<bool> seen(n, false);
    order.push_back(0);
    seen[0] = true;
    for (size_t i = 0; i < order.size(); ++i)
        for (int w : tree.neighbors(order[i]))
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = order[i];
                order.push_back(w);
            }
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("cotree construction needs a connected tree");

    std::vector<std::vector<int>> children(n);
    for (int v = 0; v < n; ++v)
        if (parent[v] >= 0) children[parent[v]].push_back(v);

    CotreeParts parts;
    parts.terminal_node.resize(n);
    parts.port_node.resize(n);
    parts.foot_segment.resize(n);
    std::vector<int> collector(n, -1);
    for (int v = 0; v < n; ++v) {
        parts.terminal_node[v] = net.add_terminal(v);
        parts.port_node[v] = net.add_junction(JunctionKind::Port);
    }
    for (int v = 0; v < n; ++v)
        if (!children[v].empty()) collector[v] = net.add_junction(JunctionKind::Collector);

    std::vector<int> base(n, -1), lift(n, -1), skip_from_parent(n, -1);
    for (int v = 0; v < n; ++v)
        parts.foot_segment[v] = net.add_segment(parts.terminal_node[v], parts.port_node[v]);
    for (int v = 0; v < n; ++v) {
        if (parent[v] >= 0) base[v] = net.add_segment(parts.port_node[v], collector[parent[v]]);
        if (collector[v] >= 0 && parent[v] >= 0)
            lift[v] = net.add_segment(collector[v], collector[parent[v]]);
    }
    for (int v = 0; v < n; ++v)
        for (int c : children[v])
            if (collector[c] >= 0)
                skip_from_parent[c] = net.add_segment(parts.port_node[v], collector[c]);

    // Port transitions: the foot pairs with the base and with each skip.
    for (int v = 0; v < n; ++v) {
        if (base[v] >= 0) net.allow(parts.port_node[v], parts.foot_segment[v], base[v]);
        for (int c : children[v])
            if (skip_from_parent[c] >= 0)
                net.allow(parts.port_node[v], parts.foot_segment[v], skip_from_parent[c]);
    }

    // Collector transitions at K(v): child bases/lifts pair with each other
    // across children and with the upward segments; a child's own base and
    // lift never pair (that would realize tree edges), and the parent-port
    // skip never pairs with the lift (that would leak around a sibling's
    // collector toward its parent).
    for (int v = 0; v < n; ++v) {
        if (collector[v] < 0) continue;
        int node = collector[v];
        const auto& cs = children[v];
        for (size_t i = 0; i < cs.size(); ++i)
            for (size_t j = 0; j < cs.size(); ++j) {
                if (i == j) continue;
                if (base[cs[i]] >= 0 && base[cs[j]] >= 0 && i < j)
                    net.allow(node, base[cs[i]], base[cs[j]]);
                if (base[cs[i]] >= 0 && lift[cs[j]] >= 0)
                    net.allow(node, base[cs[i]], lift[cs[j]]);
                if (lift[cs[i]] >= 0 && lift[cs[j]] >= 0 && i < j)
                    net.allow(node, lift[cs[i]], lift[cs[j]]);
            }
        std::vector<int> ups;
        if (skip_from_parent[v] >= 0) ups.push_back(skip_from_parent[v]);
        if (lift[v] >= 0) ups.push_back(lift[v]);
        for (int up : ups)
            for (int c : cs) {
                if (base[c] >= 0) net.allow(node, up, base[c]);
                if (lift[c] >= 0) net.allow(node, up, lift[c]);
            }
    }
    return parts;
}

}  // namespace

TrackNetwork build_cotree_track(const Graph& tree) {
    TrackNetwork net(false);
    build_cotree_into(net, tree);
    return net;
}

TrackNetwork build_cograph_track(const CographExpr& e) {
    TrackNetwork net(false);
    int next_vertex = 0;

    // draw(union, comp): joiner whose children are draw(child, comp); the
    // tails cross-connect exactly when the union is complemented.
    // Returns the tail segment attached to `parent`, or -1 for the whole
    // expression when parent < 0.
    std::function<int(const CographExpr&, bool, int)> draw =
        [&](const CographExpr& expr, bool comp, int parent) -> int {
        switch (expr.kind) {
            case CographExpr::Kind::Leaf: {
                int t = net.add_terminal(next_vertex++);
                if (parent < 0) return -1;
                return net.add_segment(t, parent);
            }
            case CographExpr::Kind::Complement:
                return draw(expr.children[0], !comp, parent);
            case CographExpr::Kind::Union: {
                int joiner = net.add_junction(JunctionKind::Joiner);
                std::vector<int> tails;
                for (const auto& c : expr.children) tails.push_back(draw(c, comp, joiner));
                int up = parent < 0 ? -1 : net.add_segment(joiner, parent);
                for (size_t i = 0; i < tails.size(); ++i) {
                    if (up >= 0) net.allow(joiner, tails[i], up);
                    if (comp)
                        for (size_t j = i + 1; j < tails.size(); ++j)
                            net.allow(joiner, tails[i], tails[j]);
                }
                return up;
            }
        }
        throw std::logic_error("unreachable");
    };
    draw(e, false, -1);
    return net;
}

TrackNetwork build_cocycle_track(int n) {
    if (n < 3) throw std::invalid_argument("cocycle construction needs n >= 3");
    TrackNetwork net(false);
    Graph path = make_path(n - 1);
    CotreeParts parts = build_cotree_into(net, path);

    int removed_terminal = net.add_terminal(n - 1);
    int fan = net.add_junction(JunctionKind::Fan);
    int fan_foot = net.add_segment(removed_terminal, fan);
    // Reattach to every path vertex except the removed vertex's two cycle
    // neighbors, 0 and n-2. Arm traffic may only reach that vertex's foot.
    for (int i = 1; i <= n - 3; ++i) {
        int arm = net.add_segment(fan, parts.port_node[i]);
        net.allow(fan, fan_foot, arm);
        net.allow(parts.port_node[i], arm, parts.foot_segment[i]);
    }
    return net;
}

}  // namespace confluent
