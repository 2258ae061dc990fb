#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "confluent/graph.hpp"
#include "confluent/reduction.hpp"

namespace confluent {

enum class NodeType { Terminal, Junction };

// How a junction's transition table was produced. The first three come from
// reduction steps; the rest belong to the closed-form constructions.
enum class JunctionKind {
    Clique,            // traffic circle: every incident pair connects
    Biclique,          // A-side segments connect to B-side segments only
    DirectedBiclique,  // incoming arcs connect to outgoing arcs only
    Apex,              // interval span lattice node
    Port,              // per-vertex attachment point
    Collector,         // per-subtree merge point
    Joiner,            // tail joint
    Fan,               // reattachment fan
};

struct TrackNode {
    int id = -1;
    NodeType type = NodeType::Terminal;
    JunctionKind kind = JunctionKind::Clique;  // junctions only
    int terminal_vertex = -1;                  // terminals only
};

struct Segment {
    int id = -1;
    int a = -1;  // tail node (source when the network is directed)
    int b = -1;
};

// Combinatorial stand-in for a confluent drawing: terminals and junctions
// joined by segments, with per-junction allowed segment-to-segment
// transitions. Terminal nodes permit all transition pairs among their
// incident segments; a smooth path starts and ends at terminals.
class TrackNetwork {
public:
    explicit TrackNetwork(bool directed = false) : directed_(directed) {}

    bool is_directed() const { return directed_; }
    int add_terminal(int vertex);
    int add_junction(JunctionKind kind);
    int add_segment(int a, int b);

    void allow(int node, int seg1, int seg2);          // undirected pair
    void allow_ordered(int node, int seg_in, int seg_out);

    const std::vector<TrackNode>& nodes() const { return nodes_; }
    const std::vector<Segment>& segments() const { return segments_; }
    const std::vector<int>& incident(int node) const { return incident_.at(node); }
    const std::set<std::pair<int, int>>& transitions(int node) const {
        return transitions_.at(node);
    }

    // True when a path entering `node` along seg_in may continue along
    // seg_out. Terminals allow every pair.
    bool transition_ok(int node, int seg_in, int seg_out) const;

    // The node/segment graph, for planarity checks and layout.
    Graph underlying_graph() const;

    std::string to_json() const;

private:
    bool directed_;
    std::vector<TrackNode> nodes_;
    std::vector<Segment> segments_;
    std::vector<std::vector<int>> incident_;
    std::vector<std::set<std::pair<int, int>>> transitions_;
};

struct RealizedEdgeSet {
    // Terminal vertex ids; normalized (min,max) pairs when undirected.
    std::set<std::pair<int, int>> pairs;

    bool operator==(const RealizedEdgeSet& o) const { return pairs == o.pairs; }
};

// (u,v) is realized iff a path of segments joins Terminal u to Terminal v
// such that every consecutive pair is an allowed transition at the shared
// junction and no segment is traversed twice in either direction. Directed
// networks follow segment directions.
RealizedEdgeSet realized_edges(const TrackNetwork& t);

RealizedEdgeSet edge_set_of(const Graph& g);

// Builds the track network of a successful reduction: terminals for the
// original vertices, one junction per step, one segment per reduced edge.
// realized_edges of the result equals the original edge set.
TrackNetwork from_reduction(const ReductionResult& r);

// Single-track span lattice; realized edges = the interval intersection
// graph (vertex k per interval, input order).
TrackNetwork build_interval_track(const IntervalModel& m);

// Recursive connector construction over the tree rooted at vertex 0;
// realized edges = complement(tree).
TrackNetwork build_cotree_track(const Graph& tree);

// Recursive tail construction; realized edges = cograph_graph(e).
TrackNetwork build_cograph_track(const CographExpr& e);

// Cotree track of the path 0..n-2 plus a fan reattaching vertex n-1 to all
// path vertices except its two cycle neighbors; realized = complement(C_n).
TrackNetwork build_cocycle_track(int n);

}  // namespace confluent
