#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "confluent/graph.hpp"

namespace confluent {

// Acyclic orientation with bounded outdegree, from min-degree peeling.
// Edge (u,v) points from the earlier-peeled endpoint to the later one, so
// every outdegree is at most the degeneracy d.
struct Orientation {
    int d = 0;
    std::vector<int> order;  // peeling order
    std::vector<int> pos;    // pos[v] = index of v in order
    std::vector<std::vector<int>> out;  // out-neighbors, sorted

    bool arc_from(int u, int v) const { return pos[u] < pos[v]; }
};

Orientation orient(const Graph& g);
int degeneracy(const Graph& g);

// All maximal cliques of size >= min_size, sorted by size descending, ties
// by lexicographic vertex order. Members sorted ascending.
std::vector<std::vector<int>> list_max_cliques(const Graph& g, int min_size);

// Complete bipartite subgraph; sides sorted, disjoint, each nonempty, and
// side_a <= side_b lexicographically so the pair is canonical.
struct Biclique {
    std::vector<int> side_a;
    std::vector<int> side_b;

    int size() const { return static_cast<int>(side_a.size() + side_b.size()); }
    bool operator==(const Biclique& o) const {
        return side_a == o.side_a && side_b == o.side_b;
    }
    bool operator<(const Biclique& o) const {
        if (side_a != o.side_a) return side_a < o.side_a;
        return side_b < o.side_b;
    }
};

Biclique make_biclique(std::vector<int> a, std::vector<int> b);

// All maximal complete bipartite subgraphs with both sides >= 2, sorted by
// size descending, ties lexicographic. One side of each is a tuple of the
// orientation (a subset of some vertex's out-neighbors); the other side is
// its set of common neighbors.
std::vector<Biclique> list_max_bicliques(const Graph& g);

// Directed complete bipartite subgraph: every pair (a in A, b in B) is an
// arc a->b of the host digraph.
struct DirectedBiclique {
    std::vector<int> side_a;  // sources
    std::vector<int> side_b;  // targets

    int size() const { return static_cast<int>(side_a.size() + side_b.size()); }
    bool operator==(const DirectedBiclique& o) const {
        return side_a == o.side_a && side_b == o.side_b;
    }
    bool operator<(const DirectedBiclique& o) const {
        if (side_a != o.side_a) return side_a < o.side_a;
        return side_b < o.side_b;
    }
};

// For each maximal biclique of the underlying undirected graph, the larger
// side is partitioned by its exact vector of arc directions toward the
// smaller side; every group of >= 2 vertices with a one-way sub-side of
// size >= 2 yields a DirectedBiclique. Sorted by size desc, ties lex.
std::vector<DirectedBiclique> directed_bicliques(const Graph& d);

// Dynamic maximal-biclique index: a tuple table keyed by vertex sets, with
// creator sets and common-neighbor side lists, inverted member/side
// indexes, and a size-bucketed queue of the maximal bicliques. After any
// valid replacement edit it is equivalent to rebuilding from scratch.
class BicliqueIndex {
public:
    static BicliqueIndex build(const Graph& g);

    // Applies one replacement: `removed` edges leave the graph, `new_vertex`
    // (which must be the next fresh id) appears, `added` edges (all incident
    // to new_vertex) join. Orientation update: members with an outgoing
    // removed edge point at the new vertex, the rest receive arcs from it.
    void apply_replacement(const std::vector<Edge>& removed, int new_vertex,
                           const std::vector<Edge>& added);

    std::vector<Biclique> retrievable() const;
    std::optional<Biclique> largest() const;

    const Graph& current() const { return g_; }
    int outdegree_bound() const { return d_; }
    long long tuple_count() const { return static_cast<long long>(tuples_.size()); }
    // Maintained orientation, for invariant checks.
    bool arc_from(int u, int v) const;
    int outdegree(int v) const { return static_cast<int>(out_.at(v).size()); }

private:
    struct TupleEntry {
        std::set<int> creators;
        std::vector<int> side;  // common neighbors of the tuple
        bool maximal = false;
    };
    using TupleKey = std::vector<int>;

    void insert_creator(int w);
    void retract_creator(int w, const std::vector<int>& old_out);
    void refresh_tuple(const TupleKey& key);
    void unregister_biclique(const TupleKey& key);
    void register_biclique(const TupleKey& key);

    Graph g_;
    int d_ = 0;
    std::vector<int> order_;
    std::vector<int> pos_;
    std::vector<std::vector<int>> out_;

    std::map<TupleKey, TupleEntry> tuples_;
    std::map<int, std::set<TupleKey>> member_of_;  // vertex -> tuples containing it
    std::map<int, std::set<TupleKey>> side_of_;    // vertex -> tuples whose side has it
    std::map<TupleKey, Biclique> tuple_biclique_;  // current biclique per maximal tuple
    std::map<Biclique, std::set<TupleKey>> biclique_sources_;
    std::map<int, std::set<Biclique>, std::greater<int>> buckets_;  // by size
};

BicliqueIndex build_index(const Graph& g);
void apply_replacement(BicliqueIndex& index, const std::vector<Edge>& removed,
                       int new_vertex, const std::vector<Edge>& added);

}  // namespace confluent
