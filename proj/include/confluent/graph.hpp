#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace confluent {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

using Edge = std::pair<int, int>;

// Simple graph, undirected or directed. No self loops, no parallel edges;
// for digraphs (u,v) and (v,u) may both exist. Edges are kept sorted, with
// undirected pairs normalized to u < v, so iteration order is deterministic.
class Graph {
public:
    Graph() = default;
    Graph(int n, bool directed) : n_(n), directed_(directed) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        adj_.resize(n);
        in_adj_.resize(n);
    }

    static Graph undirected(int n) { return Graph(n, false); }
    static Graph directed(int n) { return Graph(n, true); }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool is_directed() const { return directed_; }

    int add_vertex() {
        adj_.emplace_back();
        in_adj_.emplace_back();
        return n_++;
    }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    // Removes the vertex with the largest id; it must be isolated.
    void pop_isolated_vertex();

    bool has_edge(int u, int v) const;
    // Neighbors in sorted order. For digraphs these are out-neighbors.
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    const std::vector<int>& in_neighbors(int v) const { return in_adj_.at(v); }
    int degree(int v) const;

    const std::vector<Edge>& edges() const { return edges_; }

    void set_label(int v, const std::string& name);
    std::optional<std::string> label(int v) const;
    const std::map<int, std::string>& labels() const { return labels_; }

    Graph underlying_undirected() const;

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && directed_ == o.directed_ && edges_ == o.edges_;
    }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
    }
    Edge normalize(int u, int v) const {
        if (!directed_ && u > v) std::swap(u, v);
        return {u, v};
    }

    int n_ = 0;
    bool directed_ = false;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> in_adj_;
    std::map<int, std::string> labels_;
};

// Edge-list document: first line "n m directed|undirected", then m lines
// "u v", plus optional "# label u name" comment lines. Duplicate edge lines
// collapse to one edge. Errors carry 1-based line numbers.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

Graph complement(const Graph& g);
Graph subdivide(const Graph& g);

using Rational = boost::rational<long long>;

struct IntervalModel {
    // Closed intervals [first, second] with first <= second.
    std::vector<std::pair<Rational, Rational>> intervals;
};

// Vertex per interval (input order); edge iff closed intervals intersect
// (touching endpoints count). Comparisons are exact.
Graph interval_graph(const IntervalModel& m);

// Cograph expression: Leaf(label) | Union(children >= 2) | Complement(child).
struct CographExpr {
    enum class Kind { Leaf, Union, Complement };
    Kind kind = Kind::Leaf;
    std::string label;                  // Leaf
    std::vector<CographExpr> children;  // Union (>= 2) / Complement (1)

    static CographExpr leaf(std::string name) {
        CographExpr e;
        e.kind = Kind::Leaf;
        e.label = std::move(name);
        return e;
    }
    static CographExpr union_of(std::vector<CographExpr> cs);
    static CographExpr complement_of(CographExpr c);
};

// Text form: leaf names, +-separated unions in parens, ~ for complement,
// e.g. "~(~(a+b) + c)".
CographExpr parse_cograph_expr(const std::string& text);

// Evaluates the expression to its graph; leaves become vertices 0..k-1 in
// left-to-right order and keep their labels. Complement(Complement(e))
// collapses; Complement of a leaf is the leaf.
Graph cograph_graph(const CographExpr& e);

// Prüfer decode: sequence over 0..n-1 of length n-2 gives a labeled tree on
// n vertices (n >= 2).
Graph tree_from_prufer(const std::vector<int>& seq);

// Named families. Deterministic labelings: hypercube vertex = bitstring
// value; petersen = outer cycle 0..4, inner pentagram 5..9, spokes i -> i+5;
// petersen_minus_vertex drops vertex 9.
Graph make_complete(int n);
Graph make_complete_bipartite(int m, int n);
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_hypercube(int d);
Graph make_petersen();
Graph make_petersen_minus_vertex();

}  // namespace confluent
