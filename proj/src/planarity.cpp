#include "confluent/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include <algorithm>
#include <map>

namespace confluent {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const Graph& g) {
    BoostGraph bg(g.vertex_count());
    int idx = 0;
    for (auto [u, v] : g.edges()) {
        auto e = boost::add_edge(u, v, bg).first;
        boost::put(boost::edge_index, bg, e, idx++);
    }
    return bg;
}

}  // namespace

bool is_planar(const Graph& g) {
    Graph u = g.underlying_undirected();
    int n = u.vertex_count();
    if (n >= 3 && u.edge_count() > 3 * n - 6) return false;
    BoostGraph bg = to_boost(u);
    return boost::boyer_myrvold_planarity_test(bg);
}

Embedding embed(const Graph& g) {
    Graph u = g.underlying_undirected();
    int n = u.vertex_count();
    BoostGraph bg = to_boost(u);

    using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> store(n);
    auto emb_map = boost::make_iterator_property_map(store.begin(),
                                                     boost::get(boost::vertex_index, bg));
    std::vector<EdgeDesc> kuratowski;
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = emb_map,
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
    if (!planar) {
        std::vector<Edge> witness;
        witness.reserve(kuratowski.size());
        for (auto e : kuratowski) {
            int a = static_cast<int>(boost::source(e, bg));
            int b = static_cast<int>(boost::target(e, bg));
            witness.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(witness.begin(), witness.end());
        witness.erase(std::unique(witness.begin(), witness.end()), witness.end());
        throw NonPlanarError(std::move(witness));
    }

    Embedding result;
    result.rotation.resize(n);
    for (int v = 0; v < n; ++v)
        for (auto e : store[v]) {
            int a = static_cast<int>(boost::source(e, bg));
            int b = static_cast<int>(boost::target(e, bg));
            result.rotation[v].push_back(a == v ? b : a);
        }

    // Face walks: from dart (u,v), the next dart is (v,w) where w follows u
    // in the rotation at v. Every dart lies on exactly one walk.
    std::map<Edge, int> pos_in_rotation;  // (v, neighbor) -> index in rotation[v]
    for (int v = 0; v < n; ++v)
        for (size_t i = 0; i < result.rotation[v].size(); ++i)
            pos_in_rotation[{v, result.rotation[v][i]}] = static_cast<int>(i);

    std::map<Edge, bool> visited;
    for (auto [a, b] : u.edges()) {
        visited[{a, b}] = false;
        visited[{b, a}] = false;
    }
    for (int v = 0; v < n; ++v)
        for (int w : result.rotation[v]) {
            Edge dart{v, w};
            if (visited[dart]) continue;
            std::vector<Edge> walk;
            Edge cur = dart;
            while (!visited[cur]) {
                visited[cur] = true;
                walk.push_back(cur);
                int x = cur.first, y = cur.second;
                const auto& rot = result.rotation[y];
                int i = pos_in_rotation[{y, x}];
                int next = rot[(i + 1) % rot.size()];
                cur = {y, next};
            }
            result.faces.push_back(std::move(walk));
        }
    // A component with no edges still bounds one face.
    std::vector<bool> seen(n, false);
    for (int v = 0; v < n; ++v)
        if (u.neighbors(v).empty() && !seen[v]) {
            seen[v] = true;
            result.faces.push_back({});
        }

    result.outer_face = 0;
    for (size_t f = 1; f < result.faces.size(); ++f)
        if (result.faces[f].size() > result.faces[result.outer_face].size())
            result.outer_face = static_cast<int>(f);
    if (result.faces.empty()) {
        result.faces.push_back({});
        result.outer_face = 0;
    }
    return result;
}

int face_count(const Embedding& e) { return static_cast<int>(e.faces.size()); }

}  // namespace confluent
