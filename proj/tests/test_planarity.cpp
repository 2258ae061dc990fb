#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "confluent/graph.hpp"
#include "confluent/planarity.hpp"
#include "oracles.hpp"

using namespace confluent;

TEST_CASE("fixtures: K4 planar; K5, K_{3,3}, petersen minus vertex are not") {
    CHECK(is_planar(make_complete(4)));
    CHECK_FALSE(is_planar(make_complete(5)));
    CHECK_FALSE(is_planar(make_complete_bipartite(3, 3)));
    CHECK_FALSE(is_planar(make_petersen_minus_vertex()));
    CHECK_FALSE(is_planar(make_petersen()));
    CHECK(is_planar(make_hypercube(3)));
    CHECK_FALSE(is_planar(make_hypercube(4)));
}

TEST_CASE("directed inputs are tested on the underlying graph") {
    Graph d = Graph::directed(5);
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v)
            if (u < v) d.add_edge(u, v);
    CHECK_FALSE(is_planar(d));  // underlying K5
}

TEST_CASE("edge-count prefilter agrees") {
    std::mt19937 rng(23);
    for (int it = 0; it < 100; ++it) {
        int n = 3 + static_cast<int>(rng() % 6);
        Graph g = testsupport::gnp(n, 0.8, rng);
        if (g.edge_count() > 3 * n - 6) CHECK_FALSE(is_planar(g));
    }
}

TEST_CASE("random n<=8 graphs agree with the subdivision brute force") {
    std::mt19937 rng(29);
    int nonplanar_seen = 0;
    for (int it = 0; it < 200; ++it) {
        int n = 3 + static_cast<int>(rng() % 6);
        double p = 0.2 + 0.1 * (it % 8);
        Graph g = testsupport::gnp(n, p, rng);
        bool expect = testsupport::brute_force_planar(g);
        CHECK(is_planar(g) == expect);
        if (!expect) ++nonplanar_seen;
    }
    CHECK(nonplanar_seen > 10);  // the sample actually exercises both outcomes
}

TEST_CASE("embed: face counts and Euler's formula") {
    CHECK(face_count(embed(make_cycle(4))) == 2);
    CHECK(face_count(embed(make_complete(4))) == 4);
    CHECK(face_count(embed(make_hypercube(3))) == 6);

    std::mt19937 rng(31);
    for (int it = 0; it < 80; ++it) {
        Graph g = testsupport::gnp(2 + it % 7, 0.45, rng);
        if (!is_planar(g)) continue;
        Embedding e = embed(g);

        // Count connected components.
        int n = g.vertex_count(), comps = 0;
        std::vector<bool> seen(n, false);
        for (int s = 0; s < n; ++s) {
            if (seen[s]) continue;
            ++comps;
            std::vector<int> q{s};
            seen[s] = true;
            for (size_t i = 0; i < q.size(); ++i)
                for (int w : g.neighbors(q[i]))
                    if (!seen[w]) {
                        seen[w] = true;
                        q.push_back(w);
                    }
        }
        // Per-component Euler, summed: V - E + F = 2C when each component
        // keeps its own outer face.
        CHECK(n - g.edge_count() + face_count(e) == 2 * comps);

        // Every dart lies on exactly one face walk.
        std::set<Edge> darts;
        for (const auto& walk : e.faces)
            for (auto d : walk) CHECK(darts.insert(d).second);
        CHECK(static_cast<int>(darts.size()) == 2 * g.edge_count());

        // Rotation lists the neighbors exactly.
        for (int v = 0; v < n; ++v) {
            std::set<int> rot(e.rotation[v].begin(), e.rotation[v].end());
            std::set<int> adj(g.neighbors(v).begin(), g.neighbors(v).end());
            CHECK(rot == adj);
        }
    }
}

TEST_CASE("embed: non-planar input raises with a witness") {
    try {
        embed(make_complete(5));
        FAIL("expected NonPlanarError");
    } catch (const NonPlanarError& e) {
        CHECK_FALSE(e.witness.empty());
        Graph k5 = make_complete(5);
        Graph w = Graph::undirected(5);
        for (auto [u, v] : e.witness) {
            CHECK(k5.has_edge(u, v));
            w.add_edge(u, v);
        }
        CHECK_FALSE(testsupport::brute_force_planar(w));  // the witness itself is non-planar
    }
}

TEST_CASE("embed handles disconnected graphs and isolated vertices") {
    Graph g = Graph::undirected(7);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 4);
    // 5, 6 isolated
    Embedding e = embed(g);
    // triangle: 2 faces; edge: 1; isolated vertices: 1 each.
    CHECK(face_count(e) == 5);
    CHECK(7 - g.edge_count() + face_count(e) == 2 * 4);
}
