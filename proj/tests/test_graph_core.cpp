#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "confluent/graph.hpp"
#include "oracles.hpp"

using namespace confluent;

TEST_CASE("parse: path on 3 vertices") {
    Graph g = parse_graph("3 2 undirected\n0 1\n1 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK_FALSE(g.is_directed());
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("parse: single arc") {
    Graph g = parse_graph("2 1 directed\n0 1\n");
    CHECK(g.is_directed());
    CHECK(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(1, 0));
}

TEST_CASE("parse: self loop rejected with line number") {
    CHECK_THROWS_WITH_AS(parse_graph("2 1 undirected\n0 0\n"),
                         doctest::Contains("line 2"), ParseError);
}

TEST_CASE("parse: malformed header and bad ids name their line") {
    CHECK_THROWS_WITH_AS(parse_graph("x y z\n"), doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("2 1 undirected\n0 7\n"), doctest::Contains("line 2"),
                         ParseError);
    CHECK_THROWS_AS(parse_graph("2 3 undirected\n0 1\n"), ParseError);
}

TEST_CASE("parse: duplicate edge lines collapse, labels survive") {
    Graph g = parse_graph("3 3 undirected\n0 1\n1 0\n1 2\n# label 0 alpha\n");
    CHECK(g.edge_count() == 2);
    CHECK(g.label(0) == std::string("alpha"));
    Graph round = parse_graph(serialize_graph(g));
    CHECK(round == g);
    CHECK(round.label(0) == std::string("alpha"));
}

TEST_CASE("complement: K5 is empty, P6 has 10 edges, involution") {
    CHECK(complement(make_complete(5)).edge_count() == 0);
    CHECK(complement(make_path(6)).edge_count() == 10);
    Graph p = make_petersen();
    CHECK(complement(complement(p)) == p);
    CHECK_THROWS_AS(complement(Graph::directed(3)), std::invalid_argument);
}

TEST_CASE("complement involution and cotree edge count on random graphs") {
    std::mt19937 rng(7);
    for (int it = 0; it < 40; ++it) {
        Graph g = testsupport::gnp(2 + it % 9, 0.4, rng);
        CHECK(complement(complement(g)) == g);
    }
    for (int n = 2; n <= 12; ++n) {
        Graph t = testsupport::random_tree(n, rng);
        CHECK(t.edge_count() == n - 1);
        CHECK(complement(t).edge_count() == n * (n - 1) / 2 - (n - 1));
    }
}

TEST_CASE("subdivide: counts, C6, bipartite, girth >= 6") {
    Graph k5 = make_complete(5);
    Graph s = subdivide(k5);
    CHECK(s.vertex_count() == 15);
    CHECK(s.edge_count() == 20);

    Graph tri = make_cycle(3);
    Graph c6 = subdivide(tri);
    CHECK(c6.vertex_count() == 6);
    CHECK(c6.edge_count() == 6);
    CHECK(testsupport::girth(c6) == 6);

    std::mt19937 rng(11);
    for (int it = 0; it < 25; ++it) {
        Graph g = testsupport::gnp(3 + it % 6, 0.5, rng);
        Graph sub = subdivide(g);
        CHECK(testsupport::is_bipartite(sub));
        int gir = testsupport::girth(sub);
        CHECK((gir == -1 || gir >= 6));
    }
}

TEST_CASE("generate: hypercube") {
    Graph q4 = make_hypercube(4);
    CHECK(q4.vertex_count() == 16);
    CHECK(q4.edge_count() == 32);
    CHECK(q4.label(5) == std::string("0101"));
    CHECK_THROWS_AS(make_hypercube(0), std::invalid_argument);
}

TEST_CASE("generate: petersen and petersen minus a vertex") {
    Graph p = make_petersen();
    CHECK(p.vertex_count() == 10);
    CHECK(p.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
    CHECK(testsupport::girth(p) == 5);

    Graph pm = make_petersen_minus_vertex();
    CHECK(pm.vertex_count() == 9);
    CHECK(pm.edge_count() == 12);
    // Homeomorphic to K_{3,3}: three vertices of degree 2, six of degree 3,
    // and smoothing the degree-2 vertices leaves K_{3,3}.
    int deg2 = 0, deg3 = 0;
    for (int v = 0; v < 9; ++v) {
        if (pm.degree(v) == 2) ++deg2;
        if (pm.degree(v) == 3) ++deg3;
    }
    CHECK(deg2 == 3);
    CHECK(deg3 == 6);
    CHECK_FALSE(testsupport::brute_force_planar(pm));
}

TEST_CASE("generate: interval graphs by exact intersection") {
    IntervalModel m;
    m.intervals = {{Rational(0), Rational(2)}, {Rational(1), Rational(4)},
                   {Rational(3), Rational(5)}};
    Graph g = interval_graph(m);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));

    // Closed intervals: touching endpoints intersect, rationals compare exactly.
    IntervalModel touch;
    touch.intervals = {{Rational(0), Rational(2)}, {Rational(2), Rational(3)},
                       {Rational(1, 3), Rational(1, 3)}};
    Graph t = interval_graph(touch);
    CHECK(t.has_edge(0, 1));
    CHECK(t.has_edge(0, 2));
    CHECK_FALSE(t.has_edge(1, 2));

    // Duplicates become twin vertices.
    IntervalModel twins;
    twins.intervals = {{Rational(0), Rational(1)}, {Rational(0), Rational(1)}};
    CHECK(interval_graph(twins).has_edge(0, 1));
}

TEST_CASE("interval graphs match the pairwise brute force on random models") {
    std::mt19937 rng(3);
    for (int it = 0; it < 60; ++it) {
        auto m = testsupport::random_interval_model(2 + it % 9, rng);
        Graph g = interval_graph(m);
        for (size_t i = 0; i < m.intervals.size(); ++i)
            for (size_t j = i + 1; j < m.intervals.size(); ++j) {
                bool expect = m.intervals[j].first <= m.intervals[i].second &&
                              m.intervals[i].first <= m.intervals[j].second;
                CHECK(g.has_edge(static_cast<int>(i), static_cast<int>(j)) == expect);
            }
    }
}

TEST_CASE("cograph expressions: parse, evaluate, labels") {
    CographExpr e = parse_cograph_expr("~(~(a+b) + c)");
    Graph g = cograph_graph(e);
    REQUIRE(g.vertex_count() == 3);
    // complement(union(K2{a,b}, c)): ab vanishes, ac and bc appear.
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(1, 2));
    CHECK(g.label(0) == std::string("a"));
    CHECK(g.label(2) == std::string("c"));

    CHECK(cograph_graph(parse_cograph_expr("~(a+b)")).edge_count() == 1);
    CHECK(cograph_graph(parse_cograph_expr("(a+b)")).edge_count() == 0);
    CHECK_THROWS_AS(parse_cograph_expr("~(a+"), ParseError);
}

TEST_CASE("cograph evaluation agrees with direct set complement/union") {
    std::mt19937 rng(5);
    for (int it = 0; it < 50; ++it) {
        CographExpr e = testsupport::random_cograph_expr(8, rng);
        Graph g = cograph_graph(e);
        // Independent route: evaluate over explicit adjacency sets.
        std::function<std::vector<std::vector<bool>>(const CographExpr&)> eval =
            [&](const CographExpr& x) -> std::vector<std::vector<bool>> {
            if (x.kind == CographExpr::Kind::Leaf) return {{false}};
            if (x.kind == CographExpr::Kind::Complement) {
                auto m = eval(x.children[0]);
                for (size_t i = 0; i < m.size(); ++i)
                    for (size_t j = 0; j < m.size(); ++j)
                        if (i != j) m[i][j] = !m[i][j];
                return m;
            }
            std::vector<std::vector<bool>> all;
            for (const auto& c : x.children) {
                auto m = eval(c);
                size_t off = all.size();
                for (auto& row : all) row.resize(all.size() + m.size(), false);
                for (size_t i = 0; i < m.size(); ++i) {
                    std::vector<bool> row(off, false);
                    row.insert(row.end(), m[i].begin(), m[i].end());
                    all.push_back(std::move(row));
                }
            }
            return all;
        };
        auto m = eval(e);
        REQUIRE(static_cast<int>(m.size()) == g.vertex_count());
        for (int i = 0; i < g.vertex_count(); ++i)
            for (int j = i + 1; j < g.vertex_count(); ++j)
                CHECK(g.has_edge(i, j) == m[i][j]);
    }
}

TEST_CASE("trees from prüfer sequences") {
    Graph t = tree_from_prufer({3, 3, 3, 4});
    CHECK(t.vertex_count() == 6);
    CHECK(t.edge_count() == 5);
    CHECK(t.degree(3) == 4);
    std::mt19937 rng(13);
    for (int it = 0; it < 40; ++it) {
        int n = 2 + static_cast<int>(rng() % 11);
        Graph tr = testsupport::random_tree(n, rng);
        CHECK(tr.edge_count() == n - 1);
        CHECK(testsupport::girth(tr) == -1);
        CHECK(testsupport::brute_force_planar(tr));
    }
}

TEST_CASE("generator parameter validation") {
    CHECK_THROWS_AS(make_complete(0), std::invalid_argument);
    CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(make_complete_bipartite(0, 3), std::invalid_argument);
}
