#include "confluent/layout.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <queue>

namespace confluent {

namespace {

bool connected_without(const Graph& g, int skip1, int skip2) {
    int n = g.vertex_count();
    int start = -1;
    for (int v = 0; v < n && start < 0; ++v)
        if (v != skip1 && v != skip2) start = v;
    if (start < 0) return true;
    std::vector<bool> seen(n, false);
    seen[start] = true;
    std::queue<int> q;
    q.push(start);
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (w == skip1 || w == skip2 || seen[w]) continue;
            seen[w] = true;
            ++reached;
            q.push(w);
        }
    }
    int expected = n - (skip1 >= 0 ? 1 : 0) - (skip2 >= 0 && skip2 != skip1 ? 1 : 0);
    return reached == expected;
}

bool is_three_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n < 4) return false;
    if (!connected_without(g, -1, -1)) return false;
    for (int a = 0; a < n; ++a)
        if (!connected_without(g, a, -1)) return false;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!connected_without(g, a, b)) return false;
    return true;
}

// Fixes the outer face on a regular polygon and solves the barycentric
// system for the interior.
std::vector<Point> tutte_positions(const Graph& g, const Embedding& e) {
    int n = g.vertex_count();
    std::vector<int> boundary;
    for (auto [u, v] : e.faces[e.outer_face]) {
        (void)v;
        if (std::find(boundary.begin(), boundary.end(), u) == boundary.end())
            boundary.push_back(u);
    }
    std::vector<bool> fixed(n, false);
    std::vector<Point> pos(n);
    int k = static_cast<int>(boundary.size());
    for (int i = 0; i < k; ++i) {
        double angle = 2.0 * M_PI * i / k - M_PI / 2.0;
        pos[boundary[i]] = {std::cos(angle), std::sin(angle)};
        fixed[boundary[i]] = true;
    }
    std::vector<int> inner;
    std::vector<int> idx(n, -1);
    for (int v = 0; v < n; ++v)
        if (!fixed[v]) {
            idx[v] = static_cast<int>(inner.size());
            inner.push_back(v);
        }
    int m = static_cast<int>(inner.size());
    if (m > 0) {
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
        Eigen::VectorXd bx = Eigen::VectorXd::Zero(m), by = Eigen::VectorXd::Zero(m);
        for (int i = 0; i < m; ++i) {
            int v = inner[i];
            double deg = static_cast<double>(g.neighbors(v).size());
            A(i, i) = deg;
            for (int w : g.neighbors(v)) {
                if (fixed[w]) {
                    bx(i) += pos[w].x;
                    by(i) += pos[w].y;
                } else {
                    A(i, idx[w]) -= 1.0;
                }
            }
        }
        Eigen::VectorXd sx = A.partialPivLu().solve(bx);
        Eigen::VectorXd sy = A.partialPivLu().solve(by);
        for (int i = 0; i < m; ++i) pos[inner[i]] = {sx(i), sy(i)};
    }
    return pos;
}

// Deterministic stress majorization over BFS distances, started from a
// circle in node order.
std::vector<Point> stress_positions(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Point> pos(n);
    for (int v = 0; v < n; ++v) {
        double angle = 2.0 * M_PI * v / std::max(1, n);
        pos[v] = {std::cos(angle) * (1.0 + 0.01 * v), std::sin(angle) * (1.0 + 0.01 * v)};
    }
    if (n <= 2) return pos;
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        std::queue<int> q;
        dist[s][s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v))
                if (dist[s][w] < 0) {
                    dist[s][w] = dist[s][v] + 1;
                    q.push(w);
                }
        }
    }
    int diameter = 1;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) diameter = std::max(diameter, dist[a][b]);
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<Point> next(n, {0, 0});
        for (int v = 0; v < n; ++v) {
            double wsum = 0;
            double nx = 0, ny = 0;
            for (int u = 0; u < n; ++u) {
                if (u == v) continue;
                double d = dist[v][u] < 0 ? 2.0 * diameter : dist[v][u];
                double w = 1.0 / (d * d);
                double dx = pos[v].x - pos[u].x, dy = pos[v].y - pos[u].y;
                double len = std::sqrt(dx * dx + dy * dy);
                if (len < 1e-12) {
                    // Coincident points: push apart along a fixed direction.
                    dx = 1e-6 * (v - u);
                    dy = 1e-6;
                    len = std::sqrt(dx * dx + dy * dy);
                }
                nx += w * (pos[u].x + d * dx / len);
                ny += w * (pos[u].y + d * dy / len);
                wsum += w;
            }
            next[v] = {nx / wsum, ny / wsum};
        }
        pos = std::move(next);
    }
    return pos;
}

void enforce_min_separation(std::vector<Point>& pos) {
    if (pos.size() < 2) return;
    double minx = pos[0].x, maxx = pos[0].x, miny = pos[0].y, maxy = pos[0].y;
    for (const auto& p : pos) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    double diag = std::hypot(maxx - minx, maxy - miny);
    if (diag < 1e-12) diag = 1.0;
    double eps = 1e-6 * diag;
    for (size_t a = 0; a < pos.size(); ++a)
        for (size_t b = a + 1; b < pos.size(); ++b) {
            if (std::hypot(pos[a].x - pos[b].x, pos[a].y - pos[b].y) < eps) {
                pos[b].x += eps * (1.0 + static_cast<double>(b - a));
                pos[b].y += eps;
            }
        }
}

}  // namespace

Layout layout_network(const TrackNetwork& t, const Embedding& e) {
    Graph g = t.underlying_graph();
    if (static_cast<int>(e.rotation.size()) != g.vertex_count())
        throw std::invalid_argument("layout: embedding does not match the network");
    Layout l;
    bool tutte = is_three_connected(g);
    l.fallback = !tutte;
    l.position = tutte ? tutte_positions(g, e) : stress_positions(g);
    enforce_min_separation(l.position);

    // Normalize to a unit-ish box.
    double minx = 1e18, maxx = -1e18, miny = 1e18, maxy = -1e18;
    for (const auto& p : l.position) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    if (l.position.empty()) minx = miny = 0, maxx = maxy = 1;
    double spanx = std::max(maxx - minx, 1e-9), spany = std::max(maxy - miny, 1e-9);
    double scale = 1.0 / std::max(spanx, spany);
    for (auto& p : l.position) {
        p.x = (p.x - minx) * scale;
        p.y = (p.y - miny) * scale;
    }
    l.width = spanx * scale;
    l.height = spany * scale;

    // Cubic curves: control points pull toward the junction center so that
    // same-junction segments approach tangentially; cosmetic only.
    for (const auto& s : t.segments()) {
        CurvedSegment c;
        c.segment_id = s.id;
        Point a = l.position[s.a], b = l.position[s.b];
        c.p0 = a;
        c.p3 = b;
        auto control = [&](int node, Point from, Point to) {
            double dx = to.x - from.x, dy = to.y - from.y;
            Point base{from.x + dx / 3.0, from.y + dy / 3.0};
            if (t.nodes()[node].type == NodeType::Junction) {
                // Bend slightly around the junction.
                double len = std::hypot(dx, dy);
                if (len > 1e-12) {
                    base.x += -dy / len * 0.03;
                    base.y += dx / len * 0.03;
                }
            }
            return base;
        };
        c.c1 = control(s.a, a, b);
        c.c2 = control(s.b, b, a);
        l.curves.push_back(c);
    }
    return l;
}

}  // namespace confluent
