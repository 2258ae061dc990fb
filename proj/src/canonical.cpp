#include "confluent/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace confluent {

namespace {

using Partition = std::vector<std::vector<int>>;

// Splits cells by (color, neighbor count per cell) until equitable. Cell
// order is deterministic: sub-cells replace their cell, ordered by signature.
void refine(const ColoredGraph& g, Partition& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> cell_of(g.n);
        for (size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
        Partition next;
        next.reserve(cells.size());
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> groups;
            for (int v : cell) {
                std::vector<int> sig(cells.size(), 0);
                for (size_t c = 0; c < cells.size(); ++c)
                    for (int w : cells[c])
                        if (g.has_edge(v, w)) ++sig[c];
                groups[sig].push_back(v);
            }
            if (groups.size() > 1) changed = true;
            for (auto& [sig, verts] : groups) next.push_back(std::move(verts));
        }
        cells = std::move(next);
    }
}

std::string leaf_certificate(const ColoredGraph& g, const Partition& cells,
                             std::vector<int>& to_canonical) {
    to_canonical.assign(g.n, -1);
    std::vector<int> order;
    order.reserve(g.n);
    for (const auto& cell : cells) order.push_back(cell[0]);
    for (int i = 0; i < g.n; ++i) to_canonical[order[i]] = i;

    std::string cert;
    cert.reserve(g.n * 4 + g.n * g.n / 8 + 8);
    cert.push_back(static_cast<char>(g.n & 0xff));
    cert.push_back(static_cast<char>((g.n >> 8) & 0xff));
    for (int v : order) {
        cert.push_back(static_cast<char>(g.color[v] & 0xff));
        cert.push_back(static_cast<char>((g.color[v] >> 8) & 0xff));
    }
    uint8_t acc = 0;
    int bits = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            acc = static_cast<uint8_t>((acc << 1) | (g.has_edge(order[i], order[j]) ? 1 : 0));
            if (++bits == 8) {
                cert.push_back(static_cast<char>(acc));
                acc = 0;
                bits = 0;
            }
        }
    if (bits) cert.push_back(static_cast<char>(acc << (8 - bits)));
    return cert;
}

struct Search {
    const ColoredGraph& g;
    std::string best;
    std::vector<int> best_perm;
    bool have_best = false;

    explicit Search(const ColoredGraph& graph) : g(graph) {}

    void visit(Partition cells) {
        refine(g, cells);
        int target = -1;
        for (size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1) {
                target = static_cast<int>(c);
                break;
            }
        if (target < 0) {
            std::vector<int> perm;
            std::string cert = leaf_certificate(g, cells, perm);
            if (!have_best || cert < best) {
                best = std::move(cert);
                best_perm = std::move(perm);
                have_best = true;
            }
            return;
        }
        for (int v : cells[target]) {
            Partition child;
            child.reserve(cells.size() + 1);
            for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
                if (c == target) {
                    child.push_back({v});
                    std::vector<int> rest;
                    for (int w : cells[c])
                        if (w != v) rest.push_back(w);
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(cells[c]);
                }
            }
            visit(std::move(child));
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const ColoredGraph& g) {
    if (g.n == 0) return CanonicalForm{std::string("\0\0", 2), {}};
    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < g.n; ++v) by_color[g.color[v]].push_back(v);
    Partition initial;
    for (auto& [col, verts] : by_color) initial.push_back(std::move(verts));
    Search s(g);
    s.visit(std::move(initial));
    if (!s.have_best) throw std::logic_error("canonical labeling found no leaf");
    return CanonicalForm{std::move(s.best), std::move(s.best_perm)};
}

}  // namespace confluent
