#include <cmath>
#include <cstdio>
#include <sstream>

#include "confluent/layout.hpp"

namespace confluent {

namespace {

// Fixed 3-decimal formatting keeps output byte-identical across runs.
std::string num(double v) {
    char buf[48];
    if (std::abs(v) < 5e-4) v = 0.0;  // avoid "-0.000"
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

Point bezier_at(const CurvedSegment& c, double t) {
    double u = 1.0 - t;
    double bx = u * u * u * c.p0.x + 3 * u * u * t * c.c1.x + 3 * u * t * t * c.c2.x +
                t * t * t * c.p3.x;
    double by = u * u * u * c.p0.y + 3 * u * u * t * c.c1.y + 3 * u * t * t * c.c2.y +
                t * t * t * c.p3.y;
    return {bx, by};
}

Point bezier_tangent(const CurvedSegment& c, double t) {
    double u = 1.0 - t;
    double tx = 3 * u * u * (c.c1.x - c.p0.x) + 6 * u * t * (c.c2.x - c.c1.x) +
                3 * t * t * (c.p3.x - c.c2.x);
    double ty = 3 * u * u * (c.c1.y - c.p0.y) + 6 * u * t * (c.c2.y - c.c1.y) +
                3 * t * t * (c.p3.y - c.c2.y);
    return {tx, ty};
}

const char* junction_class(JunctionKind k) {
    switch (k) {
        case JunctionKind::Clique: return "clique";
        case JunctionKind::Biclique: return "biclique";
        case JunctionKind::DirectedBiclique: return "directed-biclique";
        case JunctionKind::Apex: return "apex";
        case JunctionKind::Port: return "port";
        case JunctionKind::Collector: return "collector";
        case JunctionKind::Joiner: return "joiner";
        case JunctionKind::Fan: return "fan";
    }
    return "junction";
}

}  // namespace

std::string emit_svg(const TrackNetwork& t, const Layout& l, const RenderOptions& o) {
    if (o.canvas_width <= 0 || o.canvas_height <= 0 || o.junction_radius <= 0 ||
        o.terminal_radius <= 0 || o.stroke_width <= 0)
        throw std::invalid_argument("render options must be positive");

    double margin = 0.08 * std::min(o.canvas_width, o.canvas_height);
    double sx = (o.canvas_width - 2 * margin) / std::max(l.width, 1e-9);
    double sy = (o.canvas_height - 2 * margin) / std::max(l.height, 1e-9);
    double s = std::min(sx, sy);
    auto X = [&](double x) { return margin + x * s; };
    auto Y = [&](double y) { return margin + y * s; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(o.canvas_width)
        << "\" height=\"" << num(o.canvas_height) << "\" viewBox=\"0 0 " << num(o.canvas_width)
        << " " << num(o.canvas_height) << "\">\n";
    if (l.fallback) out << "  <!-- layout: stress fallback (not 3-connected) -->\n";
    out << "  <g class=\"tracks\" fill=\"none\" stroke=\"#335\" stroke-width=\""
        << num(o.stroke_width) << "\">\n";
    for (const auto& c : l.curves) {
        out << "    <path id=\"seg-" << c.segment_id << "\" d=\"M " << num(X(c.p0.x)) << " "
            << num(Y(c.p0.y)) << " C " << num(X(c.c1.x)) << " " << num(Y(c.c1.y)) << ", "
            << num(X(c.c2.x)) << " " << num(Y(c.c2.y)) << ", " << num(X(c.p3.x)) << " "
            << num(Y(c.p3.y)) << "\"/>\n";
    }
    out << "  </g>\n";

    if (t.is_directed() && o.arrowheads) {
        out << "  <g class=\"arrows\" fill=\"#335\">\n";
        for (const auto& c : l.curves) {
            Point p = bezier_at(c, 0.6);
            Point d = bezier_tangent(c, 0.6);
            double len = std::hypot(d.x, d.y);
            if (len < 1e-12) continue;
            double ux = d.x / len, uy = d.y / len;
            double size = o.stroke_width * 3.0;
            double px = X(p.x), py = Y(p.y);
            out << "    <path d=\"M " << num(px + ux * size) << " " << num(py + uy * size)
                << " L " << num(px - uy * size * 0.6 - ux * size * 0.6) << " "
                << num(py + ux * size * 0.6 - uy * size * 0.6) << " L "
                << num(px + uy * size * 0.6 - ux * size * 0.6) << " "
                << num(py - ux * size * 0.6 - uy * size * 0.6) << " Z\"/>\n";
        }
        out << "  </g>\n";
    }

    out << "  <g class=\"junctions\">\n";
    for (const auto& n : t.nodes()) {
        if (n.type != NodeType::Junction) continue;
        Point p = l.position[n.id];
        bool structural = n.kind == JunctionKind::Clique || n.kind == JunctionKind::Biclique ||
                          n.kind == JunctionKind::DirectedBiclique;
        double r = structural ? o.junction_radius : o.junction_radius * 0.35;
        out << "    <circle class=\"junction " << junction_class(n.kind) << "\" id=\"node-" << n.id
            << "\" cx=\"" << num(X(p.x)) << "\" cy=\"" << num(Y(p.y)) << "\" r=\"" << num(r)
            << "\" fill=\"" << (structural ? "#fff" : "#99a") << "\" stroke=\"#335\"/>\n";
    }
    out << "  </g>\n";

    out << "  <g class=\"terminals\">\n";
    for (const auto& n : t.nodes()) {
        if (n.type != NodeType::Terminal) continue;
        Point p = l.position[n.id];
        out << "    <circle class=\"terminal\" id=\"node-" << n.id << "\" cx=\"" << num(X(p.x))
            << "\" cy=\"" << num(Y(p.y)) << "\" r=\"" << num(o.terminal_radius)
            << "\" fill=\"#d33\" stroke=\"#400\"/>\n";
        if (o.labels)
            out << "    <text x=\"" << num(X(p.x) + o.terminal_radius + 2) << "\" y=\""
                << num(Y(p.y) - o.terminal_radius) << "\" font-size=\"10\">v"
                << n.terminal_vertex << "</text>\n";
    }
    out << "  </g>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace confluent
