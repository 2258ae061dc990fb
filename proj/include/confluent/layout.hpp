#pragma once

#include <string>
#include <vector>

#include "confluent/planarity.hpp"
#include "confluent/track_model.hpp"

namespace confluent {

struct Point {
    double x = 0;
    double y = 0;
};

struct CurvedSegment {
    int segment_id = -1;
    Point p0, c1, c2, p3;  // cubic control points; p0/p3 sit on the nodes
};

struct Layout {
    std::vector<Point> position;  // per node
    std::vector<CurvedSegment> curves;
    double width = 0, height = 0;
    // True when the network was not 3-connected and a stress placement was
    // used; geometric crossings are then possible even though the embedding
    // certifies combinatorial planarity.
    bool fallback = false;
};

struct RenderOptions {
    double canvas_width = 640;
    double canvas_height = 480;
    double junction_radius = 7;
    double terminal_radius = 4;
    double stroke_width = 1.5;
    bool arrowheads = true;  // directed segments only
    bool labels = false;
};

// Positions from the embedding: barycentric placement with the outer face
// fixed convex when the underlying graph is 3-connected, otherwise a
// deterministic stress layout (flagged). Distinct nodes get distinct
// positions.
Layout layout_network(const TrackNetwork& t, const Embedding& e);

std::string emit_svg(const TrackNetwork& t, const Layout& l, const RenderOptions& o);

}  // namespace confluent
