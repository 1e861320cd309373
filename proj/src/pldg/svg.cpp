#include "pldg/svg.hpp"

#include <algorithm>
#include <sstream>

namespace pldg {
namespace {

constexpr double kScale = 96.0; // pixels per radio range
constexpr double kMargin = 0.6; // in radio ranges

struct Frame {
    double min_x, min_y, max_y;
    double x(double wx) const { return (wx - min_x + kMargin) * kScale; }
    double y(double wy) const { return (max_y - wy + kMargin) * kScale; }
};

void emit_edges(std::ostringstream& out, const PointSet& ps, const Frame& f,
                const std::vector<std::pair<int, int>>& edges, const char* cls) {
    for (auto [u, v] : edges) {
        out << "  <line class=\"" << cls << "\" x1=\"" << f.x(ps.points[u].x)
            << "\" y1=\"" << f.y(ps.points[u].y) << "\" x2=\"" << f.x(ps.points[v].x)
            << "\" y2=\"" << f.y(ps.points[v].y) << "\"/>\n";
    }
}

} // namespace

std::string render_svg(const PointSet& ps,
                       const std::vector<std::pair<int, int>>& kept_edges,
                       const std::vector<std::pair<int, int>>& removed_edges) {
    double min_x = 0.0, min_y = 0.0, max_x = ps.region_side, max_y = ps.region_side;
    for (const Point& p : ps.points) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    Frame f{min_x, min_y, max_y};
    double width = (max_x - min_x + 2.0 * kMargin) * kScale;
    double height = (max_y - min_y + 2.0 * kMargin) * kScale;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
        << height << "\">\n";
    out << "  <style>\n"
           "    .kept { stroke: #1f3c66; stroke-width: 1.6; }\n"
           "    .removed { stroke: #c0392b; stroke-width: 1.1; stroke-dasharray: 6 4; }\n"
           "    .node { fill: #10222e; }\n"
           "    .scalebar { stroke: #444; stroke-width: 2; }\n"
           "    text { font-family: sans-serif; font-size: 12px; fill: #444; }\n"
           "  </style>\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    emit_edges(out, ps, f, removed_edges, "removed");
    emit_edges(out, ps, f, kept_edges, "kept");

    for (const Point& p : ps.points)
        out << "  <circle class=\"node\" cx=\"" << f.x(p.x) << "\" cy=\"" << f.y(p.y)
            << "\" r=\"2.8\"/>\n";

    double bar_y = height - 0.25 * kScale;
    out << "  <line class=\"scalebar\" x1=\"" << 0.2 * kScale << "\" y1=\"" << bar_y
        << "\" x2=\"" << 1.2 * kScale << "\" y2=\"" << bar_y << "\"/>\n";
    out << "  <text x=\"" << 0.2 * kScale << "\" y=\"" << bar_y - 6.0
        << "\">1 radio range</text>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace pldg
