#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace c3rigid::cli {

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

}  // namespace

std::string render_svg(const Graph& g, std::span<const Point2> positions, const TreePartition* partition) {
    std::vector<std::pair<double, double>> xy;
    xy.reserve(positions.size());
    for (const Point2& p : positions) xy.emplace_back(p.x().to_double(), p.y().to_double());

    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    if (!xy.empty()) {
        min_x = max_x = xy[0].first;
        min_y = max_y = xy[0].second;
    }
    for (auto [x, y] : xy) {
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
    const double inner = kCanvas * (1 - 2 * kMargin);
    const double scale = inner / span;
    // Centre the drawing; SVG y grows downwards.
    const double off_x = kCanvas * kMargin + (inner - (max_x - min_x) * scale) / 2;
    const double off_y = kCanvas * kMargin + (inner - (max_y - min_y) * scale) / 2;
    const auto sx = [&](double x) { return fmt(off_x + (x - min_x) * scale); };
    const auto sy = [&](double y) { return fmt(off_y + (max_y - y) * scale); };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\" width=\"800\" height=\"800\">\n";
    s += "<style>\n";
    s += "line { stroke: black; stroke-linecap: round; }\n";
    s += ".t0 { stroke-width: 5; }\n";
    s += ".t1 { stroke-width: 2.5; stroke-dasharray: 10 6; }\n";
    s += ".t2 { stroke-width: 1; }\n";
    s += ".bar { stroke-width: 2; }\n";
    s += "circle { fill: white; stroke: black; stroke-width: 2; }\n";
    s += "</style>\n";
    for (const Edge& e : g.edges()) {
        std::string cls = "bar";
        if (partition) {
            const int t = partition->tree_of(e);
            if (t >= 0) cls = "t" + std::to_string(t);
        }
        s += "<line class=\"" + cls + "\" x1=\"" + sx(xy[e.u].first) + "\" y1=\"" + sy(xy[e.u].second) +
             "\" x2=\"" + sx(xy[e.v].first) + "\" y2=\"" + sy(xy[e.v].second) + "\"/>\n";
    }
    for (std::size_t v = 0; v < xy.size(); ++v)
        s += "<circle id=\"v" + std::to_string(v) + "\" cx=\"" + sx(xy[v].first) + "\" cy=\"" + sy(xy[v].second) +
             "\" r=\"7\"/>\n";
    s += "</svg>\n";
    return s;
}

}  // namespace c3rigid::cli
