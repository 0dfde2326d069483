#include "thickness/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "thickness/errors.hpp"

namespace thickness {

namespace {

constexpr const char* kLayerColors[] = {"#1b6ca8", "#c0392b", "#1e8449", "#8e44ad",
                                        "#b7950b", "#2c3e50", "#ca6f1e", "#117a65"};
constexpr const char* kLayerDashes[] = {"", "7,3", "2,3", "9,3,2,3", "5,5", "1,4", "12,3", "3,1"};

std::string fmt(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.3f", value);
    return buffer;
}

} // namespace

std::string drawing_to_svg(const LayeredDrawing& d, double scale) {
    if (d.coords.empty()) fail(Errc::invalid_parameters, "drawing has no coordinates");
    if (scale <= 0) fail(Errc::invalid_parameters, "scale must be positive");

    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    std::vector<std::pair<double, double>> pts;
    pts.reserve(d.coords.size());
    for (std::size_t i = 0; i < d.coords.size(); ++i) {
        double x = d.coords[i].x.convert_to<double>();
        double y = d.coords[i].y.convert_to<double>();
        pts.emplace_back(x, y);
        if (i == 0) {
            min_x = max_x = x;
            min_y = max_y = y;
        } else {
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    }
    double span = std::max({max_x - min_x, max_y - min_y, 1.0});
    double unit = 720.0 * scale / span; // drawing mapped into a 720-wide box
    double margin = 40.0 * scale;
    auto X = [&](double x) { return (x - min_x) * unit + margin; };
    auto Y = [&](double y) { return (max_y - y) * unit + margin; }; // y up -> svg y down
    double width = (max_x - min_x) * unit + 2 * margin;
    double height = (max_y - min_y) * unit + 2 * margin;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(width) +
           "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (int e = 0; e < d.graph.edge_count(); ++e) {
        const EdgeRef& edge = d.graph.edges[e];
        int layer = d.layers.empty() ? 0 : d.layers[e];
        int style = layer % 8;
        svg += "<line x1=\"" + fmt(X(pts[edge.u].first)) + "\" y1=\"" + fmt(Y(pts[edge.u].second)) +
               "\" x2=\"" + fmt(X(pts[edge.v].first)) + "\" y2=\"" + fmt(Y(pts[edge.v].second)) +
               "\" stroke=\"" + kLayerColors[style] + "\" stroke-width=\"1.4\"";
        if (kLayerDashes[style][0] != '\0')
            svg += " stroke-dasharray=\"" + std::string(kLayerDashes[style]) + "\"";
        svg += "/>\n";
    }

    const double r = 5.0;
    for (int v = 0; v < d.graph.vertex_count(); ++v) {
        double cx = X(pts[v].first);
        double cy = Y(pts[v].second);
        if (d.graph.vertices[v].cardinality() == 1) {
            svg += "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" + fmt(r) +
                   "\" fill=\"white\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
        } else {
            svg += "<path d=\"M " + fmt(cx) + " " + fmt(cy - r) + " L " + fmt(cx - r) + " " +
                   fmt(cy + r * 0.8) + " L " + fmt(cx + r) + " " + fmt(cy + r * 0.8) +
                   " Z\" fill=\"black\"/>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace thickness
