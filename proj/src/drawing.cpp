#include "thickness/drawing.hpp"

#include <algorithm>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "thickness/errors.hpp"

namespace thickness {

Segment LayeredDrawing::edge_segment(int edge_index) const {
    const EdgeRef& e = graph.edges.at(edge_index);
    return Segment(coords.at(e.u), coords.at(e.v));
}

int LayeredDrawing::used_layer_count() const {
    std::set<int> used(layers.begin(), layers.end());
    return static_cast<int>(used.size());
}

namespace {

void check_shape(const LayeredDrawing& d) {
    if (static_cast<int>(d.coords.size()) != d.graph.vertex_count())
        fail(Errc::invalid_drawing, "coordinate count does not match vertex count");
    if (static_cast<int>(d.layers.size()) != d.graph.edge_count())
        fail(Errc::invalid_drawing, "layer count does not match edge count");
    for (int layer : d.layers) {
        if (layer < 0 || (d.layer_count > 0 && layer >= d.layer_count))
            fail(Errc::invalid_drawing, "edge layer out of range");
    }
}

} // namespace

CrossingReport validate_drawing(const LayeredDrawing& d) {
    check_shape(d);
    CrossingReport report;

    const int nv = d.graph.vertex_count();
    const int ne = d.graph.edge_count();

    {
        // Duplicate coordinates via sort on (point, index).
        std::vector<int> idx(nv);
        for (int i = 0; i < nv; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&d](int a, int b) {
            if (d.coords[a] == d.coords[b]) return a < b;
            return lex_less(d.coords[a], d.coords[b]);
        });
        for (int i = 0; i + 1 < nv; ++i) {
            if (d.coords[idx[i]] == d.coords[idx[i + 1]]) {
                report.duplicate_coordinates.push_back(
                    {std::min(idx[i], idx[i + 1]), std::max(idx[i], idx[i + 1])});
            }
        }
    }

    std::vector<std::optional<Segment>> segs;
    segs.reserve(ne);
    for (int e = 0; e < ne; ++e) {
        const EdgeRef& edge = d.graph.edges[e];
        if (d.coords[edge.u] == d.coords[edge.v]) {
            segs.emplace_back(std::nullopt); // collapsed edge; already reported as duplicate
            continue;
        }
        segs.emplace_back(Segment(d.coords[edge.u], d.coords[edge.v]));
    }

    for (int v = 0; v < nv; ++v) {
        for (int e = 0; e < ne; ++e) {
            if (!segs[e]) continue;
            const EdgeRef& edge = d.graph.edges[e];
            if (edge.u == v || edge.v == v) continue;
            if (point_on_segment(d.coords[v], *segs[e])) report.vertex_on_edge.push_back({v, e});
        }
    }

    for (int e = 0; e < ne; ++e) {
        if (!segs[e]) continue;
        for (int f = e + 1; f < ne; ++f) {
            if (!segs[f]) continue;
            SegmentRelation rel = segment_relation(*segs[e], *segs[f]);
            if (rel == SegmentRelation::Overlapping) report.overlapping_edges.push_back({e, f});
            // Touching shows up as vertex_on_edge: the touching endpoint is a
            // vertex of the drawing.
        }
    }

    report.layer_sizes.assign(std::max(d.layer_count, d.layers.empty() ? 0 : *std::max_element(d.layers.begin(), d.layers.end()) + 1), 0);
    for (int layer : d.layers) ++report.layer_sizes[layer];
    return report;
}

CrossingReport layer_crossings(const LayeredDrawing& d) {
    CrossingReport report = validate_drawing(d);
    if (!report.valid()) fail(Errc::invalid_drawing, "drawing fails validity checks");

    const int ne = d.graph.edge_count();
    std::vector<Segment> segs;
    segs.reserve(ne);
    for (int e = 0; e < ne; ++e) segs.push_back(d.edge_segment(e));

    for (int e = 0; e < ne; ++e) {
        for (int f = e + 1; f < ne; ++f) {
            if (d.layers[e] != d.layers[f]) continue;
            if (segment_relation(segs[e], segs[f]) == SegmentRelation::ProperCrossing)
                report.crossings.push_back({e, f, d.layers[e]});
        }
    }
    return report;
}

bool verify_geometric_thickness_witness(const LayeredDrawing& d, int t) {
    try {
        CrossingReport report = layer_crossings(d);
        return report.crossings.empty() && d.used_layer_count() <= t;
    } catch (const Error&) {
        return false;
    }
}

std::vector<std::array<int, 2>> book_crossings(const BookLayout& bl) {
    const int nv = bl.graph.vertex_count();
    const int ne = bl.graph.edge_count();
    if (static_cast<int>(bl.order.size()) != nv) fail(Errc::invalid_drawing, "order is not a permutation");
    if (static_cast<int>(bl.pages.size()) != ne) fail(Errc::invalid_drawing, "pages do not cover the edges");
    std::vector<int> pos(nv, -1);
    for (int i = 0; i < nv; ++i) {
        int v = bl.order[i];
        if (v < 0 || v >= nv || pos[v] != -1) fail(Errc::invalid_drawing, "order is not a permutation");
        pos[v] = i;
    }

    auto strictly_between = [nv](int a, int b, int x) {
        // open circular arc from a to b (increasing positions, wrapping)
        if (a < b) return a < x && x < b;
        return x > a || x < b;
    };

    std::vector<std::array<int, 2>> out;
    for (int e = 0; e < ne; ++e) {
        for (int f = e + 1; f < ne; ++f) {
            if (bl.pages[e] != bl.pages[f]) continue;
            const EdgeRef& ee = bl.graph.edges[e];
            const EdgeRef& ff = bl.graph.edges[f];
            if (ee.u == ff.u || ee.u == ff.v || ee.v == ff.u || ee.v == ff.v) continue;
            int a = pos[ee.u], b = pos[ee.v];
            bool x_in = strictly_between(a, b, pos[ff.u]);
            bool y_in = strictly_between(a, b, pos[ff.v]);
            if (x_in != y_in) out.push_back({e, f});
        }
    }
    return out;
}

bool verify_book_thickness_witness(const BookLayout& bl, int t) {
    try {
        if (book_crossings(bl).size() != 0) return false;
        std::set<int> used(bl.pages.begin(), bl.pages.end());
        return static_cast<int>(used.size()) <= t;
    } catch (const Error&) {
        return false;
    }
}

bool is_planar_edges(int vertex_count, const std::vector<EdgeRef>& edges) {
    if (vertex_count <= 4) return vertex_count >= 0; // K4 and smaller are planar
    const long long m = static_cast<long long>(edges.size());
    if (m > 3LL * vertex_count - 6) return false; // Euler bound

    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                        boost::property<boost::vertex_index_t, int>>;
    Graph g(vertex_count);
    for (const EdgeRef& e : edges) boost::add_edge(e.u, e.v, g);
    return boost::boyer_myrvold_planarity_test(g);
}

bool is_planar(const IncidenceGraph& g) { return is_planar_edges(g.vertex_count(), g.edges); }

bool verify_thickness_layering(const IncidenceGraph& g, const std::vector<int>& layer_of, int t) {
    if (static_cast<int>(layer_of.size()) != g.edge_count())
        fail(Errc::invalid_layering, "layer assignment does not cover the edges");
    std::map<int, std::vector<EdgeRef>> by_layer;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (layer_of[e] < 0) fail(Errc::invalid_layering, "negative layer index");
        by_layer[layer_of[e]].push_back(g.edges[e]);
    }
    if (static_cast<int>(by_layer.size()) > t) return false;
    for (const auto& [layer, edges] : by_layer) {
        if (!is_planar_edges(g.vertex_count(), edges)) return false;
    }
    return true;
}

} // namespace thickness
