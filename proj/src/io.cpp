#include "thickness/io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "thickness/errors.hpp"

namespace thickness {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        fail(Errc::parse_error, std::string("missing field '") + key + "'");
    return j.at(key);
}

int require_int(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_number_integer()) fail(Errc::parse_error, std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

} // namespace

json graph_to_json(const IncidenceGraph& g) {
    json vertices = json::array();
    for (const SubsetVertex& v : g.vertices) vertices.push_back(v.members());
    json edges = json::array();
    for (const EdgeRef& e : g.edges) edges.push_back({e.u, e.v});
    return json{{"k", g.k}, {"n", g.n}, {"vertices", vertices}, {"edges", edges}};
}

IncidenceGraph graph_from_json(const json& j) {
    IncidenceGraph g;
    g.k = require_int(j, "k");
    g.n = require_int(j, "n");
    if (g.n < 0 || g.n > 64 || g.k < 0) fail(Errc::parse_error, "bad n or k");
    const json& vertices = require(j, "vertices");
    if (!vertices.is_array()) fail(Errc::parse_error, "'vertices' must be an array");
    for (const json& members : vertices) {
        if (!members.is_array() || members.empty()) fail(Errc::parse_error, "vertex must be a member list");
        std::vector<int> ms;
        for (const json& m : members) {
            if (!m.is_number_integer()) fail(Errc::parse_error, "member must be an integer");
            int value = m.get<int>();
            if (value < 0 || value >= g.n) fail(Errc::parse_error, "member out of ground set");
            ms.push_back(value);
        }
        SubsetVertex v = SubsetVertex::of(ms);
        if (static_cast<std::size_t>(v.cardinality()) != ms.size())
            fail(Errc::parse_error, "repeated member in vertex");
        if (g.k >= 2 && v.cardinality() != 1 && v.cardinality() != g.k)
            fail(Errc::parse_error, "vertex cardinality must be 1 or k");
        g.vertices.push_back(v);
    }
    const json& edges = require(j, "edges");
    if (!edges.is_array()) fail(Errc::parse_error, "'edges' must be an array");
    for (const json& e : edges) {
        if (!e.is_array() || e.size() != 2) fail(Errc::parse_error, "edge must be an index pair");
        int u = e[0].get<int>();
        int v = e[1].get<int>();
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || u == v)
            fail(Errc::parse_error, "edge index out of range");
        if (u > v) std::swap(u, v);
        g.edges.push_back({u, v});
    }
    return g;
}

json coords_to_json(const std::vector<Point>& coords) {
    json out = json::array();
    for (const Point& p : coords) out.push_back({format_rational(p.x), format_rational(p.y)});
    return out;
}

std::vector<Point> coords_from_json(const json& j) {
    if (!j.is_array()) fail(Errc::parse_error, "coords must be an array");
    std::vector<Point> out;
    for (const json& c : j) {
        if (!c.is_array() || c.size() != 2) fail(Errc::parse_error, "coordinate must be a pair");
        auto text = [](const json& v) {
            if (v.is_string()) return v.get<std::string>();
            if (v.is_number_integer()) return std::to_string(v.get<long long>());
            fail(Errc::parse_error, "coordinate must be a rational string");
        };
        out.push_back(Point{parse_rational(text(c[0])), parse_rational(text(c[1]))});
    }
    return out;
}

namespace {

std::vector<int> layers_from_json(const json& j, int edge_count) {
    if (!j.is_array()) fail(Errc::parse_error, "'layers' must be an array");
    std::vector<int> layers;
    for (const json& l : j) {
        if (!l.is_number_integer() || l.get<int>() < 0) fail(Errc::parse_error, "layer must be a nonnegative integer");
        layers.push_back(l.get<int>());
    }
    if (static_cast<int>(layers.size()) != edge_count)
        fail(Errc::parse_error, "layer assignment does not match edge count");
    return layers;
}

} // namespace

json drawing_to_json(const LayeredDrawing& d) {
    return json{{"graph", graph_to_json(d.graph)},
                {"coords", coords_to_json(d.coords)},
                {"layers", d.layers}};
}

LayeredDrawing drawing_from_json(const json& j) {
    LayeredDrawing d;
    d.graph = graph_from_json(require(j, "graph"));
    d.coords = coords_from_json(require(j, "coords"));
    if (static_cast<int>(d.coords.size()) != d.graph.vertex_count())
        fail(Errc::parse_error, "coordinate count does not match vertex count");
    d.layers = layers_from_json(require(j, "layers"), d.graph.edge_count());
    d.layer_count = 0;
    for (int l : d.layers) d.layer_count = std::max(d.layer_count, l + 1);
    return d;
}

json layering_to_json(const IncidenceGraph& g, const std::vector<int>& layers) {
    return json{{"graph", graph_to_json(g)}, {"layers", layers}};
}

std::pair<IncidenceGraph, std::vector<int>> layering_from_json(const json& j) {
    IncidenceGraph g = graph_from_json(require(j, "graph"));
    std::vector<int> layers = layers_from_json(require(j, "layers"), g.edge_count());
    return {std::move(g), std::move(layers)};
}

json book_to_json(const BookLayout& bl) {
    return json{{"graph", graph_to_json(bl.graph)}, {"order", bl.order}, {"pages", bl.pages}};
}

BookLayout book_from_json(const json& j) {
    BookLayout bl;
    bl.graph = graph_from_json(require(j, "graph"));
    const json& order = require(j, "order");
    if (!order.is_array() || static_cast<int>(order.size()) != bl.graph.vertex_count())
        fail(Errc::parse_error, "'order' must list every vertex");
    for (const json& v : order) bl.order.push_back(v.get<int>());
    bl.pages = layers_from_json(require(j, "pages"), bl.graph.edge_count());
    return bl;
}

json classification_to_json(const ClassificationReport& report) {
    json types = json::array();
    for (const auto& t : report.types) types.push_back(t ? json(t->symbol()) : json("NoReflex"));
    json roles = json::array();
    for (EdgeRole role : report.roles) roles.push_back(to_string(role));
    return json{{"numbering", report.numbering},
                {"convex", report.convex},
                {"coherent", report.coherent},
                {"inner_outer", to_string(report.inner_outer_status)},
                {"types", types},
                {"drawing_type", report.uniform_type ? json(report.uniform_type->symbol()) : json("NonUniform")},
                {"roles", roles}};
}

json crossing_report_to_json(const CrossingReport& report) {
    json crossings = json::array();
    for (const auto& c : report.crossings) crossings.push_back({c[0], c[1], c[2]});
    json duplicates = json::array();
    for (const auto& d : report.duplicate_coordinates) duplicates.push_back({d[0], d[1]});
    json von = json::array();
    for (const auto& v : report.vertex_on_edge) von.push_back({v[0], v[1]});
    json overlap = json::array();
    for (const auto& o : report.overlapping_edges) overlap.push_back({o[0], o[1]});
    return json{{"valid", report.valid()},
                {"crossing_free", report.crossing_free()},
                {"crossings", crossings},
                {"duplicate_coordinates", duplicates},
                {"vertex_on_edge", von},
                {"overlapping_edges", overlap},
                {"layer_sizes", report.layer_sizes}};
}

json refutation_to_json(const RefutationReport& report) {
    json forced = json::array();
    for (const auto& [pair, count] : report.forced_crossings)
        forced.push_back({{"edges", {pair.first, pair.second}}, {"count", count}});
    json out{{"n", report.n},
             {"type", report.type.symbol()},
             {"strategy", report.strategy},
             {"candidates_examined", report.candidates_examined},
             {"complete_candidates", report.complete_candidates},
             {"witnesses_found", report.witnesses_found},
             {"invalid_candidates", report.invalid_candidates},
             {"min_wedge_positions", report.min_wedge_positions},
             {"exhausted", report.exhausted},
             {"forced_crossings", forced}};
    if (report.witness) out["witness"] = drawing_to_json(*report.witness);
    return out;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::io_error, "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail(Errc::parse_error, std::string("bad JSON: ") + e.what());
    }
    return j;
}

void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) fail(Errc::io_error, "cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
    if (!out) fail(Errc::io_error, "write failed for '" + path + "'");
}

} // namespace thickness
