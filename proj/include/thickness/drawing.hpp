#pragma once

#include <optional>
#include <set>
#include <vector>

#include "thickness/geometry.hpp"
#include "thickness/incidence_graph.hpp"

namespace thickness {

// A straight-line drawing with an edge-to-layer assignment. Coordinates are
// shared by all layers; a witness for geometric thickness <= L.
struct LayeredDrawing {
    IncidenceGraph graph;
    std::vector<Point> coords;  // per vertex
    std::vector<int> layers;    // per edge, in [0, layer_count)
    int layer_count = 0;

    Segment edge_segment(int edge_index) const;
    int used_layer_count() const;
};

// Circular vertex order plus an edge-to-page assignment; a witness for book
// thickness. Purely combinatorial.
struct BookLayout {
    IncidenceGraph graph;
    std::vector<int> order;  // permutation of vertex indices
    std::vector<int> pages;  // per edge
};

struct CrossingReport {
    // Same-layer proper crossings: (edge, edge, layer), edge indices ascending.
    std::vector<std::array<int, 3>> crossings;

    // Validity findings.
    std::vector<std::array<int, 2>> duplicate_coordinates; // vertex pairs
    std::vector<std::array<int, 2>> vertex_on_edge;        // (vertex, edge)
    std::vector<std::array<int, 2>> overlapping_edges;     // edge pairs (Touching or Overlapping)

    std::vector<int> layer_sizes;

    bool valid() const {
        return duplicate_coordinates.empty() && vertex_on_edge.empty() && overlapping_edges.empty();
    }
    bool crossing_free() const { return valid() && crossings.empty(); }
};

// Structural validity only: distinct coordinates, no vertex interior to an
// edge, no Touching/Overlapping edge pairs in any layer. Problems are
// reported, never thrown.
CrossingReport validate_drawing(const LayeredDrawing& d);

// All same-layer proper crossings. Requires a valid drawing.
CrossingReport layer_crossings(const LayeredDrawing& d);

// True iff d is valid, uses at most t distinct layers, and no two edges of a
// common layer properly cross. Never throws.
bool verify_geometric_thickness_witness(const LayeredDrawing& d, int t);

// Same-page interleaving chord pairs (edge index pairs, ascending).
std::vector<std::array<int, 2>> book_crossings(const BookLayout& bl);

bool verify_book_thickness_witness(const BookLayout& bl, int t);

// Exact planarity. Euler-bound shortcut, then Boyer-Myrvold.
bool is_planar(const IncidenceGraph& g);
bool is_planar_edges(int vertex_count, const std::vector<EdgeRef>& edges);

// True iff at most t layers are used and every layer's subgraph is planar.
// Throws invalid-layering if the assignment does not cover the edges.
bool verify_thickness_layering(const IncidenceGraph& g, const std::vector<int>& layer_of, int t);

} // namespace thickness
