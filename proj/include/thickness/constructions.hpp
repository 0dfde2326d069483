#pragma once

#include <string>

#include "thickness/classification.hpp"
#include "thickness/drawing.hpp"

namespace thickness {

// Constructions never hand back an artifact without the verifier's verdict
// attached.

struct LayeringResult {
    IncidenceGraph graph;
    std::vector<int> layers; // per edge
    bool verified = false;
};

struct DrawingResult {
    LayeredDrawing drawing;
    bool verified = false;
    CrossingReport report;
    std::string note;
};

// Low/Middle/High star layering of G_3(n) under identity numbering: the
// edges to each tripleton's smallest/other/largest member go to layers
// 0/1/2. Each layer is a star forest, so thickness(G_3(n)) <= 3.
LayeringResult thickness3_layering(int n);

// One-layer straight-line drawing of G_3(4), the cube, as nested squares.
DrawingResult g3_planar_drawing_n4();

// Three-layer straight-line drawing of G_3(8): outer singletons 0,2,4,6 on a
// large square, inner singletons and all 56 tripletons clustered centrally.
// Layer 0 carries every edge incident to an inner singleton (a planar
// graph); layers 1 and 2 carry the edges incident to the opposite outer
// pairs {0,4} and {2,6}.
DrawingResult g38_geometric_drawing();

// Generalization with ceil((n-2)/2) layers: four inner singletons clustered
// with all tripletons, the remaining n-4 singletons on a huge circle paired
// antipodally, one layer per pair. Odd n embeds into n+1. The verifier's
// verdict is reported honestly; expected_upper_bound_layers gives the target
// layer count.
DrawingResult upper_bound_drawing(int n);
int expected_upper_bound_layers(int n);

// A valid coherent inner drawing of two tripletons abc, def over six
// singletons with numbering a < d < c < f whose crossing_character matches
// the request.
DrawingResult two_tripleton_inner_fixture(CrossingCharacter character);

} // namespace thickness
