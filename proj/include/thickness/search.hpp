#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thickness/classification.hpp"
#include "thickness/drawing.hpp"

namespace thickness {

// Nodes are the edges of a drawn graph; two nodes conflict iff their
// segments properly cross under the placement. Its chromatic number is the
// minimum layer count for that placement.
struct ConflictGraph {
    int node_count = 0;
    std::vector<std::array<int, 2>> conflicts; // node index pairs, ascending

    std::vector<std::vector<int>> adjacency() const;
};

ConflictGraph crossing_conflict_graph(const IncidenceGraph& g, const std::vector<Point>& coords);

// Exact chromatic number if <= cap, nullopt otherwise (AboveCap).
// Deterministic branch and bound: greedy clique lower bound, greedy coloring
// upper bound, then k-colorability backtracking.
std::optional<int> chromatic_number_exact(const ConflictGraph& cg, int cap);

// A coloring with the minimum number of colors (<= cap), if one exists.
std::optional<std::vector<int>> minimum_coloring(const ConflictGraph& cg, int cap);

std::optional<int> min_layers_fixed_placement(const IncidenceGraph& g,
                                              const std::vector<Point>& coords, int cap);

// The same minimum converted into a verified drawing witness.
std::optional<LayeredDrawing> min_layers_witness(const IncidenceGraph& g,
                                                 const std::vector<Point>& coords, int cap);

struct PlacementStrategy {
    enum class Kind { Grid, Random, Convex };
    Kind kind = Kind::Convex;
    int grid_resolution = 3;     // Grid: integer coordinates in [0, r)^2
    std::uint64_t seed = 0;      // Random
    int trials = 100;            // Random
    std::uint64_t node_budget = 10'000'000; // Grid enumeration guard
};

struct SearchResult {
    LayeredDrawing best;
    int layers = 0;
    std::uint64_t placements_tried = 0;
};

// Minimizes min_layers_fixed_placement over generated placements. Returns
// the best verified witness; throws search-exhausted if no strategy
// placement was valid.
SearchResult geometric_thickness_upper_search(const IncidenceGraph& g,
                                              const PlacementStrategy& strategy, int cap);

struct BookResult {
    int pages = 0;
    BookLayout witness;
};

// Exact book thickness over circular orders (vertex 0 fixed, reflections
// quotiented) and page assignments. Guarded to small graphs.
std::optional<BookResult> book_thickness_exact(const IncidenceGraph& g, int cap,
                                               bool allow_large = false);

struct RefuteStrategy {
    enum class Kind { Grid, Random };
    Kind kind = Kind::Grid;
    int grid_resolution = 5;  // sample points per hull-radius unit
    std::uint64_t seed = 0;
    int random_positions = 40; // per tripleton under Random
};

struct RefutationReport {
    int n = 0;
    TripletonType type;
    std::string strategy;
    std::uint64_t candidates_examined = 0;   // placement tuples tested (all depths)
    std::uint64_t complete_candidates = 0;   // full assignments reached
    std::uint64_t witnesses_found = 0;
    std::optional<LayeredDrawing> witness;   // first one found
    // (edge description, edge description) -> prune count
    std::map<std::pair<std::string, std::string>, std::uint64_t> forced_crossings;
    std::uint64_t invalid_candidates = 0;    // coincidences / touchings, not crossings
    std::size_t min_wedge_positions = 0;     // smallest type-compatible list
    bool exhausted = true;                   // full enumeration completed
};

// Canonical singleton placement used by the refutation harness: n rational
// points on a circle of radius `scale`, numbered clockwise by index.
std::vector<Point> refute_singleton_positions(int n, int scale);

// Exterior sample points whose tripleton type matches `type` for the given
// tripleton vertex, under identity numbering.
std::vector<Point> type_compatible_positions(const LayeredDrawing& base,
                                             const SingletonNumbering& numbering,
                                             int tripleton_vertex, const TripletonType& type,
                                             const RefuteStrategy& strategy);

// Enumerates coherent outer drawings of G_3(n) of uniform `type` with
// tripletons restricted to type-compatible sample positions; verifies every
// complete candidate. `on_witness` (optional) sees each crossing-free
// drawing. Exhausting the budget without a witness is the expected outcome
// for the refuted types.
RefutationReport refute_outer_type(int n, const TripletonType& type,
                                   const RefuteStrategy& strategy,
                                   std::uint64_t budget = 50'000'000,
                                   const std::function<void(const LayeredDrawing&)>& on_witness = {});

} // namespace thickness
