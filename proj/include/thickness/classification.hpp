#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "thickness/drawing.hpp"

namespace thickness {

// Clockwise order of the singleton vertices around their hull, starting at a
// chosen singleton. "Clockwise" is the negative mathematical direction
// (counterclockwise is positive throughout the repo).
struct SingletonNumbering {
    std::vector<int> order;       // singleton vertex indices, clockwise
    std::vector<int> position_of; // inverse: vertex index -> clockwise position

    int position(int singleton_vertex) const;
};

SingletonNumbering clockwise_numbering(const LayeredDrawing& d, int start_vertex);

enum class EdgeRole { Low, Middle, High };

const char* to_string(EdgeRole role);

// Per edge of a k=3 subset graph: Low to the smallest-numbered adjacent
// singleton of the tripleton, High to the largest, Middle to the remaining
// one. Purely combinatorial.
std::vector<EdgeRole> edge_roles(const IncidenceGraph& g, const SingletonNumbering& numbering);

// Permutation symbol from {012,021,102,120,201,210}: positions of the Low(0),
// Middle(1), High(2) edges in clockwise order at the tripleton, starting
// after its reflex angle.
struct TripletonType {
    std::array<int, 3> digits{0, 1, 2};

    std::string symbol() const;
    static TripletonType from_symbol(const std::string& symbol);

    bool operator==(const TripletonType& other) const { return digits == other.digits; }
    bool operator!=(const TripletonType& other) const { return digits != other.digits; }
};

enum class InnerOuter { Inner, Outer, Mixed, Degenerate };

const char* to_string(InnerOuter status);

// Geometric-thickness-3 witness with singletons in strictly convex position.
bool is_convex_drawing(const LayeredDrawing& d);

// Convex drawing whose three layers are exactly the Low/Middle/High classes
// (matched by any bijection between layer indices and roles).
bool is_coherent(const LayeredDrawing& d, const SingletonNumbering& numbering);

// All starts that make the drawing coherent.
std::vector<int> coherent_starts(const LayeredDrawing& d);

// Classifies every tripleton point against the singleton hull, which stands
// in for the paper's strictly convex curve: strictly inside the hull is
// inner for every admissible curve, strictly outside is outer for a curve
// hugging the hull; boundary contact is Degenerate.
InnerOuter inner_outer(const LayeredDrawing& d);

// Type of one tripleton (vertex index) in an outer drawing.
TripletonType tripleton_type(const LayeredDrawing& d, const SingletonNumbering& numbering,
                             int tripleton_vertex);

// Uniform type of the whole drawing, if any.
struct DrawingType {
    bool uniform = false;
    TripletonType type; // meaningful when uniform
};

DrawingType drawing_type(const LayeredDrawing& d, const SingletonNumbering& numbering);

enum class CrossingCharacter { Convex, Concave };

const char* to_string(CrossingCharacter c);

// For tripletons abc and def of a coherent inner drawing with interleaving
// numbering a < d < c < f: Convex iff Low(abc) properly crosses High(def),
// Concave iff High(abc) properly crosses Low(def). Exactly one must hold;
// anything else is a lemma violation.
CrossingCharacter crossing_character(const LayeredDrawing& d, const SingletonNumbering& numbering,
                                     int tripleton1, int tripleton2);

struct ClassificationReport {
    std::vector<int> numbering; // clockwise singleton order
    bool convex = false;
    bool coherent = false;
    InnerOuter inner_outer_status = InnerOuter::Degenerate;
    std::vector<std::optional<TripletonType>> types; // per tripleton; nullopt = no reflex gap
    std::optional<TripletonType> uniform_type;       // set iff all types equal and defined
    std::vector<EdgeRole> roles;                     // per edge
};

// Aggregate classification with an explicit numbering start.
ClassificationReport classify_drawing(const LayeredDrawing& d, int start_vertex);

} // namespace thickness
