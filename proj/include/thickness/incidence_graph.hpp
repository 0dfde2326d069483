#pragma once

#include <cstdint>
#include <vector>

namespace thickness {

// A singleton or k-element subset of the ground set {0..n-1}, encoded as a
// bit set. Equality of member sets is equality of the encoding.
struct SubsetVertex {
    std::uint64_t bits = 0;

    static SubsetVertex singleton(int member);
    static SubsetVertex of(const std::vector<int>& members);

    int cardinality() const;
    bool contains(int member) const;
    std::vector<int> members() const;

    bool operator==(const SubsetVertex& other) const { return bits == other.bits; }
    bool operator!=(const SubsetVertex& other) const { return bits != other.bits; }

    // Lexicographic order on the sorted member lists; the element where the
    // sets first differ decides.
    bool operator<(const SubsetVertex& other) const;
};

struct EdgeRef {
    int u; // singleton index for subset-inclusion graphs
    int v;

    bool operator==(const EdgeRef& other) const { return u == other.u && v == other.v; }
};

// The subset-inclusion graph G_k(n): singleton vertices 0..n-1 first, then
// the k-ton vertices in lexicographic order, edges joining each k-ton to the
// singletons it contains. Also doubles as a container for general simple
// graphs (k == 0, every vertex a singleton) and for partial subset graphs
// used by fixtures, so drawings of both kinds share one representation.
struct IncidenceGraph {
    int n = 0; // ground-set size == number of singleton vertices
    int k = 0; // subset size; 0 marks a general graph
    std::vector<SubsetVertex> vertices;
    std::vector<EdgeRef> edges;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    bool is_subset_graph() const { return k >= 2; }

    bool is_singleton_index(int v) const { return v >= 0 && v < n; }
    int singleton_member(int v) const; // inverse of singleton placement

    std::vector<int> degrees() const;
    bool is_bipartite_by_cardinality() const;

    // General simple graph on `vertex_count` vertices; vertex i is stored as
    // the singleton {i}.
    static IncidenceGraph general(int vertex_count, std::vector<EdgeRef> edges);

    static IncidenceGraph complete(int vertex_count);
    static IncidenceGraph cycle(int vertex_count);
};

// G_k(n) with canonical vertex and edge order. Requires 2 <= k <= n <= 64.
IncidenceGraph generate_incidence_graph(int k, int n);

// The k-ton vertices in canonical order (members ascending inside each).
std::vector<SubsetVertex> tripletons(const IncidenceGraph& g);

// Vertex indices of the k-ton vertices, in vertex order.
std::vector<int> kton_indices(const IncidenceGraph& g);

} // namespace thickness
