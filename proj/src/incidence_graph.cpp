#include "thickness/incidence_graph.hpp"

#include <algorithm>
#include <bit>

#include "thickness/errors.hpp"

namespace thickness {

SubsetVertex SubsetVertex::singleton(int member) {
    if (member < 0 || member >= 64) fail(Errc::invalid_parameters, "member out of range");
    return SubsetVertex{std::uint64_t{1} << member};
}

SubsetVertex SubsetVertex::of(const std::vector<int>& members) {
    SubsetVertex v;
    for (int m : members) {
        if (m < 0 || m >= 64) fail(Errc::invalid_parameters, "member out of range");
        v.bits |= std::uint64_t{1} << m;
    }
    return v;
}

int SubsetVertex::cardinality() const { return std::popcount(bits); }

bool SubsetVertex::contains(int member) const {
    return member >= 0 && member < 64 && (bits >> member) & 1;
}

std::vector<int> SubsetVertex::members() const {
    std::vector<int> out;
    out.reserve(cardinality());
    std::uint64_t rest = bits;
    while (rest) {
        int m = std::countr_zero(rest);
        out.push_back(m);
        rest &= rest - 1;
    }
    return out;
}

bool SubsetVertex::operator<(const SubsetVertex& other) const {
    std::uint64_t diff = bits ^ other.bits;
    if (diff == 0) return false;
    std::uint64_t low = diff & (~diff + 1);
    // Owning the smallest differing element means being lexicographically
    // smaller, except when that ownership reflects a shorter set prefix;
    // for equal cardinalities (the only case we order) the rule is exact.
    if ((bits & low) != 0) {
        return true;
    }
    return false;
}

int IncidenceGraph::singleton_member(int v) const {
    if (!is_singleton_index(v)) fail(Errc::invalid_parameters, "not a singleton index");
    auto m = vertices[v].members();
    return m.front();
}

std::vector<int> IncidenceGraph::degrees() const {
    std::vector<int> deg(vertices.size(), 0);
    for (const EdgeRef& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

bool IncidenceGraph::is_bipartite_by_cardinality() const {
    for (const EdgeRef& e : edges) {
        if (vertices[e.u].cardinality() == vertices[e.v].cardinality()) return false;
    }
    return true;
}

IncidenceGraph IncidenceGraph::general(int vertex_count, std::vector<EdgeRef> edge_list) {
    if (vertex_count < 0 || vertex_count > 64) fail(Errc::invalid_parameters, "vertex count out of range");
    IncidenceGraph g;
    g.n = vertex_count;
    g.k = 0;
    g.vertices.reserve(vertex_count);
    for (int i = 0; i < vertex_count; ++i) g.vertices.push_back(SubsetVertex::singleton(i));
    for (EdgeRef& e : edge_list) {
        if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count)
            fail(Errc::invalid_parameters, "bad edge");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    g.edges = std::move(edge_list);
    return g;
}

IncidenceGraph IncidenceGraph::complete(int vertex_count) {
    std::vector<EdgeRef> edges;
    for (int i = 0; i < vertex_count; ++i)
        for (int j = i + 1; j < vertex_count; ++j) edges.push_back({i, j});
    return general(vertex_count, std::move(edges));
}

IncidenceGraph IncidenceGraph::cycle(int vertex_count) {
    if (vertex_count < 3) fail(Errc::invalid_parameters, "cycle needs >= 3 vertices");
    std::vector<EdgeRef> edges;
    for (int i = 0; i < vertex_count; ++i) edges.push_back({i, (i + 1) % vertex_count});
    return general(vertex_count, std::move(edges));
}

IncidenceGraph generate_incidence_graph(int k, int n) {
    if (k < 2) fail(Errc::invalid_parameters, "k must be at least 2");
    if (n < k) fail(Errc::invalid_parameters, "n must be at least k");
    if (n > 64) fail(Errc::invalid_parameters, "ground set capped at 64");

    // C(n, k) with an overflow/memory guard.
    std::uint64_t subsets = 1;
    for (int i = 0; i < k; ++i) {
        subsets = subsets * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
        if (subsets > 2'000'000) fail(Errc::too_large, "G_k(n) would exceed the vertex budget");
    }

    IncidenceGraph g;
    g.n = n;
    g.k = k;
    g.vertices.reserve(n + subsets);
    for (int i = 0; i < n; ++i) g.vertices.push_back(SubsetVertex::singleton(i));

    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        g.vertices.push_back(SubsetVertex::of(pick));
        int kton_index = g.vertex_count() - 1;
        for (int m : pick) g.edges.push_back({m, kton_index});
        // next combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return g;
}

std::vector<SubsetVertex> tripletons(const IncidenceGraph& g) {
    std::vector<SubsetVertex> out;
    for (const SubsetVertex& v : g.vertices) {
        if (v.cardinality() >= 2) out.push_back(v);
    }
    return out;
}

std::vector<int> kton_indices(const IncidenceGraph& g) {
    std::vector<int> out;
    for (int i = 0; i < g.vertex_count(); ++i) {
        if (g.vertices[i].cardinality() >= 2) out.push_back(i);
    }
    return out;
}

} // namespace thickness
