#include "thickness/search.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "thickness/errors.hpp"

namespace thickness {

std::vector<std::vector<int>> ConflictGraph::adjacency() const {
    std::vector<std::vector<int>> adj(node_count);
    for (const auto& c : conflicts) {
        adj[c[0]].push_back(c[1]);
        adj[c[1]].push_back(c[0]);
    }
    return adj;
}

ConflictGraph crossing_conflict_graph(const IncidenceGraph& g, const std::vector<Point>& coords) {
    LayeredDrawing flat{g, coords, std::vector<int>(g.edge_count(), 0), 1};
    if (!validate_drawing(flat).valid()) fail(Errc::invalid_drawing, "placement fails validity checks");

    ConflictGraph cg;
    cg.node_count = g.edge_count();
    std::vector<Segment> segs;
    segs.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) segs.push_back(flat.edge_segment(e));
    for (int e = 0; e < cg.node_count; ++e)
        for (int f = e + 1; f < cg.node_count; ++f)
            if (segment_relation(segs[e], segs[f]) == SegmentRelation::ProperCrossing)
                cg.conflicts.push_back({e, f});
    return cg;
}

namespace {

struct ColoringSearch {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> order;     // vertices, degree descending
    std::vector<int> colors;    // 1-based during search, 0 = unassigned

    explicit ColoringSearch(const std::vector<std::vector<int>>& adjacency)
        : adj(adjacency), colors(adjacency.size(), 0) {
        order.resize(adj.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [this](int a, int b) {
            return adj[a].size() > adj[b].size();
        });
    }

    bool feasible(int v, int color) const {
        for (int u : adj[v])
            if (colors[u] == color) return false;
        return true;
    }

    // Backtracking k-colorability; new colors introduced in order, which
    // quotients color permutations.
    bool colorable(std::size_t index, int k, int used) {
        if (index == order.size()) return true;
        int v = order[index];
        int limit = std::min(k, used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (!feasible(v, c)) continue;
            colors[v] = c;
            if (colorable(index + 1, k, std::max(used, c))) return true;
            colors[v] = 0;
        }
        return false;
    }
};

int greedy_clique_lower_bound(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<char> in_clique(n, 0);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&adj](int a, int b) { return adj[a].size() > adj[b].size(); });
    int size = 0;
    for (int v : order) {
        bool ok = true;
        for (int u = 0; u < n; ++u) {
            if (!in_clique[u]) continue;
            if (std::find(adj[v].begin(), adj[v].end(), u) == adj[v].end()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            in_clique[v] = 1;
            ++size;
        }
    }
    return std::max(size, n > 0 ? 1 : 0);
}

int greedy_coloring_upper_bound(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&adj](int a, int b) { return adj[a].size() > adj[b].size(); });
    std::vector<int> colors(n, 0);
    int used = 0;
    for (int v : order) {
        int c = 1;
        while (true) {
            bool clash = false;
            for (int u : adj[v])
                if (colors[u] == c) { clash = true; break; }
            if (!clash) break;
            ++c;
        }
        colors[v] = c;
        used = std::max(used, c);
    }
    return std::max(used, n > 0 ? 1 : 0);
}

} // namespace

std::optional<std::vector<int>> minimum_coloring(const ConflictGraph& cg, int cap) {
    if (cap < 1) fail(Errc::invalid_parameters, "cap must be at least 1");
    if (cg.node_count == 0) return std::vector<int>{};
    auto adj = cg.adjacency();
    int lb = greedy_clique_lower_bound(adj);
    int ub = greedy_coloring_upper_bound(adj);
    for (int k = lb; k <= std::min(ub, cap); ++k) {
        ColoringSearch search(adj);
        if (search.colorable(0, k, 0)) {
            std::vector<int> zero_based(search.colors.size());
            for (std::size_t i = 0; i < search.colors.size(); ++i)
                zero_based[i] = search.colors[i] - 1;
            return zero_based;
        }
    }
    return std::nullopt;
}

std::optional<int> chromatic_number_exact(const ConflictGraph& cg, int cap) {
    auto coloring = minimum_coloring(cg, cap);
    if (!coloring) return std::nullopt;
    if (coloring->empty()) return cg.node_count == 0 ? 0 : 1;
    return *std::max_element(coloring->begin(), coloring->end()) + 1;
}

std::optional<int> min_layers_fixed_placement(const IncidenceGraph& g,
                                              const std::vector<Point>& coords, int cap) {
    ConflictGraph cg = crossing_conflict_graph(g, coords);
    auto chrom = chromatic_number_exact(cg, cap);
    if (!chrom) return std::nullopt;
    return std::max(*chrom, 1); // an edgeless drawing still occupies one layer
}

std::optional<LayeredDrawing> min_layers_witness(const IncidenceGraph& g,
                                                 const std::vector<Point>& coords, int cap) {
    ConflictGraph cg = crossing_conflict_graph(g, coords);
    auto coloring = minimum_coloring(cg, cap);
    if (!coloring) return std::nullopt;
    int layers = 0;
    for (int c : *coloring) layers = std::max(layers, c + 1);
    LayeredDrawing d{g, coords, *coloring, std::max(layers, 1)};
    if (d.layers.empty()) d.layers.assign(g.edge_count(), 0);
    return d;
}

namespace {

Rat random_rat(std::mt19937_64& rng, long long lo, long long hi, long long denom) {
    std::uniform_int_distribution<long long> dist(lo * denom, hi * denom);
    return Rat(dist(rng), denom);
}

} // namespace

SearchResult geometric_thickness_upper_search(const IncidenceGraph& g,
                                              const PlacementStrategy& strategy, int cap) {
    const int nv = g.vertex_count();
    if (nv == 0) fail(Errc::invalid_parameters, "empty graph");
    std::optional<SearchResult> best;
    std::uint64_t tried = 0;

    auto consider = [&](const std::vector<Point>& coords) {
        ++tried;
        try {
            auto witness = min_layers_witness(g, coords, cap);
            if (!witness) return;
            int layers = witness->used_layer_count();
            if (!best || layers < best->layers) {
                best = SearchResult{*witness, std::max(layers, 1), tried};
            }
        } catch (const Error&) {
            // invalid placement: skip
        }
    };

    switch (strategy.kind) {
        case PlacementStrategy::Kind::Convex: {
            std::vector<Point> coords = rational_circle_points(nv, Rat(100));
            consider(coords);
            break;
        }
        case PlacementStrategy::Kind::Random: {
            std::mt19937_64 rng(strategy.seed);
            std::vector<Point> base = rational_circle_points(nv, Rat(100));
            for (int trial = 0; trial < strategy.trials; ++trial) {
                std::vector<Point> coords;
                coords.reserve(nv);
                for (int v = 0; v < nv; ++v) {
                    coords.push_back(Point{base[v].x + random_rat(rng, -100, 100, 16),
                                           base[v].y + random_rat(rng, -100, 100, 16)});
                }
                consider(coords);
                if (best && best->layers == 1) break;
            }
            break;
        }
        case PlacementStrategy::Kind::Grid: {
            const int r = strategy.grid_resolution;
            if (r < 1 || static_cast<long long>(r) * r < nv)
                fail(Errc::invalid_parameters, "grid too small for the vertex count");
            const int cells = r * r;
            double estimate = 1.0;
            for (int i = 0; i < nv; ++i) estimate *= cells - i;
            if (estimate > static_cast<double>(strategy.node_budget))
                fail(Errc::too_large, "grid enumeration exceeds the node budget");
            std::vector<char> taken(cells, 0);
            std::vector<Point> coords(nv);
            auto rec = [&](auto&& self, int v) -> void {
                if (best && best->layers == 1) return;
                if (v == nv) {
                    consider(coords);
                    return;
                }
                for (int cell = 0; cell < cells; ++cell) {
                    if (taken[cell]) continue;
                    taken[cell] = 1;
                    coords[v] = Point{Rat(cell % r), Rat(cell / r)};
                    self(self, v + 1);
                    taken[cell] = 0;
                }
            };
            rec(rec, 0);
            break;
        }
    }

    if (!best) fail(Errc::search_exhausted, "no valid placement found within the strategy budget");
    best->placements_tried = tried;
    return *best;
}

std::optional<BookResult> book_thickness_exact(const IncidenceGraph& g, int cap,
                                               bool allow_large) {
    const int nv = g.vertex_count();
    if (nv > 10 && !allow_large)
        fail(Errc::too_large, "book search guarded to 10 vertices (override to force)");
    if (cap < 1) fail(Errc::invalid_parameters, "cap must be at least 1");
    if (g.edge_count() == 0) {
        std::vector<int> order(nv);
        std::iota(order.begin(), order.end(), 0);
        return BookResult{0, BookLayout{g, order, {}}};
    }

    std::vector<int> rest(nv > 1 ? nv - 1 : 0);
    std::iota(rest.begin(), rest.end(), 1);

    std::optional<BookResult> best;
    auto consider_order = [&](const std::vector<int>& order) {
        std::vector<int> pos(nv);
        for (int i = 0; i < nv; ++i) pos[order[i]] = i;
        auto strictly_between = [](int a, int b, int x) {
            if (a < b) return a < x && x < b;
            return x > a || x < b;
        };
        ConflictGraph cg;
        cg.node_count = g.edge_count();
        for (int e = 0; e < g.edge_count(); ++e) {
            for (int f = e + 1; f < g.edge_count(); ++f) {
                const EdgeRef& ee = g.edges[e];
                const EdgeRef& ff = g.edges[f];
                if (ee.u == ff.u || ee.u == ff.v || ee.v == ff.u || ee.v == ff.v) continue;
                bool x_in = strictly_between(pos[ee.u], pos[ee.v], pos[ff.u]);
                bool y_in = strictly_between(pos[ee.u], pos[ee.v], pos[ff.v]);
                if (x_in != y_in) cg.conflicts.push_back({e, f});
            }
        }
        int page_cap = best ? std::min(cap, best->pages - 1) : cap;
        if (page_cap < 1) return;
        auto coloring = minimum_coloring(cg, page_cap);
        if (!coloring) return;
        int pages = 1;
        for (int c : *coloring) pages = std::max(pages, c + 1);
        if (!best || pages < best->pages) best = BookResult{pages, BookLayout{g, order, *coloring}};
    };

    // Vertex 0 fixed; reflections quotiented by orienting the first
    // neighbor pair.
    std::sort(rest.begin(), rest.end());
    do {
        if (nv >= 3 && rest.front() > rest.back()) continue;
        std::vector<int> order;
        order.reserve(nv);
        order.push_back(0);
        order.insert(order.end(), rest.begin(), rest.end());
        consider_order(order);
        if (best && best->pages == 1) break;
    } while (std::next_permutation(rest.begin(), rest.end()));

    return best;
}

// ---------------------------------------------------------------------------
// Outer-type refutation harness
// ---------------------------------------------------------------------------

std::vector<Point> refute_singleton_positions(int n, int scale) {
    return rational_circle_points(n, Rat(scale));
}

namespace {

std::string edge_label(const IncidenceGraph& g, const std::vector<EdgeRole>& roles, int edge) {
    const EdgeRef& e = g.edges[edge];
    std::string label = to_string(roles[edge]);
    label += "(";
    for (int m : g.vertices[e.v].members()) label += static_cast<char>('0' + m % 10);
    label += ")-";
    label += std::to_string(e.u);
    return label;
}

} // namespace

std::vector<Point> type_compatible_positions(const LayeredDrawing& base,
                                             const SingletonNumbering& numbering,
                                             int tripleton_vertex, const TripletonType& type,
                                             const RefuteStrategy& strategy) {
    std::vector<Point> singleton_points(base.coords.begin(), base.coords.begin() + base.graph.n);
    std::vector<Point> hull = convex_hull(singleton_points);

    // Hull scale taken from the singleton radius (positions come from
    // refute_singleton_positions).
    Rat scale(0);
    for (const Point& p : singleton_points) {
        Rat m = p.x < 0 ? -p.x : p.x;
        Rat my = p.y < 0 ? -p.y : p.y;
        if (m > scale) scale = m;
        if (my > scale) scale = my;
    }

    auto matches = [&](const Point& p) {
        if (point_vs_hull(p, hull) != HullLocation::Outside) return false;
        LayeredDrawing probe = base;
        probe.coords[tripleton_vertex] = p;
        try {
            return tripleton_type(probe, numbering, tripleton_vertex) == type;
        } catch (const Error&) {
            return false;
        }
    };

    std::vector<Point> out;
    if (strategy.kind == RefuteStrategy::Kind::Grid) {
        const int r = strategy.grid_resolution;
        if (r < 1) fail(Errc::invalid_parameters, "grid resolution must be positive");
        // Step scale/r over [-3*scale, 3*scale]^2.
        for (int i = -3 * r; i <= 3 * r; ++i) {
            for (int j = -3 * r; j <= 3 * r; ++j) {
                Point p{scale * i / r, scale * j / r};
                if (matches(p)) out.push_back(p);
            }
        }
    } else {
        std::mt19937_64 rng(strategy.seed + static_cast<std::uint64_t>(tripleton_vertex) * 0x9e3779b97f4a7c15ULL);
        const long long bound = 3;
        int found = 0;
        for (int attempt = 0; attempt < strategy.random_positions * 200 && found < strategy.random_positions;
             ++attempt) {
            Point p{scale * random_rat(rng, -bound, bound, 64), scale * random_rat(rng, -bound, bound, 64)};
            if (matches(p)) {
                out.push_back(p);
                ++found;
            }
        }
    }
    return out;
}

RefutationReport refute_outer_type(int n, const TripletonType& type, const RefuteStrategy& strategy,
                                   std::uint64_t budget,
                                   const std::function<void(const LayeredDrawing&)>& on_witness) {
    if (n < 3) fail(Errc::invalid_parameters, "n must be at least 3");
    IncidenceGraph g = generate_incidence_graph(3, n);
    std::vector<Point> coords(g.vertex_count(), Point{Rat(0), Rat(0)});
    std::vector<Point> singles = refute_singleton_positions(n, 16);
    std::copy(singles.begin(), singles.end(), coords.begin());

    LayeredDrawing base{g, coords, std::vector<int>(g.edge_count(), 0), 3};
    SingletonNumbering numbering = clockwise_numbering(base, 0);

    // Coherent layer assignment: layers are the roles.
    std::vector<EdgeRole> roles = edge_roles(g, numbering);
    for (int e = 0; e < g.edge_count(); ++e) base.layers[e] = static_cast<int>(roles[e]);

    RefutationReport report;
    report.n = n;
    report.type = type;
    report.strategy = strategy.kind == RefuteStrategy::Kind::Grid
                          ? "grid(" + std::to_string(strategy.grid_resolution) + ")"
                          : "random(seed=" + std::to_string(strategy.seed) + ")";

    std::vector<int> ktons = kton_indices(g);
    std::vector<std::vector<Point>> positions;
    positions.reserve(ktons.size());
    report.min_wedge_positions = SIZE_MAX;
    for (int v : ktons) {
        positions.push_back(type_compatible_positions(base, numbering, v, type, strategy));
        report.min_wedge_positions = std::min(report.min_wedge_positions, positions.back().size());
    }
    if (report.min_wedge_positions == 0) {
        report.min_wedge_positions = 0;
        return report; // some wedge admits no sample: nothing to enumerate
    }

    // Most constrained tripleton first.
    std::vector<int> order(ktons.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&positions](int a, int b) {
        return positions[a].size() < positions[b].size();
    });

    // Incident edges per tripleton.
    std::vector<std::vector<int>> edges_of(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) edges_of[g.edges[e].v].push_back(e);

    LayeredDrawing current = base;
    std::vector<int> placed; // kton vertex ids in placement order
    bool out_of_budget = false;

    auto conflicts_with_placed = [&](int kton) -> std::optional<std::pair<std::string, std::string>> {
        // Returns a forced same-layer crossing if one exists; throws nothing.
        // Validity problems are signalled via the empty-string pair.
        const Point& p = current.coords[kton];
        for (int s = 0; s < g.n; ++s)
            if (current.coords[s] == p) return std::make_pair(std::string(), std::string());
        for (int other : placed)
            if (current.coords[other] == p) return std::make_pair(std::string(), std::string());

        std::vector<int> other_edges;
        for (int other : placed)
            for (int e : edges_of[other]) other_edges.push_back(e);

        for (int e : edges_of[kton]) {
            Segment se = current.edge_segment(e);
            // new edge must not pass through any placed vertex
            for (int s = 0; s < g.n; ++s)
                if (point_in_segment_interior(current.coords[s], se))
                    return std::make_pair(std::string(), std::string());
            for (int other : placed)
                if (point_in_segment_interior(current.coords[other], se))
                    return std::make_pair(std::string(), std::string());
            for (int f : other_edges) {
                Segment sf = current.edge_segment(f);
                SegmentRelation rel = segment_relation(se, sf);
                if (rel == SegmentRelation::Touching || rel == SegmentRelation::Overlapping)
                    return std::make_pair(std::string(), std::string());
                if (rel == SegmentRelation::ProperCrossing && current.layers[e] == current.layers[f])
                    return std::make_pair(edge_label(g, roles, e), edge_label(g, roles, f));
            }
            // the new point must not sit inside previously placed edges
        }
        for (int other : placed) {
            for (int f : edges_of[other]) {
                if (point_in_segment_interior(p, current.edge_segment(f)))
                    return std::make_pair(std::string(), std::string());
            }
        }
        return std::nullopt;
    };

    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (out_of_budget) return;
        if (depth == order.size()) {
            ++report.complete_candidates;
            LayeredDrawing candidate = current;
            bool ok = verify_geometric_thickness_witness(candidate, 3) &&
                      is_coherent(candidate, numbering) && inner_outer(candidate) == InnerOuter::Outer;
            if (ok) {
                DrawingType dt = drawing_type(candidate, numbering);
                ok = dt.uniform && dt.type == type;
            }
            if (ok) {
                ++report.witnesses_found;
                if (!report.witness) report.witness = candidate;
                if (on_witness) on_witness(candidate);
            } else {
                ++report.invalid_candidates;
            }
            return;
        }
        int slot = order[depth];
        int kton = ktons[slot];
        for (const Point& p : positions[slot]) {
            if (report.candidates_examined >= budget) {
                out_of_budget = true;
                return;
            }
            ++report.candidates_examined;
            current.coords[kton] = p;
            auto clash = conflicts_with_placed(kton);
            if (clash) {
                if (clash->first.empty()) {
                    ++report.invalid_candidates;
                } else {
                    auto key = *clash;
                    if (key.second < key.first) std::swap(key.first, key.second);
                    ++report.forced_crossings[key];
                }
                continue;
            }
            placed.push_back(kton);
            self(self, depth + 1);
            placed.pop_back();
            if (out_of_budget) return;
        }
    };
    rec(rec, 0);
    report.exhausted = !out_of_budget;
    return report;
}

} // namespace thickness
