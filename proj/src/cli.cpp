#include "thickness/cli.hpp"

#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "thickness/bounds.hpp"
#include "thickness/constructions.hpp"
#include "thickness/errors.hpp"
#include "thickness/io.hpp"
#include "thickness/search.hpp"
#include "thickness/svg.hpp"

namespace thickness {

namespace {

using nlohmann::json;

int exit_code_for(const Error& err) {
    switch (err.code()) {
        case Errc::invalid_parameters:
        case Errc::degenerate_input:
        case Errc::not_convex_position:
        case Errc::wrong_arity:
        case Errc::too_large:
        case Errc::parse_error:
        case Errc::io_error:
            return 2;
        default:
            return 1;
    }
}

struct Output {
    bool quiet = false;

    void line(const std::string& text) const {
        if (!quiet) std::cout << text << "\n";
    }
};

// Prints a bound, switching to a digit count above the expansion threshold.
std::string show_count(const BigCount& value) {
    std::string digits = value.str();
    if (digits.size() <= 100) return digits;
    return "10^" + std::to_string(digits.size() - 1) + "-scale integer (" +
           std::to_string(digits.size()) + " digits, leading " + digits.substr(0, 12) + "...)";
}

std::string show_bound(const BoundValue& bound) {
    if (bound.materialized()) return show_count(*bound.value);
    return std::string("not materializable (") + bound.note + ")";
}

void write_payload(const std::string& path, const json& payload, CommandOutcome& outcome) {
    if (path.empty()) return;
    save_json(path, payload);
    outcome.payload_path = path;
}

CommandOutcome cmd_gen(int k, int n, const std::string& out, const Output& io) {
    IncidenceGraph g = generate_incidence_graph(k, n);
    CommandOutcome outcome;
    outcome.summary = "G_" + std::to_string(k) + "(" + std::to_string(n) + "): " +
                      std::to_string(g.vertex_count()) + " vertices, " +
                      std::to_string(g.edge_count()) + " edges";
    write_payload(out, graph_to_json(g), outcome);
    io.line(outcome.summary);
    return outcome;
}

CommandOutcome cmd_construct(const std::string& name, int n, const std::string& character,
                             const std::string& out, const Output& io) {
    CommandOutcome outcome;
    json payload;
    bool verified = false;
    if (name == "layering3") {
        LayeringResult r = thickness3_layering(n);
        verified = r.verified;
        payload = layering_to_json(r.graph, r.layers);
        outcome.summary = "thickness-3 star layering of G_3(" + std::to_string(n) + ")";
    } else if (name == "g38") {
        DrawingResult r = g38_geometric_drawing();
        verified = r.verified;
        payload = drawing_to_json(r.drawing);
        outcome.summary = "G_3(8) drawing, " + std::to_string(r.drawing.used_layer_count()) +
                          " layers, " + std::to_string(r.report.crossings.size()) + " same-layer crossings";
    } else if (name == "cube") {
        DrawingResult r = g3_planar_drawing_n4();
        verified = r.verified;
        payload = drawing_to_json(r.drawing);
        outcome.summary = "planar cube drawing of G_3(4)";
    } else if (name == "upper") {
        DrawingResult r = upper_bound_drawing(n);
        verified = r.verified && r.drawing.used_layer_count() == expected_upper_bound_layers(n);
        payload = drawing_to_json(r.drawing);
        outcome.summary = "upper-bound drawing of G_3(" + std::to_string(n) + "): " +
                          std::to_string(r.drawing.used_layer_count()) + " layers, target " +
                          std::to_string(expected_upper_bound_layers(n)) +
                          (verified ? ", verified" : ", NOT verified");
    } else if (name == "fixture") {
        CrossingCharacter c = character == "concave" ? CrossingCharacter::Concave
                                                     : CrossingCharacter::Convex;
        if (character != "concave" && character != "convex")
            fail(Errc::invalid_parameters, "--character must be convex or concave");
        DrawingResult r = two_tripleton_inner_fixture(c);
        verified = r.verified;
        payload = drawing_to_json(r.drawing);
        outcome.summary = std::string("two-tripleton inner fixture (") + character + ")";
    } else {
        fail(Errc::invalid_parameters, "unknown construction '" + name + "'");
    }
    write_payload(out, payload, outcome);
    outcome.exit_code = verified ? 0 : 1;
    io.line(outcome.summary + (verified ? " [verified]" : " [verification failed]"));
    return outcome;
}

CommandOutcome cmd_verify(const std::string& path, const std::string& kind, int t,
                          const std::string& out, const Output& io) {
    CommandOutcome outcome;
    json payload;
    bool ok = false;
    if (kind == "geom") {
        LayeredDrawing d = drawing_from_json(load_json(path));
        CrossingReport report = validate_drawing(d);
        if (report.valid()) report = layer_crossings(d);
        ok = report.crossing_free() && d.used_layer_count() <= t;
        payload = crossing_report_to_json(report);
        payload["layers_used"] = d.used_layer_count();
        outcome.summary = "geometric witness for t=" + std::to_string(t) + ": " +
                          (ok ? "verified" : "FAILED") + " (" +
                          std::to_string(report.crossings.size()) + " same-layer crossings, " +
                          std::to_string(d.used_layer_count()) + " layers used)";
    } else if (kind == "book") {
        BookLayout bl = book_from_json(load_json(path));
        auto crossings = book_crossings(bl);
        std::set<int> pages(bl.pages.begin(), bl.pages.end());
        ok = crossings.empty() && static_cast<int>(pages.size()) <= t;
        payload["crossing_pairs"] = json::array();
        for (const auto& c : crossings) payload["crossing_pairs"].push_back({c[0], c[1]});
        payload["pages_used"] = pages.size();
        outcome.summary = "book witness for t=" + std::to_string(t) + ": " + (ok ? "verified" : "FAILED");
    } else if (kind == "abstract") {
        auto [g, layers] = layering_from_json(load_json(path));
        ok = verify_thickness_layering(g, layers, t);
        payload["layers"] = layers;
        outcome.summary = "abstract thickness layering for t=" + std::to_string(t) + ": " +
                          (ok ? "verified" : "FAILED");
    } else {
        fail(Errc::invalid_parameters, "--kind must be geom, book or abstract");
    }
    write_payload(out, payload, outcome);
    outcome.exit_code = ok ? 0 : 1;
    io.line(outcome.summary);
    return outcome;
}

CommandOutcome cmd_classify(const std::string& path, int start, const std::string& out,
                            const Output& io) {
    LayeredDrawing d = drawing_from_json(load_json(path));
    ClassificationReport report = classify_drawing(d, start);
    CommandOutcome outcome;
    json payload = classification_to_json(report);
    payload["coherent_starts"] = coherent_starts(d);
    write_payload(out, payload, outcome);
    outcome.summary = std::string("convex=") + (report.convex ? "true" : "false") +
                      " coherent=" + (report.coherent ? "true" : "false") +
                      " inner_outer=" + to_string(report.inner_outer_status) + " drawing_type=" +
                      (report.uniform_type ? report.uniform_type->symbol() : std::string("NonUniform"));
    io.line(outcome.summary);
    if (out.empty() && !io.quiet) std::cout << payload.dump(2) << "\n";
    return outcome;
}

CommandOutcome cmd_search_fixed(const std::string& graph_path, const std::string& coords_path,
                                int cap, const Output& io) {
    IncidenceGraph g = graph_from_json(load_json(graph_path));
    json cj = load_json(coords_path);
    std::vector<Point> coords = coords_from_json(cj.is_object() && cj.contains("coords")
                                                     ? cj.at("coords")
                                                     : cj);
    auto layers = min_layers_fixed_placement(g, coords, cap);
    CommandOutcome outcome;
    if (layers) {
        outcome.summary = std::to_string(*layers);
    } else {
        outcome.summary = "AboveCap(" + std::to_string(cap) + ")";
        outcome.exit_code = 1;
    }
    io.line(outcome.summary);
    return outcome;
}

CommandOutcome cmd_search_placement(const std::string& graph_path, const std::string& strategy_name,
                                    int grid, std::uint64_t seed, int trials, int cap,
                                    const std::string& out, const Output& io) {
    IncidenceGraph g = graph_from_json(load_json(graph_path));
    PlacementStrategy strategy;
    if (strategy_name == "grid") {
        strategy.kind = PlacementStrategy::Kind::Grid;
        strategy.grid_resolution = grid;
    } else if (strategy_name == "random") {
        strategy.kind = PlacementStrategy::Kind::Random;
        strategy.seed = seed;
        strategy.trials = trials;
    } else if (strategy_name == "convex") {
        strategy.kind = PlacementStrategy::Kind::Convex;
    } else {
        fail(Errc::invalid_parameters, "--strategy must be grid, random or convex");
    }
    SearchResult result = geometric_thickness_upper_search(g, strategy, cap);
    CommandOutcome outcome;
    outcome.summary = "best witness: " + std::to_string(result.layers) + " layers (" +
                      std::to_string(result.placements_tried) + " placements tried)";
    write_payload(out, drawing_to_json(result.best), outcome);
    io.line(outcome.summary);
    return outcome;
}

CommandOutcome cmd_search_book(const std::string& graph_path, int cap, const std::string& out,
                               const Output& io) {
    IncidenceGraph g = graph_from_json(load_json(graph_path));
    auto result = book_thickness_exact(g, cap);
    CommandOutcome outcome;
    if (result) {
        outcome.summary = std::to_string(result->pages);
        write_payload(out, book_to_json(result->witness), outcome);
    } else {
        outcome.summary = "AboveCap(" + std::to_string(cap) + ")";
        outcome.exit_code = 1;
    }
    io.line(outcome.summary);
    return outcome;
}

CommandOutcome cmd_search_refute(int n, const std::string& type_symbol, const std::string& strategy_name,
                                 int grid, std::uint64_t seed, std::uint64_t budget,
                                 const std::string& out, const Output& io) {
    RefuteStrategy strategy;
    if (strategy_name == "random") {
        strategy.kind = RefuteStrategy::Kind::Random;
        strategy.seed = seed;
    } else {
        strategy.kind = RefuteStrategy::Kind::Grid;
        strategy.grid_resolution = grid;
    }
    RefutationReport report = refute_outer_type(n, TripletonType::from_symbol(type_symbol), strategy, budget);
    CommandOutcome outcome;
    std::uint64_t forced_total = 0;
    for (const auto& [key, count] : report.forced_crossings) forced_total += count;
    outcome.summary = "type " + type_symbol + " at n=" + std::to_string(n) + ": " +
                      (report.witnesses_found > 0
                           ? std::to_string(report.witnesses_found) + " witness(es) found"
                           : "no witness") +
                      ", " + std::to_string(report.candidates_examined) + " candidates, " +
                      std::to_string(forced_total) + " forced same-layer crossings" +
                      (report.exhausted ? "" : " (budget exhausted early)");
    write_payload(out, refutation_to_json(report), outcome);
    io.line(outcome.summary);
    return outcome;
}

CommandOutcome cmd_bounds(const std::string& kind, int e, int l, int c, int k, int t, int n1,
                          const Output& io) {
    CommandOutcome outcome;
    if (kind == "ramsey") {
        outcome.summary = show_count(ramsey_upper(e, l, c));
    } else if (kind == "es") {
        outcome.summary = show_count(erdos_szekeres_upper(k));
    } else if (kind == "classes") {
        outcome.summary = show_count(theorem_color_classes(t));
    } else if (kind == "pipeline") {
        SeparationPipelineBound bound = separation_pipeline_bound(t, n1);
        outcome.summary = "color classes c(t) = " + show_count(bound.color_classes) +
                          "\nn2 bound R_3(n1; c) = " + show_bound(bound.n2_bound) +
                          "\ncoherent sub-bound R_3(n1; 27) = " + show_bound(bound.coherent_bound) +
                          "\ninner/outer sub-bound R_3(n1; 2) = " + show_bound(bound.inner_outer_bound);
        if (!bound.n2_bound.materialized()) outcome.exit_code = 1;
    } else {
        fail(Errc::invalid_parameters, "bounds kind must be ramsey, es, classes or pipeline");
    }
    io.line(outcome.summary);
    return outcome;
}

CommandOutcome cmd_svg(const std::string& path, const std::string& out, double scale,
                       const Output& io) {
    LayeredDrawing d = drawing_from_json(load_json(path));
    std::string svg = drawing_to_svg(d, scale);
    if (out.empty()) fail(Errc::invalid_parameters, "svg needs --out");
    std::ofstream file(out);
    if (!file) fail(Errc::io_error, "cannot open '" + out + "'");
    file << svg;
    CommandOutcome outcome;
    outcome.svg_path = out;
    outcome.summary = "wrote " + out + " (" + std::to_string(svg.size()) + " bytes)";
    io.line(outcome.summary);
    return outcome;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"verification and search toolkit for thickness, geometric thickness and book thickness of subset-inclusion graphs"};
    app.require_subcommand(1);

    Output io;
    std::string out;
    std::uint64_t seed = 0;
    app.add_flag("--quiet", io.quiet, "suppress normal output");

    // gen
    auto* gen = app.add_subcommand("gen", "generate G_k(n) in the graph format");
    int gen_k = 3, gen_n = 4;
    std::string gen_out;
    gen->add_option("--k", gen_k, "subset size")->required();
    gen->add_option("--n", gen_n, "ground-set size")->required();
    gen->add_option("--out", gen_out, "output file");

    // construct
    auto* construct = app.add_subcommand("construct", "build and verify a named construction");
    std::string cons_name, cons_character = "convex", cons_out;
    int cons_n = 8;
    construct->add_option("name", cons_name, "layering3 | cube | g38 | upper | fixture")->required();
    construct->add_option("--n", cons_n, "ground-set size (layering3, upper)");
    construct->add_option("--character", cons_character, "fixture character: convex | concave");
    construct->add_option("--out", cons_out, "output file");

    // verify
    auto* verify = app.add_subcommand("verify", "verify a witness file");
    std::string ver_path, ver_kind = "geom", ver_out;
    int ver_t = 3;
    verify->add_option("path", ver_path, "witness file")->required();
    verify->add_option("--kind", ver_kind, "geom | book | abstract");
    verify->add_option("--t", ver_t, "layer bound");
    verify->add_option("--out", ver_out, "report file");

    // classify
    auto* classify = app.add_subcommand("classify", "classify a drawing of G_3(n)");
    std::string cls_path, cls_out;
    int cls_start = 0;
    classify->add_option("path", cls_path, "drawing file")->required();
    classify->add_option("--start", cls_start, "numbering start singleton");
    classify->add_option("--out", cls_out, "report file");

    // search
    auto* search = app.add_subcommand("search", "search and decision procedures");
    std::string search_kind, search_graph, search_coords, search_type = "201", search_strategy = "grid";
    std::string search_out;
    int search_cap = 4, search_grid = 5, search_trials = 100, search_n = 4;
    std::uint64_t search_budget = 50'000'000;
    search->add_option("kind", search_kind, "fixed | placement | book | refute")->required();
    search->add_option("--graph", search_graph, "graph file");
    search->add_option("--coords", search_coords, "coords file (drawing or bare coords array)");
    search->add_option("--cap", search_cap, "layer/page cap");
    search->add_option("--grid", search_grid, "grid resolution");
    search->add_option("--trials", search_trials, "random trials");
    search->add_option("--strategy", search_strategy, "grid | random | convex");
    search->add_option("--n", search_n, "ground-set size (refute)");
    search->add_option("--type", search_type, "tripleton type symbol (refute)");
    search->add_option("--budget", search_budget, "node budget (refute)");
    search->add_option("--out", search_out, "output file");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Ramsey / Erdos-Szekeres bound evaluators");
    std::string bounds_kind;
    int b_e = 2, b_l = 3, b_c = 2, b_k = 4, b_t = 4, b_n1 = 4;
    bounds->add_option("kind", bounds_kind, "ramsey | es | classes | pipeline")->required();
    bounds->add_option("--e", b_e, "subset size e");
    bounds->add_option("--l", b_l, "target set size l");
    bounds->add_option("--c", b_c, "number of classes");
    bounds->add_option("--k", b_k, "convex polygon size (es)");
    bounds->add_option("--t", b_t, "layer count t (classes, pipeline)");
    bounds->add_option("--n1", b_n1, "n1 (pipeline)");

    // svg
    auto* svg = app.add_subcommand("svg", "render a drawing file to SVG");
    std::string svg_path, svg_out;
    double svg_scale = 1.0;
    svg->add_option("path", svg_path, "drawing file")->required();
    svg->add_option("--out", svg_out, "output SVG file")->required();
    svg->add_option("--scale", svg_scale, "scale factor");

    app.add_option("--seed", seed, "random seed");
    app.add_option("--out", out, "output file (per-subcommand --out takes precedence)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        CommandOutcome outcome;
        if (gen->parsed()) {
            outcome = cmd_gen(gen_k, gen_n, gen_out.empty() ? out : gen_out, io);
        } else if (construct->parsed()) {
            outcome = cmd_construct(cons_name, cons_n, cons_character,
                                    cons_out.empty() ? out : cons_out, io);
        } else if (verify->parsed()) {
            outcome = cmd_verify(ver_path, ver_kind, ver_t, ver_out.empty() ? out : ver_out, io);
        } else if (classify->parsed()) {
            outcome = cmd_classify(cls_path, cls_start, cls_out.empty() ? out : cls_out, io);
        } else if (search->parsed()) {
            std::string search_output = search_out.empty() ? out : search_out;
            if (search_kind == "fixed") {
                outcome = cmd_search_fixed(search_graph, search_coords, search_cap, io);
            } else if (search_kind == "placement") {
                outcome = cmd_search_placement(search_graph, search_strategy, search_grid, seed,
                                               search_trials, search_cap, search_output, io);
            } else if (search_kind == "book") {
                outcome = cmd_search_book(search_graph, search_cap, search_output, io);
            } else if (search_kind == "refute") {
                outcome = cmd_search_refute(search_n, search_type, search_strategy, search_grid, seed,
                                            search_budget, search_output, io);
            } else {
                fail(Errc::invalid_parameters, "search kind must be fixed, placement, book or refute");
            }
        } else if (bounds->parsed()) {
            outcome = cmd_bounds(bounds_kind, b_e, b_l, b_c, b_k, b_t, b_n1, io);
        } else if (svg->parsed()) {
            outcome = cmd_svg(svg_path, svg_out, svg_scale, io);
        }
        return outcome.exit_code;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_code_for(err);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
}

} // namespace thickness
