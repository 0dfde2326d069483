#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "thickness/classification.hpp"
#include "thickness/drawing.hpp"
#include "thickness/search.hpp"

namespace thickness {

// Shared repo-wide file formats. Canonical order on write, arbitrary order
// accepted on read; structural problems raise parse-error.
//
//   graph:    {"k": int, "n": int, "vertices": [[members...]...],
//              "edges": [[i, j]...]}            (k = 0 marks a general graph)
//   drawing:  {"graph": <graph>, "coords": [["x","y"]...], "layers": [int...]}
//   layering: {"graph": <graph>, "layers": [int...]}
//   book:     {"graph": <graph>, "order": [int...], "pages": [int...]}
//
// Rationals serialize as "p/q" strings, "/q" omitted for integers.

nlohmann::json graph_to_json(const IncidenceGraph& g);
IncidenceGraph graph_from_json(const nlohmann::json& j);

nlohmann::json drawing_to_json(const LayeredDrawing& d);
LayeredDrawing drawing_from_json(const nlohmann::json& j);

nlohmann::json layering_to_json(const IncidenceGraph& g, const std::vector<int>& layers);
std::pair<IncidenceGraph, std::vector<int>> layering_from_json(const nlohmann::json& j);

nlohmann::json book_to_json(const BookLayout& bl);
BookLayout book_from_json(const nlohmann::json& j);

nlohmann::json coords_to_json(const std::vector<Point>& coords);
std::vector<Point> coords_from_json(const nlohmann::json& j);

nlohmann::json classification_to_json(const ClassificationReport& report);
nlohmann::json crossing_report_to_json(const CrossingReport& report);
nlohmann::json refutation_to_json(const RefutationReport& report);

// Whole-file helpers; io-error on filesystem problems, parse-error on bad
// content.
nlohmann::json load_json(const std::string& path);
void save_json(const std::string& path, const nlohmann::json& j);

} // namespace thickness
