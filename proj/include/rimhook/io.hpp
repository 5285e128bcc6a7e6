#pragma once

// Serialization (text and JSON) and rendering (ASCII, SVG).

#include <string>

#include <json.hpp>

#include "rimhook/classical.hpp"
#include "rimhook/insertion.hpp"
#include "rimhook/rpp.hpp"
#include "rimhook/series.hpp"

namespace rimhook {

using json = nlohmann::json;

/// {"shape":[...],"rows":[[...],...]}
json to_json(const Filling& f);
json to_json(const Partition& p);
json to_json(const Cell& u);
json to_json(const LatticePath& p);
json to_json(const Factorization& f);
json to_json(const SsytPair& pair);
/// {"degree":N,"coefficients":["1","1",...]}; coefficients as decimal strings.
json to_json(const TruncatedSeries& s);
/// {"variables":[k_lo..k_hi],"max_degree":D,"terms":[{"exponents":[...],"coefficient":"c"},...]}
json to_json(const MultiTraceSeries& s);

/// Accepts either the JSON object form or the text grid form (shape read
/// off the row lengths). An explicit shape, when given, must agree.
Rpp parse_rpp(const std::string& text);
Tableau parse_tableau(const std::string& text);
Grid parse_grid_any(const std::string& text, Partition* shape);

Rpp rpp_from_json(const json& j);
Tableau tableau_from_json(const json& j);
Factorization factorization_from_json(const json& j);

/// Text form of a factorisation: one "(i,j)" per line.
Factorization parse_factorization(const Partition& shape, const std::string& text);

/// Entry grid with a header row of contents; cells on `highlight` are starred.
std::string render_ascii(const Filling& f, const LatticePath* highlight = nullptr);

/// Standalone SVG of the grid with entries and an optional shaded path.
std::string render_svg(const Filling& f, const LatticePath* highlight = nullptr);

}  // namespace rimhook
