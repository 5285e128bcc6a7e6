#include "rimhook/io.hpp"

#include <algorithm>
#include <sstream>

namespace rimhook {

json to_json(const Partition& p) { return p.parts(); }

json to_json(const Cell& u) { return json::array({u.row, u.col}); }

json to_json(const Filling& f) { return {{"shape", f.shape().parts()}, {"rows", f.rows()}}; }

json to_json(const LatticePath& p) {
  json cells = json::array();
  for (const auto& u : p.cells) cells.push_back(to_json(u));
  return {{"orientation", p.orientation == Orientation::NorthEast ? "NE" : "SW"}, {"cells", cells}};
}

json to_json(const Factorization& f) {
  json anchors = json::array();
  for (const auto& u : f.anchors) anchors.push_back(to_json(u));
  return {{"shape", f.shape.parts()}, {"anchors", anchors}};
}

json to_json(const SsytPair& pair) { return {{"P", to_json(pair.p)}, {"Q", to_json(pair.q)}}; }

json to_json(const TruncatedSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(c.str());
  return {{"degree", s.degree()}, {"coefficients", coeffs}};
}

json to_json(const MultiTraceSeries& s) {
  json vars = json::array();
  for (int k = 0; k < s.variable_count(); ++k) vars.push_back(s.low_index() + k);
  json terms = json::array();
  for (const auto& [m, c] : s.terms()) terms.push_back({{"exponents", m.exponents}, {"coefficient", c.str()}});
  return {{"variables", vars}, {"max_degree", s.max_degree()}, {"terms", terms}};
}

namespace {

bool looks_like_json(const std::string& text) {
  auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

Grid grid_from_json(const json& j, Partition* shape) {
  if (!j.is_object() || !j.contains("rows")) throw DomainError("expected an object with \"rows\"");
  Grid rows;
  try {
    rows = j.at("rows").get<Grid>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed rows: ") + e.what());
  }
  Partition inferred = shape_of(rows);
  if (j.contains("shape")) {
    Partition declared;
    try {
      declared = Partition(j.at("shape").get<std::vector<int>>());
    } catch (const json::exception& e) {
      throw DomainError(std::string("malformed shape: ") + e.what());
    }
    if (!(declared == inferred)) throw DomainError("rows do not match the declared shape " + to_string(declared));
  }
  if (shape) *shape = inferred;
  return rows;
}

}  // namespace

Grid parse_grid_any(const std::string& text, Partition* shape) {
  if (looks_like_json(text)) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw DomainError(std::string("invalid JSON: ") + e.what());
    }
    return grid_from_json(j, shape);
  }
  Grid rows = parse_grid(text);
  Partition p = shape_of(rows);
  if (shape) *shape = p;
  return rows;
}

Rpp parse_rpp(const std::string& text) {
  Partition shape;
  Grid rows = parse_grid_any(text, &shape);
  return Rpp::validate(shape, std::move(rows));
}

Tableau parse_tableau(const std::string& text) {
  Partition shape;
  Grid rows = parse_grid_any(text, &shape);
  return Tableau::validate(shape, std::move(rows));
}

Rpp rpp_from_json(const json& j) {
  Partition shape;
  Grid rows = grid_from_json(j, &shape);
  return Rpp::validate(shape, std::move(rows));
}

Tableau tableau_from_json(const json& j) {
  Partition shape;
  Grid rows = grid_from_json(j, &shape);
  return Tableau::validate(shape, std::move(rows));
}

Factorization factorization_from_json(const json& j) {
  try {
    Factorization f{Partition(j.at("shape").get<std::vector<int>>()), {}};
    for (const auto& a : j.at("anchors")) {
      Cell u{a.at(0).get<int>(), a.at(1).get<int>()};
      if (!f.shape.contains(u)) throw DomainError("anchor " + to_string(u) + " outside the shape");
      f.anchors.push_back(u);
    }
    return f;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed factorization: ") + e.what());
  }
}

Factorization parse_factorization(const Partition& shape, const std::string& text) {
  Factorization f{shape, {}};
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Cell u = parse_cell(line);
    if (!shape.contains(u)) throw DomainError("anchor " + to_string(u) + " outside the shape");
    f.anchors.push_back(u);
  }
  return f;
}

std::string render_ascii(const Filling& f, const LatticePath* highlight) {
  const auto& lambda = f.shape();
  std::size_t width = 1;
  for (const auto& row : f.rows())
    for (Entry v : row) width = std::max(width, std::to_string(v).size());
  std::ostringstream out;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.row_length(i); ++j) {
      std::string v = std::to_string(f.at({i, j}));
      bool mark = highlight && highlight->contains({i, j});
      out << std::string(width - v.size() + 1, ' ') << v << (mark ? '*' : ' ');
    }
    out << '\n';
  }
  if (!lambda.empty()) {
    out << "diagonals:\n";
    for (int k = lambda.min_content(); k <= lambda.max_content(); ++k) {
      Entry sum = 0;
      std::string entries;
      for (const auto& u : lambda.cells())
        if (u.content() == k) {
          entries += (entries.empty() ? "" : " ") + std::to_string(f.at(u));
          sum += f.at(u);
        }
      out << "  k=" << k << ": [" << entries << "] sum=" << sum << '\n';
    }
  }
  return out.str();
}

std::string render_svg(const Filling& f, const LatticePath* highlight) {
  const auto& lambda = f.shape();
  constexpr int kCell = 40;
  const int w = (lambda.empty() ? 0 : lambda.row_length(1)) * kCell + 2;
  const int h = lambda.length() * kCell + 2;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
      << ' ' << h << "\">\n";
  for (const auto& u : lambda.cells()) {
    int x = (u.col - 1) * kCell + 1, y = (u.row - 1) * kCell + 1;
    bool mark = highlight && highlight->contains(u);
    out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell << "\" height=\"" << kCell
        << "\" fill=\"" << (mark ? "#bbbbbb" : "white") << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << x + kCell / 2 << "\" y=\"" << y + kCell / 2
        << "\" text-anchor=\"middle\" dominant-baseline=\"central\" font-family=\"sans-serif\" font-size=\"16\">"
        << f.at(u) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace rimhook
