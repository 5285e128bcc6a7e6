#include "rimhook/rpp.hpp"

#include <algorithm>
#include <sstream>

namespace rimhook {

std::string to_string(const ExtendedValue& v) {
  return v.is_infinite() ? std::string("inf") : std::to_string(v.value());
}

Filling::Filling(Partition shape, Grid rows) : shape_(std::move(shape)), rows_(std::move(rows)) {}

Entry Filling::size() const {
  Entry s = 0;
  for (const auto& row : rows_)
    for (Entry v : row) s += v;
  return s;
}

bool Filling::is_zero() const {
  for (const auto& row : rows_)
    for (Entry v : row)
      if (v != 0) return false;
  return true;
}

namespace {

void check_shape(const Partition& shape, const Grid& rows) {
  if (static_cast<int>(rows.size()) != shape.length())
    throw DomainError("grid has " + std::to_string(rows.size()) + " rows, shape " + to_string(shape) + " has " +
                      std::to_string(shape.length()));
  for (int i = 1; i <= shape.length(); ++i) {
    if (static_cast<int>(rows[i - 1].size()) != shape.row_length(i))
      throw DomainError("row " + std::to_string(i) + " has length " + std::to_string(rows[i - 1].size()) +
                        ", expected " + std::to_string(shape.row_length(i)));
    for (int j = 1; j <= shape.row_length(i); ++j)
      if (rows[i - 1][j - 1] < 0) throw DomainError("negative entry at " + to_string(Cell{i, j}));
  }
}

// First cell violating monotonicity against its north or west neighbour.
std::optional<Cell> first_violation(const Grid& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j > 0 && rows[i][j] < rows[i][j - 1]) return Cell{int(i) + 1, int(j) + 1};
      if (i > 0 && rows[i][j] < rows[i - 1][j]) return Cell{int(i) + 1, int(j) + 1};
    }
  return std::nullopt;
}

Grid zero_grid(const Partition& shape) {
  Grid g;
  for (int p : shape.parts()) g.emplace_back(p, 0);
  return g;
}

}  // namespace

Rpp Rpp::validate(const Partition& shape, Grid rows) {
  check_shape(shape, rows);
  if (auto bad = first_violation(rows))
    throw DomainError("not a reverse plane partition: monotonicity fails at " + to_string(*bad));
  return Rpp(shape, std::move(rows));
}

Rpp Rpp::zero(const Partition& shape) { return Rpp(shape, zero_grid(shape)); }

ExtendedValue Rpp::value_ext(int i, int j) const {
  if (i <= 0 || j <= 0) return 0;
  if (!shape_.contains({i, j})) return ExtendedValue::infinite();
  return rows_[i - 1][j - 1];
}

RppBuilder::RppBuilder(const Partition& shape) : shape_(shape), rows_(zero_grid(shape)) {}
RppBuilder::RppBuilder(const Filling& from) : shape_(from.shape()), rows_(from.rows()) {}

std::optional<Rpp> RppBuilder::try_finish() const {
  for (const auto& row : rows_)
    for (Entry v : row)
      if (v < 0) return std::nullopt;
  if (first_violation(rows_)) return std::nullopt;
  return Rpp(shape_, rows_);
}

Rpp RppBuilder::finish() const { return Rpp::validate(shape_, rows_); }

Tableau Tableau::validate(const Partition& shape, Grid rows) {
  check_shape(shape, rows);
  return Tableau(shape, std::move(rows));
}

Tableau Tableau::zero(const Partition& shape) { return Tableau(shape, zero_grid(shape)); }

Entry Tableau::weighted_size() const {
  Entry s = 0;
  for (const auto& u : shape_.cells()) s += at(u) * hook_length(shape_, u);
  return s;
}

Tableau Tableau::with(const Cell& u, Entry value) const {
  if (!shape_.contains(u)) throw DomainError("cell " + to_string(u) + " outside the shape");
  if (value < 0) throw DomainError("tableau entries must be nonnegative");
  Tableau t = *this;
  t.rows_[u.row - 1][u.col - 1] = value;
  return t;
}

Entry trace(const Rpp& pi, int k) {
  Entry s = 0;
  const auto& lambda = pi.shape();
  // cells (i, i+k) with 1 <= i <= length
  for (int i = std::max(1, 1 - k); i <= lambda.length(); ++i) {
    Cell u{i, i + k};
    if (lambda.contains(u)) s += pi.at(u);
  }
  return s;
}

bool is_candidate(const Rpp& pi, const Cell& u) {
  if (!pi.shape().contains(u)) return false;
  Region r = RegionMap(pi.shape()).of_content(u.content());
  ExtendedValue v = pi.at(u);
  if (r == Region::OuterDiag) return v > pi.value_ext(u.west());
  if (r == Region::RegionA) return v > pi.value_ext(u.west()) && v > pi.value_ext(u.north());
  return false;
}

std::vector<Cell> candidates(const Rpp& pi) {
  std::vector<Cell> out;
  if (pi.shape().empty()) return out;
  RegionMap regions(pi.shape());
  for (const auto& u : pi.shape().cells()) {
    Region r = regions.of_content(u.content());
    ExtendedValue v = pi.at(u);
    if ((r == Region::OuterDiag && v > pi.value_ext(u.west())) ||
        (r == Region::RegionA && v > pi.value_ext(u.west()) && v > pi.value_ext(u.north())))
      out.push_back(u);
  }
  std::sort(out.begin(), out.end(), [](const Cell& a, const Cell& b) { return content_compare(a, b) < 0; });
  return out;
}

std::optional<Cell> min_candidate(const Rpp& pi) {
  auto c = candidates(pi);
  if (c.empty()) return std::nullopt;
  return c.front();
}

std::string format_grid(const Filling& f) {
  std::string out;
  for (const auto& row : f.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

Grid parse_grid(const std::string& text) {
  Grid rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Entry> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      Entry v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw DomainError("not an integer: '" + tok + "'");
      }
      if (used != tok.size()) throw DomainError("not an integer: '" + tok + "'");
      row.push_back(v);
    }
    if (row.empty()) continue;
    rows.push_back(std::move(row));
  }
  return rows;
}

Partition shape_of(const Grid& rows) {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  try {
    return Partition(std::move(parts));
  } catch (const DomainError&) {
    throw DomainError("ragged grid: row lengths do not form a partition");
  }
}

}  // namespace rimhook
