#include "rimhook/geometry.hpp"

#include <algorithm>
#include <charconv>

namespace rimhook {

std::string to_string(const Cell& u) {
  return "(" + std::to_string(u.row) + "," + std::to_string(u.col) + ")";
}

std::string to_string(Region r) {
  switch (r) {
    case Region::InnerDiag: return "I";
    case Region::OuterDiag: return "O";
    case Region::RegionA: return "A";
    case Region::RegionB: return "B";
  }
  return "?";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw DomainError("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) throw DomainError("partition parts must be weakly decreasing");
    size_ += parts_[k];
  }
}

int Partition::row_length(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[i - 1];
}

int Partition::column_length(int j) const {
  if (j < 1 || parts_.empty() || j > parts_.front()) return 0;
  // parts_ is decreasing; count rows with lambda_i >= j
  auto it = std::partition_point(parts_.begin(), parts_.end(), [j](int p) { return p >= j; });
  return static_cast<int>(it - parts_.begin());
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (!parts_.empty()) {
    out.reserve(parts_.front());
    for (int j = 1; j <= parts_.front(); ++j) out.push_back(column_length(j));
  }
  return Partition(std::move(out));
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(size_);
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= parts_[i - 1]; ++j) out.push_back({i, j});
  return out;
}

Partition Partition::without(const Cell& corner) const {
  if (!is_outer_corner(*this, corner)) throw DomainError(to_string(corner) + " is not an outer corner");
  auto parts = parts_;
  if (--parts[corner.row - 1] == 0) parts.pop_back();
  return Partition(std::move(parts));
}

std::string to_string(const Partition& p) {
  std::string out;
  for (std::size_t k = 0; k < p.parts().size(); ++k) {
    if (k) out += ',';
    out += std::to_string(p.parts()[k]);
  }
  return out;
}

Partition conjugate(const Partition& lambda) { return lambda.conjugate(); }

int hook_length(const Partition& lambda, const Cell& u) {
  if (!lambda.contains(u)) throw DomainError("cell " + to_string(u) + " outside the shape");
  return lambda.row_length(u.row) + lambda.column_length(u.col) - u.row - u.col + 1;
}

bool is_outer_corner(const Partition& lambda, const Cell& u) {
  return lambda.contains(u) && !lambda.contains(u.east()) && !lambda.contains(u.south());
}

Corners corners(const Partition& lambda) {
  if (lambda.empty()) throw DomainError("the empty partition has no corners");
  Corners out;
  // walking rows bottom-up visits both corner kinds in increasing content
  for (int i = lambda.length(); i >= 1; --i) {
    for (int j = 1; j <= lambda.row_length(i); ++j) {
      Cell u{i, j};
      bool e = lambda.contains(u.east()), s = lambda.contains(u.south());
      if (!e && !s) {
        out.outer.push_back(u);
      } else if (e && s && !lambda.contains(u.east().south())) {
        out.inner.push_back(u);
      }
    }
  }
  auto by_content = [](const Cell& a, const Cell& b) { return a.content() < b.content(); };
  std::sort(out.inner.begin(), out.inner.end(), by_content);
  std::sort(out.outer.begin(), out.outer.end(), by_content);
  return out;
}

RegionMap::RegionMap(const Partition& lambda) {
  if (lambda.empty()) return;
  auto cs = corners(lambda);
  for (const auto& u : cs.inner) inner_.push_back(u.content());
  for (const auto& u : cs.outer) outer_.push_back(u.content());
}

Region RegionMap::of_content(int c) const {
  if (outer_.empty()) throw DomainError("region lookup on the empty partition");
  // outer_ = o_1 < ... < o_{r+1}, inner_ = i_1 < ... < i_r, interleaved
  if (c < outer_.front()) return Region::RegionA;
  for (std::size_t k = 0; k < inner_.size(); ++k) {
    if (c == outer_[k]) return Region::OuterDiag;
    if (c < inner_[k]) return Region::RegionB;
    if (c == inner_[k]) return Region::InnerDiag;
    if (c < outer_[k + 1]) return Region::RegionA;
  }
  if (c == outer_.back()) return Region::OuterDiag;
  return Region::RegionB;
}

Region region(const Partition& lambda, const Cell& u) {
  if (!lambda.contains(u)) throw DomainError("cell " + to_string(u) + " outside the shape");
  return RegionMap(lambda).of_content(u.content());
}

std::strong_ordering revlex_compare(const Cell& u, const Cell& v) {
  if (u.col != v.col) return v.col <=> u.col;
  return v.row <=> u.row;
}

std::strong_ordering content_compare(const Cell& u, const Cell& v) {
  if (u.content() != v.content()) return v.content() <=> u.content();
  return v.row <=> u.row;
}

bool RimHook::contains(const Cell& u) const {
  return std::find(cells.begin(), cells.end(), u) != cells.end();
}

RimHook rim_hook(const Partition& lambda, const Cell& u) {
  if (!lambda.contains(u)) throw DomainError("cell " + to_string(u) + " outside the shape");
  RimHook h{u, {}};
  Cell cur{lambda.column_length(u.col), u.col};
  const Cell tail{u.row, lambda.row_length(u.row)};
  h.cells.push_back(cur);
  // on the rim, e u stays on the rim whenever it lies in the diagram
  while (cur != tail) {
    cur = lambda.contains(cur.east()) ? cur.east() : cur.north();
    h.cells.push_back(cur);
  }
  return h;
}

std::strong_ordering rim_hook_compare(const Partition& lambda, const RimHook& f, const RimHook& h) {
  if (!lambda.contains(f.anchor) || !lambda.contains(h.anchor) ||
      f.tail().col != lambda.row_length(f.tail().row) || h.tail().col != lambda.row_length(h.tail().row))
    throw DomainError("rim-hooks do not belong to the given shape");
  return revlex_compare(f.anchor, h.anchor);
}

std::vector<RimHook> rim_hooks(const Partition& lambda) {
  auto cells = lambda.cells();
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return revlex_compare(a, b) < 0; });
  std::vector<RimHook> out;
  out.reserve(cells.size());
  for (const auto& u : cells) out.push_back(rim_hook(lambda, u));
  return out;
}

namespace {

int parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw DomainError("not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\n')) s.remove_suffix(1);
  if (s.empty()) return Partition();
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    parts.push_back(parse_int(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

Cell parse_cell(const std::string& text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') throw DomainError("malformed cell: '" + text + "'");
  s = s.substr(1, s.size() - 2);
  auto comma = s.find(',');
  if (comma == std::string_view::npos) throw DomainError("malformed cell: '" + text + "'");
  return {parse_int(s.substr(0, comma)), parse_int(s.substr(comma + 1))};
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace rimhook
