#pragma once

// Young diagrams: cells, partitions, hooks, contents, the four diagonal
// regions, the two total orders on cells and the cell <-> rim-hook bijection.

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rimhook {

/// Raised for inputs that violate a documented precondition (cell outside
/// the diagram, malformed partition, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A cell (row, col). Rows grow downward, columns rightward; cells of a
/// diagram are 1-indexed.
struct Cell {
  int row = 0;
  int col = 0;

  constexpr Cell north() const { return {row - 1, col}; }
  constexpr Cell east() const { return {row, col + 1}; }
  constexpr Cell south() const { return {row + 1, col}; }
  constexpr Cell west() const { return {row, col - 1}; }
  constexpr int content() const { return col - row; }

  friend constexpr bool operator==(const Cell&, const Cell&) = default;
  // Row-major order; only used for containers. The combinatorial orders are
  // revlex_compare and content_compare.
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& u);

/// Labels of the diagonal regions I, O, A, B.
enum class Region { InnerDiag, OuterDiag, RegionA, RegionB };

std::string to_string(Region r);

/// A weakly decreasing sequence of positive integers, identified with its
/// Young diagram. The empty partition is valid.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  /// lambda_i, 1-indexed; 0 outside 1..length().
  int row_length(int i) const;
  /// lambda'_j, 1-indexed; 0 outside 1..lambda_1.
  int column_length(int j) const;

  bool contains(const Cell& u) const {
    return u.row >= 1 && u.row <= length() && u.col >= 1 && u.col <= parts_[u.row - 1];
  }

  Partition conjugate() const;

  /// All cells in row-major order.
  std::vector<Cell> cells() const;

  /// Removes an outer corner.
  Partition without(const Cell& corner) const;

  /// Smallest and largest content present; undefined on the empty partition.
  int min_content() const { return 1 - length(); }
  int max_content() const { return parts_.front() - 1; }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::string to_string(const Partition& p);

Partition conjugate(const Partition& lambda);

int hook_length(const Partition& lambda, const Cell& u);

struct Corners {
  std::vector<Cell> inner;  // increasing content
  std::vector<Cell> outer;  // increasing content
};

/// Inner and outer corners, each sorted by increasing content, so that
/// o_1 < i_1 < o_2 < ... < i_r < o_{r+1}.
Corners corners(const Partition& lambda);

bool is_outer_corner(const Partition& lambda, const Cell& u);

/// Region lookup for a fixed shape. Construction precomputes the corner
/// contents; lookups are O(number of corners).
class RegionMap {
 public:
  explicit RegionMap(const Partition& lambda);
  Region of_content(int c) const;

 private:
  std::vector<int> inner_;
  std::vector<int> outer_;
};

Region region(const Partition& lambda, const Cell& u);

/// Reverse lexicographic order: u < v iff u lies in a column further east,
/// or in the same column further south.
std::strong_ordering revlex_compare(const Cell& u, const Cell& v);

/// Content order: u before v iff c(u) > c(v), or equal contents and u lies
/// further south.
std::strong_ordering content_compare(const Cell& u, const Cell& v);

/// A rim-hook h^u of a shape, stored with its anchor u and its cells in
/// north-east order from head alpha(h) = (lambda'_j, j) to tail
/// omega(h) = (i, lambda_i). The number of cells equals h(u).
struct RimHook {
  Cell anchor;
  std::vector<Cell> cells;

  const Cell& head() const { return cells.front(); }
  const Cell& tail() const { return cells.back(); }
  std::size_t length() const { return cells.size(); }
  bool contains(const Cell& u) const;

  friend bool operator==(const RimHook& a, const RimHook& b) { return a.anchor == b.anchor; }
};

RimHook rim_hook(const Partition& lambda, const Cell& u);

/// Orders rim-hooks by the revlex order of their anchors. Both must belong
/// to `lambda`.
std::strong_ordering rim_hook_compare(const Partition& lambda, const RimHook& f, const RimHook& h);

/// All rim-hooks of lambda in increasing rim-hook order.
std::vector<RimHook> rim_hooks(const Partition& lambda);

/// Parses "4,3,1" (empty string is the empty partition).
Partition parse_partition(const std::string& text);
/// Parses "(i,j)".
Cell parse_cell(const std::string& text);

/// All partitions of n in reverse lexicographic order of parts.
std::vector<Partition> partitions_of(int n);

}  // namespace rimhook
