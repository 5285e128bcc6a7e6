#pragma once

// Reverse plane partitions and the unconstrained fillings (tableaux) that
// encode multisets of rim-hooks.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rimhook/geometry.hpp"

namespace rimhook {

using Entry = std::int64_t;
using Grid = std::vector<std::vector<Entry>>;

/// A value of pi extended to all of Z^2: 0 north/west of the diagram,
/// Infinite south/east of it. Only ever compared, never added.
class ExtendedValue {
 public:
  constexpr ExtendedValue(Entry v) : value_(v), infinite_(false) {}
  static constexpr ExtendedValue infinite() { return ExtendedValue(); }

  constexpr bool is_infinite() const { return infinite_; }
  /// Finite value; 0 would be meaningless for Infinite, so callers check first.
  constexpr Entry value() const { return value_; }

  friend constexpr bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr ExtendedValue() : value_(0), infinite_(true) {}
  Entry value_;
  bool infinite_;
};

std::string to_string(const ExtendedValue& v);

/// A shape together with one natural number per cell, stored densely by row.
class Filling {
 public:
  const Partition& shape() const { return shape_; }
  const Grid& rows() const { return rows_; }

  Entry at(const Cell& u) const { return rows_[u.row - 1][u.col - 1]; }
  /// Sum of all entries.
  Entry size() const;
  bool is_zero() const;

  friend bool operator==(const Filling& a, const Filling& b) {
    return a.shape_ == b.shape_ && a.rows_ == b.rows_;
  }

 protected:
  Filling() = default;
  Filling(Partition shape, Grid rows);

  Partition shape_;
  Grid rows_;
};

class Rpp : public Filling {
 public:
  Rpp() = default;

  /// Checks shape agreement, nonnegativity and weak increase along rows and
  /// columns. Throws DomainError naming the first offending cell otherwise.
  static Rpp validate(const Partition& shape, Grid rows);
  static Rpp zero(const Partition& shape);

  /// pi(i,j) with the conventions 0 for i<=0 or j<=0 and Infinite for
  /// i,j>=1 outside the shape.
  ExtendedValue value_ext(int i, int j) const;
  ExtendedValue value_ext(const Cell& u) const { return value_ext(u.row, u.col); }

  friend bool operator==(const Rpp& a, const Rpp& b) {
    return static_cast<const Filling&>(a) == static_cast<const Filling&>(b);
  }

 private:
  Rpp(Partition shape, Grid rows) : Filling(std::move(shape), std::move(rows)) {}
  friend class RppBuilder;
};

/// Unchecked write access for algorithms that produce valid RPPs by
/// construction (enumeration, path arithmetic). `finish` re-validates.
class RppBuilder {
 public:
  explicit RppBuilder(const Partition& shape);
  explicit RppBuilder(const Filling& from);

  Entry& at(const Cell& u) { return rows_[u.row - 1][u.col - 1]; }
  const Partition& shape() const { return shape_; }
  /// Validates and returns the result; nullopt if not a reverse plane partition.
  std::optional<Rpp> try_finish() const;
  Rpp finish() const;
  /// Skips validation; only for callers that maintain the invariant.
  Rpp finish_unchecked() const { return Rpp(shape_, rows_); }

 private:
  Partition shape_;
  Grid rows_;
};

/// t : shape -> N, encoding t(u) copies of the rim-hook h^u.
class Tableau : public Filling {
 public:
  Tableau() = default;
  static Tableau validate(const Partition& shape, Grid rows);
  static Tableau zero(const Partition& shape);

  /// Sum over cells of t(u) * h(u).
  Entry weighted_size() const;
  /// Sum over cells of t(u).
  Entry count() const { return size(); }

  Tableau with(const Cell& u, Entry value) const;

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return static_cast<const Filling&>(a) == static_cast<const Filling&>(b);
  }

 private:
  Tableau(Partition shape, Grid rows) : Filling(std::move(shape), std::move(rows)) {}
};

/// Sum of pi over the cells of content k; 0 when the diagonal is absent.
Entry trace(const Rpp& pi, int k);

/// {u in O : pi(u) > pi(w u)} union {u in A : pi(u) > pi(w u), pi(u) > pi(n u)},
/// returned in content order.
std::vector<Cell> candidates(const Rpp& pi);
bool is_candidate(const Rpp& pi, const Cell& u);

/// Minimum candidate in content order; nullopt iff pi is zero.
std::optional<Cell> min_candidate(const Rpp& pi);

/// Text form: one line per row, entries separated by single spaces.
std::string format_grid(const Filling& f);
/// Parses the text form; the shape is read off the row lengths.
Grid parse_grid(const std::string& text);
Partition shape_of(const Grid& rows);

}  // namespace rimhook
