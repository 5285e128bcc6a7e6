#pragma once

// Rim-hook insertion into reverse plane partitions and its inverse.
//
// Inserting h into pi raises pi by one along a south-west path P(h, pi)
// ending at the tail of h; extracting reverses this along a north-east path
// Q(v, pi) starting at a candidate v. Repeatedly extracting at the content-
// minimal candidate yields the lexicographic factorisation, which is the
// bijection between reverse plane partitions and multisets of rim-hooks.
//
// Both path constructions are greedy and deterministic: every step has
// exactly one admissible move, so no tie-breaking is ever involved.

#include <optional>
#include <string>
#include <vector>

#include "rimhook/geometry.hpp"
#include "rimhook/rpp.hpp"

namespace rimhook {

enum class Orientation { SouthWest, NorthEast };

/// A lattice path stored in traversal order. Head and tail do not depend on
/// orientation: the head is the south-western end, the tail the north-eastern
/// end. length() counts cells.
struct LatticePath {
  std::vector<Cell> cells;
  Orientation orientation = Orientation::NorthEast;

  const Cell& head() const { return orientation == Orientation::NorthEast ? cells.front() : cells.back(); }
  const Cell& tail() const { return orientation == Orientation::NorthEast ? cells.back() : cells.front(); }
  std::size_t length() const { return cells.size(); }
  bool contains(const Cell& u) const;
  LatticePath reversed() const;
  /// True iff consecutive cells are single steps in the declared orientation.
  bool well_formed() const;

  friend bool operator==(const LatticePath& a, const LatticePath& b) {
    return a.orientation == b.orientation && a.cells == b.cells;
  }
};

std::string to_string(const LatticePath& p);

/// Conditions (1) and (2): for u on P in I or A, e u is on P with pi(u) = pi(e u);
/// for u and s u both on P, pi(u) = pi(s u). Throws if P leaves the shape.
bool is_compatible(const LatticePath& path, const Rpp& pi);

/// pi + P or pi - P; nullopt when the result is not a reverse plane partition.
std::optional<Rpp> add_path(const Rpp& pi, const LatticePath& path);
std::optional<Rpp> subtract_path(const Rpp& pi, const LatticePath& path);

/// The greedy south-west path P(h, pi): start at the tail of h and, until it
/// has as many cells as h, step south if the current cell is in B or I and
/// pi(u) = pi(s u), west otherwise. Defined whether or not h inserts; when h
/// does not insert the path may run west of column 1 (cells with col <= 0).
LatticePath insertion_path(const RimHook& h, const Rpp& pi);

struct InsertFailure {
  LatticePath path;
  /// A candidate strictly before the head of `path` in content order.
  std::optional<Cell> witness;
  std::string reason;
};

/// Either h * pi or the reason it does not insert.
class InsertOutcome {
 public:
  static InsertOutcome success(Rpp result, LatticePath path);
  static InsertOutcome failure(InsertFailure f);

  bool ok() const { return result_.has_value(); }
  const Rpp& result() const;
  const LatticePath& path() const { return path_; }
  const InsertFailure& failure() const;

 private:
  std::optional<Rpp> result_;
  LatticePath path_;
  std::optional<InsertFailure> failure_;
};

/// h inserts into pi iff (P(h,pi), pi) is compatible and pi + P(h,pi) is a
/// reverse plane partition. Throws DomainError if h is not a rim-hook of
/// pi's shape.
InsertOutcome try_insert(const RimHook& h, const Rpp& pi);

/// The greedy north-east path Q(v, pi) from a candidate v. Throws
/// DomainError if v is not a candidate of pi.
LatticePath extraction_path(const Cell& v, const Rpp& pi);

/// The rim-hook with the same tail and number of cells as `path`.
RimHook rim_hook_of_path(const Partition& lambda, const LatticePath& path);

/// True iff h = h(v, pi) for some candidate v with (Q(v,pi), pi) compatible
/// and pi - Q(v,pi) a reverse plane partition.
bool is_factor(const RimHook& h, const Rpp& pi);
/// All factors, in increasing rim-hook order.
std::vector<RimHook> factors(const Rpp& pi);

struct Extraction {
  RimHook hook;
  Cell candidate;
  LatticePath path;
  Rpp remainder;
};

/// Extracts h(v, pi) at the content-minimal candidate v; nullopt iff pi is zero.
std::optional<Extraction> extract_min(const Rpp& pi);

struct Factorization {
  Partition shape;
  /// Anchors h_1 <= ... <= h_s in rim-hook order, pi = h_1 * ... * h_s * 0.
  std::vector<Cell> anchors;

  std::vector<RimHook> hooks() const;
};

struct FactorizeResult {
  Factorization factorization;
  Tableau tableau;
  /// Extraction steps in order, for display.
  std::vector<Extraction> steps;
};

FactorizeResult factorize(const Rpp& pi, bool keep_steps = false);

/// Anchors of t with multiplicity, sorted increasingly in rim-hook order.
std::vector<Cell> sorted_anchors(const Tableau& t);

/// Inverse of factorize: inserts the multiset of t into 0 in decreasing
/// rim-hook order. Every insertion is asserted to succeed; a failure throws
/// std::logic_error with a diagnostic dump.
Rpp build(const Tableau& t);

/// Text form of a factorisation: one "(i,j)" per line.
std::string format_factorization(const Factorization& f);

}  // namespace rimhook
