#pragma once

// The corner toggle zeta and the corner-peeling recursion xi, computed
// directly from their recursive definitions. xi agrees with the inverse of
// lexicographic factorisation, but shares no code with it.

#include "rimhook/geometry.hpp"
#include "rimhook/rpp.hpp"

namespace rimhook {

/// An outer corner x of a shape and the shape with x removed.
struct CornerContext {
  Partition shape;
  Cell corner;
  Partition reduced;

  /// Throws DomainError if `corner` is not an outer corner of `shape`.
  CornerContext(const Partition& shape, const Cell& corner);
};

/// zeta_{lambda,x}: on diagonal c(x) (x itself removed) replaces pi(u) by
/// max{pi(n u), pi(w u)} + min{pi(e u), pi(s u)} - pi(u); copies all other
/// entries. The result has shape lambda - {x}.
Rpp zeta(const Rpp& pi, const Cell& x);

/// xi_lambda, peeling the revlex-minimal outer corner (bottom of the last column) at every level.
Tableau xi(const Rpp& pi);

/// xi_lambda evaluated by peeling the outer corner x first, then recursing
/// with the default corner choice.
Tableau xi_through(const Rpp& pi, const Cell& x);

/// pi(x) = max{pi(n x), pi(w x)}, i.e. pi lies in RPP_{lambda,x}.
bool in_rpp_lx(const Rpp& pi, const Cell& x);

}  // namespace rimhook
