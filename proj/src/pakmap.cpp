#include "rimhook/pakmap.hpp"

#include <algorithm>
#include <stdexcept>

namespace rimhook {

CornerContext::CornerContext(const Partition& shape_, const Cell& corner_)
    : shape(shape_), corner(corner_), reduced(shape_.without(corner_)) {}

namespace {

Entry finite(const ExtendedValue& v, const char* what) {
  if (v.is_infinite()) throw std::logic_error(std::string("unexpected infinite value in ") + what);
  return v.value();
}

Entry corner_excess(const Rpp& pi, const Cell& x) {
  return pi.at(x) - finite(std::max(pi.value_ext(x.north()), pi.value_ext(x.west())), "corner excess");
}

// Copies t (shape mu) into a tableau of shape lambda and sets t(x).
Tableau extend(const Tableau& inner, const Partition& lambda, const Cell& x, Entry at_x) {
  Grid rows;
  for (int i = 1; i <= lambda.length(); ++i) {
    std::vector<Entry> row(lambda.row_length(i), 0);
    for (int j = 1; j <= inner.shape().row_length(i); ++j) row[j - 1] = inner.at({i, j});
    rows.push_back(std::move(row));
  }
  rows[x.row - 1][x.col - 1] = at_x;
  return Tableau::validate(lambda, std::move(rows));
}

}  // namespace

Rpp zeta(const Rpp& pi, const Cell& x) {
  CornerContext ctx(pi.shape(), x);
  RppBuilder out(ctx.reduced);
  for (const auto& u : ctx.reduced.cells()) {
    if (u.content() != x.content()) {
      out.at(u) = pi.at(u);
      continue;
    }
    // e u lies in lambda for every u != x on this diagonal, so the min is finite
    Entry lo = finite(std::max(pi.value_ext(u.north()), pi.value_ext(u.west())), "zeta max");
    Entry hi = finite(std::min(pi.value_ext(u.east()), pi.value_ext(u.south())), "zeta min");
    out.at(u) = lo + hi - pi.at(u);
  }
  return out.finish();
}

Tableau xi(const Rpp& pi) {
  const auto& lambda = pi.shape();
  if (lambda.empty()) return Tableau::zero(lambda);
  // revlex-minimal outer corner: bottom of the last column
  const int last = lambda.row_length(1);
  return xi_through(pi, Cell{lambda.column_length(last), last});
}

Tableau xi_through(const Rpp& pi, const Cell& x) {
  const auto& lambda = pi.shape();
  CornerContext ctx(lambda, x);
  Entry at_x = corner_excess(pi, x);
  Tableau rest = xi(zeta(pi, x));
  return extend(rest, lambda, x, at_x);
}

bool in_rpp_lx(const Rpp& pi, const Cell& x) {
  CornerContext ctx(pi.shape(), x);
  return corner_excess(pi, x) == 0;
}

}  // namespace rimhook
