#include "rimhook/insertion.hpp"

#include <algorithm>
#include <stdexcept>

namespace rimhook {

bool LatticePath::contains(const Cell& u) const { return std::find(cells.begin(), cells.end(), u) != cells.end(); }

LatticePath LatticePath::reversed() const {
  LatticePath p{{cells.rbegin(), cells.rend()},
                orientation == Orientation::NorthEast ? Orientation::SouthWest : Orientation::NorthEast};
  return p;
}

bool LatticePath::well_formed() const {
  for (std::size_t k = 1; k < cells.size(); ++k) {
    const Cell& a = cells[k - 1];
    const Cell& b = cells[k];
    bool ok = orientation == Orientation::NorthEast ? (b == a.north() || b == a.east())
                                                    : (b == a.south() || b == a.west());
    if (!ok) return false;
  }
  return !cells.empty();
}

std::string to_string(const LatticePath& p) {
  std::string out;
  for (std::size_t k = 0; k < p.cells.size(); ++k) {
    if (k) out += ' ';
    out += to_string(p.cells[k]);
  }
  return out;
}

namespace {

bool in_b_or_i(Region r) { return r == Region::RegionB || r == Region::InnerDiag; }
bool in_i_or_a(Region r) { return r == Region::InnerDiag || r == Region::RegionA; }
bool in_o_or_b(Region r) { return r == Region::OuterDiag || r == Region::RegionB; }

void require_inside(const Partition& lambda, const LatticePath& path) {
  for (const auto& u : path.cells)
    if (!lambda.contains(u)) throw DomainError("path cell " + to_string(u) + " outside the shape");
}

std::optional<Rpp> shift_along(const Rpp& pi, const LatticePath& path, Entry delta) {
  require_inside(pi.shape(), path);
  RppBuilder b(pi);
  for (const auto& u : path.cells) b.at(u) += delta;
  return b.try_finish();
}

void require_rim_hook_of(const Partition& lambda, const RimHook& h) {
  if (!lambda.contains(h.anchor) || h.tail() != Cell{h.anchor.row, lambda.row_length(h.anchor.row)} ||
      h.length() != static_cast<std::size_t>(hook_length(lambda, h.anchor)))
    throw DomainError("rim-hook anchored at " + to_string(h.anchor) + " does not belong to shape " +
                      to_string(lambda));
}

}  // namespace

bool is_compatible(const LatticePath& path, const Rpp& pi) {
  const auto& lambda = pi.shape();
  require_inside(lambda, path);
  RegionMap regions(lambda);
  for (const auto& u : path.cells) {
    if (in_i_or_a(regions.of_content(u.content()))) {
      if (!path.contains(u.east()) || pi.value_ext(u) != pi.value_ext(u.east())) return false;
    }
    if (path.contains(u.south()) && pi.at(u) != pi.at(u.south())) return false;
  }
  return true;
}

std::optional<Rpp> add_path(const Rpp& pi, const LatticePath& path) { return shift_along(pi, path, +1); }
std::optional<Rpp> subtract_path(const Rpp& pi, const LatticePath& path) { return shift_along(pi, path, -1); }

LatticePath insertion_path(const RimHook& h, const Rpp& pi) {
  const auto& lambda = pi.shape();
  require_rim_hook_of(lambda, h);
  RegionMap regions(lambda);
  LatticePath p{{h.tail()}, Orientation::SouthWest};
  while (p.cells.size() < h.length()) {
    const Cell u = p.cells.back();
    Cell next = (in_b_or_i(regions.of_content(u.content())) && pi.value_ext(u) == pi.value_ext(u.south()))
                    ? u.south()
                    : u.west();
    // past column 1 the rule keeps running on the zero boundary values; such
    // a path certifies nothing, but its head still locates the failure
    p.cells.push_back(next);
  }
  return p;
}

InsertOutcome InsertOutcome::success(Rpp result, LatticePath path) {
  InsertOutcome o;
  o.result_ = std::move(result);
  o.path_ = std::move(path);
  return o;
}

InsertOutcome InsertOutcome::failure(InsertFailure f) {
  InsertOutcome o;
  o.path_ = f.path;
  o.failure_ = std::move(f);
  return o;
}

const Rpp& InsertOutcome::result() const {
  if (!result_) throw std::logic_error("insertion failed; no result");
  return *result_;
}

const InsertFailure& InsertOutcome::failure() const {
  if (!failure_) throw std::logic_error("insertion succeeded; no failure report");
  return *failure_;
}

InsertOutcome try_insert(const RimHook& h, const Rpp& pi) {
  LatticePath p = insertion_path(h, pi);
  std::string reason;
  const bool inside = std::all_of(p.cells.begin(), p.cells.end(), [&](const Cell& u) { return pi.shape().contains(u); });
  if (!inside) {
    reason = "path leaves the shape";
  } else if (!is_compatible(p, pi)) {
    reason = "path is not compatible";
  } else if (auto r = add_path(pi, p)) {
    return InsertOutcome::success(std::move(*r), std::move(p));
  } else {
    reason = "raising along the path breaks monotonicity";
  }
  InsertFailure f{p, std::nullopt, reason};
  if (auto c = min_candidate(pi); c && content_compare(*c, p.head()) < 0) f.witness = *c;
  return InsertOutcome::failure(std::move(f));
}

LatticePath extraction_path(const Cell& v, const Rpp& pi) {
  if (!is_candidate(pi, v)) throw DomainError(to_string(v) + " is not a candidate");
  const auto& lambda = pi.shape();
  RegionMap regions(lambda);
  LatticePath q{{v}, Orientation::NorthEast};
  while (true) {
    const Cell u = q.cells.back();
    Region r = regions.of_content(u.content());
    ExtendedValue here = pi.at(u), above = pi.value_ext(u.north());
    Cell next;
    if (in_o_or_b(r) && here == above) {
      next = u.north();
    } else if (in_i_or_a(r) || (lambda.contains(u.east()) && here > above)) {
      next = u.east();
    } else {
      break;  // pi(u) > pi(n u) and e u outside the shape
    }
    if (!lambda.contains(next))
      throw std::logic_error("extraction path left the shape at " + to_string(next));
    q.cells.push_back(next);
  }
  return q;
}

RimHook rim_hook_of_path(const Partition& lambda, const LatticePath& path) {
  const Cell& tail = path.tail();
  if (!lambda.contains(tail) || tail.col != lambda.row_length(tail.row))
    throw std::logic_error("no rim-hook ends at " + to_string(tail));
  for (int j = 1; j <= tail.col; ++j) {
    Cell u{tail.row, j};
    if (static_cast<std::size_t>(hook_length(lambda, u)) == path.length()) return rim_hook(lambda, u);
  }
  throw std::logic_error("no rim-hook with tail " + to_string(tail) + " and " + std::to_string(path.length()) +
                         " cells");
}

bool is_factor(const RimHook& h, const Rpp& pi) {
  require_rim_hook_of(pi.shape(), h);
  for (const auto& v : candidates(pi)) {
    LatticePath q = extraction_path(v, pi);
    if (rim_hook_of_path(pi.shape(), q).anchor != h.anchor) continue;
    if (is_compatible(q, pi) && subtract_path(pi, q)) return true;
  }
  return false;
}

std::vector<RimHook> factors(const Rpp& pi) {
  std::vector<RimHook> out;
  for (const auto& h : rim_hooks(pi.shape()))
    if (is_factor(h, pi)) out.push_back(h);
  return out;
}

std::optional<Extraction> extract_min(const Rpp& pi) {
  auto v = min_candidate(pi);
  if (!v) return std::nullopt;
  LatticePath q = extraction_path(*v, pi);
  auto rest = subtract_path(pi, q);
  if (!rest || !is_compatible(q, pi))
    throw std::logic_error("extraction at the minimal candidate " + to_string(*v) + " is not a factor of\n" +
                           format_grid(pi));
  RimHook h = rim_hook_of_path(pi.shape(), q);
  return Extraction{std::move(h), *v, std::move(q), std::move(*rest)};
}

std::vector<RimHook> Factorization::hooks() const {
  std::vector<RimHook> out;
  out.reserve(anchors.size());
  for (const auto& u : anchors) out.push_back(rim_hook(shape, u));
  return out;
}

FactorizeResult factorize(const Rpp& pi, bool keep_steps) {
  FactorizeResult res{{pi.shape(), {}}, Tableau::zero(pi.shape()), {}};
  Grid counts = res.tableau.rows();
  Rpp cur = pi;
  while (auto step = extract_min(cur)) {
    const Cell& a = step->hook.anchor;
    res.factorization.anchors.push_back(a);
    ++counts[a.row - 1][a.col - 1];
    cur = step->remainder;
    if (keep_steps) res.steps.push_back(std::move(*step));
  }
  res.tableau = Tableau::validate(pi.shape(), std::move(counts));
  return res;
}

std::vector<Cell> sorted_anchors(const Tableau& t) {
  std::vector<Cell> out;
  for (const auto& u : t.shape().cells())
    for (Entry k = 0; k < t.at(u); ++k) out.push_back(u);
  std::stable_sort(out.begin(), out.end(), [](const Cell& a, const Cell& b) { return revlex_compare(a, b) < 0; });
  return out;
}

Rpp build(const Tableau& t) {
  const auto& lambda = t.shape();
  auto anchors = sorted_anchors(t);
  Rpp cur = Rpp::zero(lambda);
  for (std::size_t k = anchors.size(); k-- > 0;) {
    RimHook h = rim_hook(lambda, anchors[k]);
    auto out = try_insert(h, cur);
    if (!out.ok()) {
      throw std::logic_error("lexicographic insertion failed (shape " + to_string(lambda) + ", step " +
                             std::to_string(anchors.size() - k) + ", hook " + to_string(anchors[k]) + ": " +
                             out.failure().reason + ")\ntableau:\n" + format_grid(t) + "current:\n" +
                             format_grid(cur));
    }
    cur = out.result();
  }
  return cur;
}

std::string format_factorization(const Factorization& f) {
  std::string out;
  for (const auto& u : f.anchors) out += to_string(u) + "\n";
  return out;
}

}  // namespace rimhook
