#include "rimhook/classical.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "rimhook/insertion.hpp"

namespace rimhook {

Tableau hg(const Rpp& pi) {
  const auto& lambda = pi.shape();
  RppBuilder cur(pi);
  Grid counts;
  for (int p : lambda.parts()) counts.emplace_back(p, 0);
  const int width = lambda.empty() ? 0 : lambda.row_length(1);
  int s = 1;
  while (true) {
    // a column is nonzero iff its bottom entry is
    while (s <= width && cur.at({lambda.column_length(s), s}) == 0) ++s;
    if (s > width) break;
    Cell u{lambda.column_length(s), s};
    std::vector<Cell> path{u};
    while (true) {
      if (u.row > 1 && cur.at(u.north()) == cur.at(u)) {
        u = u.north();
      } else if (lambda.contains(u.east())) {
        u = u.east();
      } else {
        break;
      }
      path.push_back(u);
    }
    for (const auto& c : path) --cur.at(c);
    ++counts[u.row - 1][s - 1];
  }
  return Tableau::validate(lambda, std::move(counts));
}

Rpp hg_inv(const Tableau& t) {
  const auto& lambda = t.shape();
  std::vector<Cell> order = lambda.cells();
  std::sort(order.begin(), order.end(), [](const Cell& a, const Cell& b) {
    return a.col != b.col ? a.col > b.col : a.row < b.row;
  });
  RppBuilder cur(lambda);
  for (const auto& hook : order) {
    for (Entry m = 0; m < t.at(hook); ++m) {
      const int s = hook.col;
      Cell u{hook.row, lambda.row_length(hook.row)};
      std::vector<Cell> path{u};
      while (true) {
        if (lambda.contains(u.south()) && cur.at(u.south()) == cur.at(u)) {
          u = u.south();
        } else if (u.col > s) {
          u = u.west();
        } else {
          break;
        }
        path.push_back(u);
      }
      for (const auto& c : path) ++cur.at(c);
    }
  }
  return cur.finish();
}

Biword biword(const Tableau& t) {
  Biword w;
  for (const auto& u : t.shape().cells())
    for (Entry k = 0; k < t.at(u); ++k) w.pairs.emplace_back(u.row, u.col);
  return w;
}

namespace {

Rpp to_rpp(const Grid& rows) { return Rpp::validate(shape_of(rows), rows); }

}  // namespace

SsytPair rsk(const Tableau& t) {
  Grid p, q;
  for (auto [i, j] : biword(t).pairs) {
    Entry x = j;
    std::size_t row = 0;
    while (true) {
      if (row == p.size()) {
        p.push_back({x});
        q.push_back({i});
        break;
      }
      auto& r = p[row];
      auto it = std::upper_bound(r.begin(), r.end(), x);
      if (it == r.end()) {
        r.push_back(x);
        q[row].push_back(i);
        break;
      }
      std::swap(x, *it);
      ++row;
    }
  }
  return {to_rpp(p), to_rpp(q)};
}

bool is_column_strict(const Rpp& t) {
  for (const auto& u : t.shape().cells())
    if (u.row > 1 && t.at(u) <= t.at(u.north())) return false;
  return true;
}

namespace {

void check_pair(const SsytPair& pair) {
  if (!(pair.p.shape() == pair.q.shape())) throw DomainError("P and Q have different shapes");
  if (!is_column_strict(pair.p) || !is_column_strict(pair.q)) throw DomainError("P and Q must be column-strict");
  for (const auto& u : pair.p.shape().cells())
    if (pair.p.at(u) < 1 || pair.q.at(u) < 1) throw DomainError("P and Q must have positive entries");
}

Entry max_entry(const Rpp& r) {
  Entry m = 0;
  for (const auto& row : r.rows())
    for (Entry v : row) m = std::max(m, v);
  return m;
}

}  // namespace

Tableau rsk_inv(const SsytPair& pair) {
  check_pair(pair);
  return rsk_inv(pair, square(static_cast<int>(std::max(max_entry(pair.p), max_entry(pair.q)))));
}

Tableau rsk_inv(const SsytPair& pair, const Partition& shape) {
  check_pair(pair);
  Grid p = pair.p.rows(), q = pair.q.rows();
  Grid counts;
  for (int len : shape.parts()) counts.emplace_back(len, 0);
  while (!q.empty()) {
    // largest recording entry, rightmost among ties, sits at a corner
    std::size_t best = 0;
    for (std::size_t r = 1; r < q.size(); ++r)
      if (q[r].back() > q[best].back()) best = r;
    Entry i = q[best].back();
    q[best].pop_back();
    Entry x = p[best].back();
    p[best].pop_back();
    if (q[best].empty()) {
      q.pop_back();
      p.pop_back();
    }
    for (std::size_t r = best; r-- > 0;) {
      auto& row = p[r];
      auto it = std::lower_bound(row.begin(), row.end(), x);
      std::swap(x, *std::prev(it));
    }
    Cell u{static_cast<int>(i), static_cast<int>(x)};
    if (!shape.contains(u)) throw DomainError("RSK pair does not fit the requested shape at " + to_string(u));
    ++counts[u.row - 1][u.col - 1];
  }
  return Tableau::validate(shape, std::move(counts));
}

Rpp transpose(const Rpp& pi) {
  Partition conj = pi.shape().conjugate();
  RppBuilder b(conj);
  for (const auto& u : pi.shape().cells()) b.at({u.col, u.row}) = pi.at(u);
  return b.finish();
}

Partition diag_partition(const Rpp& pi, int k) {
  std::vector<int> parts;
  for (const auto& u : pi.shape().cells())
    if (u.content() == k && pi.at(u) > 0) parts.push_back(static_cast<int>(pi.at(u)));
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

std::vector<Cell> rectangle(const Partition& lambda, int k) {
  std::optional<Cell> corner;
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda.contains({i, i + k})) corner = Cell{i, i + k};
  std::vector<Cell> out;
  if (!corner) return out;
  for (const auto& u : lambda.cells())
    if (u.row <= corner->row && u.col <= corner->col) out.push_back(u);
  return out;
}

Entry gk_chain_max(const Tableau& t, int k, int r, ChainKind kind, std::size_t budget) {
  if (r < 1) throw DomainError("chain count r must be positive");
  const bool weak = kind == ChainKind::WeakSouthEast;

  // Each cell u contributes t(u) copies. Copies of one cell are comparable
  // for weak chains and incomparable for strict ones, so a family of r chains
  // is r vertex-disjoint paths in the copy poset: min-cost flow, r augments.
  std::vector<Cell> elem;
  for (const auto& u : rectangle(t.shape(), k))
    for (Entry m = 0; m < t.at(u); ++m) elem.push_back(u);
  const std::size_t n = elem.size();
  if (n == 0) return 0;
  if (n * n > budget) throw BudgetExceeded("chain search over " + std::to_string(n) + " elements exceeds budget");

  auto below = [&](std::size_t a, std::size_t b) {
    const Cell &x = elem[a], &y = elem[b];
    if (x == y) return weak && a < b;
    return weak ? x.row <= y.row && x.col <= y.col : x.row < y.row && x.col > y.col;
  };

  struct Edge {
    int to, cap, cost;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj(2 * n + 2);
  const int src = static_cast<int>(2 * n), sink = src + 1;
  auto link = [&](int a, int b, int cost) {
    adj[a].push_back(static_cast<int>(edges.size()));
    edges.push_back({b, 1, cost});
    adj[b].push_back(static_cast<int>(edges.size()));
    edges.push_back({a, 0, -cost});
  };
  for (std::size_t a = 0; a < n; ++a) {
    const int in = static_cast<int>(2 * a), out = in + 1;
    link(src, in, 0);
    link(in, out, -1);
    link(out, sink, 0);
    for (std::size_t b = 0; b < n; ++b)
      if (below(a, b)) link(out, static_cast<int>(2 * b), 0);
  }

  Entry total = 0;
  for (int round = 0; round < r; ++round) {
    // Bellman-Ford over the residual graph (SPFA queue)
    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<int> dist(adj.size(), kInf), via(adj.size(), -1);
    std::vector<char> queued(adj.size(), 0);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      queued[v] = 0;
      for (int e : adj[v])
        if (edges[e].cap > 0 && dist[v] + edges[e].cost < dist[edges[e].to]) {
          dist[edges[e].to] = dist[v] + edges[e].cost;
          via[edges[e].to] = e;
          if (!queued[edges[e].to]) queued[edges[e].to] = 1, queue.push_back(edges[e].to);
        }
    }
    if (dist[sink] >= 0) break;  // no chain adds anything
    total -= dist[sink];
    for (int v = sink; v != src; v = edges[via[v] ^ 1].to) {
      edges[via[v]].cap -= 1;
      edges[via[v] ^ 1].cap += 1;
    }
  }
  return total;
}

Partition square(int n) { return Partition(std::vector<int>(std::max(n, 0), n)); }

bool is_permutation_matrix(const Tableau& t) {
  const auto& lambda = t.shape();
  const int n = lambda.length();
  if (!(lambda == square(n))) return false;
  for (int i = 1; i <= n; ++i) {
    Entry row = 0, col = 0;
    for (int j = 1; j <= n; ++j) {
      if (t.at({i, j}) > 1) return false;
      row += t.at({i, j});
      col += t.at({j, i});
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

Tableau permutation_matrix(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<bool> seen(n + 1, false);
  Grid rows(n, std::vector<Entry>(n, 0));
  for (int i = 0; i < n; ++i) {
    int w = word[i];
    if (w < 1 || w > n || seen[w]) throw DomainError("not a permutation in one-line notation");
    seen[w] = true;
    rows[i][w - 1] = 1;
  }
  return Tableau::validate(square(n), std::move(rows));
}

bool satisfies_syt_traces(const Rpp& pi) {
  const int n = pi.shape().length();
  if (!(pi.shape() == square(n))) return false;
  for (int k = 0; k < n; ++k)
    if (trace(pi, k) != n - k || trace(pi, -k) != n - k) return false;
  return true;
}

bool check_syt(const Rpp& pi) {
  if (!satisfies_syt_traces(pi))
    throw DomainError("expected a square shape with tr_k = tr_-k = n - k for 0 <= k < n");
  const int n = pi.shape().length();
  Rpp image = build(hg(pi));
  for (int k = 1 - n; k <= n - 1; ++k)
    if (!(diag_partition(image, k) == diag_partition(pi, k).conjugate())) return false;
  return true;
}

bool check_rsk_transpose(const Tableau& sigma) {
  if (!is_permutation_matrix(sigma)) throw DomainError("expected a permutation matrix");
  SsytPair direct = rsk(sigma);
  SsytPair via = rsk(hg(build(sigma)));
  return via.p == transpose(direct.p) && via.q == transpose(direct.q);
}

}  // namespace rimhook
