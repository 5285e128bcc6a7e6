#include "rimhook/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "rimhook/classical.hpp"
#include "rimhook/enumeration.hpp"
#include "rimhook/insertion.hpp"
#include "rimhook/io.hpp"
#include "rimhook/pakmap.hpp"
#include "rimhook/series.hpp"

namespace rimhook {

std::vector<Partition> VerifyConfig::default_shapes() {
  return {Partition({2, 2}), Partition({3, 2}), Partition({3, 3, 3}), Partition({4, 3, 1}), Partition({5, 2, 1, 1})};
}

void SuiteReport::fail(std::string what) {
  passed = false;
  if (failures.size() < 8) failures.push_back(std::move(what));
}

namespace {

// Partial report from one work unit; merged in unit order.
struct Partial {
  std::uint64_t checks = 0;
  std::vector<std::string> failures;
  void fail(std::string what) {
    if (failures.size() < 8) failures.push_back(std::move(what));
    else failures.emplace_back();
  }
  void check(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok) fail(what());
  }
};

// Runs fn(unit) for each unit on `jobs` threads; results merged in order.
template <typename Unit>
void run_units(SuiteReport& report, const std::vector<Unit>& units, unsigned jobs,
               const std::function<void(const Unit&, Partial&)>& fn) {
  std::vector<Partial> parts(units.size());
  std::atomic<std::size_t> nextIdx{0};
  auto worker = [&] {
    for (std::size_t i; (i = nextIdx.fetch_add(1)) < units.size();) {
      try {
        fn(units[i], parts[i]);
      } catch (const std::exception& e) {
        parts[i].fail(std::string("exception: ") + e.what());
      }
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(units.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& p : parts) {
    report.checks += p.checks;
    for (auto& f : p.failures) report.fail(f.empty() ? "(further failures omitted)" : std::move(f));
  }
}

std::string show(const Filling& f) {
  std::string s = format_grid(f);
  std::replace(s.begin(), s.end(), '\n', '/');
  return "[" + to_string(f.shape()) + "] " + s;
}

std::vector<Partition> shapes_up_to(int cells) {
  std::vector<Partition> out;
  for (int n = 1; n <= cells; ++n)
    for (auto& p : partitions_of(n)) out.push_back(std::move(p));
  return out;
}

bool weakly_increasing(const std::vector<Cell>& anchors) {
  for (std::size_t k = 1; k < anchors.size(); ++k)
    if (revlex_compare(anchors[k - 1], anchors[k]) > 0) return false;
  return true;
}

SuiteReport stanley(const VerifyConfig& cfg) {
  SuiteReport r;
  r.name = "stanley";
  run_units<Partition>(r, cfg.shapes, cfg.jobs, [&](const Partition& lambda, Partial& p) {
    auto lhs = rpp_series(lambda, cfg.series_degree);
    auto rhs = hook_product(lambda, cfg.series_degree);
    p.check(lhs == rhs, [&] {
      return to_string(lambda) + ": enumeration " + format_series(lhs) + " vs hook product " + format_series(rhs);
    });
  });
  if (r.passed)
    for (const auto& lambda : cfg.shapes) {
      const auto series = hook_product(lambda, cfg.series_degree);
      std::string v;
      for (const auto& c : series.coefficients()) v += (v.empty() ? "" : ",") + c.str();
      r.summary += (r.summary.empty() ? "" : "; ") + to_string(lambda) + " [" + v + "]";
    }
  return r;
}

SuiteReport gansner(const VerifyConfig& cfg) {
  SuiteReport r;
  r.name = "gansner";
  run_units<Partition>(r, cfg.shapes, cfg.jobs, [&](const Partition& lambda, Partial& p) {
    auto lhs = trace_series(lambda, cfg.trace_degree);
    auto rhs = gansner_product(lambda, cfg.trace_degree);
    p.check(lhs == rhs, [&] { return to_string(lambda) + ": trace series differs from the hook product"; });
    p.check(rhs.specialize() == hook_product(lambda, cfg.trace_degree),
            [&] { return to_string(lambda) + ": specialisation q_k = q differs from the hook product"; });
    p.check(lhs.specialize() == rpp_series(lambda, cfg.trace_degree),
            [&] { return to_string(lambda) + ": specialised trace series differs from the size series"; });
  });
  return r;
}

SuiteReport bijection(const VerifyConfig& cfg) {
  SuiteReport r;
  r.name = "bijection";
  run_units<Partition>(r, cfg.shapes, cfg.jobs, [&](const Partition& lambda, Partial& p) {
    for_each_rpp(lambda, cfg.bijection_bound, [&](const Rpp& pi) {
      auto f = factorize(pi);
      p.check(weakly_increasing(f.factorization.anchors), [&] { return "extraction order not increasing for " + show(pi); });
      p.check(f.tableau.weighted_size() == pi.size(), [&] { return "weight mismatch for " + show(pi); });
      p.check(build(f.tableau) == pi, [&] { return "build(factorize(pi)) != pi for " + show(pi); });
    });
    for_each_tableau(lambda, cfg.bijection_bound, [&](const Tableau& t) {
      p.check(factorize(build(t)).tableau == t, [&] { return "factorize(build(t)) != t for " + show(t); });
    });
  });
  return r;
}

SuiteReport pak(const VerifyConfig& cfg) {
  SuiteReport r;
  r.name = "pak";
  run_units<Partition>(r, cfg.shapes, cfg.jobs, [&](const Partition& lambda, Partial& p) {
    const auto outer = corners(lambda).outer;
    for_each_rpp(lambda, cfg.bijection_bound, [&](const Rpp& pi) {
      Tableau t = xi(pi);
      p.check(t == factorize(pi).tableau, [&] { return "xi(pi) != factorize(pi) for " + show(pi); });
      p.check(build(t) == pi, [&] { return "build(xi(pi)) != pi for " + show(pi); });
      for (const auto& x : outer)
        p.check(xi_through(pi, x) == t, [&] { return "xi depends on the corner " + to_string(x) + " for " + show(pi); });
      for (const auto& x : outer)
        p.check(in_rpp_lx(pi, x) == (t.at(x) == 0), [&] { return "RPP_{lambda,x} test disagrees with xi at " + to_string(x); });
    });
    for_each_tableau(lambda, cfg.bijection_bound, [&](const Tableau& t) {
      p.check(xi(build(t)) == t, [&] { return "xi(build(t)) != t for " + show(t); });
    });
  });
  return r;
}

SuiteReport commute(const VerifyConfig& cfg) {
  SuiteReport r;
  r.name = "commute";
  run_units<Partition>(r, cfg.shapes, cfg.jobs, [&](const Partition& lambda, Partial& p) {
    for (const auto& x : corners(lambda).outer) {
      const Partition mu = lambda.without(x);
      for_each_tableau(lambda, cfg.bijection_bound, [&](const Tableau& t) {
        if (t.at(x) != 0 || t.count() == 0) return;
        auto anchors = sorted_anchors(t);
        const Cell u1 = anchors.front();
        Rpp rest = build(t.with(u1, t.at(u1) - 1));
        auto lhs_ins = try_insert(rim_hook(lambda, u1), rest);
        if (!lhs_ins.ok()) {
          p.fail("h^u1 does not insert in lambda for " + show(t));
          return;
        }
        Rpp lhs = zeta(lhs_ins.result(), x);
        auto rhs_ins = try_insert(rim_hook(mu, u1), zeta(rest, x));
        p.check(rhs_ins.ok() && rhs_ins.result() == lhs, [&] {
          return "zeta does not commute with inserting h^" + to_string(u1) + " at corner " + to_string(x) + " for " +
                 show(t);
        });
      });
    }
  });
  return r;
}

SuiteReport insertion_uniqueness(const VerifyConfig& cfg) {
  SuiteReport r;
  r.name = "insertion-uniqueness";
  run_units<Partition>(r, shapes_up_to(cfg.lemma_cells), cfg.jobs, [&](const Partition& lambda, Partial& p) {
    const auto hooks = rim_hooks(lambda);
    // paths depend only on (tail, length); enumerate once per hook
    std::vector<std::vector<LatticePath>> paths;
    for (const auto& h : hooks) paths.push_back(enumerate_sw_paths(lambda, h.tail(), static_cast<int>(h.length())));
    for_each_rpp(lambda, cfg.lemma_bound, [&](const Rpp& pi) {
      for (std::size_t k = 0; k < hooks.size(); ++k) {
        const auto& h = hooks[k];
        auto out = try_insert(h, pi);
        int certifying = 0;
        bool matches = false;
        for (const auto& path : paths[k]) {
          if (!is_compatible(path, pi)) continue;
          if (add_path(pi, path)) {
            ++certifying;
            matches = matches || path == out.path();
          }
          if (subtract_path(pi, path)) {
            // an SW path certifying a factor is the reverse of Q(alpha, pi)
            const Cell v = path.head();
            bool ok = is_candidate(pi, v) && extraction_path(v, pi).reversed() == path;
            p.check(ok, [&] { return "factor path from " + to_string(v) + " is not Q(v,pi) in " + show(pi); });
          }
        }
        if (out.ok()) {
          p.check(certifying == 1 && matches, [&] {
            return "insertion path of h^" + to_string(h.anchor) + " not unique/greedy in " + show(pi);
          });
        } else {
          p.check(certifying == 0, [&] {
            return "h^" + to_string(h.anchor) + " inserts along a non-greedy path in " + show(pi);
          });
          const auto& w = out.failure().witness;
          p.check(w && is_candidate(pi, *w) && content_compare(*w, out.path().head()) < 0, [&] {
            return "no candidate before alpha(P) for failing h^" + to_string(h.anchor) + " in " + show(pi);
          });
        }
      }
    });
  });
  return r;
}

SuiteReport crossing(const VerifyConfig& cfg) {
  SuiteReport r;
  r.name = "crossing";
  run_units<Partition>(r, shapes_up_to(cfg.lemma_cells), cfg.jobs, [&](const Partition& lambda, Partial& p) {
    const auto hooks = rim_hooks(lambda);
    const auto cells = lambda.cells();
    for_each_rpp(lambda, cfg.lemma_bound, [&](const Rpp& pi) {
      const auto cand = candidates(pi);
      std::vector<RimHook> from_cand;
      std::vector<std::optional<Rpp>> reduced;  // pi - Q(v, pi) when it is a factor path
      for (const auto& v : cand) {
        auto q = extraction_path(v, pi);
        from_cand.push_back(rim_hook_of_path(lambda, q));
        reduced.push_back(is_compatible(q, pi) ? subtract_path(pi, q) : std::nullopt);
      }
      for (const auto& h : hooks) {
        const Cell alpha = insertion_path(h, pi).head();
        for (std::size_t c = 0; c < cand.size(); ++c) {
          const Cell& u = cand[c];
          auto order = revlex_compare(from_cand[c].anchor, h.anchor);
          if (content_compare(u, alpha) < 0)
            p.check(order < 0, [&] { return "crossing1 fails: u=" + to_string(u) + " h^" + to_string(h.anchor) + " " + show(pi); });
          else
            p.check(order >= 0, [&] { return "crossing2 fails: u=" + to_string(u) + " h^" + to_string(h.anchor) + " " + show(pi); });
        }
      }
      for (std::size_t c = 0; c < cand.size(); ++c) {
        if (!reduced[c]) continue;
        const Cell& v = cand[c];
        for (const auto& u : cells) {
          bool was = std::find(cand.begin(), cand.end(), u) != cand.end();
          if (was && u != v)
            p.check(is_candidate(*reduced[c], u), [&] {
              return "candidateQ fails: u=" + to_string(u) + " v=" + to_string(v) + " " + show(pi);
            });
          if (!was && content_compare(u, v) < 0)
            p.check(!is_candidate(*reduced[c], u), [&] {
              return "candidateP fails: u=" + to_string(u) + " v=" + to_string(v) + " " + show(pi);
            });
        }
      }
    });
  });
  return r;
}

SuiteReport hg_suite(const VerifyConfig& cfg) {
  SuiteReport r;
  r.name = "hg";
  run_units<Partition>(r, cfg.shapes, cfg.jobs, [&](const Partition& lambda, Partial& p) {
    for_each_rpp(lambda, cfg.bijection_bound, [&](const Rpp& pi) {
      Tableau t = hg(pi);
      p.check(t.weighted_size() == pi.size(), [&] { return "HG weight mismatch for " + show(pi); });
      p.check(hg_inv(t) == pi, [&] { return "hg_inv(hg(pi)) != pi for " + show(pi); });
    });
    for_each_tableau(lambda, cfg.bijection_bound, [&](const Tableau& t) {
      p.check(hg(hg_inv(t)) == t, [&] { return "hg(hg_inv(t)) != t for " + show(t); });
    });
    p.check(hg_trace_series(lambda, cfg.trace_degree) == gansner_product(lambda, cfg.trace_degree),
            [&] { return to_string(lambda) + ": HG trace series differs from the hook product"; });
  });
  return r;
}

SuiteReport diag(const VerifyConfig& cfg) {
  SuiteReport r;
  r.name = "diag";
  run_units<Partition>(r, cfg.shapes, cfg.jobs, [&](const Partition& lambda, Partial& p) {
    for_each_tableau(lambda, cfg.bijection_bound, [&](const Tableau& t) {
      Rpp pi = build(t);
      for (int k = lambda.min_content(); k <= lambda.max_content(); ++k) {
        Entry s = 0;
        for (const auto& u : rectangle(lambda, k)) s += t.at(u);
        p.check(trace(pi, k) == s, [&] { return "tr_" + std::to_string(k) + " != sum over R_k for " + show(t); });
      }
    });
  });
  return r;
}

// All tableaux on `shape` with sum of entries <= bound.
std::vector<Tableau> tableaux_by_count(const Partition& shape, int bound) {
  std::vector<Tableau> out;
  const auto cells = shape.cells();
  Grid rows;
  for (int len : shape.parts()) rows.emplace_back(len, 0);
  auto rec = [&](auto&& self, std::size_t c, int left) -> void {
    if (c == cells.size()) {
      out.push_back(Tableau::validate(shape, rows));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      rows[cells[c].row - 1][cells[c].col - 1] = v;
      self(self, c + 1, left - v);
    }
    rows[cells[c].row - 1][cells[c].col - 1] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

SuiteReport gk(const VerifyConfig& cfg) {
  SuiteReport r;
  r.name = "gk";
  const Partition lambda = square(3);
  auto all = tableaux_by_count(lambda, cfg.gk_count);
  // shard by total count for parallelism
  std::vector<int> units(static_cast<std::size_t>(cfg.gk_count) + 1);
  std::iota(units.begin(), units.end(), 0);
  run_units<int>(r, units, cfg.jobs, [&](const int& total, Partial& p) {
    for (const auto& t : all) {
      if (t.count() != total) continue;
      Rpp pi = build(t);
      for (int k = lambda.min_content(); k <= lambda.max_content(); ++k) {
        Partition mu = diag_partition(pi, k), conj = mu.conjugate();
        Entry weak = 0, strict = 0;
        for (int rr = 1; rr <= total + 1; ++rr) {
          weak += mu.row_length(rr);
          strict += conj.row_length(rr);
          p.check(gk_chain_max(t, k, rr, ChainKind::WeakSouthEast) == weak, [&] {
            return "weak chains k=" + std::to_string(k) + " r=" + std::to_string(rr) + " " + show(t);
          });
          p.check(gk_chain_max(t, k, rr, ChainKind::StrictNorthEast) == strict, [&] {
            return "strict chains k=" + std::to_string(k) + " r=" + std::to_string(rr) + " " + show(t);
          });
        }
      }
    }
  });
  return r;
}

SuiteReport syt(const VerifyConfig& cfg) {
  SuiteReport r;
  r.name = "syt";
  std::vector<int> ns(static_cast<std::size_t>(cfg.syt_max_n));
  std::iota(ns.begin(), ns.end(), 1);
  std::uint64_t qualifying = 0;
  std::mutex mu;
  run_units<int>(r, ns, cfg.jobs, [&](const int& n, Partial& p) {
    std::uint64_t local = 0;
    for_each_rpp(square(n), n * n, [&](const Rpp& pi) {
      if (!satisfies_syt_traces(pi)) return;
      ++local;
      p.check(check_syt(pi), [&] { return "diagonals of build(hg(pi)) are not conjugate for " + show(pi); });
    });
    p.check(local > 0, [&] { return "no qualifying RPP for n=" + std::to_string(n); });
    std::lock_guard lock(mu);
    qualifying += local;
  });
  r.summary = std::to_string(qualifying) + " qualifying reverse plane partitions";
  return r;
}

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

SuiteReport rsk_thm(const VerifyConfig& cfg) {
  SuiteReport r;
  r.name = "rsk-thm";
  std::vector<int> ns(static_cast<std::size_t>(cfg.perm_max_n));
  std::iota(ns.begin(), ns.end(), 1);
  run_units<int>(r, ns, cfg.jobs, [&](const int& n, Partial& p) {
    for (const auto& w : permutations_of(n)) {
      Tableau sigma = permutation_matrix(w);
      p.check(check_rsk_transpose(sigma), [&] { return "RSK(HG(build(sigma))) is not the transpose pair for " + show(sigma); });
    }
  });
  return r;
}

SuiteReport involution(const VerifyConfig& cfg) {
  SuiteReport r;
  r.name = "involution";
  std::vector<int> ns(static_cast<std::size_t>(cfg.perm_max_n));
  std::iota(ns.begin(), ns.end(), 1);
  run_units<int>(r, ns, cfg.jobs, [&](const int& n, Partial& p) {
    for (const auto& w : permutations_of(n)) {
      Tableau sigma = permutation_matrix(w);
      Tableau once = hg(build(sigma));
      p.check(is_permutation_matrix(once), [&] { return "HG(build(sigma)) is not a permutation for " + show(sigma); });
      p.check(hg(build(once)) == sigma, [&] { return "HG o build is not an involution at " + show(sigma); });
    }
  });
  // negative control: the map is not an involution on all tableaux
  std::string found;
  for (int n = 2; n <= 3 && found.empty(); ++n)
    for (const auto& t : tableaux_by_count(square(n), 3)) {
      if (is_permutation_matrix(t)) continue;
      if (!(hg(build(hg(build(t)))) == t)) {
        found = show(t);
        break;
      }
    }
  ++r.checks;
  if (found.empty()) r.fail("no non-permutation tableau breaks involutivity in the search range");
  else r.summary = "non-involutive example: " + found;
  return r;
}

using SuiteFn = SuiteReport (*)(const VerifyConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"stanley", stanley},
      {"gansner", gansner},
      {"bijection", bijection},
      {"pak", pak},
      {"commute", commute},
      {"insertion-uniqueness", insertion_uniqueness},
      {"crossing", crossing},
      {"hg", hg_suite},
      {"diag", diag},
      {"gk", gk},
      {"syt", syt},
      {"rsk-thm", rsk_thm},
      {"involution", involution},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, fn] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(cfg);
  throw DomainError("unknown suite '" + name + "'");
}

}  // namespace rimhook
