// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <string>
#include <thread>

#include "rimhook/classical.hpp"
#include "rimhook/insertion.hpp"
#include "rimhook/pakmap.hpp"
#include "rimhook/series.hpp"
#include "rimhook/verify.hpp"

using namespace rimhook;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void absorb(const SuiteReport& r) {
    require(r.passed, r.name + ": " + (r.failures.empty() ? "failed" : r.failures.front()));
    if (ok) detail += (detail.empty() ? "" : ", ") + r.name + " " + std::to_string(r.checks) + " checks";
  }
};

Rpp R(const Grid& rows) { return Rpp::validate(shape_of(rows), rows); }

Outcome stanley(const VerifyConfig& cfg) {
  Outcome o;
  o.absorb(run_suite("stanley", cfg));
  if (o.ok) {
    // show the coefficient vector of one shape for the record
    o.detail += "; (4,3,1): " + format_series(hook_product(Partition({4, 3, 1}), cfg.series_degree));
  }
  return o;
}

Outcome gansner(const VerifyConfig& cfg) {
  Outcome o;
  o.absorb(run_suite("gansner", cfg));
  for (const auto& lambda : cfg.shapes) {
    auto spec = gansner_product(lambda, cfg.series_degree).specialize();
    o.require(spec == hook_product(lambda, cfg.series_degree) && spec == rpp_series(lambda, cfg.series_degree),
              to_string(lambda) + ": specialisation to q does not reproduce the size series");
  }
  return o;
}

// Replays xi one corner at a time, writing peeled values into the
// removed cells, and compares every intermediate picture.
Outcome xi_chain() {
  Outcome o;
  const std::vector<Grid> expected = {
      {{0, 1, 4}, {2, 3, 4}, {4, 4, 0}}, {{0, 2, 4}, {2, 3, 0}, {4, 4, 0}}, {{0, 2, 2}, {2, 3, 0}, {4, 4, 0}},
      {{0, 2, 2}, {1, 3, 0}, {4, 0, 0}}, {{1, 2, 2}, {1, 1, 0}, {4, 0, 0}}, {{1, 1, 2}, {1, 1, 0}, {4, 0, 0}},
      {{1, 1, 2}, {1, 1, 0}, {3, 0, 0}}, {{1, 1, 2}, {0, 1, 0}, {3, 0, 0}}, {{1, 1, 2}, {0, 1, 0}, {3, 0, 0}},
  };
  const std::vector<Cell> order = {{3, 3}, {2, 3}, {1, 3}, {3, 2}, {2, 2}, {1, 2}, {3, 1}, {2, 1}, {1, 1}};
  Rpp pi = R({{1, 1, 4}, {2, 3, 4}, {4, 4, 4}});
  const Rpp start = pi;
  Grid peeled(3, std::vector<Entry>(3, 0));
  for (std::size_t step = 0; step < order.size(); ++step) {
    const auto& lambda = pi.shape();
    const int last = lambda.row_length(1);
    const Cell x{lambda.column_length(last), last};
    o.require(x == order[step], "step " + std::to_string(step + 1) + " peels " + to_string(x));
    if (!o.ok) return o;
    Entry above = std::max(pi.value_ext(x.north()).value(), pi.value_ext(x.west()).value());
    peeled[x.row - 1][x.col - 1] = pi.at(x) - above;
    pi = zeta(pi, x);
    Grid picture = peeled;
    for (const auto& u : pi.shape().cells()) picture[u.row - 1][u.col - 1] = pi.at(u);
    o.require(picture == expected[step], "picture after step " + std::to_string(step + 1) + " differs");
  }
  o.require(xi(start) == Tableau::validate(Partition({3, 3, 3}), {{1, 1, 2}, {0, 1, 0}, {3, 0, 0}}),
            "xi does not end at the expected tableau");
  return o;
}

Outcome golden() {
  Outcome o;
  const Rpp running = R({{0, 1, 2, 3}, {1, 2, 2}, {1}});
  auto f = factorize(running);
  o.require(f.factorization.anchors == std::vector<Cell>{{1, 4}, {1, 3}, {2, 2}, {1, 1}}, "factorisation anchors");
  o.require(candidates(running) == std::vector<Cell>{{1, 4}, {1, 2}, {2, 2}, {3, 1}}, "candidate set");

  const Rpp bottom = R({{0, 0, 0}, {0, 0, 0}, {1, 1, 1}});
  auto left = try_insert(rim_hook(bottom.shape(), {1, 3}), bottom);
  auto right = try_insert(rim_hook(bottom.shape(), {2, 2}), bottom);
  o.require(left.ok() && left.path().cells == std::vector<Cell>{{1, 3}, {2, 3}, {2, 2}}, "insertion path of h^(1,3)");
  o.require(right.ok() && right.path().cells == std::vector<Cell>{{2, 3}, {2, 2}, {2, 1}}, "insertion path of h^(2,2)");
  o.require(left.ok() && left.result() == R({{0, 0, 1}, {0, 1, 1}, {1, 1, 1}}), "h^(1,3) * pi");
  o.require(right.ok() && right.result() == R({{0, 0, 0}, {1, 1, 1}, {1, 1, 1}}), "h^(2,2) * pi");

  auto chain = xi_chain();
  o.require(chain.ok, "xi chain: " + chain.detail);

  auto pair = rsk(Tableau::validate(Partition({3, 3, 3}), {{1, 1, 2}, {0, 1, 0}, {3, 0, 0}}));
  o.require(pair.p == R({{1, 1, 1, 1}, {2, 2, 3}, {3}}), "RSK insertion tableau");
  o.require(pair.q == R({{1, 1, 1, 1}, {2, 3, 3}, {3}}), "RSK recording tableau");
  if (o.ok) o.detail = "factorisation, candidates, 2 insertion paths, 9-step xi chain, RSK pair";
  return o;
}

Outcome suites(const VerifyConfig& cfg, std::initializer_list<const char*> names) {
  Outcome o;
  for (const char* n : names) o.absorb(run_suite(n, cfg));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  VerifyConfig cfg;
  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--jobs") == 0) cfg.jobs = static_cast<unsigned>(std::max(1, std::atoi(argv[i + 1])));

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"hook-length product for the size series", [&] { return stanley(cfg); }},
      {"trace-variable hook product", [&] { return gansner(cfg); }},
      {"bijection round trips", [&] { return suites(cfg, {"bijection"}); }},
      {"golden vectors", [] { return golden(); }},
      {"xi agrees with factorisation", [&] { return suites(cfg, {"pak"}); }},
      {"commutation with zeta", [&] { return suites(cfg, {"commute"}); }},
      {"insertion-path uniqueness and failure witnesses", [&] { return suites(cfg, {"insertion-uniqueness"}); }},
      {"crossing and candidate stability", [&] { return suites(cfg, {"crossing"}); }},
      {"HG round trip, weight and traces", [&] { return suites(cfg, {"hg"}); }},
      {"diagonals, chains, SYT, RSK, involution",
       [&] { return suites(cfg, {"diag", "gk", "syt", "rsk-thm", "involution"}); }},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.ok;
    std::printf("%s %2zu %s (%.2fs): %s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), secs,
                o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
