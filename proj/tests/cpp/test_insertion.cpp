#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "rimhook/enumeration.hpp"
#include "rimhook/insertion.hpp"

using namespace rimhook;
using namespace rimhook::test;

namespace {

LatticePath sw(std::initializer_list<Cell> cs) { return {cs, Orientation::SouthWest}; }
LatticePath ne(std::initializer_list<Cell> cs) { return {cs, Orientation::NorthEast}; }

}  // namespace

TEST(LatticePath, HeadTailIndependentOfOrientation) {
  auto p = sw({{1, 3}, {2, 3}, {2, 2}});
  EXPECT_EQ(p.tail(), (Cell{1, 3}));
  EXPECT_EQ(p.head(), (Cell{2, 2}));
  auto q = p.reversed();
  EXPECT_EQ(q.orientation, Orientation::NorthEast);
  EXPECT_EQ(q.head(), p.head());
  EXPECT_EQ(q.tail(), p.tail());
  EXPECT_TRUE(p.well_formed());
  EXPECT_FALSE(sw({{1, 3}, {2, 2}}).well_formed());
}

TEST(Compatible, Examples) {
  const auto zero = Rpp::zero(P({4, 3, 1}));
  for (const auto& h : rim_hooks(zero.shape())) EXPECT_TRUE(is_compatible(LatticePath{h.cells}, zero));

  const auto pi = bottom_row();
  EXPECT_TRUE(is_compatible(sw({{1, 3}, {2, 3}, {2, 2}}), pi));
  // (2,1) lies in A but e(2,1) is not on the path
  EXPECT_FALSE(is_compatible(sw({{1, 2}, {1, 1}, {2, 1}}), pi));
  // condition (2) fails: (2,1) and (3,1) on the path with different values
  EXPECT_FALSE(is_compatible(sw({{2, 2}, {2, 1}, {3, 1}}), pi));
  EXPECT_THROW(is_compatible(sw({{1, 4}}), pi), std::exception);
}

TEST(Compatible, SomeThreeCellPathIsIncompatible) {
  const auto pi = bottom_row();
  int bad = 0;
  for (const auto& path : enumerate_sw_paths(pi.shape(), {1, 3}, 3)) bad += !is_compatible(path, pi);
  EXPECT_GT(bad, 0);
}

TEST(InsertionPath, Examples) {
  const auto pi = bottom_row();
  const auto lambda = pi.shape();
  EXPECT_EQ(insertion_path(rim_hook(lambda, {1, 3}), pi), sw({{1, 3}, {2, 3}, {2, 2}}));
  EXPECT_EQ(insertion_path(rim_hook(lambda, {2, 2}), pi), sw({{2, 3}, {2, 2}, {2, 1}}));
  EXPECT_THROW(insertion_path(rim_hook(P({2, 2}), {1, 1}), pi), DomainError);
}

TEST(InsertionPath, IntoZeroFollowsTheRim) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const auto zero = Rpp::zero(lambda);
      for (const auto& h : rim_hooks(lambda)) {
        auto p = insertion_path(h, zero);
        EXPECT_EQ(std::set<Cell>(p.cells.begin(), p.cells.end()), std::set<Cell>(h.cells.begin(), h.cells.end()));
        auto out = try_insert(h, zero);
        ASSERT_TRUE(out.ok());
        for (const auto& u : lambda.cells()) EXPECT_EQ(out.result().at(u), h.contains(u) ? 1 : 0);
      }
    }
}

TEST(Insert, Examples) {
  const auto pi = bottom_row();
  const auto lambda = pi.shape();
  auto a = try_insert(rim_hook(lambda, {1, 3}), pi);
  ASSERT_TRUE(a.ok());
  EXPECT_EQ(a.result(), R({{0, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
  auto b = try_insert(rim_hook(lambda, {2, 2}), pi);
  ASSERT_TRUE(b.ok());
  EXPECT_EQ(b.result(), R({{0, 0, 0}, {1, 1, 1}, {1, 1, 1}}));
}

TEST(Insert, FailureCarriesWitness) {
  // first failing pair on (3,3) in enumeration order, then the witness check
  const auto lambda = P({3, 3});
  bool found = false;
  for_each_rpp(lambda, 3, [&](const Rpp& pi) {
    if (found) return;
    for (const auto& h : rim_hooks(lambda)) {
      auto out = try_insert(h, pi);
      if (out.ok()) continue;
      found = true;
      const auto& f = out.failure();
      ASSERT_TRUE(f.witness.has_value()) << format_grid(pi);
      EXPECT_TRUE(is_candidate(pi, *f.witness));
      EXPECT_TRUE(content_compare(*f.witness, out.path().head()) < 0);
      EXPECT_FALSE(f.reason.empty());
      EXPECT_THROW(out.result(), std::logic_error);
      return;
    }
  });
  EXPECT_TRUE(found);
}

TEST(Insert, PathMayRunPastColumnOne) {
  // h^(1,1) on a column of two cells: the greedy path turns west at (1,1)
  const auto pi = R({{0}, {1}});
  auto out = try_insert(rim_hook(pi.shape(), {1, 1}), pi);
  EXPECT_FALSE(out.ok());
  EXPECT_EQ(out.path(), sw({{1, 1}, {1, 0}}));
  ASSERT_TRUE(out.failure().witness.has_value());
  EXPECT_EQ(*out.failure().witness, (Cell{2, 1}));
}

TEST(ExtractionPath, Examples) {
  EXPECT_EQ(extraction_path({1, 4}, running_example()), ne({{1, 4}}));
  const auto step4 = R({{0, 0, 1, 1}, {1, 1, 1}, {1}});
  auto q = extraction_path({3, 1}, step4);
  EXPECT_EQ(q, ne({{3, 1}, {2, 1}, {2, 2}, {2, 3}, {1, 3}, {1, 4}}));
  EXPECT_EQ(rim_hook_of_path(step4.shape(), q).anchor, (Cell{1, 1}));
  EXPECT_EQ(extraction_path({1, 1}, R({{5}})), ne({{1, 1}}));
  EXPECT_THROW(extraction_path({1, 1}, running_example()), DomainError);

  const auto lambda = P({4, 3, 1});
  EXPECT_EQ(rim_hook_of_path(lambda, ne({{1, 4}})).anchor, (Cell{1, 4}));
  EXPECT_EQ(rim_hook_of_path(lambda, ne({{1, 2}, {1, 3}, {1, 4}})).anchor, (Cell{1, 3}));
}

TEST(Factor, Examples) {
  const auto pi = running_example();
  EXPECT_TRUE(is_factor(rim_hook(pi.shape(), {1, 4}), pi));
  const auto zero = Rpp::zero(pi.shape());
  for (const auto& h : rim_hooks(pi.shape())) EXPECT_FALSE(is_factor(h, zero));
}

TEST(Factor, MatchesBruteForceOverPredecessors) {
  // h is a factor of pi iff pi = h * pi~ for some pi~ with |pi~| = |pi| - |h|
  const auto lambda = P({2, 2});
  auto all = enumerate_rpps(lambda, 4);
  for (const auto& pi : all) {
    std::set<Cell> expected;
    for (const auto& h : rim_hooks(lambda))
      for (const auto& prev : all) {
        if (prev.size() + static_cast<Entry>(h.length()) != pi.size()) continue;
        auto out = try_insert(h, prev);
        if (out.ok() && out.result() == pi) expected.insert(h.anchor);
      }
    std::set<Cell> got;
    for (const auto& h : factors(pi)) got.insert(h.anchor);
    EXPECT_EQ(got, expected) << format_grid(pi);
  }
}

TEST(Extract, Examples) {
  auto e = extract_min(running_example());
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->hook.anchor, (Cell{1, 4}));
  EXPECT_EQ(e->remainder, R({{0, 1, 2, 2}, {1, 2, 2}, {1}}));
  EXPECT_EQ(min_candidate(e->remainder), (Cell{1, 2}));
  EXPECT_FALSE(extract_min(Rpp::zero(P({3}))).has_value());
}

TEST(Factorize, RunningExample) {
  auto f = factorize(running_example(), true);
  EXPECT_EQ(f.factorization.anchors, cells({{1, 4}, {1, 3}, {2, 2}, {1, 1}}));
  EXPECT_EQ(f.tableau, T({{1, 0, 1, 1}, {0, 1, 0}, {0}}));
  ASSERT_EQ(f.steps.size(), 4u);
  EXPECT_EQ(f.steps[1].path, ne({{1, 2}, {1, 3}, {1, 4}}));
  EXPECT_EQ(f.steps[3].path, ne({{3, 1}, {2, 1}, {2, 2}, {2, 3}, {1, 3}, {1, 4}}));
  EXPECT_TRUE(factorize(Rpp::zero(P({2}))).factorization.anchors.empty());
}

TEST(Build, Examples) {
  EXPECT_EQ(build(T({{1, 0, 1, 1}, {0, 1, 0}, {0}})), running_example());
  EXPECT_EQ(build(Tableau::zero(P({3, 1}))), Rpp::zero(P({3, 1})));
  EXPECT_EQ(build(T({{1, 0}, {0, 1}})), R({{0, 1}, {1, 2}}));
  EXPECT_EQ(build(Tableau::zero(Partition{})), Rpp::zero(Partition{}));
}

TEST(Build, SortedAnchorsWeaklyIncrease) {
  auto t = T({{2, 0, 1}, {1, 1, 0}, {0, 0, 3}});
  auto a = sorted_anchors(t);
  EXPECT_EQ(a.size(), 8u);
  for (std::size_t k = 1; k < a.size(); ++k) EXPECT_TRUE(revlex_compare(a[k - 1], a[k]) <= 0);
}

TEST(Bijection, RoundTripsOnSmallShapes) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) {
      std::map<Entry, int> rpp_hist, tab_hist;
      for_each_rpp(lambda, 6, [&](const Rpp& pi) {
        ++rpp_hist[pi.size()];
        auto f = factorize(pi);
        EXPECT_EQ(f.tableau.weighted_size(), pi.size());
        EXPECT_EQ(build(f.tableau), pi);
      });
      for_each_tableau(lambda, 6, [&](const Tableau& t) {
        ++tab_hist[t.weighted_size()];
        EXPECT_EQ(factorize(build(t)).tableau, t);
      });
      EXPECT_EQ(rpp_hist, tab_hist) << to_string(lambda);
    }
}

TEST(Format, Factorization) {
  auto f = factorize(running_example()).factorization;
  EXPECT_EQ(format_factorization(f), "(1,4)\n(1,3)\n(2,2)\n(1,1)\n");
  EXPECT_EQ(f.hooks().size(), 4u);
}
