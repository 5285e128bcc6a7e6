#include <gtest/gtest.h>

#include "helpers.hpp"
#include "rimhook/series.hpp"

using namespace rimhook;
using namespace rimhook::test;

namespace {

std::vector<BigInt> V(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST(TruncatedSeries, Geometric) {
  auto s = TruncatedSeries::one(5);
  s.divide_by_one_minus_power(1);
  EXPECT_EQ(s.coefficients(), V({1, 1, 1, 1, 1, 1}));
  s.divide_by_one_minus_power(2);
  EXPECT_EQ(s.coefficients(), V({1, 1, 2, 2, 3, 3}));
  EXPECT_THROW(s.divide_by_one_minus_power(0), DomainError);
  EXPECT_THROW(TruncatedSeries(-1), DomainError);
  EXPECT_EQ(format_series(s), "1 + 1*q + 2*q^2 + 2*q^3 + 3*q^4 + 3*q^5");
}

TEST(TruncatedSeries, ExactBeyondMachineWords) {
  // partitions of 400 into parts <= 400 exceeds 64 bits
  auto s = TruncatedSeries::one(400);
  for (int m = 1; m <= 400; ++m) s.divide_by_one_minus_power(m);
  EXPECT_EQ(s[400].str(), "6727090051741041926");
  auto t = TruncatedSeries::one(1000);
  for (int m = 1; m <= 1000; ++m) t.divide_by_one_minus_power(m);
  EXPECT_EQ(t[1000].str(), "24061467864032622473692149727991");
}

TEST(HookProduct, Examples) {
  EXPECT_EQ(hook_product(P({1}), 5).coefficients(), V({1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(hook_product(P({2, 2}), 4).coefficients(), V({1, 1, 3, 4, 7}));
  EXPECT_EQ(rpp_series(P({1}), 5).coefficients(), V({1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(rpp_series(P({2, 2}), 2).coefficients(), V({1, 1, 3}));
  EXPECT_EQ(rpp_series(P({2, 2}), 4), hook_product(P({2, 2}), 4));
}

TEST(HookProduct, MatchesEnumerationOnAllSmallShapes) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) EXPECT_EQ(rpp_series(lambda, 8), hook_product(lambda, 8)) << to_string(lambda);
}

TEST(MultiTrace, SingleCell) {
  auto g = gansner_product(P({1}), 4);
  EXPECT_EQ(g.variable_count(), 1);
  EXPECT_EQ(g.terms().size(), 5u);
  for (const auto& [m, c] : g.terms()) EXPECT_EQ(c, 1);
  EXPECT_EQ(g, trace_series(P({1}), 4));
}

TEST(MultiTrace, HookMonomial) {
  const auto lambda = P({4, 3, 1});
  MultiTraceSeries frame(lambda, 3);
  EXPECT_EQ(frame.low_index(), -2);
  EXPECT_EQ(frame.variable_count(), 6);
  // rim-hook of (1,2) runs over contents 0 .. 3
  EXPECT_EQ(hook_monomial(frame, lambda, {1, 2}).exponents, (std::vector<int>{0, 0, 1, 1, 1, 1}));
  EXPECT_EQ(hook_monomial(frame, lambda, {3, 1}).exponents, (std::vector<int>{1, 0, 0, 0, 0, 0}));
  EXPECT_THROW(frame.monomial({1, 2}), DomainError);
}

TEST(MultiTrace, TraceProductExamples) {
  EXPECT_EQ(trace_series(P({2, 2}), 3), gansner_product(P({2, 2}), 3));
  EXPECT_EQ(trace_series(P({4, 3, 1}), 6), gansner_product(P({4, 3, 1}), 6));
  EXPECT_EQ(gansner_product(P({4, 3, 1}), 6).specialize(), hook_product(P({4, 3, 1}), 6));
  EXPECT_EQ(hg_trace_series(P({3, 2}), 6), gansner_product(P({3, 2}), 6));
}

TEST(MultiTrace, DropsHighDegreeTerms) {
  MultiTraceSeries s(P({2}), 2);
  s.add(s.monomial({1, 2}), 5);
  EXPECT_TRUE(s.terms().empty());
  s.add(s.monomial({1, 1}), 5);
  s.add(s.monomial({1, 1}), -5);
  EXPECT_TRUE(s.terms().empty());
}
