#include "rimhook/series.hpp"

#include <numeric>

#include "rimhook/classical.hpp"
#include "rimhook/enumeration.hpp"

namespace rimhook {

TruncatedSeries::TruncatedSeries(int degree) {
  if (degree < 0) throw DomainError("truncation degree must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(degree) + 1, 0);
}

TruncatedSeries TruncatedSeries::one(int degree) {
  TruncatedSeries s(degree);
  s.coeffs_[0] = 1;
  return s;
}

void TruncatedSeries::divide_by_one_minus_power(int m) {
  if (m < 1) throw DomainError("geometric inverse needs a positive power");
  // (1 - q^m) g = f  <=>  g_n = f_n + g_{n-m}
  for (std::size_t n = static_cast<std::size_t>(m); n < coeffs_.size(); ++n) coeffs_[n] += coeffs_[n - m];
}

std::string format_series(const TruncatedSeries& s) {
  std::string out = s[0].str();
  for (int n = 1; n <= s.degree(); ++n) {
    if (s[n] == 0) continue;
    out += " + " + s[n].str() + "*q";
    if (n > 1) out += "^" + std::to_string(n);
  }
  return out;
}

int TraceMonomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

MultiTraceSeries::MultiTraceSeries(const Partition& lambda, int max_degree) : max_degree_(max_degree) {
  if (max_degree < 0) throw DomainError("truncation degree must be nonnegative");
  if (!lambda.empty()) {
    low_ = lambda.min_content();
    count_ = lambda.max_content() - low_ + 1;
  }
}

MultiTraceSeries MultiTraceSeries::one(const Partition& lambda, int max_degree) {
  MultiTraceSeries s(lambda, max_degree);
  s.add(TraceMonomial{std::vector<int>(s.count_, 0)}, 1);
  return s;
}

void MultiTraceSeries::add(const TraceMonomial& m, const BigInt& c) {
  if (static_cast<int>(m.exponents.size()) != count_) throw DomainError("monomial has the wrong number of variables");
  if (m.degree() > max_degree_ || c == 0) return;
  auto& slot = terms_[m];
  slot += c;
  if (slot == 0) terms_.erase(m);
}

TraceMonomial MultiTraceSeries::monomial(const std::vector<int>& exponents) const {
  if (static_cast<int>(exponents.size()) != count_) throw DomainError("monomial has the wrong number of variables");
  return TraceMonomial{exponents};
}

void MultiTraceSeries::divide_by_one_minus(const TraceMonomial& m) {
  const int d = m.degree();
  if (d < 1) throw DomainError("geometric inverse needs a monomial of positive degree");
  std::map<TraceMonomial, BigInt> out;
  for (const auto& [key, c] : terms_) {
    TraceMonomial cur = key;
    for (int deg = key.degree(); deg <= max_degree_; deg += d) {
      out[cur] += c;
      for (std::size_t k = 0; k < cur.exponents.size(); ++k) cur.exponents[k] += m.exponents[k];
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  terms_ = std::move(out);
}

TruncatedSeries MultiTraceSeries::specialize() const {
  TruncatedSeries s(max_degree_);
  for (const auto& [m, c] : terms_) s[m.degree()] += c;
  return s;
}

std::string format_series(const MultiTraceSeries& s) {
  std::string out;
  for (const auto& [m, c] : s.terms()) {
    out += c.str() + " :";
    for (std::size_t k = 0; k < m.exponents.size(); ++k) {
      if (m.exponents[k] == 0) continue;
      out += " q_{" + std::to_string(s.low_index() + static_cast<int>(k)) + "}";
      if (m.exponents[k] > 1) out += "^" + std::to_string(m.exponents[k]);
    }
    out += '\n';
  }
  return out;
}

TruncatedSeries hook_product(const Partition& lambda, int degree) {
  auto s = TruncatedSeries::one(degree);
  for (const auto& u : lambda.cells()) s.divide_by_one_minus_power(hook_length(lambda, u));
  return s;
}

TruncatedSeries rpp_series(const Partition& lambda, int degree) {
  TruncatedSeries s(degree);
  for_each_rpp(lambda, degree, [&](const Rpp& pi) { s[static_cast<int>(pi.size())] += 1; });
  return s;
}

TraceMonomial hook_monomial(const MultiTraceSeries& frame, const Partition& lambda, const Cell& u) {
  std::vector<int> e(frame.variable_count(), 0);
  const int from = u.col - lambda.column_length(u.col);
  const int to = lambda.row_length(u.row) - u.row;
  for (int k = from; k <= to; ++k) e[k - frame.low_index()] = 1;
  return frame.monomial(e);
}

MultiTraceSeries gansner_product(const Partition& lambda, int max_degree) {
  auto s = MultiTraceSeries::one(lambda, max_degree);
  for (const auto& u : lambda.cells()) s.divide_by_one_minus(hook_monomial(s, lambda, u));
  return s;
}

namespace {

std::vector<int> trace_vector(const MultiTraceSeries& frame, const Rpp& pi) {
  std::vector<int> e(frame.variable_count());
  for (int k = 0; k < frame.variable_count(); ++k) e[k] = static_cast<int>(trace(pi, frame.low_index() + k));
  return e;
}

}  // namespace

MultiTraceSeries trace_series(const Partition& lambda, int max_degree) {
  MultiTraceSeries s(lambda, max_degree);
  for_each_rpp(lambda, max_degree, [&](const Rpp& pi) { s.add(s.monomial(trace_vector(s, pi)), 1); });
  return s;
}

MultiTraceSeries hg_trace_series(const Partition& lambda, int max_degree) {
  MultiTraceSeries s(lambda, max_degree);
  std::vector<TraceMonomial> hooks;
  const auto cells = lambda.cells();
  for (const auto& u : cells) hooks.push_back(hook_monomial(s, lambda, u));
  for_each_rpp(lambda, max_degree, [&](const Rpp& pi) {
    Tableau t = hg(pi);
    std::vector<int> e(s.variable_count(), 0);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (std::size_t k = 0; k < e.size(); ++k)
        e[k] += static_cast<int>(t.at(cells[c])) * hooks[c].exponents[k];
    s.add(s.monomial(e), 1);
  });
  return s;
}

}  // namespace rimhook
