#pragma once

// Truncated power series with exact integer coefficients, used to check the
// hook-product generating functions against enumeration.

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rimhook/geometry.hpp"

namespace rimhook {

using BigInt = boost::multiprecision::cpp_int;

/// c_0 + c_1 q + ... + c_N q^N modulo q^{N+1}.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int degree);
  static TruncatedSeries one(int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt& operator[](int n) { return coeffs_.at(n); }
  const BigInt& operator[](int n) const { return coeffs_.at(n); }

  /// Multiplies in place by 1/(1 - q^m), m >= 1.
  void divide_by_one_minus_power(int m);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// "c0 + c1*q + c2*q^2 + ...", omitting zero terms (but always printing c0).
std::string format_series(const TruncatedSeries& s);

/// Exponent vector over q_k for k in [low_index, low_index + size).
struct TraceMonomial {
  std::vector<int> exponents;

  int degree() const;
  friend auto operator<=>(const TraceMonomial&, const TraceMonomial&) = default;
};

/// Sparse multivariate series in the trace variables q_k of a shape,
/// truncated at total degree D.
class MultiTraceSeries {
 public:
  MultiTraceSeries(const Partition& lambda, int max_degree);
  static MultiTraceSeries one(const Partition& lambda, int max_degree);

  int low_index() const { return low_; }
  int variable_count() const { return count_; }
  int max_degree() const { return max_degree_; }
  const std::map<TraceMonomial, BigInt>& terms() const { return terms_; }

  /// Adds c * prod_k q_k^{e_k}; ignored when the total degree exceeds D.
  void add(const TraceMonomial& m, const BigInt& c);
  /// Monomial with exponent tr_k at variable k, from a trace vector indexed
  /// like the variables.
  TraceMonomial monomial(const std::vector<int>& exponents) const;

  /// Multiplies in place by 1/(1 - m) for a monomial m of positive degree.
  void divide_by_one_minus(const TraceMonomial& m);

  /// Sets every q_k = q.
  TruncatedSeries specialize() const;

  friend bool operator==(const MultiTraceSeries& a, const MultiTraceSeries& b) {
    return a.low_ == b.low_ && a.count_ == b.count_ && a.max_degree_ == b.max_degree_ && a.terms_ == b.terms_;
  }

 private:
  int low_ = 0;
  int count_ = 0;
  int max_degree_ = 0;
  std::map<TraceMonomial, BigInt> terms_;
};

/// One "coeff : q_{k}^e ..." line per monomial, in monomial order.
std::string format_series(const MultiTraceSeries& s);

/// prod over u in lambda of 1/(1 - q^{h(u)}) mod q^{N+1}.
TruncatedSeries hook_product(const Partition& lambda, int degree);

/// sum over reverse plane partitions of q^{|pi|}, by enumeration.
TruncatedSeries rpp_series(const Partition& lambda, int degree);

/// q^{H(i,j)} = prod_{k = j - lambda'_j}^{lambda_i - i} q_k.
TraceMonomial hook_monomial(const MultiTraceSeries& frame, const Partition& lambda, const Cell& u);

/// prod over u in lambda of 1/(1 - q^{H(u)}), total degree <= D.
MultiTraceSeries gansner_product(const Partition& lambda, int max_degree);

/// sum over reverse plane partitions with |pi| <= D of prod_k q_k^{tr_k(pi)}.
MultiTraceSeries trace_series(const Partition& lambda, int max_degree);

/// sum over tableaux t = hg(pi), |pi| <= D, of prod_u (q^{H(u)})^{t(u)}.
MultiTraceSeries hg_trace_series(const Partition& lambda, int max_degree);

}  // namespace rimhook
