#pragma once

// Exhaustive property suites behind `rimhook verify`. Each suite sweeps the
// configured shapes and bounds and reports the first few counterexamples.

#include <cstdint>
#include <string>
#include <vector>

#include "rimhook/geometry.hpp"

namespace rimhook {

struct VerifyConfig {
  std::vector<Partition> shapes = default_shapes();
  int series_degree = 10;   // size series: coefficients up to q^N
  int trace_degree = 8;     // trace series, direct and via HG: total degree D
  int bijection_bound = 8;  // |pi| and weighted size of t
  int lemma_cells = 9;      // lemma suites run over every shape with |lambda| <= this
  int lemma_bound = 6;      // ... and every pi with |pi| <= this
  int gk_count = 5;         // chain statistics: all t on (3,3,3) with sum t <= this
  int syt_max_n = 3;
  int perm_max_n = 4;
  unsigned jobs = 1;

  static std::vector<Partition> default_shapes();
};

struct SuiteReport {
  std::string name;
  bool passed = true;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;  // capped
  std::string summary;

  void fail(std::string what);
};

/// Names accepted by run_suite, in the order `all` runs them.
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown name.
SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg);

}  // namespace rimhook
