#pragma once

// Exhaustive generators: reverse plane partitions by size, tableaux by
// weighted size, and south-west lattice paths. Generators are pull-style
// streams; nothing is materialised unless the caller collects it.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rimhook/geometry.hpp"
#include "rimhook/insertion.hpp"
#include "rimhook/rpp.hpp"

namespace rimhook {

inline constexpr std::uint64_t kDefaultEnumCeiling = 10'000'000;

enum class EnumMode { BySize, ByWeightedSize, AllPaths };

/// A requested enumeration and the ceiling on its projected output size.
struct EnumBudget {
  Partition shape;
  int bound = 0;
  EnumMode mode = EnumMode::BySize;
  std::uint64_t ceiling = kDefaultEnumCeiling;
};

class EnumBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact number of items the enumeration would produce (RPPs and tableaux
/// via the hook product, paths via a path count).
std::uint64_t projected_count(const EnumBudget& budget, const Cell& tail = {});

/// Every RPP of shape lambda with |pi| <= N exactly once, in row-major
/// lexicographic order of the entry grids.
class RppStream {
 public:
  RppStream(const Partition& lambda, int max_size, std::uint64_t ceiling = kDefaultEnumCeiling);
  std::optional<Rpp> next();

 private:
  bool advance();
  void fill_from(std::size_t pos);
  Entry lower_bound(std::size_t pos) const;

  Partition shape_;
  std::vector<Cell> cells_;
  std::vector<Entry> values_;
  std::vector<std::size_t> index_;  // row-major position of each cell
  int max_size_;
  bool started_ = false;
  bool done_ = false;
};

/// Every tableau with sum t(u) h(u) <= N exactly once, row-major lexicographic.
class TableauStream {
 public:
  TableauStream(const Partition& lambda, int max_weight, std::uint64_t ceiling = kDefaultEnumCeiling);
  std::optional<Tableau> next();

 private:
  Partition shape_;
  std::vector<Cell> cells_;
  std::vector<int> hooks_;
  std::vector<Entry> values_;
  int max_weight_;
  bool started_ = false;
  bool done_ = false;
};

/// Every south-west path inside lambda starting at `tail` with `length` cells.
class SwPathStream {
 public:
  SwPathStream(const Partition& lambda, const Cell& tail, int length, std::uint64_t ceiling = kDefaultEnumCeiling);
  std::optional<LatticePath> next();

 private:
  Partition shape_;
  Cell tail_;
  int length_;
  std::uint64_t word_ = 0;  // bit k set: step k goes west
  std::uint64_t end_ = 0;
};

template <typename Fn>
void for_each_rpp(const Partition& lambda, int max_size, Fn&& fn) {
  RppStream s(lambda, max_size);
  while (auto pi = s.next()) fn(*pi);
}

template <typename Fn>
void for_each_tableau(const Partition& lambda, int max_weight, Fn&& fn) {
  TableauStream s(lambda, max_weight);
  while (auto t = s.next()) fn(*t);
}

std::vector<Rpp> enumerate_rpps(const Partition& lambda, int max_size, std::uint64_t ceiling = kDefaultEnumCeiling);
std::vector<Tableau> enumerate_tableaux(const Partition& lambda, int max_weight,
                                        std::uint64_t ceiling = kDefaultEnumCeiling);
std::vector<LatticePath> enumerate_sw_paths(const Partition& lambda, const Cell& tail, int length,
                                            std::uint64_t ceiling = kDefaultEnumCeiling);

}  // namespace rimhook
