#include "rimhook/enumeration.hpp"

#include <algorithm>
#include <limits>

#include "rimhook/series.hpp"

namespace rimhook {

std::uint64_t projected_count(const EnumBudget& budget, const Cell& tail) {
  if (budget.bound < 0) throw DomainError("enumeration bound must be nonnegative");
  if (budget.mode == EnumMode::AllPaths) {
    if (budget.bound <= 1) return budget.bound == 1 && budget.shape.contains(tail) ? 1 : 0;
    if (budget.bound > 64) return std::numeric_limits<std::uint64_t>::max();
    return std::uint64_t{1} << (budget.bound - 1);
  }
  // RPPs and tableaux are equinumerous by weight, counted by the hook product
  BigInt total = 0;
  const auto series = hook_product(budget.shape, budget.bound);
  for (const auto& c : series.coefficients()) total += c;
  if (total > BigInt(std::numeric_limits<std::uint64_t>::max())) return std::numeric_limits<std::uint64_t>::max();
  return total.convert_to<std::uint64_t>();
}

namespace {

void enforce(const EnumBudget& b, const Cell& tail = {}) {
  auto n = projected_count(b, tail);
  if (n > b.ceiling)
    throw EnumBudgetExceeded("enumeration of " + std::to_string(n) + " items exceeds the ceiling of " +
                             std::to_string(b.ceiling));
}

}  // namespace

RppStream::RppStream(const Partition& lambda, int max_size, std::uint64_t ceiling)
    : shape_(lambda), cells_(lambda.cells()), values_(cells_.size(), 0), max_size_(max_size) {
  enforce({lambda, max_size, EnumMode::BySize, ceiling});
  // row starts for neighbour lookups
  std::size_t pos = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    index_.push_back(pos);
    pos += lambda.row_length(i);
  }
}

Entry RppStream::lower_bound(std::size_t pos) const {
  const Cell& u = cells_[pos];
  Entry lo = 0;
  if (u.col > 1) lo = values_[pos - 1];
  if (u.row > 1) lo = std::max(lo, values_[index_[u.row - 2] + u.col - 1]);
  return lo;
}

void RppStream::fill_from(std::size_t pos) {
  for (std::size_t p = pos; p < values_.size(); ++p) values_[p] = lower_bound(p);
}

bool RppStream::advance() {
  for (std::size_t p = values_.size(); p-- > 0;) {
    ++values_[p];
    fill_from(p + 1);
    Entry sum = 0;
    for (Entry v : values_) sum += v;
    if (sum <= max_size_) return true;
  }
  return false;
}

std::optional<Rpp> RppStream::next() {
  if (done_ || max_size_ < 0) return std::nullopt;
  if (!started_) {
    started_ = true;
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  RppBuilder b(shape_);
  for (std::size_t p = 0; p < cells_.size(); ++p) b.at(cells_[p]) = values_[p];
  return b.finish_unchecked();
}

TableauStream::TableauStream(const Partition& lambda, int max_weight, std::uint64_t ceiling)
    : shape_(lambda), cells_(lambda.cells()), values_(cells_.size(), 0), max_weight_(max_weight) {
  enforce({lambda, max_weight, EnumMode::ByWeightedSize, ceiling});
  for (const auto& u : cells_) hooks_.push_back(hook_length(lambda, u));
}

std::optional<Tableau> TableauStream::next() {
  if (done_ || max_weight_ < 0) return std::nullopt;
  if (!started_) {
    started_ = true;
  } else {
    bool moved = false;
    for (std::size_t p = values_.size(); p-- > 0 && !moved;) {
      ++values_[p];
      std::fill(values_.begin() + static_cast<std::ptrdiff_t>(p) + 1, values_.end(), 0);
      Entry w = 0;
      for (std::size_t c = 0; c < values_.size(); ++c) w += values_[c] * hooks_[c];
      moved = w <= max_weight_;
    }
    if (!moved) {
      done_ = true;
      return std::nullopt;
    }
  }
  Grid rows;
  std::size_t p = 0;
  for (int len : shape_.parts()) {
    rows.emplace_back(values_.begin() + static_cast<std::ptrdiff_t>(p),
                      values_.begin() + static_cast<std::ptrdiff_t>(p + len));
    p += len;
  }
  return Tableau::validate(shape_, std::move(rows));
}

SwPathStream::SwPathStream(const Partition& lambda, const Cell& tail, int length, std::uint64_t ceiling)
    : shape_(lambda), tail_(tail), length_(length) {
  enforce({lambda, length, EnumMode::AllPaths, ceiling}, tail);
  end_ = (length_ >= 1 && lambda.contains(tail)) ? (std::uint64_t{1} << (length_ - 1)) : 0;
}

std::optional<LatticePath> SwPathStream::next() {
  while (word_ < end_) {
    std::uint64_t w = word_++;
    LatticePath p{{tail_}, Orientation::SouthWest};
    bool inside = true;
    for (int k = 0; k + 1 < length_ && inside; ++k) {
      Cell next = (w >> k & 1) ? p.cells.back().west() : p.cells.back().south();
      inside = shape_.contains(next);
      p.cells.push_back(next);
    }
    if (inside) return p;
  }
  return std::nullopt;
}

std::vector<Rpp> enumerate_rpps(const Partition& lambda, int max_size, std::uint64_t ceiling) {
  std::vector<Rpp> out;
  RppStream s(lambda, max_size, ceiling);
  while (auto pi = s.next()) out.push_back(std::move(*pi));
  return out;
}

std::vector<Tableau> enumerate_tableaux(const Partition& lambda, int max_weight, std::uint64_t ceiling) {
  std::vector<Tableau> out;
  TableauStream s(lambda, max_weight, ceiling);
  while (auto t = s.next()) out.push_back(std::move(*t));
  return out;
}

std::vector<LatticePath> enumerate_sw_paths(const Partition& lambda, const Cell& tail, int length,
                                            std::uint64_t ceiling) {
  std::vector<LatticePath> out;
  SwPathStream s(lambda, tail, length, ceiling);
  while (auto p = s.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace rimhook
