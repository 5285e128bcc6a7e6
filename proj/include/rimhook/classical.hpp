#pragma once

// Hillman-Grassl, RSK, Greene-Kleitman chain statistics, and the
// comparison statements relating them to lexicographic factorisation.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rimhook/geometry.hpp"
#include "rimhook/rpp.hpp"

namespace rimhook {

/// Hillman-Grassl: repeatedly take the leftmost column s with a nonzero
/// entry, start at its bottom cell, walk north on equal values and east
/// otherwise until leaving the shape at (f, lambda_f); lower the walk by one
/// and record t(f, s) += 1.
Tableau hg(const Rpp& pi);

/// Inverse of hg. Hooks are replayed in reverse extraction order, i.e. by
/// column descending and row ascending.
Rpp hg_inv(const Tableau& t);

/// Two-line array of a tableau read as a matrix: pairs (i, j) with
/// multiplicity t(i, j), lexicographically sorted.
struct Biword {
  std::vector<std::pair<int, int>> pairs;
};

Biword biword(const Tableau& t);

/// P (insertion tableau) and Q (recording tableau) of the same shape.
struct SsytPair {
  Rpp p;
  Rpp q;

  friend bool operator==(const SsytPair&, const SsytPair&) = default;
};

/// Row insertion of the column indices of biword(t), recording row indices.
SsytPair rsk(const Tableau& t);

/// Inverse of rsk. The result has shape `shape`; with no shape given, the
/// square n x n with n the largest entry of P or Q.
Tableau rsk_inv(const SsytPair& pair);
Tableau rsk_inv(const SsytPair& pair, const Partition& shape);

bool is_column_strict(const Rpp& t);

/// Transpose of a filling (P' for a standard Young tableau P).
Rpp transpose(const Rpp& pi);

/// The nonzero entries on diagonal k, sorted decreasingly.
Partition diag_partition(const Rpp& pi, int k);

/// The rectangle of cells weakly north-west of the south-easternmost cell of
/// content k; empty when lambda has no such cell.
std::vector<Cell> rectangle(const Partition& lambda, int k);

enum class ChainKind { WeakSouthEast, StrictNorthEast };

/// Raised when a search would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// max |C_1| + ... + |C_r| over families of r chains of the given kind in
/// R_k that use each cell u at most t(u) times, by min-cost flow on the
/// poset of cell copies. Refuses with BudgetExceeded when (sum of t over
/// R_k)^2 exceeds `budget`.
Entry gk_chain_max(const Tableau& t, int k, int r, ChainKind kind, std::size_t budget = 1'000'000);

/// Square shape (n^n).
Partition square(int n);

/// True iff t is an n x n permutation matrix on the square (n^n).
bool is_permutation_matrix(const Tableau& t);

/// One-line notation "3,1,2" -> permutation matrix sigma(i, w_i) = 1.
Tableau permutation_matrix(const std::vector<int>& word);

/// Requires a square shape with tr_k = tr_{-k} = n - k for 0 <= k < n.
/// True iff every diagonal partition of build(hg(pi)) is the conjugate of the
/// corresponding diagonal partition of pi.
bool check_syt(const Rpp& pi);
bool satisfies_syt_traces(const Rpp& pi);

/// Requires a permutation matrix. True iff rsk(hg(build(sigma))) is the
/// transpose pair of rsk(sigma).
bool check_rsk_transpose(const Tableau& sigma);

}  // namespace rimhook
