#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace multimult {

using Rational = mpq_class;

/// Sparse row: strictly increasing column indices with nonzero values.
using SparseVector = std::vector<std::pair<int, Rational>>;

/// Adds c * v to acc (both sparse, result kept sparse and sorted).
SparseVector axpy(const SparseVector& acc, const Rational& c, const SparseVector& v);
SparseVector scaled(const SparseVector& v, const Rational& c);
/// Shifts every column index by `offset`.
SparseVector shifted(const SparseVector& v, int offset);

/// Incrementally built row echelon form over Q. Each stored row has leading
/// coefficient 1 at a distinct pivot column.
class Echelon {
 public:
  explicit Echelon(int ncols = 0) : ncols_(ncols) {}

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVector>& rows() const { return rows_; }

  /// Reduces v against the stored pivots. The result has no entry in any
  /// pivot column and is zero exactly when v lies in the row space.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  /// Returns true when v was independent of the stored rows.
  bool insert(const SparseVector& v);

  static Echelon identity(int n);

 private:
  SparseVector sweep(const SparseVector& v, bool head_only) const;

  int ncols_;
  std::vector<SparseVector> rows_;
  std::unordered_map<int, std::size_t> pivot_row_;
};

/// Exact rank of the row set. Connected blocks of the sparsity pattern are
/// handled separately; a block whose rank modulo a 61-bit prime is already
/// full is accepted (reduction mod p can only lower a rank), otherwise it
/// is eliminated over Q.
int rank(const std::vector<SparseVector>& rows, int ncols);

/// True when the rows are independent modulo p = 2^61 - 1, which implies
/// independence over Q. False says nothing over Q.
bool full_row_rank_mod_p(const std::vector<SparseVector>& rows);

/// Rank modulo p = 2^61 - 1, or -1 when some denominator vanishes mod p.
int rank_mod_p(const std::vector<SparseVector>& rows, int ncols);

/// Basis of {lambda : sum_j lambda_j rows[j] = 0}, as sparse vectors over
/// the row indices.
std::vector<SparseVector> left_kernel(const std::vector<SparseVector>& rows, int ncols);

}  // namespace multimult
