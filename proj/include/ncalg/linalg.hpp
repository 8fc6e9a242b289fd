#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "ncalg/rational.hpp"

namespace ncalg {

/// Sparse vector over Q: (index, coefficient) pairs, strictly increasing by
/// index, no zero coefficients.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Row space in reduced echelon form, built incrementally. Each stored row
/// has leading coefficient 1 at a pivot index owned by no other row.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Reduces the row against the stored basis and inserts the remainder if
  /// nonzero. Returns true when the rank grew.
  bool insert(SparseRow row);

  /// True iff the row lies in the current span.
  bool contains(SparseRow row) const;

  /// Fully reduced residue of the row modulo the span.
  SparseRow residue(SparseRow row) const;

  /// Pivot-indexed basis rows, for deterministic traversal.
  const std::map<std::size_t, SparseRow>& basis() const { return pivots_; }

 private:
  std::size_t dim_;
  std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace ncalg
