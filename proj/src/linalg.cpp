#include "ncalg/linalg.hpp"

#include <stdexcept>

namespace ncalg {

namespace {

void validate(const SparseRow& row, std::size_t dim) {
  std::size_t prev = 0;
  bool first = true;
  for (const auto& [idx, c] : row) {
    if (idx >= dim) throw std::out_of_range("row index out of range");
    if (!first && idx <= prev) throw std::invalid_argument("row indices must increase");
    if (c == 0) throw std::invalid_argument("row stores a zero coefficient");
    prev = idx;
    first = false;
  }
}

// out = a - c * b, all sparse and sorted.
SparseRow axpy(const SparseRow& a, const Rational& c, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -c * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - c * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseRow RowSpace::residue(SparseRow row) const {
  validate(row, dim_);
  // Eliminate leading entries until none has a pivot row.
  for (std::size_t k = 0; k < row.size();) {
    auto it = pivots_.find(row[k].first);
    if (it == pivots_.end()) {
      ++k;
      continue;
    }
    Rational c = row[k].second;  // pivot rows have leading coefficient 1
    row = axpy(row, c, it->second);
    // All indices before k were pivot-free and are untouched by the pivot
    // row (its leading index is row[k].first), so restart from k.
  }
  return row;
}

bool RowSpace::contains(SparseRow row) const {
  return residue(std::move(row)).empty();
}

bool RowSpace::insert(SparseRow row) {
  row = residue(std::move(row));
  if (row.empty()) return false;
  Rational lead = row[0].second;
  for (auto& [idx, c] : row) c /= lead;
  std::size_t pivot = row[0].first;
  // Keep the basis reduced: clear this pivot from every stored row.
  for (auto& [p, r] : pivots_) {
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k].first == pivot) {
        r = axpy(r, r[k].second, row);
        break;
      }
      if (r[k].first > pivot) break;
    }
  }
  pivots_.emplace(pivot, std::move(row));
  return true;
}

}  // namespace ncalg
