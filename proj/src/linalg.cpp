#include "utimage/linalg.hpp"

#include <utility>

namespace utimage {

std::size_t exact_rank(DenseMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Scalar inv = rows[rank][col].inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      Scalar factor = rows[r][col] * inv;
      for (std::size_t c = col; c < cols; ++c) {
        rows[r][c] -= factor * rows[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Scalar>> solve_full_column_rank(DenseMatrix a, std::vector<Scalar> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  const FieldDescriptor field = b.empty() ? FieldDescriptor::rationals() : b[0].field();

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    std::swap(b[rank], b[pivot]);
    Scalar inv = a[rank][col].inverse();
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      Scalar factor = a[r][col] * inv;
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[rank][c];
      b[r] -= factor * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  // Rows eliminated to zero must have zero right-hand side.
  for (std::size_t r = rank; r < rows; ++r) {
    if (!b[r].is_zero()) return std::nullopt;
  }
  std::vector<Scalar> x(cols, Scalar::zero(field));
  for (std::size_t k = 0; k < rank; ++k) {
    x[pivot_col[k]] = b[k] / a[k][pivot_col[k]];
  }
  return x;
}

}  // namespace utimage
