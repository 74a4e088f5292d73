#pragma once

#include <optional>
#include <vector>

#include "utimage/field.hpp"

namespace utimage {

// Dense exact matrices for elimination: rows of scalars over one field.
using DenseMatrix = std::vector<std::vector<Scalar>>;

// Rank by Gaussian elimination. Pivots are chosen by position (first nonzero
// in the column), never by magnitude; arithmetic is exact.
std::size_t exact_rank(DenseMatrix rows);

// Solves A x = b for the unique solution of a full-column-rank system.
// Returns nullopt when the system is inconsistent. A is given row-major,
// rows x cols; b has one entry per row.
std::optional<std::vector<Scalar>> solve_full_column_rank(DenseMatrix a,
                                                          std::vector<Scalar> b);

}  // namespace utimage
