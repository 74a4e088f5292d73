#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "utimage/field.hpp"

namespace utimage {

// An n x n upper triangular matrix. Only the entries (i, j) with i <= j are
// stored; indices are 1-based throughout, matching the e_{ij} convention.
class UTMatrix {
 public:
  UTMatrix(std::size_t n, const FieldDescriptor& field);

  static UTMatrix zero(std::size_t n, const FieldDescriptor& field) { return UTMatrix(n, field); }
  static UTMatrix identity(std::size_t n, const FieldDescriptor& field);
  // The matrix unit e_{ij}. Throws NotUpperTriangular when i > j.
  static UTMatrix unit(std::size_t n, std::size_t i, std::size_t j, const FieldDescriptor& field);

  std::size_t dim() const { return n_; }
  const FieldDescriptor& field() const { return field_; }

  const Scalar& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Scalar value);

  UTMatrix operator+(const UTMatrix& rhs) const;
  UTMatrix operator-(const UTMatrix& rhs) const;
  UTMatrix operator*(const UTMatrix& rhs) const;  // exact matrix product
  UTMatrix operator-() const;
  UTMatrix scaled(const Scalar& c) const;

  bool operator==(const UTMatrix& rhs) const;
  bool operator!=(const UTMatrix& rhs) const { return !(*this == rhs); }

  bool is_zero() const;
  // Smallest k (1-based, main diagonal = 1) whose diagonal holds a nonzero
  // entry; nullopt for the zero matrix.
  std::optional<std::size_t> min_diagonal() const;
  // Membership in UT_n^(level): every entry with j - i <= level vanishes.
  bool in_level(long level) const;

  std::string to_string() const;  // row-per-line debug form

 private:
  void check_compatible(const UTMatrix& rhs) const;
  std::size_t idx(std::size_t i, std::size_t j) const;

  std::size_t n_;
  FieldDescriptor field_;
  std::vector<Scalar> entries_;  // row-major upper triangle
};

UTMatrix commutator(const UTMatrix& a, const UTMatrix& b);

// Diagonal matrix with pairwise distinct entries.
class DiagonalMatrix {
 public:
  DiagonalMatrix(std::vector<Scalar> diagonal);  // throws SingularDiagonal on repeats
  // diag(0, 1, ..., n-1) in the field.
  static DiagonalMatrix canonical(std::size_t n, const FieldDescriptor& field);

  std::size_t dim() const { return diagonal_.size(); }
  const FieldDescriptor& field() const { return diagonal_.front().field(); }
  const Scalar& entry(std::size_t i) const { return diagonal_.at(i - 1); }  // 1-based

  UTMatrix to_ut() const;
  DiagonalMatrix squared() const;  // entrywise squares (need not be distinct-free; they are not checked)

 private:
  explicit DiagonalMatrix() = default;
  std::vector<Scalar> diagonal_;
};

// The subspace UT_n^(k): entries (i, j) with j - i <= k vanish. level -1
// denotes all of UT_n; as a set the space is {0} once level >= n - 1.
struct TriangularSubspace {
  std::size_t n;
  long level;

  bool contains(const UTMatrix& m) const;
  std::size_t dimension() const;  // number of positions (i, j) with j - i > level
  std::string to_string() const;
};

enum class CommutatorOrientation { GD, DG };

// Solves [G, D] = T (orientation GD) or [D, G] = T (orientation DG) for G,
// where D has pairwise distinct diagonal and T has zero main diagonal.
// Entrywise g_ij = t_ij / (d_jj - d_ii) resp. t_ij / (d_ii - d_jj); the
// diagonal of G is pinned to zero. Preserves every level: T in UT^(k)
// implies G in UT^(k).
UTMatrix solve_diag_commutator(const DiagonalMatrix& d, const UTMatrix& t,
                               CommutatorOrientation orientation);

}  // namespace utimage
