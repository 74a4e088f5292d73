#include "utimage/matrix.hpp"

#include <sstream>

namespace utimage {

UTMatrix::UTMatrix(std::size_t n, const FieldDescriptor& field)
    : n_(n), field_(field), entries_(n * (n + 1) / 2, Scalar::zero(field)) {
  if (n == 0) fail(Errc::IndexOutOfRange, "matrix dimension must be positive");
}

UTMatrix UTMatrix::identity(std::size_t n, const FieldDescriptor& field) {
  UTMatrix m(n, field);
  for (std::size_t i = 1; i <= n; ++i) m.set(i, i, Scalar::one(field));
  return m;
}

UTMatrix UTMatrix::unit(std::size_t n, std::size_t i, std::size_t j,
                        const FieldDescriptor& field) {
  if (i < 1 || j < 1 || i > n || j > n) {
    fail(Errc::IndexOutOfRange, "unit (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") outside dimension " + std::to_string(n));
  }
  if (i > j) {
    fail(Errc::NotUpperTriangular,
         "unit (" + std::to_string(i) + "," + std::to_string(j) + ") lies below the diagonal");
  }
  UTMatrix m(n, field);
  m.set(i, j, Scalar::one(field));
  return m;
}

std::size_t UTMatrix::idx(std::size_t i, std::size_t j) const {
  // Row i (1-based) starts after (i-1) rows of lengths n, n-1, ...
  return (i - 1) * n_ - (i - 1) * (i - 2) / 2 + (j - i);
}

const Scalar& UTMatrix::at(std::size_t i, std::size_t j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) {
    fail(Errc::IndexOutOfRange, "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  if (i > j) fail(Errc::NotUpperTriangular, "entry below the diagonal");
  return entries_[idx(i, j)];
}

void UTMatrix::set(std::size_t i, std::size_t j, Scalar value) {
  if (i < 1 || j < 1 || i > n_ || j > n_) {
    fail(Errc::IndexOutOfRange, "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  if (i > j) fail(Errc::NotUpperTriangular, "entry below the diagonal");
  if (value.field() != field_) fail(Errc::FieldMismatch, "entry field differs from matrix field");
  entries_[idx(i, j)] = std::move(value);
}

void UTMatrix::check_compatible(const UTMatrix& rhs) const {
  if (n_ != rhs.n_) fail(Errc::DimensionMismatch, std::to_string(n_) + " vs " + std::to_string(rhs.n_));
  if (field_ != rhs.field_) fail(Errc::FieldMismatch, field_.to_string() + " vs " + rhs.field_.to_string());
}

UTMatrix UTMatrix::operator+(const UTMatrix& rhs) const {
  check_compatible(rhs);
  UTMatrix out(n_, field_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] + rhs.entries_[k];
  return out;
}

UTMatrix UTMatrix::operator-(const UTMatrix& rhs) const {
  check_compatible(rhs);
  UTMatrix out(n_, field_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] - rhs.entries_[k];
  return out;
}

UTMatrix UTMatrix::operator-() const {
  UTMatrix out(n_, field_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
  return out;
}

UTMatrix UTMatrix::scaled(const Scalar& c) const {
  if (c.field() != field_) fail(Errc::FieldMismatch, "scalar field differs from matrix field");
  UTMatrix out(n_, field_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] * c;
  return out;
}

UTMatrix UTMatrix::operator*(const UTMatrix& rhs) const {
  check_compatible(rhs);
  UTMatrix out(n_, field_);
  for (std::size_t i = 1; i <= n_; ++i) {
    for (std::size_t j = i; j <= n_; ++j) {
      Scalar acc = Scalar::zero(field_);
      for (std::size_t k = i; k <= j; ++k) {
        const Scalar& a = entries_[idx(i, k)];
        if (a.is_zero()) continue;
        const Scalar& b = rhs.entries_[rhs.idx(k, j)];
        if (b.is_zero()) continue;
        acc += a * b;
      }
      out.entries_[out.idx(i, j)] = std::move(acc);
    }
  }
  return out;
}

UTMatrix commutator(const UTMatrix& a, const UTMatrix& b) { return a * b - b * a; }

bool UTMatrix::operator==(const UTMatrix& rhs) const {
  if (n_ != rhs.n_ || field_ != rhs.field_) return false;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k] != rhs.entries_[k]) return false;
  }
  return true;
}

bool UTMatrix::is_zero() const {
  for (const Scalar& s : entries_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

std::optional<std::size_t> UTMatrix::min_diagonal() const {
  for (std::size_t k = 1; k <= n_; ++k) {
    for (std::size_t i = 1; i + k - 1 <= n_; ++i) {
      if (!entries_[idx(i, i + k - 1)].is_zero()) return k;
    }
  }
  return std::nullopt;
}

bool UTMatrix::in_level(long level) const {
  auto k = min_diagonal();
  return !k.has_value() || long(*k) > level + 1;
}

std::string UTMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 1; i <= n_; ++i) {
    for (std::size_t j = 1; j <= n_; ++j) {
      out << (j > 1 ? " " : "") << (i <= j ? at(i, j).to_string() : "0");
    }
    out << '\n';
  }
  return out.str();
}

DiagonalMatrix::DiagonalMatrix(std::vector<Scalar> diagonal) : diagonal_(std::move(diagonal)) {
  if (diagonal_.empty()) fail(Errc::IndexOutOfRange, "empty diagonal");
  for (std::size_t a = 0; a < diagonal_.size(); ++a) {
    for (std::size_t b = a + 1; b < diagonal_.size(); ++b) {
      if (diagonal_[a] == diagonal_[b]) {
        fail(Errc::SingularDiagonal, "repeated diagonal entry " + diagonal_[a].to_string());
      }
    }
  }
}

DiagonalMatrix DiagonalMatrix::canonical(std::size_t n, const FieldDescriptor& field) {
  return DiagonalMatrix(distinct_elements(field, n));
}

UTMatrix DiagonalMatrix::to_ut() const {
  UTMatrix m(dim(), field());
  for (std::size_t i = 1; i <= dim(); ++i) m.set(i, i, diagonal_[i - 1]);
  return m;
}

DiagonalMatrix DiagonalMatrix::squared() const {
  DiagonalMatrix out;
  out.diagonal_.reserve(diagonal_.size());
  for (const Scalar& d : diagonal_) out.diagonal_.push_back(d * d);
  return out;
}

bool TriangularSubspace::contains(const UTMatrix& m) const { return m.dim() == n && m.in_level(level); }

std::size_t TriangularSubspace::dimension() const {
  std::size_t dim = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      if (long(j) - long(i) > level) ++dim;
    }
  }
  return dim;
}

std::string TriangularSubspace::to_string() const {
  return "UT_" + std::to_string(n) + "^(" + std::to_string(level) + ")";
}

UTMatrix solve_diag_commutator(const DiagonalMatrix& d, const UTMatrix& t,
                               CommutatorOrientation orientation) {
  const std::size_t n = t.dim();
  if (d.dim() != n) fail(Errc::DimensionMismatch, "diagonal and target dimensions differ");
  for (std::size_t i = 1; i <= n; ++i) {
    if (!t.at(i, i).is_zero()) {
      fail(Errc::TargetNotInImage, "target has nonzero main diagonal at (" + std::to_string(i) +
                                       "," + std::to_string(i) + ")");
    }
  }
  UTMatrix g(n, t.field());
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const Scalar& tij = t.at(i, j);
      if (tij.is_zero()) continue;
      Scalar denom = orientation == CommutatorOrientation::GD ? d.entry(j) - d.entry(i)
                                                              : d.entry(i) - d.entry(j);
      if (denom.is_zero()) fail(Errc::SingularDiagonal, "repeated diagonal entries");
      g.set(i, j, tij / denom);
    }
  }
  return g;
}

}  // namespace utimage
