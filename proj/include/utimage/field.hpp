#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "utimage/errors.hpp"

namespace utimage {

// The coefficient field: the rationals, or the integers mod a prime.
struct FieldDescriptor {
  enum class Kind : std::uint8_t { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint64_t modulus = 0;  // 0 for the rationals

  static FieldDescriptor rationals() { return {}; }
  static FieldDescriptor prime_field(std::uint64_t p);  // throws NotPrime
  static FieldDescriptor parse(std::string_view text);  // "q" or "gf:<p>"

  bool is_rationals() const { return kind == Kind::Rationals; }
  bool is_prime_field() const { return kind == Kind::PrimeField; }
  // True when the field has at least n elements.
  bool has_at_least(std::uint64_t n) const { return is_rationals() || modulus >= n; }

  bool operator==(const FieldDescriptor&) const = default;

  std::string to_string() const;  // "q" / "gf:7"
};

bool is_prime(std::uint64_t n);

namespace detail {
// mpq_class payload kept behind a pointer so Scalar stays cheap to copy when
// values fit in 64 bits. Definition lives in field.cpp.
struct BigRational;
}  // namespace detail

// An exact field element. Rationals are stored as a normalized int64
// numerator/denominator pair and silently promoted to arbitrary precision
// when an operation would overflow. Prime-field elements are canonical
// residues. Immutable value type.
class Scalar {
 public:
  Scalar() : Scalar(FieldDescriptor::rationals()) {}
  explicit Scalar(const FieldDescriptor& field);  // zero of the field

  static Scalar zero(const FieldDescriptor& field) { return Scalar(field); }
  static Scalar one(const FieldDescriptor& field) { return of_int(field, 1); }
  static Scalar of_int(const FieldDescriptor& field, std::int64_t value);
  // num/den over the rationals, normalized. den must be nonzero.
  static Scalar rational(std::int64_t num, std::int64_t den = 1);
  // Canonical text form: "a" or "a/b" with optional leading '-'. Prime-field
  // values reduce mod p; "a/b" is a * b^-1.
  static Scalar parse(std::string_view text, const FieldDescriptor& field);

  const FieldDescriptor& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator/(const Scalar& rhs) const;  // throws DivisionByZero
  Scalar operator-() const;
  Scalar inverse() const;  // throws DivisionByZero on zero

  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
  Scalar& operator/=(const Scalar& rhs) { return *this = *this / rhs; }

  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

  // Prime-field residue in [0, p). Only valid for prime-field scalars.
  std::uint64_t residue() const;

  // True when the rational value currently fits the int64 fast path.
  bool is_small() const { return big_ == nullptr; }
  // Fast-path accessors; only meaningful when is_small() and rational.
  std::int64_t small_num() const { return num_; }
  std::int64_t small_den() const { return den_; }

 private:
  void check_same_field(const Scalar& rhs) const;
  static Scalar from_big(const FieldDescriptor& field, detail::BigRational&& value);

  FieldDescriptor field_;
  std::int64_t num_ = 0;  // rational numerator, or prime-field residue
  std::int64_t den_ = 1;  // rational denominator (> 0); 1 for prime fields
  std::shared_ptr<const detail::BigRational> big_;  // engaged when out of int64 range
};

// The canonical sequence 0, 1, ..., n-1 embedded in the field; pairwise
// distinct. Throws HypothesisViolation when GF(p) has fewer than n elements.
std::vector<Scalar> distinct_elements(const FieldDescriptor& field, std::size_t n);

}  // namespace utimage
