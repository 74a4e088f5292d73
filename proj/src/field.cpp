#include "utimage/field.hpp"

#include <gmpxx.h>

#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace utimage {

namespace detail {
struct BigRational {
  mpq_class value;
};
}  // namespace detail

using detail::BigRational;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
  if (!is_prime(p)) fail(Errc::NotPrime, "modulus " + std::to_string(p) + " is not prime");
  if (p > (std::uint64_t(1) << 31)) fail(Errc::NotPrime, "modulus too large");
  FieldDescriptor f;
  f.kind = Kind::PrimeField;
  f.modulus = p;
  return f;
}

FieldDescriptor FieldDescriptor::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("gf:", 0) == 0 || text.rfind("GF:", 0) == 0) {
    std::string digits(text.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      fail(Errc::ParseError, "bad field spec '" + std::string(text) + "'");
    }
    return prime_field(std::strtoull(digits.c_str(), nullptr, 10));
  }
  fail(Errc::ParseError, "bad field spec '" + std::string(text) + "' (expected 'q' or 'gf:<p>')");
}

std::string FieldDescriptor::to_string() const {
  return is_rationals() ? "q" : "gf:" + std::to_string(modulus);
}

namespace {

// Values with |num| or den beyond this bound leave the int64 fast path.
constexpr std::int64_t kSmallLimit = std::int64_t(1) << 62;

using i128 = __int128;
using u128 = unsigned __int128;

u128 abs128(i128 v) { return v < 0 ? u128(-v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_small(i128 num, i128 den) {
  return num > -i128(kSmallLimit) && num < i128(kSmallLimit) && den < i128(kSmallLimit);
}

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 mag = abs128(v);
  mpz_class hi(static_cast<unsigned long>(mag >> 64));
  mpz_class result = (hi << 64) + static_cast<unsigned long>(mag & ~0ULL);
  return neg ? mpz_class(-result) : result;
}

mpq_class mpq_from_i128(i128 num, i128 den) {
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  q.canonicalize();
  return q;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid; a must be nonzero mod p.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = std::int64_t(p), new_r = std::int64_t(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) fail(Errc::DivisionByZero, "no inverse mod " + std::to_string(p));
  if (t < 0) t += std::int64_t(p);
  return std::uint64_t(t);
}

}  // namespace

Scalar::Scalar(const FieldDescriptor& field) : field_(field) {}

Scalar Scalar::of_int(const FieldDescriptor& field, std::int64_t value) {
  Scalar s(field);
  if (field.is_prime_field()) {
    std::int64_t p = std::int64_t(field.modulus);
    std::int64_t r = value % p;
    if (r < 0) r += p;
    s.num_ = r;
  } else {
    s.num_ = value;
  }
  return s;
}

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(Errc::DivisionByZero, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Scalar s(FieldDescriptor::rationals());
  s.num_ = num == 0 ? 0 : num;
  s.den_ = num == 0 ? 1 : den;
  return s;
}

Scalar Scalar::from_big(const FieldDescriptor& field, BigRational&& value) {
  Scalar s(field);
  const mpq_class& q = value.value;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    s.num_ = q.get_num().get_si();
    s.den_ = q.get_den().get_si();
    return s;
  }
  s.big_ = std::make_shared<const BigRational>(std::move(value));
  return s;
}

Scalar Scalar::parse(std::string_view text, const FieldDescriptor& field) {
  bool neg = false;
  std::string_view rest = text;
  if (!rest.empty() && (rest[0] == '-' || rest[0] == '+')) {
    neg = rest[0] == '-';
    rest.remove_prefix(1);
  }
  auto slash = rest.find('/');
  std::string num_part(rest.substr(0, slash));
  std::string den_part = slash == std::string_view::npos ? "1" : std::string(rest.substr(slash + 1));
  auto all_digits = [](const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
  };
  if (!all_digits(num_part) || !all_digits(den_part)) {
    fail(Errc::ParseError, "bad scalar '" + std::string(text) + "'");
  }
  mpz_class num(num_part), den(den_part);
  if (neg) num = -num;
  if (den == 0) fail(Errc::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  if (field.is_prime_field()) {
    mpz_class p(static_cast<unsigned long>(field.modulus));
    mpz_class r = num % p;
    if (r < 0) r += p;
    Scalar a = of_int(field, r.get_si());
    mpz_class rd = den % p;
    Scalar b = of_int(field, rd.get_si());
    return a / b;
  }
  mpq_class q(num, den);
  q.canonicalize();
  return from_big(field, BigRational{std::move(q)});
}

bool Scalar::is_zero() const {
  if (big_) return big_->value == 0;
  return num_ == 0;
}

bool Scalar::is_one() const {
  if (big_) return big_->value == 1;
  return num_ == 1 && den_ == 1;
}

std::uint64_t Scalar::residue() const {
  if (!field_.is_prime_field()) fail(Errc::FieldMismatch, "residue() on a rational scalar");
  return std::uint64_t(num_);
}

void Scalar::check_same_field(const Scalar& rhs) const {
  if (field_ != rhs.field_) {
    fail(Errc::FieldMismatch, field_.to_string() + " vs " + rhs.field_.to_string());
  }
}

namespace {
mpq_class to_mpq(const Scalar& s, const detail::BigRational* big, std::int64_t num,
                 std::int64_t den) {
  (void)s;
  if (big) return big->value;
  mpq_class q(static_cast<long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}
}  // namespace

Scalar Scalar::operator+(const Scalar& rhs) const {
  check_same_field(rhs);
  if (field_.is_prime_field()) {
    Scalar s(field_);
    std::int64_t p = std::int64_t(field_.modulus);
    s.num_ = (num_ + rhs.num_) % p;
    return s;
  }
  if (!big_ && !rhs.big_) {
    i128 n = i128(num_) * rhs.den_ + i128(rhs.num_) * den_;
    i128 d = i128(den_) * rhs.den_;
    u128 g = gcd128(abs128(n), u128(d));
    if (g > 1) {
      n /= i128(g);
      d /= i128(g);
    }
    if (fits_small(n, d)) {
      Scalar s(field_);
      s.num_ = std::int64_t(n);
      s.den_ = std::int64_t(d);
      return s;
    }
    return from_big(field_, BigRational{mpq_from_i128(n, d)});
  }
  return from_big(field_, BigRational{to_mpq(*this, big_.get(), num_, den_) +
                                      to_mpq(rhs, rhs.big_.get(), rhs.num_, rhs.den_)});
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator-() const {
  if (field_.is_prime_field()) {
    Scalar s(field_);
    s.num_ = num_ == 0 ? 0 : std::int64_t(field_.modulus) - num_;
    return s;
  }
  if (!big_) {
    Scalar s(field_);
    s.num_ = -num_;
    s.den_ = den_;
    return s;
  }
  return from_big(field_, BigRational{mpq_class(-big_->value)});
}

Scalar Scalar::operator*(const Scalar& rhs) const {
  check_same_field(rhs);
  if (field_.is_prime_field()) {
    Scalar s(field_);
    u128 prod = u128(num_) * u128(rhs.num_);
    s.num_ = std::int64_t(prod % field_.modulus);
    return s;
  }
  if (!big_ && !rhs.big_) {
    // Cross-cancel before multiplying to keep intermediates small.
    std::int64_t a = num_, b = den_, c = rhs.num_, d = rhs.den_;
    std::int64_t g1 = std::gcd(a < 0 ? -a : a, d);
    std::int64_t g2 = std::gcd(c < 0 ? -c : c, b);
    a /= g1;
    d /= g1;
    c /= g2;
    b /= g2;
    i128 n = i128(a) * c;
    i128 dd = i128(b) * d;
    if (fits_small(n, dd)) {
      Scalar s(field_);
      s.num_ = std::int64_t(n);
      s.den_ = n == 0 ? 1 : std::int64_t(dd);
      return s;
    }
    return from_big(field_, BigRational{mpq_from_i128(n, dd)});
  }
  return from_big(field_, BigRational{to_mpq(*this, big_.get(), num_, den_) *
                                      to_mpq(rhs, rhs.big_.get(), rhs.num_, rhs.den_)});
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
  if (field_.is_prime_field()) {
    Scalar s(field_);
    s.num_ = std::int64_t(mod_inverse(std::uint64_t(num_), field_.modulus));
    return s;
  }
  if (!big_) {
    Scalar s(field_);
    if (num_ < 0) {
      s.num_ = -den_;
      s.den_ = -num_;
    } else {
      s.num_ = den_;
      s.den_ = num_;
    }
    return s;
  }
  return from_big(field_, BigRational{mpq_class(1 / big_->value)});
}

Scalar Scalar::operator/(const Scalar& rhs) const {
  check_same_field(rhs);
  if (rhs.is_zero()) fail(Errc::DivisionByZero, "division by zero");
  return *this * rhs.inverse();
}

bool Scalar::operator==(const Scalar& rhs) const {
  if (field_ != rhs.field_) return false;
  if (!big_ && !rhs.big_) return num_ == rhs.num_ && den_ == rhs.den_;
  return to_mpq(*this, big_.get(), num_, den_) == to_mpq(rhs, rhs.big_.get(), rhs.num_, rhs.den_);
}

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) return std::to_string(num_);
  if (big_) {
    std::string s = big_->value.get_num().get_str();
    if (big_->value.get_den() != 1) s += "/" + big_->value.get_den().get_str();
    return s;
  }
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

std::vector<Scalar> distinct_elements(const FieldDescriptor& field, std::size_t n) {
  if (field.is_prime_field() && field.modulus < n) {
    fail(Errc::HypothesisViolation, "field " + field.to_string() + " has fewer than " +
                                        std::to_string(n) + " elements");
  }
  std::vector<Scalar> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(Scalar::of_int(field, std::int64_t(i)));
  return out;
}

}  // namespace utimage
