#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "utimage/field.hpp"

namespace utimage {

// A word in noncommuting letters; letters are 1-based variable indices.
using Word = std::vector<std::uint8_t>;

// A finite linear combination of words over a field: the workhorse behind
// the expression parser and bracket expansion. Zero coefficients are never
// stored.
class WordPoly {
 public:
  explicit WordPoly(const FieldDescriptor& field) : field_(field) {}
  static WordPoly constant(const Scalar& c);
  static WordPoly letter(const FieldDescriptor& field, std::uint8_t var);

  const FieldDescriptor& field() const { return field_; }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& word, const Scalar& c);

  WordPoly operator+(const WordPoly& rhs) const;
  WordPoly operator-(const WordPoly& rhs) const;
  WordPoly operator*(const WordPoly& rhs) const;  // concatenation product
  WordPoly scaled(const Scalar& c) const;

  bool operator==(const WordPoly& rhs) const {
    return field_ == rhs.field_ && terms_ == rhs.terms_;
  }

 private:
  FieldDescriptor field_;
  std::map<Word, Scalar> terms_;
};

inline WordPoly bracket(const WordPoly& a, const WordPoly& b) { return a * b - b * a; }

}  // namespace utimage
