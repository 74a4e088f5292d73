#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "utimage/matrix.hpp"
#include "utimage/words.hpp"

namespace utimage {

// A permutation of (1..m), stored as its image sequence.
using Perm = std::vector<std::uint8_t>;

Perm identity_perm(std::size_t m);
Perm inverse_perm(const Perm& p);
bool is_perm(const Perm& p);

// A multilinear polynomial of degree m in noncommuting variables x1..xm:
// a map from permutations of (1..m) to nonzero coefficients. The zero
// polynomial is the empty map with a declared degree.
class MultilinearPoly {
 public:
  static MultilinearPoly zero(std::size_t degree, const FieldDescriptor& field);
  // Validates every key is a permutation of (1..degree) and drops zeros.
  static MultilinearPoly from_terms(std::size_t degree, const FieldDescriptor& field,
                                    std::map<Perm, Scalar> terms);
  // Converts a parsed/expanded word combination, rejecting words that are
  // not permutations of (1..degree).
  static MultilinearPoly from_words(std::size_t degree, const WordPoly& words);

  // Parses the expression grammar:
  //   expr   := ['-'] term (('+'|'-') term)*
  //   term   := coeff | (coeff '*')? factor ('*' factor)*
  //   factor := var | '[' expr ',' expr ']' | '(' expr ')'
  //   coeff  := int | int '/' int ;  var := 'x' digits
  // Commutators expand to ab - ba; like monomials merge; the result must be
  // multilinear in x1..xm with m the highest index mentioned.
  // declared_degree (when nonzero) fixes the degree of a cancelling or "0"
  // expression; it must not be smaller than the highest index mentioned.
  static MultilinearPoly parse(std::string_view text, const FieldDescriptor& field,
                               std::size_t declared_degree = 0);

  std::size_t degree() const { return degree_; }
  const FieldDescriptor& field() const { return field_; }
  const std::map<Perm, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Coefficient of the monomial x_{p(1)} ... x_{p(m)}; zero when absent.
  Scalar coefficient(const Perm& p) const;

  // Sum of all coefficients.
  Scalar coeff_sum() const;

  // Substitutes the identity for variable i: deletes letter i from every
  // monomial, merges, and renumbers the remaining variables to 1..m-1.
  MultilinearPoly substitute_identity(std::size_t i) const;

  // Renames variables: returns q with q(x_{pi(1)}, ..., x_{pi(m)}) =
  // p(x_1, ..., x_m).
  MultilinearPoly rename_variables(const Perm& pi) const;

  // Exact evaluation on matrices: sum_sigma alpha_sigma X_{sigma(1)} ... X_{sigma(m)}.
  UTMatrix evaluate(std::span<const UTMatrix> inputs) const;
  UTMatrix evaluate(const std::vector<UTMatrix>& inputs) const {
    return evaluate(std::span<const UTMatrix>(inputs));
  }

  // Canonical text form; parse(to_string()) reproduces the polynomial.
  std::string to_string() const;

  bool operator==(const MultilinearPoly& rhs) const {
    return degree_ == rhs.degree_ && field_ == rhs.field_ && terms_ == rhs.terms_;
  }

 private:
  MultilinearPoly(std::size_t degree, const FieldDescriptor& field)
      : degree_(degree), field_(field) {}

  std::size_t degree_;
  FieldDescriptor field_;
  std::map<Perm, Scalar> terms_;
};

}  // namespace utimage
