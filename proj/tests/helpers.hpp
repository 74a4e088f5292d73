#pragma once

// Shared test utilities: random generators and the constructive checks for
// scan hits (index shifting and terminal-column extension).

#include <random>
#include <vector>

#include "utimage/poly.hpp"
#include "utimage/span.hpp"

namespace utimage::testing {

inline MultilinearPoly random_poly(std::size_t m, const FieldDescriptor& field,
                                   std::mt19937_64& rng, std::int64_t lo = -4,
                                   std::int64_t hi = 4) {
  std::map<Perm, Scalar> terms;
  Perm p = identity_perm(m);
  std::uniform_int_distribution<std::int64_t> pick(lo, hi);
  do {
    Scalar c = field.is_prime_field()
                   ? Scalar::of_int(field, std::int64_t(rng() % field.modulus))
                   : Scalar::rational(pick(rng));
    terms.emplace(p, c);
  } while (std::next_permutation(p.begin(), p.end()));
  return MultilinearPoly::from_terms(m, field, std::move(terms));
}

inline UTMatrix units_to_matrix_eval(const MultilinearPoly& p, const std::vector<UnitPos>& units,
                                     std::size_t n) {
  std::vector<UTMatrix> inputs;
  inputs.reserve(units.size());
  for (const UnitPos& u : units) inputs.push_back(UTMatrix::unit(n, u.row, u.col, p.field()));
  return p.evaluate(inputs);
}

// Sliding a hit along its diagonal: shifting every unit index by 1 - i moves
// the evaluation from coeff * e_{i,j} to coeff * e_{1, j-i+1}. Returns true
// when the shifted tuple evaluates exactly as predicted.
inline bool check_shift_to_first_row(const MultilinearPoly& p, const ScanHit& hit, std::size_t n) {
  const long offset = 1 - long(hit.position.row);
  std::vector<UnitPos> shifted;
  for (const UnitPos& u : hit.units) {
    shifted.push_back({std::uint16_t(long(u.row) + offset), std::uint16_t(long(u.col) + offset)});
  }
  UTMatrix expected = UTMatrix::unit(n, 1, std::size_t(long(hit.position.col) + offset), p.field())
                          .scaled(hit.coeff);
  return units_to_matrix_eval(p, shifted, n) == expected;
}

// Extending a hit one column to the right: e_{i,j} in the image forces
// e_{i,j+1} into the image. For i < j, remapping index j to j+1 across the
// whole tuple preserves every chain, so the new tuple evaluates to
// coeff * e_{i,j+1} exactly. For a diagonal hit (i = j, all units e_{ii})
// some single slot replaced by e_{i,i+1} evaluates to a nonzero multiple of
// e_{i,i+1}, and those multiples sum to coeff across the slots.
inline bool check_column_extension(const MultilinearPoly& p, const ScanHit& hit, std::size_t n) {
  const std::uint16_t i = hit.position.row;
  const std::uint16_t j = hit.position.col;
  if (j >= n) return true;  // nothing to extend into
  if (i < j) {
    std::vector<UnitPos> extended;
    for (const UnitPos& u : hit.units) {
      extended.push_back({std::uint16_t(u.row == j ? j + 1 : u.row),
                          std::uint16_t(u.col == j ? j + 1 : u.col)});
    }
    UTMatrix expected = UTMatrix::unit(n, i, j + 1, p.field()).scaled(hit.coeff);
    return units_to_matrix_eval(p, extended, n) == expected;
  }
  // Diagonal hit: every unit is e_{ii}; try each slot in turn.
  Scalar total = Scalar::zero(p.field());
  bool found = false;
  for (std::size_t slot = 0; slot < hit.units.size(); ++slot) {
    std::vector<UnitPos> tuple = hit.units;
    tuple[slot] = {i, std::uint16_t(i + 1)};
    UTMatrix value = units_to_matrix_eval(p, tuple, n);
    if (value.is_zero()) continue;
    const Scalar& c = value.at(i, i + 1);
    if (value != UTMatrix::unit(n, i, i + 1, p.field()).scaled(c)) return false;
    total += c;
    found = true;
  }
  return found && total == hit.coeff;
}

}  // namespace utimage::testing
