#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "utimage/poly.hpp"

namespace utimage {

// Coefficients of a degree-4 multilinear polynomial that vanishes under
// every identity substitution, over the nine-element normal form:
// three left-normed triple brackets and six ordered commutator products.
//   a1    [[[x2,x1],x3],x4]     a1234 [x1,x2][x3,x4]   a2314 [x2,x3][x1,x4]
//   a2    [[[x3,x1],x2],x4]     a1324 [x1,x3][x2,x4]   a2413 [x2,x4][x1,x3]
//   a3    [[[x4,x1],x2],x3]     a1423 [x1,x4][x2,x3]   a3412 [x3,x4][x1,x2]
struct ProperDecomposition {
  Scalar a1, a2, a3;
  Scalar a1234, a1324, a1423, a2314, a2413, a3412;

  std::array<const Scalar*, 9> all() const {
    return {&a1, &a2, &a3, &a1234, &a1324, &a1423, &a2314, &a2413, &a3412};
  }
  static std::array<const char*, 9> names() {
    return {"a1", "a2", "a3", "a1234", "a1324", "a1423", "a2314", "a2413", "a3412"};
  }
};

// Which specialization of a commutator-product quartic collapses it to
// mu [A,B][A,C] + nu [A,C][A,B]: index 1..6 selects where the repeated
// matrix goes, per the table in case2_scan. When mu = 0 the roles of B and C
// are exchanged (swapped = true) so the leading coefficient is nonzero;
// lambda is nu/mu after that normalization.
struct Case2Pattern {
  int pattern = 0;  // 1..6
  Scalar mu, nu;
  Scalar lambda;
  bool swapped = false;
};

// The nine basis polynomials, fully expanded into monomials, in the order of
// ProperDecomposition::names(). Each vanishes under every identity
// substitution; together they have rank 9 over the 24 monomials.
std::vector<MultilinearPoly> proper_basis(const FieldDescriptor& field);

// Exact coordinates of a proper quartic over proper_basis. Throws NotProper
// when some identity substitution is nonzero; throws InconsistentSystem if
// the exact 24x9 solve fails (which would contradict the rank-9 basis).
ProperDecomposition decompose_proper(const MultilinearPoly& p);

// Rebuilds the polynomial from its coordinates.
MultilinearPoly recompose(const ProperDecomposition& d, const FieldDescriptor& field);

// The six specialization coefficient pairs (mu_t, nu_t), t = 1..6, for a
// quartic with a1 = a2 = a3 = 0. Slot t describes the evaluation with the
// repeated matrix A in positions:
//   1:(1,2)  2:(1,3)  3:(1,4)  4:(2,3)  5:(2,4)  6:(3,4)
// and B, C in the remaining slots in order.
std::array<std::pair<Scalar, Scalar>, 6> case2_scan(const ProperDecomposition& d);

// Slot positions of (A, A, B, C) for each pattern: {first A, second A, B, C}.
std::array<std::array<int, 4>, 6> case2_placements();

// Detects the symmetric pattern a1234 = a2314 = a3412 = a1423 = -a1324 =
// -a2413 (requires a1 = a2 = a3 = 0); returns the common value when it holds.
std::optional<Scalar> is_case1(const ProperDecomposition& d);

}  // namespace utimage
