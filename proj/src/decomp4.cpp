#include "utimage/decomp4.hpp"

#include <algorithm>

#include "utimage/linalg.hpp"

namespace utimage {

namespace {

const char* kBasisText[9] = {
    "[[[x2,x1],x3],x4]", "[[[x3,x1],x2],x4]", "[[[x4,x1],x2],x3]",
    "[x1,x2]*[x3,x4]",   "[x1,x3]*[x2,x4]",   "[x1,x4]*[x2,x3]",
    "[x2,x3]*[x1,x4]",   "[x2,x4]*[x1,x3]",   "[x3,x4]*[x1,x2]",
};

std::vector<Perm> all_s4() {
  std::vector<Perm> perms;
  Perm p = identity_perm(4);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

}  // namespace

std::vector<MultilinearPoly> proper_basis(const FieldDescriptor& field) {
  std::vector<MultilinearPoly> basis;
  basis.reserve(9);
  for (const char* text : kBasisText) basis.push_back(MultilinearPoly::parse(text, field));
  return basis;
}

ProperDecomposition decompose_proper(const MultilinearPoly& p) {
  if (p.degree() != 4) fail(Errc::DegreeUnsupported, "decomposition applies to degree 4 only");
  for (std::size_t i = 1; i <= 4; ++i) {
    if (!p.substitute_identity(i).is_zero()) {
      fail(Errc::NotProper, "substituting the identity for x" + std::to_string(i) + " is nonzero");
    }
  }

  const FieldDescriptor& field = p.field();
  const std::vector<Perm> perms = all_s4();
  const std::vector<MultilinearPoly> basis = proper_basis(field);

  DenseMatrix a(perms.size(), std::vector<Scalar>(9, Scalar::zero(field)));
  std::vector<Scalar> b;
  b.reserve(perms.size());
  for (std::size_t row = 0; row < perms.size(); ++row) {
    for (std::size_t col = 0; col < 9; ++col) a[row][col] = basis[col].coefficient(perms[row]);
    b.push_back(p.coefficient(perms[row]));
  }
  auto x = solve_full_column_rank(std::move(a), std::move(b));
  if (!x) {
    fail_internal(InternalErrc::InconsistentSystem,
                  "proper quartic outside the nine-element span");
  }
  auto& v = *x;
  return ProperDecomposition{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]};
}

MultilinearPoly recompose(const ProperDecomposition& d, const FieldDescriptor& field) {
  const std::vector<MultilinearPoly> basis = proper_basis(field);
  const auto coeffs = d.all();
  WordPoly acc(field);
  for (std::size_t k = 0; k < 9; ++k) {
    for (const auto& [perm, c] : basis[k].terms()) acc.add_term(perm, c * (*coeffs[k]));
  }
  return MultilinearPoly::from_words(4, acc);
}

std::array<std::pair<Scalar, Scalar>, 6> case2_scan(const ProperDecomposition& d) {
  return {{
      {d.a1324 + d.a2314, d.a1423 + d.a2413},
      {d.a1234 - d.a2314, d.a3412 - d.a1423},
      {-d.a1234 - d.a2413, -d.a1324 - d.a3412},
      {-d.a1234 - d.a1324, -d.a2413 - d.a3412},
      {d.a1234 - d.a1423, d.a3412 - d.a2314},
      {d.a1324 + d.a1423, d.a2314 + d.a2413},
  }};
}

std::array<std::array<int, 4>, 6> case2_placements() {
  return {{
      {1, 2, 3, 4},
      {1, 3, 2, 4},
      {1, 4, 2, 3},
      {2, 3, 1, 4},
      {2, 4, 1, 3},
      {3, 4, 1, 2},
  }};
}

std::optional<Scalar> is_case1(const ProperDecomposition& d) {
  if (!d.a1.is_zero() || !d.a2.is_zero() || !d.a3.is_zero()) return std::nullopt;
  const Scalar& alpha = d.a1234;
  if (d.a2314 == alpha && d.a3412 == alpha && d.a1423 == alpha && d.a1324 == -alpha &&
      d.a2413 == -alpha) {
    return alpha;
  }
  return std::nullopt;
}

}  // namespace utimage
