#include <doctest.h>

#include <random>

#include "utimage/decomp4.hpp"
#include "utimage/linalg.hpp"

using namespace utimage;

namespace {

const FieldDescriptor kQ = FieldDescriptor::rationals();

Scalar q(std::int64_t v) { return Scalar::rational(v); }

ProperDecomposition random_vector(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> pick(-4, 4);
  auto r = [&] { return Scalar::rational(pick(rng)); };
  return ProperDecomposition{r(), r(), r(), r(), r(), r(), r(), r(), r()};
}

bool same(const ProperDecomposition& a, const ProperDecomposition& b) {
  auto av = a.all(), bv = b.all();
  for (std::size_t k = 0; k < 9; ++k) {
    if (!(*av[k] == *bv[k])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("basis elements expand as expected") {
  auto basis = proper_basis(kQ);
  REQUIRE(basis.size() == 9);
  // Fourth element is [x1,x2][x3,x4]: four monomials +1, -1, -1, +1.
  CHECK(basis[3] == MultilinearPoly::parse("[x1,x2]*[x3,x4]", kQ));
  CHECK(basis[3].terms().size() == 4);
  for (const auto& p : basis) {
    for (std::size_t i = 1; i <= 4; ++i) CHECK(p.substitute_identity(i).is_zero());
  }
}

TEST_CASE("basis has rank nine over the 24 monomials") {
  auto basis = proper_basis(kQ);
  std::vector<Perm> perms;
  Perm p = identity_perm(4);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  DenseMatrix rows;
  for (const auto& b : basis) {
    std::vector<Scalar> row;
    for (const auto& perm : perms) row.push_back(b.coefficient(perm));
    rows.push_back(std::move(row));
  }
  CHECK(exact_rank(std::move(rows)) == 9);
}

TEST_CASE("decomposition of basis elements and bracket products") {
  auto d = decompose_proper(MultilinearPoly::parse("[x1,x2]*[x3,x4]", kQ));
  CHECK(d.a1234 == q(1));
  CHECK(d.a1.is_zero());
  CHECK(d.a3412.is_zero());

  auto t = decompose_proper(MultilinearPoly::parse("[[[x2,x1],x3],x4]", kQ));
  CHECK(t.a1 == q(1));
  CHECK(t.a1234.is_zero());

  // A bracket of brackets folds into two ordered products.
  auto h = decompose_proper(MultilinearPoly::parse("[[x4,x1],[x3,x2]]", kQ));
  CHECK(h.a1423 == q(1));
  CHECK(h.a2314 == q(-1));
  CHECK(h.a1.is_zero());
  CHECK(h.a1234.is_zero());
  CHECK(h.a1324.is_zero());
  CHECK(h.a2413.is_zero());
  CHECK(h.a3412.is_zero());
  CHECK(recompose(h, kQ) == MultilinearPoly::parse("[[x4,x1],[x3,x2]]", kQ));
}

TEST_CASE("recompose then decompose is the identity") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 200; ++iter) {
    ProperDecomposition v = random_vector(rng);
    MultilinearPoly p = recompose(v, kQ);
    if (p.is_zero()) continue;
    ProperDecomposition back = decompose_proper(p);
    CHECK(same(v, back));
    CHECK(recompose(back, kQ) == p);
  }
}

TEST_CASE("non-proper quartics are rejected") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<std::int64_t> pick(-4, 4);
  int rejected = 0;
  for (int iter = 0; iter < 50; ++iter) {
    std::map<Perm, Scalar> terms;
    Perm p = identity_perm(4);
    do {
      terms.emplace(p, Scalar::rational(pick(rng)));
    } while (std::next_permutation(p.begin(), p.end()));
    MultilinearPoly poly = MultilinearPoly::from_terms(4, kQ, std::move(terms));
    bool proper = true;
    for (std::size_t i = 1; i <= 4; ++i) proper = proper && poly.substitute_identity(i).is_zero();
    if (proper) continue;  // astronomically unlikely for random coefficients
    ++rejected;
    CHECK_THROWS_AS(decompose_proper(poly), DomainError);
  }
  CHECK(rejected >= 45);
}

TEST_CASE("specialization pairs") {
  // Single nonzero coordinate picks out the first two patterns.
  ProperDecomposition only1324{q(0), q(0), q(0), q(0), q(1), q(0), q(0), q(0), q(0)};
  auto pairs = case2_scan(only1324);
  CHECK(pairs[0].first == q(1));
  CHECK(pairs[0].second == q(0));

  ProperDecomposition only1234{q(0), q(0), q(0), q(1), q(0), q(0), q(0), q(0), q(0)};
  pairs = case2_scan(only1234);
  CHECK(pairs[1].first == q(1));
  CHECK(pairs[1].second == q(0));

  // The symmetric pattern kills every specialization pair.
  ProperDecomposition sym{q(0), q(0), q(0), q(2), q(-2), q(2), q(2), q(-2), q(2)};
  pairs = case2_scan(sym);
  for (const auto& [mu, nu] : pairs) {
    CHECK(mu.is_zero());
    CHECK(nu.is_zero());
  }
}

TEST_CASE("symmetric pattern detection") {
  ProperDecomposition sym{q(0), q(0), q(0), q(1), q(-1), q(1), q(1), q(-1), q(1)};
  auto alpha = is_case1(sym);
  REQUIRE(alpha.has_value());
  CHECK(*alpha == q(1));

  ProperDecomposition not_sym{q(0), q(0), q(0), q(1), q(0), q(0), q(0), q(0), q(0)};
  CHECK_FALSE(is_case1(not_sym).has_value());

  ProperDecomposition zero{q(0), q(0), q(0), q(0), q(0), q(0), q(0), q(0), q(0)};
  auto z = is_case1(zero);
  REQUIRE(z.has_value());
  CHECK(z->is_zero());
}

TEST_CASE("all specialization pairs vanish exactly on the symmetric pattern") {
  // Over the 6-dimensional coefficient space the 12 pair entries are linear
  // forms; their joint kernel must be exactly the line of the symmetric
  // pattern. Check rank 5 and membership both ways.
  DenseMatrix rows;
  for (std::size_t basis_idx = 0; basis_idx < 6; ++basis_idx) {
    Scalar coords[6] = {q(0), q(0), q(0), q(0), q(0), q(0)};
    coords[basis_idx] = q(1);
    ProperDecomposition d{q(0),      q(0),      q(0),      coords[0], coords[1],
                          coords[2], coords[3], coords[4], coords[5]};
    auto pairs = case2_scan(d);
    std::vector<Scalar> column;
    for (const auto& [mu, nu] : pairs) {
      column.push_back(mu);
      column.push_back(nu);
    }
    rows.push_back(std::move(column));
  }
  // rows is the 6x12 transpose of the forms; rank 5 leaves a 1-dim kernel.
  CHECK(exact_rank(rows) == 5);

  std::mt19937_64 rng(33);
  std::uniform_int_distribution<std::int64_t> pick(-6, 6);
  for (int iter = 0; iter < 100; ++iter) {
    Scalar c[6];
    for (auto& v : c) v = Scalar::rational(pick(rng));
    ProperDecomposition d{q(0), q(0), q(0), c[0], c[1], c[2], c[3], c[4], c[5]};
    bool all_zero = true;
    for (const auto& [mu, nu] : case2_scan(d)) {
      all_zero = all_zero && mu.is_zero() && nu.is_zero();
    }
    CHECK(all_zero == is_case1(d).has_value());
  }
}
