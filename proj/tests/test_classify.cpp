#include <doctest.h>

#include <random>

#include "utimage/classify.hpp"
#include "utimage/oracle.hpp"

using namespace utimage;

namespace {

const FieldDescriptor kQ = FieldDescriptor::rationals();

const char* kSymmetricQuartic =
    "[x1,x2]*[x3,x4] + [x3,x4]*[x1,x2] + [x2,x3]*[x1,x4] + [x1,x4]*[x2,x3]"
    " - [x1,x3]*[x2,x4] - [x2,x4]*[x1,x3]";

}  // namespace

TEST_CASE("headline classifications") {
  auto full = classify_image(MultilinearPoly::parse("x1*x2 + x2*x1", kQ), 3);
  CHECK(full.image == ImageClass::of_level(-1));
  CHECK(std::holds_alternative<CoeffSumCert>(full.certificate.branch));

  auto ut0 = classify_image(MultilinearPoly::parse("x1*x2 - x2*x1", kQ), 4);
  CHECK(ut0.image == ImageClass::of_level(0));
  CHECK(std::get<CommutatorCert>(ut0.certificate.branch).gamma == Scalar::rational(1));

  auto deg3 = classify_image(MultilinearPoly::parse("x1*x2*x3 - x3*x2*x1", kQ), 3);
  CHECK(deg3.image == ImageClass::of_level(0));
  auto& sub = std::get<IdentitySubstitutionCert>(deg3.certificate.branch);
  CHECK(sub.slot == 1);
  CHECK(sub.reduced == MultilinearPoly::parse("x1*x2 - x2*x1", kQ));

  auto case2 = classify_image(MultilinearPoly::parse("[x1,x2]*[x3,x4]", kQ), 3);
  CHECK(case2.image == ImageClass::of_level(1));
  auto& c2 = std::get<Case2Cert>(case2.certificate.branch);
  CHECK(c2.pattern.pattern == 2);
  CHECK(c2.pattern.mu == Scalar::rational(1));
  CHECK(c2.pattern.nu == Scalar::rational(0));

  auto case1 = classify_image(MultilinearPoly::parse(kSymmetricQuartic, kQ), 3);
  CHECK(case1.image == ImageClass::of_level(1));
  CHECK(std::get<Case1Cert>(case1.certificate.branch).alpha == Scalar::rational(1));

  auto zero = classify_image(MultilinearPoly::parse("0", kQ, 2), 3);
  CHECK(zero.image.zero);
}

TEST_CASE("degree-3 normal form branch") {
  MultilinearPoly p = MultilinearPoly::parse("[x1,[x3,x2]] + 2*[x3,[x1,x2]]", kQ);
  for (std::size_t i = 1; i <= 3; ++i) CHECK(p.substitute_identity(i).is_zero());
  auto result = classify_image(p, 4);
  CHECK(result.image == ImageClass::of_level(0));
  auto& cert = std::get<Lie3Cert>(result.certificate.branch);
  CHECK(cert.renaming == identity_perm(3));
  CHECK(cert.canonical == Scalar::rational(1));
  CHECK(cert.other == Scalar::rational(2));

  // Canonical coefficient zero: classification renames x1 <-> x3.
  MultilinearPoly q = MultilinearPoly::parse("[x3,[x1,x2]]", kQ);
  auto renamed = classify_image(q, 4);
  auto& rcert = std::get<Lie3Cert>(renamed.certificate.branch);
  CHECK(rcert.renaming == Perm{3, 2, 1});
  CHECK(rcert.canonical == Scalar::rational(1));
}

TEST_CASE("degree-4 triple bracket branch") {
  auto result = classify_image(MultilinearPoly::parse("3*[[[x3,x1],x2],x4]", kQ), 3);
  CHECK(result.image == ImageClass::of_level(0));
  auto& cert = std::get<TripleBracketCert>(result.certificate.branch);
  CHECK(cert.slot == 2);
  CHECK(cert.coefficient == Scalar::rational(3));
  REQUIRE(result.certificate.decomposition.has_value());
  CHECK(result.certificate.decomposition->a2 == Scalar::rational(3));
}

TEST_CASE("degree-4 identity substitution recursion") {
  MultilinearPoly p = MultilinearPoly::parse("x1*x2*x3*x4 - x4*x3*x2*x1", kQ);
  auto result = classify_image(p, 3);
  CHECK(result.image == ImageClass::of_level(0));
  auto& cert = std::get<IdentitySubstitutionCert>(result.certificate.branch);
  CHECK(cert.reduced.degree() == 3);
  CHECK(cert.inner->image == ImageClass::of_level(0));
}

TEST_CASE("hypothesis gates") {
  auto gf2 = FieldDescriptor::prime_field(2);
  MultilinearPoly deg3 = MultilinearPoly::parse("x1*x2*x3 - x3*x2*x1", gf2);
  CHECK_THROWS_AS(classify_image(deg3, 3), DomainError);   // needs at least 3 elements
  CHECK(classify_image(deg3, 2).image == ImageClass::of_level(0));

  auto gf5 = FieldDescriptor::prime_field(5);
  MultilinearPoly deg4 = MultilinearPoly::parse("[x1,x2]*[x3,x4]", gf5);
  CHECK_THROWS_AS(classify_image(deg4, 2), DomainError);   // needs characteristic zero

  MultilinearPoly deg5 = MultilinearPoly::parse("x1*x2*x3*x4*x5", kQ);
  CHECK_THROWS_AS(classify_image(deg5, 2), DomainError);   // degree out of range
}

TEST_CASE("classified levels stay within the degree bounds") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::int64_t> pick(-3, 3);
  for (int iter = 0; iter < 120; ++iter) {
    std::size_t m = 1 + iter % 4;
    std::map<Perm, Scalar> terms;
    Perm perm = identity_perm(m);
    do {
      terms.emplace(perm, Scalar::rational(pick(rng)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    MultilinearPoly p = MultilinearPoly::from_terms(m, kQ, std::move(terms));
    auto result = classify_image(p, 4);
    if (result.image.zero) {
      CHECK(p.is_zero());
    } else if (m <= 3) {
      CHECK((result.image.level == -1 || result.image.level == 0));
    } else {
      CHECK(result.image.level <= 1);
    }
  }
}

TEST_CASE("random evaluations land inside the classified subspace") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::int64_t> pick(-3, 3);
  std::uint64_t state = 4242;
  for (int iter = 0; iter < 25; ++iter) {
    std::size_t m = 2 + iter % 3;
    std::map<Perm, Scalar> terms;
    Perm perm = identity_perm(m);
    do {
      terms.emplace(perm, Scalar::rational(pick(rng)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    MultilinearPoly p = MultilinearPoly::from_terms(m, kQ, std::move(terms));
    auto result = classify_image(p, 4);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<UTMatrix> inputs;
      for (std::size_t k = 0; k < m; ++k) inputs.push_back(random_ut_matrix(4, kQ, state));
      CHECK(result.image.contains(p.evaluate(inputs)));
    }
  }
}
