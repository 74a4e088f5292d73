#include "utimage/classify.hpp"

namespace utimage {

std::string ImageClass::name() const {
  if (zero) return "zero";
  if (level <= -1) return "full";
  return "ut" + std::to_string(level);
}

const char* Certificate::branch_name() const {
  struct Namer {
    const char* operator()(const ZeroPolyCert&) const { return "zero_poly"; }
    const char* operator()(const CoeffSumCert&) const { return "coeff_sum_nonzero"; }
    const char* operator()(const CommutatorCert&) const { return "commutator"; }
    const char* operator()(const IdentitySubstitutionCert&) const { return "identity_substitution"; }
    const char* operator()(const Lie3Cert&) const { return "lie3"; }
    const char* operator()(const TripleBracketCert&) const { return "triple_bracket"; }
    const char* operator()(const Case1Cert&) const { return "case1"; }
    const char* operator()(const Case2Cert&) const { return "case2"; }
  };
  return std::visit(Namer{}, branch);
}

namespace {

// Coefficients of a degree-3 polynomial in listing order
// x1x2x3, x1x3x2, x2x1x3, x2x3x1, x3x1x2, x3x2x1.
std::array<Scalar, 6> degree3_coefficients(const MultilinearPoly& p) {
  return {p.coefficient({1, 2, 3}), p.coefficient({1, 3, 2}), p.coefficient({2, 1, 3}),
          p.coefficient({2, 3, 1}), p.coefficient({3, 1, 2}), p.coefficient({3, 2, 1})};
}

ClassificationResult classify_degree3_reduced(const MultilinearPoly& p, std::size_t n);

// Degrees 3 and 4 with zero coefficient sum: peel one identity substitution
// if any is nonzero.
std::optional<ClassificationResult> try_identity_substitution(const MultilinearPoly& p,
                                                              std::size_t n) {
  for (std::size_t i = 1; i <= p.degree(); ++i) {
    MultilinearPoly reduced = p.substitute_identity(i);
    if (reduced.is_zero()) continue;
    auto inner = std::make_shared<ClassificationResult>(classify_image(reduced, n));
    if (inner->image.zero || inner->image.level != 0) {
      fail_internal(InternalErrc::InternalInconsistency,
                    "identity reduction of a zero-sum polynomial must have image level 0");
    }
    Certificate cert{IdentitySubstitutionCert{i, std::move(reduced), std::move(inner)},
                     std::nullopt};
    return ClassificationResult{ImageClass::of_level(0), std::move(cert)};
  }
  return std::nullopt;
}

ClassificationResult classify_degree3_reduced(const MultilinearPoly& p, std::size_t n) {
  // All three identity substitutions vanish; the coefficients must satisfy
  // a3 = a5, a2 = a4, a1 = -a2 - a3, collapsing p to
  // a2 [x1,[x3,x2]] + a3 [x3,[x1,x2]].
  auto a = degree3_coefficients(p);
  if (!(a[2] == a[4] && a[1] == a[3] && a[0] == -a[1] - a[2])) {
    fail_internal(InternalErrc::InternalInconsistency,
                  "degree-3 coefficient relations violated after identity substitutions vanished");
  }
  const Scalar& alpha2 = a[1];
  const Scalar& alpha3 = a[2];
  if (alpha2.is_zero() && alpha3.is_zero()) {
    fail_internal(InternalErrc::InternalInconsistency,
                  "nonzero degree-3 polynomial with zero normal form");
  }
  Perm renaming = identity_perm(3);
  Scalar canonical = alpha2, other = alpha3;
  if (alpha2.is_zero()) {
    renaming = {3, 2, 1};  // swap x1 and x3: the two bracket coefficients trade places
    canonical = alpha3;
    other = alpha2;
  }
  Certificate cert{Lie3Cert{std::move(renaming), canonical, other}, std::nullopt};
  (void)n;
  return ClassificationResult{ImageClass::of_level(0), std::move(cert)};
}

ClassificationResult classify_degree4_proper(const MultilinearPoly& p, std::size_t n) {
  ProperDecomposition d = decompose_proper(p);

  const Scalar* triples[3] = {&d.a1, &d.a2, &d.a3};
  for (int slot = 1; slot <= 3; ++slot) {
    if (!triples[slot - 1]->is_zero()) {
      Certificate cert{TripleBracketCert{slot, *triples[slot - 1]}, d};
      return ClassificationResult{ImageClass::of_level(0), std::move(cert)};
    }
  }

  if (auto alpha = is_case1(d)) {
    if (alpha->is_zero()) {
      // All nine coefficients vanished, so the polynomial itself is zero;
      // the zero test at the top should have caught it.
      fail_internal(InternalErrc::InternalInconsistency,
                    "nonzero proper quartic decomposed to the zero vector");
    }
    Certificate cert{Case1Cert{*alpha}, d};
    return ClassificationResult{ImageClass::of_level(1), std::move(cert)};
  }

  auto pairs = case2_scan(d);
  for (int t = 1; t <= 6; ++t) {
    const auto& [mu, nu] = pairs[t - 1];
    if (mu.is_zero() && nu.is_zero()) continue;
    Case2Pattern pat;
    pat.pattern = t;
    pat.mu = mu;
    pat.nu = nu;
    pat.swapped = mu.is_zero();
    pat.lambda = pat.swapped ? Scalar::zero(p.field()) : nu / mu;
    Certificate cert{Case2Cert{std::move(pat), identity_perm(4)}, d};
    (void)n;
    return ClassificationResult{ImageClass::of_level(1), std::move(cert)};
  }

  fail_internal(InternalErrc::InternalInconsistency,
                "proper quartic with no triple bracket, no symmetric pattern and no "
                "specialization pair; the coefficient dichotomy is violated");
}

}  // namespace

ClassificationResult classify_image(const MultilinearPoly& p, std::size_t n) {
  if (n < 1) fail(Errc::IndexOutOfRange, "dimension must be positive");
  const std::size_t m = p.degree();
  if (m < 1 || m > 4) {
    fail(Errc::DegreeUnsupported,
         "classification covers degrees 1..4, got " + std::to_string(m));
  }
  if (m == 3 && !p.field().has_at_least(n)) {
    fail(Errc::HypothesisViolation, "degree 3 over " + p.field().to_string() +
                                        " needs a field with at least " + std::to_string(n) +
                                        " elements");
  }
  if (m == 4 && !p.field().is_rationals()) {
    fail(Errc::HypothesisViolation, "degree 4 requires a field of characteristic zero");
  }

  if (p.is_zero()) {
    return ClassificationResult{ImageClass::zero_image(), Certificate{ZeroPolyCert{}, std::nullopt}};
  }
  Scalar sum = p.coeff_sum();
  if (!sum.is_zero()) {
    return ClassificationResult{ImageClass::of_level(-1),
                                Certificate{CoeffSumCert{std::move(sum)}, std::nullopt}};
  }
  // From here on the coefficient sum vanishes, so every evaluation has zero
  // main diagonal and the image sits inside UT_n^(0).
  switch (m) {
    case 1:
      // A nonzero degree-1 polynomial has nonzero coefficient sum.
      fail_internal(InternalErrc::InternalInconsistency, "degree-1 polynomial with zero sum");
    case 2: {
      Scalar gamma = p.coefficient({1, 2});
      if (gamma.is_zero()) {
        fail_internal(InternalErrc::InternalInconsistency,
                      "zero-sum degree-2 polynomial with zero leading coefficient");
      }
      return ClassificationResult{ImageClass::of_level(0),
                                  Certificate{CommutatorCert{std::move(gamma)}, std::nullopt}};
    }
    case 3: {
      if (auto result = try_identity_substitution(p, n)) return std::move(*result);
      return classify_degree3_reduced(p, n);
    }
    default: {
      if (auto result = try_identity_substitution(p, n)) return std::move(*result);
      return classify_degree4_proper(p, n);
    }
  }
}

}  // namespace utimage
