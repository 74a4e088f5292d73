#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "utimage/decomp4.hpp"
#include "utimage/poly.hpp"

namespace utimage {

// The image of a degree <= 4 multilinear polynomial on UT_n: either {0} or
// one of the subspaces UT_n^(k), k in {-1, 0, 1} (level -1 is all of UT_n).
struct ImageClass {
  bool zero = false;
  long level = 0;  // meaningful when !zero

  static ImageClass zero_image() { return {true, 0}; }
  static ImageClass of_level(long k) { return {false, k}; }

  bool operator==(const ImageClass&) const = default;

  // "zero", "full", "ut0" or "ut1".
  std::string name() const;
  // Membership of a matrix in the classified subspace.
  bool contains(const UTMatrix& m) const { return zero ? m.is_zero() : m.in_level(level); }
};

struct ClassificationResult;

// Proof branches. Each carries every scalar the witness construction needs.
struct ZeroPolyCert {};
struct CoeffSumCert {
  Scalar sum;  // nonzero coefficient sum
};
struct CommutatorCert {
  Scalar gamma;  // degree 2, zero sum: p = gamma (x1 x2 - x2 x1)
};
struct IdentitySubstitutionCert {
  std::size_t slot = 0;                         // variable replaced by the identity
  MultilinearPoly reduced;                      // the nonzero degree-(m-1) reduction
  std::shared_ptr<const ClassificationResult> inner;  // classification of `reduced`
};
struct Lie3Cert {
  Perm renaming;    // applied before normal form; identity when unused
  Scalar canonical;  // nonzero coefficient of [x1,[x3,x2]] after renaming
  Scalar other;      // coefficient of [x3,[x1,x2]] after renaming
};
struct TripleBracketCert {
  int slot = 0;       // 1..3: which triple-bracket coefficient is nonzero
  Scalar coefficient;  // its value
};
struct Case1Cert {
  Scalar alpha;  // common value of the symmetric coefficient pattern
};
struct Case2Cert {
  Case2Pattern pattern;
  Perm renaming;  // kept for schema stability; identity in this pipeline
};

using CertificateBranch =
    std::variant<ZeroPolyCert, CoeffSumCert, CommutatorCert, IdentitySubstitutionCert, Lie3Cert,
                 TripleBracketCert, Case1Cert, Case2Cert>;

struct Certificate {
  CertificateBranch branch;
  // Present for proper quartics: the nine-coefficient normal form.
  std::optional<ProperDecomposition> decomposition;

  const char* branch_name() const;
};

struct ClassificationResult {
  ImageClass image;
  Certificate certificate;
};

// Decides the image of p on UT_n and returns the proof branch that drives
// witness construction. Degree 3 requires a field with at least n elements;
// degree 4 requires characteristic zero (both enforced, HypothesisViolation
// otherwise). Degrees above 4 are DegreeUnsupported.
ClassificationResult classify_image(const MultilinearPoly& p, std::size_t n);

}  // namespace utimage
