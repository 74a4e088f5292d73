#pragma once

#include <utility>
#include <vector>

#include "utimage/classify.hpp"

namespace utimage {

// Concrete inputs realizing a target: evaluate(p, inputs) == target, checked
// by direct evaluation before the tuple is returned.
struct WitnessTuple {
  std::vector<UTMatrix> inputs;
  UTMatrix target;
  bool verified = false;
};

// Solves B C - C B = T for T with zero main diagonal: B is the superdiagonal
// shift sum_{k<n} e_{k,k+1}; C has zero first row and telescoping entries
// c_{i+1,j} = t_{i,j} + t_{i-1,j-1} + ... + t_{1,j-i+1}.
std::pair<UTMatrix, UTMatrix> witness_commutator(const UTMatrix& t);

// Solves N X + lambda X N = T for T in UT^(1), N the superdiagonal shift:
// X has zero first row and alternating entries
// x_{i+1,j} = t_{i,j} - lambda t_{i-1,j-1} + ... + (-lambda)^{i-1} t_{1,j-i+1}.
// lambda = -1 solves [N, X] = T.
UTMatrix witness_shift_product(const Scalar& lambda, const UTMatrix& t);

// Builds inputs realizing `target` from the classification certificate.
// Throws TargetNotInImage when the target lies outside the classified
// subspace and VerificationFailure if the construction fails to evaluate
// back to the target (an internal bug, never expected).
WitnessTuple realize_target(const MultilinearPoly& p, std::size_t n,
                            const ClassificationResult& classification, const UTMatrix& target);

}  // namespace utimage
