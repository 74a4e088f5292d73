#include "utimage/witness.hpp"

namespace utimage {

namespace {

UTMatrix superdiagonal_shift(std::size_t n, const FieldDescriptor& field) {
  UTMatrix b(n, field);
  for (std::size_t k = 1; k + 1 <= n; ++k) b.set(k, k + 1, Scalar::one(field));
  return b;
}

void require_zero_diagonal(const UTMatrix& t) {
  for (std::size_t i = 1; i <= t.dim(); ++i) {
    if (!t.at(i, i).is_zero()) {
      fail(Errc::TargetNotInImage, "target has a nonzero main diagonal");
    }
  }
}

}  // namespace

std::pair<UTMatrix, UTMatrix> witness_commutator(const UTMatrix& t) {
  require_zero_diagonal(t);
  const std::size_t n = t.dim();
  const FieldDescriptor& field = t.field();
  UTMatrix b = superdiagonal_shift(n, field);
  UTMatrix c(n, field);
  for (std::size_t r = 2; r <= n; ++r) {
    for (std::size_t j = r; j <= n; ++j) {
      Scalar acc = Scalar::zero(field);
      // c_{r,j} = sum_{s=1}^{r-1} t_{s, j-(r-1-s)}
      for (std::size_t s = 1; s < r; ++s) {
        std::size_t col = j - (r - 1 - s);
        if (col > s) acc += t.at(s, col);
      }
      c.set(r, j, std::move(acc));
    }
  }
  return {std::move(b), std::move(c)};
}

UTMatrix witness_shift_product(const Scalar& lambda, const UTMatrix& t) {
  if (!t.in_level(1)) {
    fail(Errc::TargetNotInImage, "target has nonzero entries on or next to the main diagonal");
  }
  const std::size_t n = t.dim();
  const FieldDescriptor& field = t.field();
  if (lambda.field() != field) fail(Errc::FieldMismatch, "lambda field differs from target field");
  UTMatrix x(n, field);
  for (std::size_t r = 2; r <= n; ++r) {
    for (std::size_t j = r + 1; j <= n; ++j) {
      // x_{r,j} = sum_{s=1}^{r-1} (-lambda)^{r-1-s} t_{s, j-(r-1-s)}
      Scalar acc = Scalar::zero(field);
      Scalar power = Scalar::one(field);
      for (std::size_t s = r - 1; s >= 1; --s) {
        std::size_t col = j - (r - 1 - s);
        if (col > s + 1) acc += power * t.at(s, col);
        power = power * (-lambda);
      }
      x.set(r, j, std::move(acc));
    }
  }
  return x;
}

namespace {

class Realizer {
 public:
  Realizer(const MultilinearPoly& p, std::size_t n, const UTMatrix& target)
      : p_(p), n_(n), field_(p.field()), target_(target) {}

  std::vector<UTMatrix> dispatch(const CertificateBranch& branch) {
    return std::visit([this](const auto& cert) { return build(cert); }, branch);
  }

 private:
  std::vector<UTMatrix> build(const ZeroPolyCert&) {
    if (!target_.is_zero()) fail(Errc::TargetNotInImage, "zero polynomial only reaches zero");
    return std::vector<UTMatrix>(p_.degree(), UTMatrix::zero(n_, field_));
  }

  std::vector<UTMatrix> build(const CoeffSumCert& cert) {
    std::vector<UTMatrix> inputs(p_.degree() - 1, UTMatrix::identity(n_, field_));
    inputs.push_back(target_.scaled(cert.sum.inverse()));
    return inputs;
  }

  std::vector<UTMatrix> build(const CommutatorCert& cert) {
    auto [b, c] = witness_commutator(target_.scaled(cert.gamma.inverse()));
    return {std::move(b), std::move(c)};
  }

  std::vector<UTMatrix> build(const IdentitySubstitutionCert& cert) {
    WitnessTuple sub = realize_target(cert.reduced, n_, *cert.inner, target_);
    std::vector<UTMatrix> inputs = std::move(sub.inputs);
    inputs.insert(inputs.begin() + long(cert.slot) - 1, UTMatrix::identity(n_, field_));
    return inputs;
  }

  std::vector<UTMatrix> build(const Lie3Cert& cert) {
    // For q = c [x1,[x3,x2]] + c' [x3,[x1,x2]], q(D, D, A) = c [D,[A,D]],
    // entrywise -c a_{ij} (d_jj - d_ii)^2 e_{ij}.
    DiagonalMatrix d = DiagonalMatrix::canonical(n_, field_);
    UTMatrix a(n_, field_);
    for (std::size_t i = 1; i <= n_; ++i) {
      for (std::size_t j = i + 1; j <= n_; ++j) {
        const Scalar& tij = target_.at(i, j);
        if (tij.is_zero()) continue;
        Scalar gap = d.entry(j) - d.entry(i);
        a.set(i, j, -tij / (cert.canonical * gap * gap));
      }
    }
    std::vector<UTMatrix> renamed = {d.to_ut(), d.to_ut(), std::move(a)};
    return unrename(std::move(renamed), cert.renaming);
  }

  std::vector<UTMatrix> build(const TripleBracketCert& cert) {
    // With D in every slot but the bracketed variable, the polynomial
    // collapses to a_slot [[[A,D],D],D] = a_slot sum a_{uv} (d_v - d_u)^3 e_{uv}.
    DiagonalMatrix d = DiagonalMatrix::canonical(n_, field_);
    UTMatrix a(n_, field_);
    for (std::size_t u = 1; u <= n_; ++u) {
      for (std::size_t v = u + 1; v <= n_; ++v) {
        const Scalar& tuv = target_.at(u, v);
        if (tuv.is_zero()) continue;
        Scalar gap = d.entry(v) - d.entry(u);
        a.set(u, v, tuv / (cert.coefficient * gap * gap * gap));
      }
    }
    // Free variable sits in position slot + 1 (x2, x3 or x4).
    std::vector<UTMatrix> inputs(4, d.to_ut());
    inputs[std::size_t(cert.slot)] = std::move(a);
    return inputs;
  }

  std::vector<UTMatrix> build(const Case1Cert& cert) {
    DiagonalMatrix d = DiagonalMatrix::canonical(n_, field_);
    UTMatrix shift = superdiagonal_shift(n_, field_);
    UTMatrix a = target_.scaled(cert.alpha.inverse());
    UTMatrix g = solve_diag_commutator(d, a, CommutatorOrientation::DG);       // [D,G] = A
    UTMatrix x = witness_shift_product(-Scalar::one(field_), g);               // [N,X] = G
    UTMatrix b = solve_diag_commutator(d, shift, CommutatorOrientation::DG);   // [D,B] = N
    UTMatrix c = solve_diag_commutator(d, x, CommutatorOrientation::DG);       // [D,C] = X
    return {d.to_ut(), d.squared().to_ut(), std::move(b), std::move(c)};
  }

  std::vector<UTMatrix> build(const Case2Cert& cert) {
    // p(placement) = mu [A,B][A,C] + nu [A,C][A,B] with A = diag(0..n-1).
    DiagonalMatrix diag = DiagonalMatrix::canonical(n_, field_);
    UTMatrix shift = superdiagonal_shift(n_, field_);
    UTMatrix b0 = solve_diag_commutator(diag, shift, CommutatorOrientation::DG);  // [A,B0] = N
    const Scalar& leading = cert.pattern.swapped ? cert.pattern.nu : cert.pattern.mu;
    UTMatrix x = witness_shift_product(cert.pattern.lambda, target_.scaled(leading.inverse()));
    UTMatrix c0 = solve_diag_commutator(diag, x, CommutatorOrientation::DG);  // [A,C0] = X
    auto slots = case2_placements()[std::size_t(cert.pattern.pattern) - 1];
    std::vector<UTMatrix> inputs(4, diag.to_ut());
    // slots = {first A, second A, B slot, C slot}; the swap exchanges the
    // roles of B and C so the leading specialization coefficient is nonzero.
    inputs[std::size_t(slots[2]) - 1] = cert.pattern.swapped ? std::move(c0) : b0;
    inputs[std::size_t(slots[3]) - 1] = cert.pattern.swapped ? std::move(b0) : c0;
    return unrename(std::move(inputs), cert.renaming);
  }

  // Inputs built for q = rename(p, pi) map back to p via Z_i = Y_{pi^{-1}(i)}.
  std::vector<UTMatrix> unrename(std::vector<UTMatrix> inputs, const Perm& pi) {
    Perm inv = inverse_perm(pi);
    std::vector<UTMatrix> out;
    out.reserve(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i) out.push_back(inputs[inv[i] - 1]);
    return out;
  }

  const MultilinearPoly& p_;
  std::size_t n_;
  FieldDescriptor field_;
  const UTMatrix& target_;
};

}  // namespace

WitnessTuple realize_target(const MultilinearPoly& p, std::size_t n,
                            const ClassificationResult& classification, const UTMatrix& target) {
  if (target.dim() != n) fail(Errc::DimensionMismatch, "target dimension differs from n");
  if (target.field() != p.field()) fail(Errc::FieldMismatch, "target field differs from polynomial");
  if (!classification.image.contains(target)) {
    fail(Errc::TargetNotInImage,
         "target lies outside " + (classification.image.zero
                                       ? std::string("{0}")
                                       : TriangularSubspace{n, classification.image.level}.to_string()));
  }
  std::vector<UTMatrix> inputs;
  if (target.is_zero()) {
    // Canonical witness for the zero target, in every branch.
    inputs.assign(p.degree(), UTMatrix::zero(n, p.field()));
  } else {
    Realizer realizer(p, n, target);
    inputs = realizer.dispatch(classification.certificate.branch);
  }
  if (p.evaluate(inputs) != target) {
    fail_internal(InternalErrc::VerificationFailure,
                  "constructed inputs do not evaluate to the target");
  }
  return WitnessTuple{std::move(inputs), target, true};
}

}  // namespace utimage
