// Acceptance suite: end-to-end checks of the classification, witness, span
// and oracle pipelines, one criterion per run line. Every comparison is
// exact; the runtime bounds are enforced.
//
// Usage: acceptance [--criterion N] [--list]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "utimage/decomp4.hpp"
#include "utimage/linalg.hpp"
#include "utimage/oracle.hpp"
#include "utimage/span.hpp"
#include "utimage/witness.hpp"

using namespace utimage;
using namespace utimage::testing;

namespace {

const FieldDescriptor kQ = FieldDescriptor::rationals();

struct CriterionFailure {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw CriterionFailure{message};
}

const char* kSymmetricQuartic =
    "[x1,x2]*[x3,x4] + [x3,x4]*[x1,x2] + [x2,x3]*[x1,x4] + [x1,x4]*[x2,x3]"
    " - [x1,x3]*[x2,x4] - [x2,x4]*[x1,x3]";

// ---------------------------------------------------------------------------
// 1. Degree-2 classification and witness round trip over the rationals.

void criterion1() {
  std::mt19937_64 rng(1001);
  std::uint64_t state = 9001;
  for (int iter = 0; iter < 50; ++iter) {
    MultilinearPoly p = random_poly(2, kQ, rng, -5, 5);
    for (std::size_t n = 2; n <= 5; ++n) {
      ClassificationResult cls = classify_image(p, n);
      require(cls.image.zero || cls.image.level == -1 || cls.image.level == 0,
              "degree-2 class must be {0}, UT^(0) or UT_n");
      for (int t = 0; t < 100; ++t) {
        UTMatrix target = random_in_class(cls.image, n, kQ, state);
        WitnessTuple w = realize_target(p, n, cls, target);
        require(w.verified && p.evaluate(w.inputs) == target,
                "witness must evaluate back to the target exactly");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 2. Degree-2 oracle equality over small prime fields.

void criterion2() {
  std::mt19937_64 rng(1002);
  struct Config {
    std::uint64_t p;
    std::size_t n;
  } configs[] = {{2, 2}, {3, 2}, {3, 3}};
  for (const auto& cfg : configs) {
    FieldDescriptor field = FieldDescriptor::prime_field(cfg.p);
    for (int iter = 0; iter < 20; ++iter) {
      MultilinearPoly p = random_poly(2, field, rng);
      CompareReport report = compare_with_classification(p, cfg.n, 1'000'000'000);
      require(report.equal, "degree-2 image must equal the classified subspace over gf:" +
                                std::to_string(cfg.p) + " at n=" + std::to_string(cfg.n));
    }
  }
}

// ---------------------------------------------------------------------------
// 3. Degree-3 oracle equality (field with at least n elements).

void criterion3() {
  std::mt19937_64 rng(1003);
  struct Config {
    std::uint64_t p;
    std::size_t n;
  } configs[] = {{2, 2}, {3, 2}, {3, 3}};
  for (const auto& cfg : configs) {
    FieldDescriptor field = FieldDescriptor::prime_field(cfg.p);
    for (int iter = 0; iter < 10; ++iter) {
      MultilinearPoly p = random_poly(3, field, rng);
      CompareReport report = compare_with_classification(p, cfg.n, 1'000'000'000);
      require(report.equal, "degree-3 image must equal the classified subspace over gf:" +
                                std::to_string(cfg.p) + " at n=" + std::to_string(cfg.n));
    }
  }
}

// ---------------------------------------------------------------------------
// 4. Degree-4 classification over the rationals: round trips, containment
//    and the two case identities.

ProperDecomposition random_nine_vector(std::mt19937_64& rng, bool proper_part_only) {
  std::uniform_int_distribution<std::int64_t> pick(-4, 4);
  auto r = [&] { return Scalar::rational(pick(rng)); };
  Scalar z = Scalar::zero(kQ);
  if (proper_part_only) return ProperDecomposition{z, z, z, r(), r(), r(), r(), r(), r()};
  return ProperDecomposition{r(), r(), r(), r(), r(), r(), r(), r(), r()};
}

void verify_specializations_symbolically(const ProperDecomposition& d) {
  // Letters: 1 = A, 2 = B, 3 = C. Each pattern places A twice; expanding
  // the placed quartic word-by-word must reproduce
  // mu [A,B][A,C] + nu [A,C][A,B].
  auto letter = [](const FieldDescriptor& f, std::uint8_t v) { return WordPoly::letter(f, v); };
  const WordPoly a = letter(kQ, 1), b = letter(kQ, 2), c = letter(kQ, 3);
  auto pairs = case2_scan(d);
  auto placements = case2_placements();
  struct Product {
    int i, j, k, l;
    const Scalar& coeff;
  };
  const Product products[6] = {{1, 2, 3, 4, d.a1234}, {1, 3, 2, 4, d.a1324},
                               {1, 4, 2, 3, d.a1423}, {2, 3, 1, 4, d.a2314},
                               {2, 4, 1, 3, d.a2413}, {3, 4, 1, 2, d.a3412}};
  for (int pat = 1; pat <= 6; ++pat) {
    const auto& slots = placements[pat - 1];
    auto to_letter = [&](int var) -> const WordPoly& {
      if (var == slots[0] || var == slots[1]) return a;
      if (var == slots[2]) return b;
      return c;
    };
    WordPoly lhs(kQ);
    for (const Product& pr : products) {
      WordPoly term = bracket(to_letter(pr.i), to_letter(pr.j)) *
                      bracket(to_letter(pr.k), to_letter(pr.l));
      lhs = lhs + term.scaled(pr.coeff);
    }
    WordPoly rhs = (bracket(a, b) * bracket(a, c)).scaled(pairs[pat - 1].first) +
                   (bracket(a, c) * bracket(a, b)).scaled(pairs[pat - 1].second);
    require(lhs == rhs, "specialization pair " + std::to_string(pat) +
                            " must match the symbolic expansion");
  }
}

void criterion4() {
  std::mt19937_64 rng(1004);
  std::uint64_t state = 9004;

  // (a) + (b): random proper quartics, witness round trips and containment.
  for (int iter = 0; iter < 100; ++iter) {
    ProperDecomposition v = random_nine_vector(rng, false);
    MultilinearPoly p = recompose(v, kQ);
    if (p.is_zero()) continue;
    for (std::size_t n : {std::size_t(3), std::size_t(4), std::size_t(5)}) {
      ClassificationResult cls = classify_image(p, n);
      require(!cls.image.zero, "nonzero proper quartic cannot have zero image");
      for (int t = 0; t < 20; ++t) {
        UTMatrix target = random_in_class(cls.image, n, kQ, state);
        WitnessTuple w = realize_target(p, n, cls, target);
        require(w.verified && p.evaluate(w.inputs) == target,
                "degree-4 witness must evaluate back to the target exactly");
      }
    }
    ContainmentReport report = sample_containment(p, 4, 1000, 9100 + std::uint64_t(iter));
    require(report.violation_count == 0, "containment sampling found a violation");
  }

  // (c) The symmetric-pattern identity p(D, D^2, B, C) = [D,[[D,B],[D,C]]].
  MultilinearPoly sym = MultilinearPoly::parse(kSymmetricQuartic, kQ);
  for (int iter = 0; iter < 100; ++iter) {
    std::size_t n = 2 + iter % 4;  // up to n = 5
    DiagonalMatrix d = DiagonalMatrix::canonical(n, kQ);
    UTMatrix b = random_ut_matrix(n, kQ, state);
    UTMatrix c = random_ut_matrix(n, kQ, state);
    UTMatrix lhs = sym.evaluate({d.to_ut(), d.squared().to_ut(), b, c});
    UTMatrix rhs =
        commutator(d.to_ut(), commutator(commutator(d.to_ut(), b), commutator(d.to_ut(), c)));
    require(lhs == rhs, "substituting (D, D^2, B, C) must reduce to the nested bracket");
  }

  // (d) The six specialization formulas, symbolically.
  for (int iter = 0; iter < 100; ++iter) {
    verify_specializations_symbolically(random_nine_vector(rng, true));
  }
}

// ---------------------------------------------------------------------------
// 5. Decomposition exactness.

void criterion5() {
  auto basis = proper_basis(kQ);
  std::vector<Perm> perms;
  Perm perm = identity_perm(4);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  DenseMatrix rows;
  for (const auto& bp : basis) {
    std::vector<Scalar> row;
    for (const auto& sigma : perms) row.push_back(bp.coefficient(sigma));
    rows.push_back(std::move(row));
  }
  require(exact_rank(std::move(rows)) == 9, "the nine basis quartics must have rank 9");

  std::mt19937_64 rng(1005);
  for (int iter = 0; iter < 200; ++iter) {
    ProperDecomposition v = random_nine_vector(rng, false);
    MultilinearPoly p = recompose(v, kQ);
    if (p.is_zero()) continue;
    ProperDecomposition back = decompose_proper(p);
    auto lhs = v.all(), rhs = back.all();
    for (std::size_t k = 0; k < 9; ++k) {
      require(*lhs[k] == *rhs[k], "decompose(recompose(v)) must reproduce v");
    }
  }

  std::uniform_int_distribution<std::int64_t> pick(-4, 4);
  int rejected = 0;
  for (int iter = 0; iter < 50 || rejected < 50; ++iter) {
    require(iter < 200, "could not draw 50 non-proper quartics");
    std::map<Perm, Scalar> terms;
    Perm sigma = identity_perm(4);
    do {
      terms.emplace(sigma, Scalar::rational(pick(rng)));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    MultilinearPoly p = MultilinearPoly::from_terms(4, kQ, std::move(terms));
    bool proper = true;
    for (std::size_t i = 1; i <= 4; ++i) proper = proper && p.substitute_identity(i).is_zero();
    if (proper) continue;
    ++rejected;
    try {
      decompose_proper(p);
      require(false, "a non-proper quartic must be rejected");
    } catch (const DomainError& e) {
      require(e.code() == Errc::NotProper, "rejection must carry NotProper");
    }
  }
}

// ---------------------------------------------------------------------------
// 6. Span proposition: formula level vs brute-force linear hull over GF(5),
//    the shift/extension constructions on every hit, and the reordered
//    unit-product law.

void criterion6() {
  FieldDescriptor gf5 = FieldDescriptor::prime_field(5);
  std::mt19937_64 rng(1006);
  std::uint64_t state = 9006;
  const std::size_t n = 3;

  for (int iter = 0; iter < 30; ++iter) {
    std::size_t m = 1 + iter % 4;
    MultilinearPoly p = random_poly(m, gf5, rng);
    SpanResult span = span_image(p, n);

    std::vector<ScanHit> hits = unit_eval_scan(p, n);
    for (const ScanHit& hit : hits) {
      require(check_shift_to_first_row(p, hit, n), "diagonal shift construction failed on a hit");
      require(check_column_extension(p, hit, n), "column extension construction failed on a hit");
    }

    // Brute-force hull: all unit-tuple values (they span the image's hull by
    // multilinearity) plus random containment samples.
    std::vector<UTMatrix> values;
    for (const ScanHit& hit : hits) {
      values.push_back(UTMatrix::unit(n, hit.position.row, hit.position.col, gf5).scaled(hit.coeff));
    }
    for (int t = 0; t < 300; ++t) {
      std::vector<UTMatrix> inputs;
      for (std::size_t k = 0; k < m; ++k) inputs.push_back(random_ut_matrix(n, gf5, state));
      values.push_back(p.evaluate(inputs));
    }

    if (span.is_zero) {
      for (const UTMatrix& v : values) require(v.is_zero(), "zero span with a nonzero evaluation");
      continue;
    }
    TriangularSubspace expected{n, span.level};
    DenseMatrix rows;
    for (const UTMatrix& v : values) {
      require(expected.contains(v), "evaluation escaped the span subspace");
      std::vector<Scalar> row;
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) row.push_back(v.at(i, j));
      }
      rows.push_back(std::move(row));
    }
    require(exact_rank(std::move(rows)) == expected.dimension(),
            "hull rank must exhaust the span subspace");
  }

  // Reordered unit products at n = 3, tuples of length 4: always zero or
  // e_{min row, max col}.
  std::vector<UnitPos> units;
  for (std::uint16_t i = 1; i <= 3; ++i) {
    for (std::uint16_t j = i; j <= 3; ++j) units.push_back({i, j});
  }
  std::vector<std::size_t> odo(4, 0);
  for (;;) {
    std::size_t min_row = 4, max_col = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      min_row = std::min<std::size_t>(min_row, units[odo[k]].row);
      max_col = std::max<std::size_t>(max_col, units[odo[k]].col);
    }
    std::vector<std::size_t> order = {0, 1, 2, 3};
    do {
      UTMatrix prod = UTMatrix::unit(3, units[odo[order[0]]].row, units[odo[order[0]]].col, kQ);
      for (std::size_t k = 1; k < 4; ++k) {
        prod = prod * UTMatrix::unit(3, units[odo[order[k]]].row, units[odo[order[k]]].col, kQ);
      }
      require(prod.is_zero() || prod == UTMatrix::unit(3, min_row, max_col, kQ),
              "a reordered unit product produced a different unit");
    } while (std::next_permutation(order.begin(), order.end()));
    std::size_t k = 4;
    bool done = false;
    while (k > 0) {
      --k;
      if (++odo[k] < units.size()) break;
      odo[k] = 0;
      if (k == 0) done = true;
    }
    if (done) break;
  }
}

// ---------------------------------------------------------------------------
// 7. Diagonal law: entry (i,i) of any evaluation is the coefficient sum
//    times the product of the input diagonals.

void criterion7() {
  std::mt19937_64 rng(1007);
  std::uint64_t state = 9007;
  FieldDescriptor gf7 = FieldDescriptor::prime_field(7);
  for (int iter = 0; iter < 1000; ++iter) {
    const FieldDescriptor& field = iter % 10 < 7 ? kQ : gf7;
    std::size_t m = 1 + iter % 4;
    std::size_t n = 2 + iter % 4;
    MultilinearPoly p = random_poly(m, field, rng, -3, 3);
    std::vector<UTMatrix> inputs;
    for (std::size_t k = 0; k < m; ++k) inputs.push_back(random_ut_matrix(n, field, state));
    UTMatrix value = p.evaluate(inputs);
    Scalar sum = p.coeff_sum();
    for (std::size_t i = 1; i <= n; ++i) {
      Scalar expected = sum;
      for (const UTMatrix& x : inputs) expected *= x.at(i, i);
      require(value.at(i, i) == expected, "diagonal law violated");
    }
  }
}

// ---------------------------------------------------------------------------

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "degree-2 classification and witness round trip", 10.0, criterion1},
      {2, "degree-2 oracle equality over GF(2)/GF(3)", 60.0, criterion2},
      {3, "degree-3 oracle equality over GF(2)/GF(3)", 300.0, criterion3},
      {4, "degree-4 round trips, containment and case identities", 60.0, criterion4},
      {5, "nine-element decomposition exactness", 10.0, criterion5},
      {6, "span level vs brute-force hull over GF(5)", 120.0, criterion6},
      {7, "diagonal law on random evaluations", 10.0, criterion7},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      selected = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--list") == 0) {
      for (const Criterion& c : criteria()) std::printf("%d: %s\n", c.id, c.name);
      return 0;
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N] [--list]\n");
      return 2;
    }
  }

  bool all_ok = true;
  for (const Criterion& c : criteria()) {
    if (selected != 0 && c.id != selected) continue;
    auto t0 = std::chrono::steady_clock::now();
    std::string failure;
    try {
      c.run();
    } catch (const CriterionFailure& f) {
      failure = f.message;
    } catch (const std::exception& e) {
      failure = std::string("unexpected exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (failure.empty() && elapsed > c.limit_seconds) {
      failure = "runtime " + std::to_string(elapsed) + "s exceeds " +
                std::to_string(c.limit_seconds) + "s";
    }
    if (failure.empty()) {
      std::printf("criterion %d (%s): PASS (%.2fs)\n", c.id, c.name, elapsed);
    } else {
      std::printf("criterion %d (%s): FAIL (%.2fs): %s\n", c.id, c.name, elapsed,
                  failure.c_str());
      all_ok = false;
    }
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
