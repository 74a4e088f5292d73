#pragma once

#include <cstdint>
#include <vector>

#include "utimage/classify.hpp"
#include "utimage/poly.hpp"

namespace utimage {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

// Mixed-radix encoding of UT_n over GF(p): the upper-triangle entries, read
// row by row, are base-p digits; codes run over [0, p^(n(n+1)/2)).
std::uint64_t encode_matrix(const UTMatrix& m);
UTMatrix decode_matrix(std::uint64_t code, std::size_t n, const FieldDescriptor& field);

// The exact image of p on UT_n over its prime field, as a membership bitmap
// over matrix codes. Enumerates all p^(n(n+1)/2 * m) input tuples (budget
// permitting), partitioned across threads with a deterministic union merge.
struct OracleImage {
  std::uint64_t universe = 0;
  std::uint64_t count = 0;
  std::vector<bool> member;

  std::vector<std::uint64_t> codes() const;  // sorted member codes
};

OracleImage exhaustive_image(const MultilinearPoly& p, std::size_t n,
                             std::uint64_t budget = kDefaultOracleBudget, unsigned threads = 0);

// Set comparison of the exhaustive image against the classified subspace,
// for degrees <= 3 under the classification hypotheses.
struct CompareReport {
  ImageClass classified;
  std::uint64_t image_size = 0;
  std::uint64_t class_size = 0;
  bool equal = false;
  std::vector<std::uint64_t> image_not_class;  // example codes, capped
  std::vector<std::uint64_t> class_not_image;
};

CompareReport compare_with_classification(const MultilinearPoly& p, std::size_t n,
                                          std::uint64_t budget = kDefaultOracleBudget,
                                          unsigned threads = 0);

// Seeded random evaluations checked for membership in the classified
// subspace. Works over the rationals and prime fields; identical seeds give
// identical reports.
struct ContainmentViolation {
  std::vector<UTMatrix> inputs;
  UTMatrix value;
};

struct ContainmentReport {
  ImageClass classified;
  std::uint64_t trials = 0;
  std::uint64_t violation_count = 0;
  std::vector<ContainmentViolation> violations;  // capped at 10
};

ContainmentReport sample_containment(const MultilinearPoly& p, std::size_t n, std::uint64_t trials,
                                     std::uint64_t seed);

// Random UT matrix for sampling: small integers (with occasional small
// denominators) over the rationals, uniform residues over GF(p).
UTMatrix random_ut_matrix(std::size_t n, const FieldDescriptor& field, std::uint64_t& state);

// Random member of {0} / UT_n^(level): free positions drawn like
// random_ut_matrix entries.
UTMatrix random_in_class(const ImageClass& cls, std::size_t n, const FieldDescriptor& field,
                         std::uint64_t& state);

}  // namespace utimage
