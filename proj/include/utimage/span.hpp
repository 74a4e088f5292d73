#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "utimage/poly.hpp"

namespace utimage {

inline constexpr std::uint64_t kDefaultScanBudget = 10'000'000;

// A matrix-unit position e_{row,col}, 1-based with row <= col.
struct UnitPos {
  std::uint16_t row = 0;
  std::uint16_t col = 0;
  bool operator==(const UnitPos&) const = default;
};

// One nonzero evaluation of p on a tuple of upper triangular matrix units:
// p(units) = coeff * e_{position}.
struct ScanHit {
  std::vector<UnitPos> units;
  Scalar coeff;
  UnitPos position;
};

// Evaluates p on a single unit tuple symbolically via the chain condition
// j_q = i_{q+1}; returns the hit or nothing when the evaluation vanishes.
std::optional<ScanHit> evaluate_on_units(const MultilinearPoly& p,
                                         const std::vector<UnitPos>& units);

// All unit tuples with nonzero evaluation, in odometer order. The tuple
// count (n(n+1)/2)^m must stay within budget or BudgetExceeded is thrown
// with the required budget in the message.
std::vector<ScanHit> unit_eval_scan(const MultilinearPoly& p, std::size_t n,
                                    std::uint64_t budget = kDefaultScanBudget);

struct SpanResult {
  bool is_zero = false;
  long level = 0;  // meaningful when !is_zero
  std::uint64_t tuples_scanned = 0;
};

// The linear span of the image of p on UT_n: Zero when p vanishes on every
// unit tuple, else UT_n^(k_min - 2) where k_min is the smallest diagonal
// index reached by a unit evaluation. The enumeration is partitioned across
// threads and merged by minimum, so the result is schedule-independent.
SpanResult span_image(const MultilinearPoly& p, std::size_t n,
                      std::uint64_t budget = kDefaultScanBudget, unsigned threads = 0);

}  // namespace utimage
