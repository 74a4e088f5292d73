#include "utimage/span.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace utimage {

namespace {

std::vector<UnitPos> all_units(std::size_t n) {
  std::vector<UnitPos> units;
  units.reserve(n * (n + 1) / 2);
  for (std::uint16_t i = 1; i <= n; ++i) {
    for (std::uint16_t j = i; j <= n; ++j) units.push_back({i, j});
  }
  return units;
}

std::uint64_t checked_tuple_count(std::size_t unit_count, std::size_t m, std::uint64_t budget) {
  using u128 = unsigned __int128;
  u128 total = 1;
  for (std::size_t k = 0; k < m; ++k) {
    total *= unit_count;
    if (total > budget) {
      fail(Errc::BudgetExceeded,
           "enumeration needs " +
               (total > u128(UINT64_MAX) ? std::string("more than 2^64")
                                         : std::to_string(std::uint64_t(total))) +
               " tuples at this point; budget is " + std::to_string(budget));
    }
  }
  return std::uint64_t(total);
}

}  // namespace

std::optional<ScanHit> evaluate_on_units(const MultilinearPoly& p,
                                         const std::vector<UnitPos>& units) {
  if (units.size() != p.degree()) {
    fail(Errc::DimensionMismatch, "tuple length differs from polynomial degree");
  }
  Scalar acc = Scalar::zero(p.field());
  UnitPos position{0, 0};
  for (const auto& [perm, c] : p.terms()) {
    const UnitPos& first = units[perm[0] - 1];
    std::uint16_t row = first.row;
    std::uint16_t col = first.col;
    bool chained = true;
    for (std::size_t k = 1; k < perm.size(); ++k) {
      const UnitPos& next = units[perm[k] - 1];
      if (col != next.row) {
        chained = false;
        break;
      }
      col = next.col;
    }
    if (!chained) continue;
    if (position.row == 0) {
      position = {row, col};
    } else if (position.row != row || position.col != col) {
      fail_internal(InternalErrc::InternalInconsistency,
                    "two orderings of one unit tuple produced different unit positions");
    }
    acc += c;
  }
  if (position.row == 0 || acc.is_zero()) return std::nullopt;
  return ScanHit{units, std::move(acc), position};
}

namespace {

// Walks all tuples with first-unit index in [first_lo, first_hi).
template <typename Visit>
void scan_range(const MultilinearPoly& p, const std::vector<UnitPos>& units, std::size_t first_lo,
                std::size_t first_hi, Visit&& visit) {
  const std::size_t m = p.degree();
  std::vector<std::size_t> odo(m, 0);
  std::vector<UnitPos> tuple(m, UnitPos{});
  for (std::size_t first = first_lo; first < first_hi; ++first) {
    std::fill(odo.begin(), odo.end(), 0);
    odo[0] = first;
    for (;;) {
      for (std::size_t k = 0; k < m; ++k) tuple[k] = units[odo[k]];
      if (auto hit = evaluate_on_units(p, tuple)) visit(*hit);
      // advance the tail digits (positions 1..m-1)
      std::size_t k = m;
      while (k > 1) {
        --k;
        if (++odo[k] < units.size()) break;
        odo[k] = 0;
        if (k == 1) k = 0;  // tail rolled over completely
      }
      if (k == 0 || m == 1) break;
    }
  }
}

}  // namespace

std::vector<ScanHit> unit_eval_scan(const MultilinearPoly& p, std::size_t n,
                                    std::uint64_t budget) {
  const std::vector<UnitPos> units = all_units(n);
  checked_tuple_count(units.size(), p.degree(), budget);
  std::vector<ScanHit> hits;
  scan_range(p, units, 0, units.size(), [&](const ScanHit& hit) { hits.push_back(hit); });
  return hits;
}

SpanResult span_image(const MultilinearPoly& p, std::size_t n, std::uint64_t budget,
                      unsigned threads) {
  const std::vector<UnitPos> units = all_units(n);
  const std::uint64_t total = checked_tuple_count(units.size(), p.degree(), budget);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, unsigned(units.size()));

  // Partitions merge by minimum, so the outcome is schedule-independent.
  std::atomic<std::size_t> best{SIZE_MAX};
  auto worker = [&](unsigned tid) {
    std::size_t local = SIZE_MAX;
    for (std::size_t first = tid; first < units.size(); first += threads) {
      if (best.load(std::memory_order_relaxed) == 1) break;  // already minimal
      scan_range(p, units, first, first + 1, [&](const ScanHit& hit) {
        std::size_t diag = std::size_t(hit.position.col - hit.position.row) + 1;
        local = std::min(local, diag);
      });
    }
    std::size_t seen = best.load();
    while (local < seen && !best.compare_exchange_weak(seen, local)) {
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  SpanResult result;
  result.tuples_scanned = total;
  if (best.load() == SIZE_MAX) {
    result.is_zero = true;
  } else {
    result.level = long(best.load()) - 2;
  }
  return result;
}

}  // namespace utimage
