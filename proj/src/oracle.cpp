#include "utimage/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <thread>

namespace utimage {

namespace {

constexpr std::uint64_t kTableLimit = 2048;  // largest universe built as lookup tables
constexpr std::size_t kMaxSlots = 36;        // upper-triangle slots supported here (n <= 8)

using u128 = unsigned __int128;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t upper_slots(std::size_t n) { return n * (n + 1) / 2; }

std::size_t slot_of(std::size_t n, std::size_t i, std::size_t j) {
  return (i - 1) * n - (i - 1) * (i - 2) / 2 + (j - i);
}

struct GFContext {
  std::size_t n = 0;
  std::uint64_t p = 0;
  std::size_t slots = 0;
  std::uint64_t universe = 0;
};

GFContext make_context(const MultilinearPoly& p, std::size_t n) {
  if (!p.field().is_prime_field()) {
    fail(Errc::HypothesisViolation, "exhaustive enumeration needs a prime field");
  }
  GFContext ctx;
  ctx.n = n;
  ctx.p = p.field().modulus;
  ctx.slots = upper_slots(n);
  if (ctx.slots > kMaxSlots) fail(Errc::BudgetExceeded, "dimension too large for enumeration");
  u128 universe = 1;
  for (std::size_t k = 0; k < ctx.slots; ++k) {
    universe *= ctx.p;
    if (universe > (u128(1) << 40)) {
      fail(Errc::BudgetExceeded, "matrix universe exceeds 2^40 codes");
    }
  }
  ctx.universe = std::uint64_t(universe);
  return ctx;
}

std::uint64_t checked_tuples(const GFContext& ctx, std::size_t m, std::uint64_t budget) {
  u128 total = 1;
  for (std::size_t k = 0; k < m; ++k) {
    total *= ctx.universe;
    if (total > budget) {
      fail(Errc::BudgetExceeded,
           "enumeration needs " +
               (total > u128(UINT64_MAX) ? std::string("more than 2^64")
                                         : std::to_string(std::uint64_t(total))) +
               " tuples; budget is " + std::to_string(budget));
    }
  }
  return std::uint64_t(total);
}

using Digits = std::array<std::uint8_t, kMaxSlots>;

Digits decode_digits(std::uint64_t code, const GFContext& ctx) {
  Digits d{};
  for (std::size_t k = 0; k < ctx.slots; ++k) {
    d[k] = std::uint8_t(code % ctx.p);
    code /= ctx.p;
  }
  return d;
}

std::uint64_t encode_digits(const Digits& d, const GFContext& ctx) {
  std::uint64_t code = 0;
  for (std::size_t k = ctx.slots; k-- > 0;) code = code * ctx.p + d[k];
  return code;
}

Digits multiply_digits(const Digits& a, const Digits& b, const GFContext& ctx) {
  Digits out{};
  for (std::size_t i = 1; i <= ctx.n; ++i) {
    for (std::size_t j = i; j <= ctx.n; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = i; k <= j; ++k) {
        acc += std::uint64_t(a[slot_of(ctx.n, i, k)]) * b[slot_of(ctx.n, k, j)];
      }
      out[slot_of(ctx.n, i, j)] = std::uint8_t(acc % ctx.p);
    }
  }
  return out;
}

Digits add_scaled_digits(const Digits& a, const Digits& b, std::uint64_t scale,
                         const GFContext& ctx) {
  Digits out{};
  for (std::size_t k = 0; k < ctx.slots; ++k) {
    out[k] = std::uint8_t((a[k] + b[k] * scale) % ctx.p);
  }
  return out;
}

struct PolyTerm {
  std::vector<std::uint8_t> perm;  // 0-based input indices in product order
  std::uint64_t coeff = 0;         // residue
};

std::vector<PolyTerm> residue_terms(const MultilinearPoly& p) {
  std::vector<PolyTerm> terms;
  for (const auto& [perm, c] : p.terms()) {
    PolyTerm t;
    for (std::uint8_t v : perm) t.perm.push_back(std::uint8_t(v - 1));
    t.coeff = c.residue();
    if (t.coeff != 0) terms.push_back(std::move(t));
  }
  return terms;
}

// Lookup tables over a small universe: composition, addition, and scaling of
// encoded matrices.
struct Tables {
  GFContext ctx;
  std::vector<std::uint16_t> prod;    // prod[a * U + b] = code of A*B
  std::vector<std::uint16_t> prod_t;  // prod_t[b * U + a] = code of A*B (transposed layout)
  std::vector<std::uint16_t> add;     // add[a * U + b] = code of A+B
  std::vector<std::vector<std::uint16_t>> smul;  // per residue, built on demand

  const std::uint16_t* prod_row(std::uint64_t a) const { return prod.data() + a * ctx.universe; }
  const std::uint16_t* prod_col(std::uint64_t b) const { return prod_t.data() + b * ctx.universe; }
  const std::uint16_t* add_row(std::uint64_t a) const { return add.data() + a * ctx.universe; }
};

Tables build_tables(const GFContext& ctx) {
  Tables t;
  t.ctx = ctx;
  const std::uint64_t u = ctx.universe;
  std::vector<Digits> mats(u);
  for (std::uint64_t c = 0; c < u; ++c) mats[c] = decode_digits(c, ctx);
  t.prod.resize(u * u);
  t.prod_t.resize(u * u);
  t.add.resize(u * u);
  for (std::uint64_t a = 0; a < u; ++a) {
    for (std::uint64_t b = 0; b < u; ++b) {
      std::uint16_t ab = std::uint16_t(encode_digits(multiply_digits(mats[a], mats[b], ctx), ctx));
      t.prod[a * u + b] = ab;
      t.prod_t[b * u + a] = ab;
      t.add[a * u + b] = std::uint16_t(encode_digits(add_scaled_digits(mats[a], mats[b], 1, ctx), ctx));
    }
  }
  t.smul.assign(ctx.p, {});
  for (std::uint64_t r = 0; r < ctx.p; ++r) {
    t.smul[r].resize(u);
    Digits zero{};
    for (std::uint64_t a = 0; a < u; ++a) {
      t.smul[r][a] = std::uint16_t(encode_digits(add_scaled_digits(zero, mats[a], r, ctx), ctx));
    }
  }
  return t;
}

// Shared accumulator with saturation detection: once every code is seen the
// enumeration can stop early (the image can never shrink).
struct ImageAccumulator {
  explicit ImageAccumulator(std::uint64_t universe)
      : universe_(universe), global_(universe, false) {}

  void merge(std::vector<bool>& local) {
    std::lock_guard<std::mutex> lock(mutex_);
    std::uint64_t count = 0;
    for (std::uint64_t c = 0; c < universe_; ++c) {
      if (local[c]) global_[c] = true;
      if (global_[c]) ++count;
    }
    if (count == universe_) saturated_.store(true, std::memory_order_relaxed);
  }

  bool saturated() const { return saturated_.load(std::memory_order_relaxed); }

  std::vector<bool> take() { return std::move(global_); }

 private:
  std::uint64_t universe_;
  std::vector<bool> global_;
  std::mutex mutex_;
  std::atomic<bool> saturated_{false};
};

void enumerate_m3_tables(const Tables& t, const std::vector<PolyTerm>& terms,
                         ImageAccumulator& acc, unsigned threads) {
  const std::uint64_t u = t.ctx.universe;
  // Each ordering of (a, b, c) resolves to a fixed lookup shape; classify the
  // terms once so the innermost loop is pure table chasing.
  enum Kind : std::uint8_t { ABC, BAC, CAB, CBA, ACB, BCA };
  std::vector<Kind> kinds;
  std::vector<const std::uint16_t*> smul_rows;
  for (const auto& term : terms) {
    const auto& perm = term.perm;
    Kind kind;
    if (perm[0] == 0 && perm[1] == 1)      kind = ABC;
    else if (perm[0] == 1 && perm[1] == 0) kind = BAC;
    else if (perm[0] == 2 && perm[1] == 0) kind = CAB;
    else if (perm[0] == 2 && perm[1] == 1) kind = CBA;
    else if (perm[0] == 0)                 kind = ACB;
    else                                   kind = BCA;
    kinds.push_back(kind);
    smul_rows.push_back(t.smul[term.coeff].data());
  }
  const std::size_t nterms = terms.size();
  auto worker = [&](unsigned tid) {
    std::vector<bool> local(u, false);
    for (std::uint64_t a = tid; a < u; a += threads) {
      if (acc.saturated()) break;
      const std::uint16_t* prod_a = t.prod_row(a);
      const std::uint16_t* prodt_a = t.prod_col(a);
      for (std::uint64_t b = 0; b < u; ++b) {
        const std::uint16_t* prod_b = t.prod_row(b);
        const std::uint16_t* prodt_b = t.prod_col(b);
        const std::uint16_t* rows[6];
        rows[ABC] = t.prod_row(prod_a[b]);
        rows[BAC] = t.prod_row(prod_b[a]);
        rows[CAB] = t.prod_col(prod_a[b]);
        rows[CBA] = t.prod_col(prod_b[a]);
        for (std::uint64_t c = 0; c < u; ++c) {
          std::uint64_t value = 0;
          bool started = false;
          for (std::size_t ti = 0; ti < nterms; ++ti) {
            std::uint64_t prod_code;
            switch (kinds[ti]) {
              case ACB: prod_code = prod_a[prodt_b[c]]; break;
              case BCA: prod_code = prod_b[prodt_a[c]]; break;
              default: prod_code = rows[kinds[ti]][c]; break;
            }
            std::uint64_t scaled = smul_rows[ti][prod_code];
            value = started ? t.add_row(value)[scaled] : scaled;
            started = true;
          }
          local[value] = true;
        }
      }
      acc.merge(local);
    }
    acc.merge(local);
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned tid = 0; tid < threads; ++tid) pool.emplace_back(worker, tid);
    for (auto& th : pool) th.join();
  }
}

void enumerate_generic_tables(const Tables& t, const std::vector<PolyTerm>& terms, std::size_t m,
                              ImageAccumulator& acc, unsigned threads) {
  const std::uint64_t u = t.ctx.universe;
  auto worker = [&](unsigned tid) {
    std::vector<bool> local(u, false);
    std::vector<std::uint64_t> odo(m, 0);
    for (std::uint64_t first = tid; first < u; first += threads) {
      if (acc.saturated()) break;
      std::fill(odo.begin(), odo.end(), 0);
      odo[0] = first;
      for (;;) {
        std::uint64_t value = 0;
        bool started = false;
        for (const auto& term : terms) {
          std::uint64_t prod_code = odo[term.perm[0]];
          for (std::size_t k = 1; k < m; ++k) prod_code = t.prod_row(prod_code)[odo[term.perm[k]]];
          std::uint64_t scaled = t.smul[term.coeff][prod_code];
          value = started ? t.add_row(value)[scaled] : scaled;
          started = true;
        }
        local[value] = true;
        std::size_t k = m;
        while (k > 1) {
          --k;
          if (++odo[k] < u) break;
          odo[k] = 0;
          if (k == 1) k = 0;
        }
        if (k == 0 || m == 1) break;
      }
      acc.merge(local);
    }
    acc.merge(local);
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned tid = 0; tid < threads; ++tid) pool.emplace_back(worker, tid);
    for (auto& th : pool) th.join();
  }
}

void enumerate_direct(const GFContext& ctx, const std::vector<PolyTerm>& terms, std::size_t m,
                      ImageAccumulator& acc, unsigned threads) {
  const std::uint64_t u = ctx.universe;
  std::vector<Digits> mats(u);
  for (std::uint64_t c = 0; c < u; ++c) mats[c] = decode_digits(c, ctx);
  auto worker = [&](unsigned tid) {
    std::vector<bool> local(u, false);
    std::vector<std::uint64_t> odo(m, 0);
    for (std::uint64_t first = tid; first < u; first += threads) {
      if (acc.saturated()) break;
      std::fill(odo.begin(), odo.end(), 0);
      odo[0] = first;
      for (;;) {
        Digits value{};
        for (const auto& term : terms) {
          Digits prod = mats[odo[term.perm[0]]];
          for (std::size_t k = 1; k < m; ++k) {
            prod = multiply_digits(prod, mats[odo[term.perm[k]]], ctx);
          }
          value = add_scaled_digits(value, prod, term.coeff, ctx);
        }
        local[encode_digits(value, ctx)] = true;
        std::size_t k = m;
        while (k > 1) {
          --k;
          if (++odo[k] < u) break;
          odo[k] = 0;
          if (k == 1) k = 0;
        }
        if (k == 0 || m == 1) break;
      }
      acc.merge(local);
    }
    acc.merge(local);
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned tid = 0; tid < threads; ++tid) pool.emplace_back(worker, tid);
    for (auto& th : pool) th.join();
  }
}

}  // namespace

std::uint64_t encode_matrix(const UTMatrix& m) {
  if (!m.field().is_prime_field()) fail(Errc::HypothesisViolation, "encoding needs a prime field");
  GFContext ctx;
  ctx.n = m.dim();
  ctx.p = m.field().modulus;
  ctx.slots = upper_slots(ctx.n);
  Digits d{};
  std::size_t k = 0;
  for (std::size_t i = 1; i <= ctx.n; ++i) {
    for (std::size_t j = i; j <= ctx.n; ++j) d[k++] = std::uint8_t(m.at(i, j).residue());
  }
  return encode_digits(d, ctx);
}

UTMatrix decode_matrix(std::uint64_t code, std::size_t n, const FieldDescriptor& field) {
  if (!field.is_prime_field()) fail(Errc::HypothesisViolation, "decoding needs a prime field");
  GFContext ctx;
  ctx.n = n;
  ctx.p = field.modulus;
  ctx.slots = upper_slots(n);
  Digits d = decode_digits(code, ctx);
  UTMatrix m(n, field);
  std::size_t k = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) m.set(i, j, Scalar::of_int(field, d[k++]));
  }
  return m;
}

std::vector<std::uint64_t> OracleImage::codes() const {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::uint64_t c = 0; c < universe; ++c) {
    if (member[c]) out.push_back(c);
  }
  return out;
}

OracleImage exhaustive_image(const MultilinearPoly& p, std::size_t n, std::uint64_t budget,
                             unsigned threads) {
  GFContext ctx = make_context(p, n);
  checked_tuples(ctx, p.degree(), budget);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  std::vector<PolyTerm> terms = residue_terms(p);
  ImageAccumulator acc(ctx.universe);
  if (terms.empty()) {
    // The zero polynomial evaluates to the zero matrix everywhere.
    std::vector<bool> local(ctx.universe, false);
    local[0] = true;
    acc.merge(local);
  } else if (ctx.universe <= kTableLimit) {
    Tables tables = build_tables(ctx);
    if (p.degree() == 3) {
      enumerate_m3_tables(tables, terms, acc, threads);
    } else {
      enumerate_generic_tables(tables, terms, p.degree(), acc, threads);
    }
  } else {
    enumerate_direct(ctx, terms, p.degree(), acc, threads);
  }

  OracleImage image;
  image.universe = ctx.universe;
  image.member = acc.take();
  image.count = std::uint64_t(std::count(image.member.begin(), image.member.end(), true));
  return image;
}

CompareReport compare_with_classification(const MultilinearPoly& p, std::size_t n,
                                          std::uint64_t budget, unsigned threads) {
  if (p.degree() > 3) {
    fail(Errc::DegreeUnsupported, "set comparison is supported for degrees 1..3");
  }
  ClassificationResult cls = classify_image(p, n);
  OracleImage image = exhaustive_image(p, n, budget, threads);

  GFContext ctx = make_context(p, n);
  std::vector<std::size_t> banned;  // digit slots that must vanish inside the class
  std::size_t k = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j, ++k) {
      if (cls.image.zero || long(j) - long(i) <= cls.image.level) banned.push_back(k);
    }
  }

  CompareReport report;
  report.classified = cls.image;
  report.image_size = image.count;
  constexpr std::size_t kMaxExamples = 8;
  for (std::uint64_t code = 0; code < ctx.universe; ++code) {
    Digits d = decode_digits(code, ctx);
    bool in_class = true;
    for (std::size_t slot : banned) {
      if (d[slot] != 0) {
        in_class = false;
        break;
      }
    }
    if (in_class) ++report.class_size;
    if (image.member[code] && !in_class && report.image_not_class.size() < kMaxExamples) {
      report.image_not_class.push_back(code);
    }
    if (!image.member[code] && in_class && report.class_not_image.size() < kMaxExamples) {
      report.class_not_image.push_back(code);
    }
  }
  report.equal = report.image_not_class.empty() && report.class_not_image.empty() &&
                 report.image_size == report.class_size;
  return report;
}

UTMatrix random_ut_matrix(std::size_t n, const FieldDescriptor& field, std::uint64_t& state) {
  UTMatrix m(n, field);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      if (field.is_prime_field()) {
        m.set(i, j, Scalar::of_int(field, std::int64_t(splitmix64(state) % field.modulus)));
      } else {
        std::int64_t num = std::int64_t(splitmix64(state) % 19) - 9;
        std::uint64_t pick = splitmix64(state) % 5;
        std::int64_t den = pick == 3 ? 2 : pick == 4 ? 3 : 1;
        m.set(i, j, Scalar::rational(num, den));
      }
    }
  }
  return m;
}

UTMatrix random_in_class(const ImageClass& cls, std::size_t n, const FieldDescriptor& field,
                         std::uint64_t& state) {
  UTMatrix m(n, field);
  if (cls.zero) return m;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      if (long(j) - long(i) <= cls.level) continue;
      if (field.is_prime_field()) {
        m.set(i, j, Scalar::of_int(field, std::int64_t(splitmix64(state) % field.modulus)));
      } else {
        std::int64_t num = std::int64_t(splitmix64(state) % 19) - 9;
        std::uint64_t pick = splitmix64(state) % 5;
        std::int64_t den = pick == 3 ? 2 : pick == 4 ? 3 : 1;
        m.set(i, j, Scalar::rational(num, den));
      }
    }
  }
  return m;
}

ContainmentReport sample_containment(const MultilinearPoly& p, std::size_t n, std::uint64_t trials,
                                     std::uint64_t seed) {
  ClassificationResult cls = classify_image(p, n);
  ContainmentReport report;
  report.classified = cls.image;
  report.trials = trials;
  std::uint64_t state = seed ^ 0xa5a5a5a5deadbeefULL;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::vector<UTMatrix> inputs;
    inputs.reserve(p.degree());
    for (std::size_t k = 0; k < p.degree(); ++k) inputs.push_back(random_ut_matrix(n, p.field(), state));
    UTMatrix value = p.evaluate(inputs);
    if (!cls.image.contains(value)) {
      ++report.violation_count;
      if (report.violations.size() < 10) {
        report.violations.push_back(ContainmentViolation{std::move(inputs), std::move(value)});
      }
    }
  }
  return report;
}

}  // namespace utimage
