#pragma once

// Core algorithms of the variant catalog.
//
// Each function is a structure-preserving transliteration of one stored
// source listing (see listings.hpp): loop shapes, slice expressions,
// scan directions, early exits, and error behaviour are kept intact so
// that a pair of variants differs in exactly the ways its listings do.
// The functions are pure computation; the executable-unit wrappers that
// adapt payloads and sink results live in corpus.hpp.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <ranges>
#include <tuple>
#include <utility>
#include <vector>

#include "varbench/barrier.hpp"
#include "varbench/corpus/views.hpp"
#include "varbench/errors.hpp"
#include "varbench/model.hpp"

#if defined(__GNUC__)
#define VARBENCH_NOINLINE __attribute__((noinline))
#else
#define VARBENCH_NOINLINE
#endif

namespace varbench::corpus {

// One (min, max) pair per 256-bin band; the meaning of the two numbers
// depends on the variant (bin positions for the correct ones, counts or
// values for two of the flawed ones).
using extrema_result = std::vector<std::pair<std::int64_t, std::int64_t>>;

// ---------------------------------------------------------------------
// Per-band extrema: the case-study family.
// ---------------------------------------------------------------------

// Baseline: for every band take the open tail slice h[i:] and scan a
// fixed 256 indices of it, updating min/max for each set bin.  The inner
// scan has no early exit and indexes past the end of a short final band,
// raising the sequence index error.
inline extrema_result extrema_full_scan(const band_view& h) {
  extrema_result res;
  for (std::int64_t i = 0; i < h.size(); i += 256) {
    const band_view band = h.tail(i);
    std::int64_t res_min = 255;
    std::int64_t res_max = 0;
    for (std::int64_t j = 0; j < 256; ++j) {
      if (band[j] != 0) {
        res_min = std::min(res_min, j);
        res_max = std::max(res_max, j);
      }
    }
    res.emplace_back(res_min, res_max);
  }
  return res;
}

// Candidate (accepted rewrite): scan forward until the first set bin,
// then backward from index 255 until the last set bin, both with early
// exits.  Tail slices and fixed indices are kept, so a short final band
// still raises the same index error as the baseline.
inline extrema_result extrema_early_exit(const band_view& h) {
  extrema_result res;
  for (std::int64_t i = 0; i < h.size(); i += 256) {
    const band_view band = h.tail(i);
    std::int64_t res_min = 255;
    std::int64_t res_max = 0;
    for (std::int64_t j = 0; j < 256; ++j) {
      if (band[j] != 0) {
        res_min = j;
        break;
      }
    }
    for (std::int64_t j = 255; j >= 0; --j) {
      if (band[j] != 0) {
        res_max = j;
        break;
      }
    }
    res.emplace_back(res_min, res_max);
  }
  return res;
}

// Earlier draft of the rewrite: clamped band slices, forward scan first,
// and a conditional that collapses the second element to 0 when the band
// is empty (min stays 255, max stays 0, and 0 < 255 trips the guard).
inline extrema_result extrema_early_exit_guarded(const band_view& h) {
  extrema_result res;
  for (std::int64_t i = 0; i < h.size(); i += 256) {
    const band_view band = h.slice(i, 256);
    std::int64_t res_min = 255;
    std::int64_t res_max = 0;
    for (std::int64_t j = 0; j < 256; ++j) {
      if (band[j] != 0) {
        res_min = j;
        break;
      }
    }
    for (std::int64_t j = 255; j >= 0; --j) {
      if (band[j] != 0) {
        res_max = j;
        break;
      }
    }
    res.emplace_back(res_min, res_max >= res_min ? res_max : 0);
  }
  return res;
}

// Flawed rewrite #1: min/max of the bin COUNTS in each band instead of
// the positions of the set bins.  Agrees with the baseline only on
// degenerate histograms; any dense band exposes it.
inline extrema_result extrema_count_minmax(const band_view& h) {
  extrema_result res;
  for (std::int64_t i = 0; i < h.size(); i += 256) {
    const band_view band = h.slice(i, 256);
    std::int64_t lo = band[0];
    std::int64_t hi = band[0];
    for (std::int64_t j = 1; j < band.size(); ++j) {
      const std::int64_t v = band[j];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    res.emplace_back(lo, hi);
  }
  return res;
}

// Flawed rewrite #2: enumerates the whole open tail h[i:] instead of one
// band, so every band after the first reports extrema of the remainder
// of the histogram.  A set bin in a later band exposes it.
inline extrema_result extrema_whole_tail(const band_view& h) {
  extrema_result res;
  for (std::int64_t i = 0; i < h.size(); i += 256) {
    const band_view band = h.tail(i);
    std::int64_t res_min = 255;
    std::int64_t res_max = 0;
    for (std::int64_t j = 0; j < band.size(); ++j) {
      if (band[j] != 0) {
        res_min = std::min(res_min, j);
        res_max = std::max(res_max, j);
      }
    }
    res.emplace_back(res_min, res_max);
  }
  return res;
}

// Flawed rewrite #3: filters the nonzero COUNT VALUES of the tail and
// returns their min/max.  Exposed by any band whose counts are not equal
// to the indices of the set bins.
inline extrema_result extrema_value_filter(const band_view& h) {
  extrema_result res;
  for (std::int64_t i = 0; i < h.size(); i += 256) {
    const band_view band = h.tail(i);
    bool any = false;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    for (std::int64_t j = 0; j < band.size(); ++j) {
      const std::int64_t v = band[j];
      if (v != 0) {
        if (!any) {
          lo = v;
          hi = v;
          any = true;
        } else {
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
      }
    }
    if (any) {
      res.emplace_back(lo, hi);
    } else {
      res.emplace_back(255, 0);
    }
  }
  return res;
}

// Flawed rewrite #4: clamps the forward scan to the available length
// (never raising on a short band) and recovers the max as 255 minus the
// offset of the last set bin of the CLAMPED head slice.  On a short band
// the "255 -" rebase is wrong, and the missing index error itself is a
// behaviour change.
inline extrema_result extrema_clamped_reverse(const band_view& h) {
  extrema_result res;
  for (std::int64_t i = 0; i < h.size(); i += 256) {
    const band_view band = h.tail(i);
    const std::int64_t limit = std::min<std::int64_t>(256, band.size());
    std::optional<std::int64_t> res_min;
    for (std::int64_t j = 0; j < limit; ++j) {
      if (band[j] != 0) {
        res_min = j;
        break;
      }
    }
    if (!res_min.has_value()) {
      res.emplace_back(255, 0);
      continue;
    }
    const band_view head = band.slice(0, 256);
    std::int64_t offset = 0;
    for (std::int64_t j = head.size() - 1; j >= 0; --j) {
      if (head[j] != 0) {
        offset = head.size() - 1 - j;
        break;
      }
    }
    res.emplace_back(*res_min, 255 - offset);
  }
  return res;
}

// ---------------------------------------------------------------------
// Per-band totals.
// ---------------------------------------------------------------------

// Baseline: folds each clamped band with an explicit binary function
// object seeded from the first element, mirroring a reduce-style fold.
inline std::vector<std::int64_t> count_fold(const band_view& h) {
  std::vector<std::int64_t> res;
  const std::plus<std::int64_t> add{};
  for (std::int64_t i = 0; i < h.size(); i += 256) {
    const band_view band = h.slice(i, 256);
    std::int64_t acc = band[0];
    for (std::int64_t j = 1; j < band.size(); ++j) {
      acc = add(acc, band[j]);
    }
    res.push_back(acc);
  }
  return res;
}

// Candidate: plain built-in accumulation over the same clamped bands.
inline std::vector<std::int64_t> count_sum(const band_view& h) {
  std::vector<std::int64_t> res;
  for (std::int64_t i = 0; i < h.size(); i += 256) {
    const band_view band = h.slice(i, 256);
    std::int64_t total = 0;
    for (std::int64_t j = 0; j < band.size(); ++j) {
      total += band[j];
    }
    res.push_back(total);
  }
  return res;
}

// ---------------------------------------------------------------------
// Coefficient-list validation.
// ---------------------------------------------------------------------

// Baseline: materialises the list of sizes, takes its minimum (raising
// the empty-sequence error on an empty input list), then checks for a
// zero size, then scans dimensionalities.
inline void coeff_validate_min_scan(const CoeffList& arrays) {
  std::vector<std::int64_t> sizes;
  sizes.reserve(arrays.size());
  for (const CoeffArray& a : arrays) {
    sizes.push_back(a.size);
  }
  if (sizes.empty()) {
    throw harness_error(errclass::value_error, "min() arg is an empty sequence");
  }
  std::int64_t smallest = sizes[0];
  for (const std::int64_t s : sizes) {
    smallest = std::min(smallest, s);
  }
  if (smallest == 0) {
    throw harness_error(errclass::value_error, "Coefficient array is empty");
  }
  bool any_not_1d = false;
  for (const CoeffArray& a : arrays) {
    if (a.ndim != 1) {
      any_not_1d = true;
      break;
    }
  }
  if (any_not_1d) {
    throw harness_error(errclass::value_error, "Coefficient array is not 1-d");
  }
}

// Candidate: early-exit loops, no intermediate list, same check order
// (size before dimensionality) and same error messages.  Diverges from
// the baseline only on an empty input list, which the data contract
// excludes.
inline void coeff_validate_early_exit(const CoeffList& arrays) {
  for (const CoeffArray& a : arrays) {
    if (a.size == 0) {
      throw harness_error(errclass::value_error, "Coefficient array is empty");
    }
  }
  for (const CoeffArray& a : arrays) {
    if (a.ndim != 1) {
      throw harness_error(errclass::value_error, "Coefficient array is not 1-d");
    }
  }
}

// ---------------------------------------------------------------------
// First set bin of a band.
// ---------------------------------------------------------------------

// Explicit loop over fixed indices with an early return; reading past a
// short band raises, like the full-scan baseline above.
inline std::optional<std::int64_t> first_nonzero_loop(const band_view& h) {
  for (std::int64_t i = 0; i < 256; ++i) {
    if (h[i] != 0) {
      return i;
    }
  }
  return std::nullopt;
}

// Lazy-pipeline formulation: enumerate, clamp to 256, filter, take the
// first survivor.  The clamp makes it total on short bands.
inline std::optional<std::int64_t> first_nonzero_pipeline(const band_view& h) {
  auto hits = std::views::iota(std::int64_t{0},
                               std::min<std::int64_t>(256, h.size())) |
              std::views::filter([&](std::int64_t i) { return h[i] != 0; });
  for (const std::int64_t i : hits) {
    return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------
// Counter micro-benchmarks (payload-free).
// ---------------------------------------------------------------------

// Heap-boxed integer: every arithmetic step allocates a fresh box,
// mirroring runtimes whose numbers are immutable heap objects.
class boxed_scalar {
 public:
  explicit boxed_scalar(std::int64_t v)
      : box_(std::make_unique<std::int64_t>(v)) {}
  void add(std::int64_t rhs) {
    box_ = std::make_unique<std::int64_t>(*box_ + rhs);
  }
  std::int64_t value() const { return *box_; }

 private:
  std::unique_ptr<std::int64_t> box_;
};

// Boxing plus 16-bit wraparound behind virtual dispatch, mirroring a
// library-provided fixed-width integer class.
class boxed_fixed16 {
  struct cell {
    virtual ~cell() = default;
    virtual std::int64_t get() const = 0;
  };
  struct value_cell final : cell {
    explicit value_cell(std::int64_t x) : v(x & 0xFFFF) {}
    std::int64_t get() const override { return v; }
    std::int64_t v;
  };

 public:
  explicit boxed_fixed16(std::int64_t v)
      : box_(std::make_unique<value_cell>(v)) {}
  void add(std::int64_t rhs) {
    box_ = std::make_unique<value_cell>(box_->get() + rhs);
  }
  std::int64_t value() const { return box_->get(); }

 private:
  std::unique_ptr<cell> box_;
};

// Monotone counter behind an opaque call, mirroring an iterator that
// must be advanced to be observed.
class count_stream {
 public:
  VARBENCH_NOINLINE std::int64_t next() { return next_++; }

 private:
  std::int64_t next_ = 0;
};

constexpr std::int64_t loop_iterations = 10000;

// Candidate of the loop family: a plain counted loop.
inline void loop_range() {
  for (std::int64_t i = 0; i < loop_iterations; ++i) {
    do_not_optimize(i);
  }
}

// Manual while-loop with an explicit increment.
inline void loop_while() {
  std::int64_t i = 0;
  while (i < loop_iterations) {
    i += 1;
    do_not_optimize(i);
  }
}

// While-loop over a heap-boxed counter.
inline void loop_boxed_scalar() {
  boxed_scalar i(0);
  while (i.value() < loop_iterations) {
    i.add(1);
    do_not_optimize(i);
  }
}

// While-loop over the boxed fixed-width counter.
inline void loop_boxed_fixed() {
  boxed_fixed16 i(0);
  while (i.value() < loop_iterations) {
    i.add(1);
    do_not_optimize(i);
  }
}

// Counted loop of half the trips with the second step applied manually.
inline void loop_unrolled() {
  for (std::int64_t i = 0; i < loop_iterations; i += 2) {
    std::int64_t j = i;
    do_not_optimize(j);
    j += 1;
    do_not_optimize(j);
  }
}

// Drains an opaque counter stream until it passes the limit.
inline void loop_iter_counter() {
  count_stream c;
  while (c.next() < loop_iterations) {
  }
}

// ---------------------------------------------------------------------
// Assignment micro-benchmarks (payload-free).
// ---------------------------------------------------------------------

// Ten variables bound one statement at a time.
inline void assign_sequential() {
  std::int64_t a = 0;
  std::int64_t b = 1;
  std::int64_t c = 2;
  std::int64_t d = 3;
  std::int64_t e = 4;
  std::int64_t f = 5;
  std::int64_t g = 6;
  std::int64_t h = 7;
  std::int64_t i = 8;
  std::int64_t j = 9;
  do_not_optimize(a);
  do_not_optimize(b);
  do_not_optimize(c);
  do_not_optimize(d);
  do_not_optimize(e);
  do_not_optimize(f);
  do_not_optimize(g);
  do_not_optimize(h);
  do_not_optimize(i);
  do_not_optimize(j);
}

// The same ten bindings through one destructured tuple.
inline void assign_tuple() {
  auto [a, b, c, d, e, f, g, h, i, j] =
      std::tuple{std::int64_t{0}, std::int64_t{1}, std::int64_t{2},
                 std::int64_t{3}, std::int64_t{4}, std::int64_t{5},
                 std::int64_t{6}, std::int64_t{7}, std::int64_t{8},
                 std::int64_t{9}};
  do_not_optimize(a);
  do_not_optimize(b);
  do_not_optimize(c);
  do_not_optimize(d);
  do_not_optimize(e);
  do_not_optimize(f);
  do_not_optimize(g);
  do_not_optimize(h);
  do_not_optimize(i);
  do_not_optimize(j);
}

// ---------------------------------------------------------------------
// Conditional-expression micro-benchmark.
// ---------------------------------------------------------------------

// Result of the two conditional return shapes.  `nested` records whether
// the second component is itself a (255, 0) pair — the unintended parse
// of the conditional-expression version — or a plain number.
struct cond_result {
  std::int64_t first = 0;
  std::int64_t second = 0;
  bool nested = false;

  friend bool operator==(const cond_result&, const cond_result&) = default;
};

// Conditional expression binding tighter than the comma: the expression
// `a, b if cond else (255, 0)` returns (a, b) when the condition holds
// and (a, (255, 0)) — a nested pair — when it does not.
inline cond_result cond_ternary(std::int64_t res_min, std::int64_t res_max) {
  if (res_max >= res_min) {
    return cond_result{res_min, res_max, false};
  }
  return cond_result{res_min, 0, true};
}

// Explicit if/else returning a flat pair on both paths.  Note the
// branch sense: the listing hands back (255, 0) when res_max >= res_min
// and (res_min, res_max) otherwise, so this variant disagrees with the
// conditional-expression one on every input — the pair is compared for
// speed only.
inline cond_result cond_explicit_if(std::int64_t res_min,
                                    std::int64_t res_max) {
  if (res_max >= res_min) {
    return cond_result{255, 0, false};
  }
  return cond_result{res_min, res_max, false};
}

// ---------------------------------------------------------------------
// List-building micro-benchmark (payload-free).
// ---------------------------------------------------------------------

inline std::pair<std::int64_t, std::int64_t> some_data(std::int64_t i) {
  return {i, i + 1};
}

constexpr std::int64_t build_length = 100;

// Grows the result one append at a time.
inline std::vector<std::pair<std::int64_t, std::int64_t>> build_append() {
  std::vector<std::pair<std::int64_t, std::int64_t>> res;
  for (std::int64_t i = 0; i < build_length; ++i) {
    res.push_back(some_data(i));
  }
  return res;
}

// Builds the result in one comprehension-style expression.
inline std::vector<std::pair<std::int64_t, std::int64_t>> build_comprehension() {
  auto rng = std::views::iota(std::int64_t{0}, build_length) |
             std::views::transform(some_data);
  return std::vector<std::pair<std::int64_t, std::int64_t>>(rng.begin(),
                                                            rng.end());
}

}  // namespace varbench::corpus
