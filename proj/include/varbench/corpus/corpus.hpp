#pragma once

// The variant catalog: executable units assembled into registered pairs,
// plus the fixture datasets and the designated-dataset resolver used by
// batch runs.
//
// Every unit exposes the two required surfaces built from one core
// function: `run` returns the outcome value for correctness gating (and
// lets outcome-level errors escape so the gate can classify them), while
// `run_timed` performs the same computation and sinks the result through
// an optimization barrier.  `run_timed` absorbs outcome-level errors:
// raising and handling them is part of the measured work for variants
// whose interesting path is the error path, mirroring the reference
// measurement protocol.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "varbench/barrier.hpp"
#include "varbench/corpus/listings.hpp"
#include "varbench/corpus/units.hpp"
#include "varbench/corpus/views.hpp"
#include "varbench/data.hpp"
#include "varbench/errors.hpp"
#include "varbench/model.hpp"

namespace varbench::corpus {

// ---------------------------------------------------------------------
// Payload adapters
// ---------------------------------------------------------------------

inline const Histogram& histogram_of(const Payload& payload) {
  const auto* h = std::get_if<Histogram>(&payload);
  if (h == nullptr) throw contract_error("unit expects a histogram payload");
  return *h;
}

inline const ScalarPair& scalar_pair_of(const Payload& payload) {
  const auto* p = std::get_if<ScalarPair>(&payload);
  if (p == nullptr) throw contract_error("unit expects a scalar-pair payload");
  return *p;
}

inline const CoeffList& coeff_list_of(const Payload& payload) {
  const auto* c = std::get_if<CoeffList>(&payload);
  if (c == nullptr)
    throw contract_error("unit expects a coefficient-list payload");
  return *c;
}

inline band_view view_of(const Histogram& h, std::int64_t* reads = nullptr) {
  return band_view(h.data(), static_cast<std::int64_t>(h.size()), reads);
}

// ---------------------------------------------------------------------
// Result conversion
// ---------------------------------------------------------------------

inline json result_to_json(const extrema_result& r) {
  json out = json::array();
  for (const auto& [a, b] : r) out.push_back(json::array({a, b}));
  return out;
}

inline json result_to_json(const std::vector<std::int64_t>& r) {
  return json(r);
}

inline json result_to_json(const std::optional<std::int64_t>& r) {
  if (r.has_value()) return json(*r);
  return json(nullptr);
}

inline json result_to_json(const cond_result& r) {
  if (r.nested) return json::array({r.first, json::array({255, 0})});
  return json::array({r.first, r.second});
}

// ---------------------------------------------------------------------
// Unit factories
// ---------------------------------------------------------------------

template <class Core>
ExecutableUnit histogram_unit(std::string id, std::string description,
                              std::string listing_ref,
                              std::vector<std::string> tags, Core core) {
  ExecutableUnit unit;
  unit.id = std::move(id);
  unit.description = std::move(description);
  unit.listing_ref = std::move(listing_ref);
  unit.tags = std::move(tags);
  unit.run = [core](const Payload& payload) -> json {
    return result_to_json(core(view_of(histogram_of(payload))));
  };
  unit.run_timed = [core](const Payload& payload) {
    const Histogram& h = histogram_of(payload);
    try {
      auto result = core(view_of(h));
      do_not_optimize(result);
    } catch (const harness_error&) {
      // The raise-and-handle path is the measured work.
    }
  };
  return unit;
}

template <class Core>
ExecutableUnit coeff_unit(std::string id, std::string description,
                          std::string listing_ref,
                          std::vector<std::string> tags, Core core) {
  ExecutableUnit unit;
  unit.id = std::move(id);
  unit.description = std::move(description);
  unit.listing_ref = std::move(listing_ref);
  unit.tags = std::move(tags);
  unit.run = [core](const Payload& payload) -> json {
    core(coeff_list_of(payload));
    return json(nullptr);  // validation passed
  };
  unit.run_timed = [core](const Payload& payload) {
    const CoeffList& arrays = coeff_list_of(payload);
    try {
      core(arrays);
      do_not_optimize(arrays);
    } catch (const harness_error&) {
    }
  };
  return unit;
}

template <class Core>
ExecutableUnit scalar_pair_unit(std::string id, std::string description,
                                std::string listing_ref,
                                std::vector<std::string> tags, Core core) {
  ExecutableUnit unit;
  unit.id = std::move(id);
  unit.description = std::move(description);
  unit.listing_ref = std::move(listing_ref);
  unit.tags = std::move(tags);
  unit.run = [core](const Payload& payload) -> json {
    const ScalarPair& p = scalar_pair_of(payload);
    return result_to_json(core(p.res_min, p.res_max));
  };
  unit.run_timed = [core](const Payload& payload) {
    const ScalarPair& p = scalar_pair_of(payload);
    auto result = core(p.res_min, p.res_max);
    do_not_optimize(result);
  };
  return unit;
}

// Payload-free unit whose core returns nothing observable; the gate
// outcome is null unless the core raises.
template <class Core>
ExecutableUnit action_unit(std::string id, std::string description,
                           std::string listing_ref,
                           std::vector<std::string> tags, Core core) {
  ExecutableUnit unit;
  unit.id = std::move(id);
  unit.description = std::move(description);
  unit.listing_ref = std::move(listing_ref);
  unit.tags = std::move(tags);
  unit.run = [core](const Payload&) -> json {
    core();
    return json(nullptr);
  };
  unit.run_timed = [core](const Payload&) { core(); };
  return unit;
}

// Payload-free unit whose core builds and returns a value.
template <class Core>
ExecutableUnit builder_unit(std::string id, std::string description,
                            std::string listing_ref,
                            std::vector<std::string> tags, Core core) {
  ExecutableUnit unit;
  unit.id = std::move(id);
  unit.description = std::move(description);
  unit.listing_ref = std::move(listing_ref);
  unit.tags = std::move(tags);
  unit.run = [core](const Payload&) -> json { return result_to_json(core()); };
  unit.run_timed = [core](const Payload&) {
    auto result = core();
    do_not_optimize(result);
  };
  return unit;
}

// ---------------------------------------------------------------------
// Instrumented read counting
// ---------------------------------------------------------------------

// Runs a histogram core against an instrumented view and reports how many
// individual bin reads it performed.  Outcome-level errors still count
// the reads made before the raise.
template <class Core>
std::int64_t count_bin_reads(Core core, const Histogram& h) {
  std::int64_t reads = 0;
  try {
    auto result = core(view_of(h, &reads));
    do_not_optimize(result);
  } catch (const harness_error&) {
  }
  return reads;
}

// ---------------------------------------------------------------------
// Fixture datasets
// ---------------------------------------------------------------------

// Five 256-bin histograms whose first set bin sits at positions 1, 16,
// 128, 240, and 256 — a ladder of early-exit depths for the first-nonzero
// pair.
inline Dataset first_nonzero_ladder() {
  Dataset dataset;
  dataset.id = "first-nonzero-ladder";
  dataset.schema = schema::histogram;
  for (const std::int64_t position : {1, 16, 128, 240, 256}) {
    Histogram h(256, 0);
    h[static_cast<std::size_t>(position - 1)] = 1;
    DatasetItem item;
    char buf[24];
    std::snprintf(buf, sizeof(buf), "needle-%03lld",
                  static_cast<long long>(position));
    item.id = buf;
    item.payload = std::move(h);
    item.meta = {{"first_set_position", std::to_string(position)}};
    dataset.items.push_back(std::move(item));
  }
  return dataset;
}

// The two operand orders the conditional-shape pair is measured on.
inline Dataset conditional_cases() {
  Dataset dataset;
  dataset.id = "conditional-cases";
  dataset.schema = schema::scalar_pair;
  dataset.items.push_back(DatasetItem{
      "min-gt-max", ScalarPair{100, 7}, {{"relation", "res_min > res_max"}}});
  dataset.items.push_back(DatasetItem{
      "min-lt-max", ScalarPair{7, 100}, {{"relation", "res_min < res_max"}}});
  return dataset;
}

// Nine coefficient-list cases: four that pass validation, three that hit
// the empty-array check (one of them also carrying a dimensionality
// conflict, pinning the check order), and two that hit the
// dimensionality check.
inline Dataset coeff_validation_cases() {
  Dataset dataset;
  dataset.id = "coeff-validation-cases";
  dataset.schema = schema::coeff_list;
  auto add = [&dataset](std::string id, CoeffList list, std::string kind) {
    DatasetItem item;
    item.id = std::move(id);
    item.payload = std::move(list);
    item.meta = {{"kind", std::move(kind)}};
    dataset.items.push_back(std::move(item));
  };
  add("single-short", CoeffList{{3, 1}}, "valid");
  add("mixed-lengths", CoeffList{{2, 1}, {1, 1}, {3, 1}}, "valid");
  add("single-long", CoeffList{{200, 1}}, "valid");
  add("several-mid", CoeffList{{64, 1}, {64, 1}, {64, 1}, {64, 1}, {64, 1}},
      "valid");
  add("empty-single", CoeffList{{0, 1}}, "error-empty");
  add("empty-mid", CoeffList{{5, 1}, {0, 1}, {7, 1}}, "error-empty");
  add("empty-before-ndim", CoeffList{{0, 2}, {4, 1}}, "error-empty");
  add("matrix-single", CoeffList{{6, 2}}, "error-ndim");
  add("matrix-mid", CoeffList{{3, 1}, {6, 2}}, "error-ndim");
  return dataset;
}

// ---------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------

// How a pair behaved in the reference campaign this catalog was distilled
// from.  Purely informational on other hosts.
struct ReferenceExpectation {
  std::string metric;
  std::string value;
  std::string tolerance_policy;
};

namespace category {
inline constexpr const char* case_study = "case-study";
inline constexpr const char* flawed = "flawed";
inline constexpr const char* micro = "micro";
inline constexpr const char* control = "control";
}  // namespace category

struct CorpusEntry {
  VariantPair pair;
  std::string category;
  std::int64_t exposure_bands = 1;  // bands for generated exposure datasets
  std::optional<ReferenceExpectation> reference;
};

namespace detail {

inline std::vector<CorpusEntry> build_catalog() {
  std::vector<CorpusEntry> entries;

  const TimingSpec band_spec{.repeat = 10, .number = 1000, .warmup = true};
  const TimingSpec micro_spec{.repeat = 10, .number = 20000, .warmup = true};
  const TimingSpec boxed_spec{.repeat = 10, .number = 2000, .warmup = true};

  // --- shared units ---------------------------------------------------

  const ExecutableUnit extrema_original = histogram_unit(
      "getextrema/original",
      "per-band extrema: fixed 256-index scan of each tail slice, no early "
      "exit",
      "getextrema/original", {"case-study"},
      [](const band_view& h) { return extrema_full_scan(h); });

  const ExecutableUnit extrema_final = histogram_unit(
      "getextrema/final",
      "per-band extrema: forward and backward scans with early exits",
      "getextrema/final", {"case-study"},
      [](const band_view& h) { return extrema_early_exit(h); });

  auto flawed_entry = [&](std::string pair_id, ExecutableUnit candidate,
                          std::string exposure, std::int64_t bands,
                          std::string notes) {
    VariantPair pair;
    pair.id = std::move(pair_id);
    pair.baseline = extrema_original;
    pair.candidate = std::move(candidate);
    pair.dataset_hint = schema::histogram;
    pair.exposure_pattern = std::move(exposure);
    pair.expected_equivalent = false;
    pair.compare = compare_mode::outcome;
    pair.default_spec = band_spec;
    pair.notes = std::move(notes);
    CorpusEntry entry;
    entry.pair = std::move(pair);
    entry.category = category::flawed;
    entry.exposure_bands = bands;
    entry.reference = ReferenceExpectation{
        "mismatch_fraction", "> 0",
        "hard: the designated dataset must expose the flaw"};
    return entry;
  };

  // --- 1: the accepted rewrite ----------------------------------------
  {
    VariantPair pair;
    pair.id = "getextrema/original-vs-final";
    pair.baseline = extrema_original;
    pair.candidate = extrema_final;
    pair.dataset_hint = schema::histogram;
    pair.exposure_pattern = pattern::edge_concentrated;
    pair.expected_equivalent = true;
    pair.compare = compare_mode::outcome;
    pair.default_spec = band_spec;
    pair.notes =
        "Accepted early-exit rewrite; biggest wins when the set bins sit at "
        "the band edges.";
    CorpusEntry entry;
    entry.pair = std::move(pair);
    entry.category = category::case_study;
    entry.exposure_bands = 1;
    entry.reference = ReferenceExpectation{
        "mean_g", "38.41 (std 8.06)",
        "replay fixture must reproduce mean/std within 1.0; live timings "
        "informational off the reference host"};
    entries.push_back(std::move(entry));
  }

  // --- 2-5: rejected rewrites ------------------------------------------
  entries.push_back(flawed_entry(
      "getextrema/original-vs-oneliner",
      histogram_unit("getextrema/oneliner",
                     "per-band min/max of the bin counts instead of the set "
                     "bin positions",
                     "getextrema/oneliner", {"flawed"},
                     [](const band_view& h) { return extrema_count_minmax(h); }),
      pattern::uniform_dense, 1,
      "Returns count extrema, not position extrema; any dense band exposes "
      "it."));

  entries.push_back(flawed_entry(
      "getextrema/original-vs-wholescan",
      histogram_unit(
          "getextrema/wholescan",
          "per-band extrema computed over the whole remaining tail instead "
          "of one band",
          "getextrema/wholescan", {"flawed"},
          [](const band_view& h) { return extrema_whole_tail(h); }),
      pattern::two_band_tail, 2,
      "Band boundary ignored; a set bin in a later band leaks into earlier "
      "results."));

  entries.push_back(flawed_entry(
      "getextrema/original-vs-valuefilter",
      histogram_unit(
          "getextrema/valuefilter",
          "per-band min/max of the nonzero bin counts of the tail",
          "getextrema/valuefilter", {"flawed"},
          [](const band_view& h) { return extrema_value_filter(h); }),
      pattern::uniform_dense, 1,
      "Filters values, not positions; exposed whenever counts differ from "
      "indices."));

  entries.push_back(flawed_entry(
      "getextrema/original-vs-islice",
      histogram_unit(
          "getextrema/islice",
          "per-band extrema via clamped forward scan and a reversed-offset "
          "rebase",
          "getextrema/islice", {"flawed"},
          [](const band_view& h) { return extrema_clamped_reverse(h); }),
      pattern::non_multiple_length, 2,
      "Never raises on a short band and mis-rebases the maximum there; "
      "exposed by histograms whose length is not a multiple of the band "
      "width."));

  // --- 6: per-band totals ----------------------------------------------
  {
    VariantPair pair;
    pair.id = "getcount/original-vs-sum";
    pair.baseline = histogram_unit(
        "getcount/original",
        "per-band totals via an explicit binary fold over each clamped band",
        "getcount/original", {"case-study"},
        [](const band_view& h) { return count_fold(h); });
    pair.candidate = histogram_unit(
        "getcount/sum",
        "per-band totals via built-in accumulation over each clamped band",
        "getcount/sum", {"case-study"},
        [](const band_view& h) { return count_sum(h); });
    pair.dataset_hint = schema::histogram;
    pair.exposure_pattern = pattern::uniform_dense;
    pair.expected_equivalent = true;
    pair.compare = compare_mode::outcome;
    pair.default_spec = band_spec;
    pair.notes = "Clamped band slices make both variants total everywhere.";
    CorpusEntry entry;
    entry.pair = std::move(pair);
    entry.category = category::case_study;
    entry.exposure_bands = 4;
    entry.reference = ReferenceExpectation{
        "mean_g", "2.99 (std 0.23)",
        "informational off the reference host; gate equivalence is hard"};
    entries.push_back(std::move(entry));
  }

  // --- 7: coefficient-list validation ----------------------------------
  {
    VariantPair pair;
    pair.id = "as_series/original-vs-earlyexit";
    pair.baseline = coeff_unit(
        "as_series/original",
        "coefficient validation via a materialised size list and full "
        "minimum scan",
        "as_series/original", {"case-study"},
        [](const CoeffList& arrays) { coeff_validate_min_scan(arrays); });
    pair.candidate = coeff_unit(
        "as_series/earlyexit",
        "coefficient validation via early-exit loops, no intermediate list",
        "as_series/earlyexit", {"case-study"},
        [](const CoeffList& arrays) { coeff_validate_early_exit(arrays); });
    pair.dataset_hint = schema::coeff_list;
    pair.exposure_pattern = pattern::coeff_mixed;
    pair.expected_equivalent = true;
    pair.compare = compare_mode::outcome;
    pair.default_spec = band_spec;
    pair.notes =
        "Equivalent over non-empty lists (the data contract); check order "
        "and messages match.";
    CorpusEntry entry;
    entry.pair = std::move(pair);
    entry.category = category::case_study;
    entry.exposure_bands = 1;
    entry.reference = ReferenceExpectation{
        "g_range", "1.01-1.09 pass path, 1.04-1.30 error path",
        "informational off the reference host"};
    entries.push_back(std::move(entry));
  }

  // --- 8-12: counter loops ----------------------------------------------
  const ExecutableUnit loop_range_unit = action_unit(
      "micro/loop-family/range", "counted loop over an integer range",
      "micro/loop-family/range", {"micro"}, [] { loop_range(); });

  auto loop_entry = [&](std::string pair_id, ExecutableUnit baseline,
                        TimingSpec spec, std::string reference_g,
                        std::string notes) {
    VariantPair pair;
    pair.id = std::move(pair_id);
    pair.baseline = std::move(baseline);
    pair.candidate = loop_range_unit;
    pair.dataset_hint = schema::none;
    pair.exposure_pattern = "none";
    pair.expected_equivalent = true;
    pair.compare = compare_mode::outcome;
    pair.default_spec = spec;
    pair.notes = std::move(notes);
    CorpusEntry entry;
    entry.pair = std::move(pair);
    entry.category = category::micro;
    entry.reference = ReferenceExpectation{
        "g", std::move(reference_g), "informational off the reference host"};
    return entry;
  };

  entries.push_back(loop_entry(
      "micro/loop-family/while-vs-range",
      action_unit("micro/loop-family/while",
                  "manual while-loop with an explicit increment",
                  "micro/loop-family/while", {"micro"}, [] { loop_while(); }),
      micro_spec, "1.7", "Range loop vs manual counter."));

  entries.push_back(loop_entry(
      "micro/loop-family/boxed-scalar-vs-range",
      action_unit("micro/loop-family/boxed-scalar",
                  "while-loop over a heap-boxed integer counter",
                  "micro/loop-family/boxed-scalar", {"micro"},
                  [] { loop_boxed_scalar(); }),
      boxed_spec, "6.68",
      "Every increment allocates a fresh box; fewer invocations per repeat "
      "to keep batch runs affordable."));

  entries.push_back(loop_entry(
      "micro/loop-family/boxed-fixed-vs-range",
      action_unit("micro/loop-family/boxed-fixed",
                  "while-loop over a boxed fixed-width counter with virtual "
                  "dispatch",
                  "micro/loop-family/boxed-fixed", {"micro"},
                  [] { loop_boxed_fixed(); }),
      boxed_spec, "53.6",
      "Boxing plus dynamic dispatch per step; fewer invocations per repeat "
      "to keep batch runs affordable."));

  entries.push_back(loop_entry(
      "micro/loop-family/unrolled-vs-range",
      action_unit("micro/loop-family/unrolled",
                  "half-length counted loop with a manual second step",
                  "micro/loop-family/unrolled", {"micro"}, [] { loop_unrolled(); }),
      micro_spec, "1.14", "Manual two-step unroll."));

  entries.push_back(loop_entry(
      "micro/loop-family/iter-counter-vs-range",
      action_unit("micro/loop-family/iter-counter",
                  "drains an opaque counter stream until the limit",
                  "micro/loop-family/iter-counter", {"micro"},
                  [] { loop_iter_counter(); }),
      micro_spec, "2.3", "Counter behind an opaque per-step call."));

  // --- 13: first set bin ------------------------------------------------
  {
    VariantPair pair;
    pair.id = "micro/generator-vs-loop";
    pair.baseline = histogram_unit(
        "micro/first-nonzero/generator",
        "first set bin via a lazy enumerate/filter pipeline clamped to the "
        "band width",
        "micro/first-nonzero/generator", {"micro"},
        [](const band_view& h) { return first_nonzero_pipeline(h); });
    pair.candidate = histogram_unit(
        "micro/first-nonzero/loop",
        "first set bin via an explicit fixed-index loop with early return",
        "micro/first-nonzero/loop", {"micro"},
        [](const band_view& h) { return first_nonzero_loop(h); });
    pair.dataset_hint = schema::histogram;
    pair.exposure_pattern = "first_nonzero_ladder";
    pair.expected_equivalent = true;
    pair.compare = compare_mode::outcome;
    pair.default_spec = micro_spec;
    pair.notes =
        "Equivalent on full-width bands (the fixture's contract); the loop "
        "raises on short bands where the pipeline returns null.";
    CorpusEntry entry;
    entry.pair = std::move(pair);
    entry.category = category::micro;
    entry.reference = ReferenceExpectation{
        "g_by_position", "4.6, 2.18, 1.46, 1.34, 1.33 at depths 1-256",
        "informational off the reference host"};
    entries.push_back(std::move(entry));
  }

  // --- 14: assignment shapes ---------------------------------------------
  {
    VariantPair pair;
    pair.id = "micro/assignment";
    pair.baseline = action_unit(
        "micro/assignment/sequential", "ten variables bound one at a time",
        "micro/assignment/sequential", {"micro"}, [] { assign_sequential(); });
    pair.candidate = action_unit(
        "micro/assignment/tuple",
        "ten variables bound through one destructured tuple",
        "micro/assignment/tuple", {"micro"}, [] { assign_tuple(); });
    pair.dataset_hint = schema::none;
    pair.exposure_pattern = "none";
    pair.expected_equivalent = true;
    pair.compare = compare_mode::outcome;
    pair.default_spec = micro_spec;
    pair.notes.clear();
    CorpusEntry entry;
    entry.pair = std::move(pair);
    entry.category = category::micro;
    entry.reference = ReferenceExpectation{
        "g", "1.1", "informational off the reference host"};
    entries.push_back(std::move(entry));
  }

  // --- 15: conditional shapes ---------------------------------------------
  {
    VariantPair pair;
    pair.id = "micro/ternary-vs-if";
    pair.baseline = scalar_pair_unit(
        "micro/conditional/ternary",
        "pair-returning conditional expression whose false branch nests the "
        "sentinel pair",
        "micro/conditional/ternary", {"micro"},
        [](std::int64_t a, std::int64_t b) { return cond_ternary(a, b); });
    pair.candidate = scalar_pair_unit(
        "micro/conditional/if-else",
        "explicit if/else returning a flat pair on both paths",
        "micro/conditional/if-else", {"micro"},
        [](std::int64_t a, std::int64_t b) { return cond_explicit_if(a, b); });
    pair.dataset_hint = schema::scalar_pair;
    pair.exposure_pattern = "conditional_cases";
    pair.expected_equivalent = false;
    pair.compare = compare_mode::speed_only;
    pair.default_spec = micro_spec;
    pair.notes =
        "The two shapes return different values on every input (nested "
        "sentinel vs swapped branch sense); the pair exists for the timing "
        "comparison only.";
    CorpusEntry entry;
    entry.pair = std::move(pair);
    entry.category = category::micro;
    entry.reference = ReferenceExpectation{
        "g", "1.02 (min-gt-max), 1.29 (min-lt-max)",
        "informational off the reference host"};
    entries.push_back(std::move(entry));
  }

  // --- 16: list building ----------------------------------------------
  {
    VariantPair pair;
    pair.id = "micro/append-vs-comprehension";
    pair.baseline = builder_unit(
        "micro/build/append", "builds the pair list one append at a time",
        "micro/build/append", {"micro"}, [] { return build_append(); });
    pair.candidate = builder_unit(
        "micro/build/comprehension",
        "builds the pair list in one comprehension-style expression",
        "micro/build/comprehension", {"micro"},
        [] { return build_comprehension(); });
    pair.dataset_hint = schema::none;
    pair.exposure_pattern = "none";
    pair.expected_equivalent = true;
    pair.compare = compare_mode::outcome;
    pair.default_spec = micro_spec;
    pair.notes.clear();
    CorpusEntry entry;
    entry.pair = std::move(pair);
    entry.category = category::micro;
    entry.reference = ReferenceExpectation{
        "g", "~1.0", "informational off the reference host"};
    entries.push_back(std::move(entry));
  }

  // --- 17: identity control ----------------------------------------------
  {
    VariantPair pair;
    pair.id = "control/identity";
    pair.baseline = histogram_unit(
        "control/sum-a", "identity control: built-in band totals",
        "synthetic", {"control"},
        [](const band_view& h) { return count_sum(h); });
    pair.candidate = histogram_unit(
        "control/sum-b",
        "identity control: the same band totals under a second id",
        "synthetic", {"control"},
        [](const band_view& h) { return count_sum(h); });
    pair.dataset_hint = schema::histogram;
    pair.exposure_pattern = pattern::uniform_dense;
    pair.expected_equivalent = true;
    pair.compare = compare_mode::outcome;
    pair.default_spec = band_spec;
    pair.notes =
        "Same computation on both sides; measured g should hover around "
        "1.0 and flags a broken harness when it does not.";
    CorpusEntry entry;
    entry.pair = std::move(pair);
    entry.category = category::control;
    entry.exposure_bands = 1;
    entry.reference =
        ReferenceExpectation{"g", "1.0", "sanity: median g within [0.8, 1.25]"};
    entries.push_back(std::move(entry));
  }

  return entries;
}

}  // namespace detail

inline const std::vector<CorpusEntry>& catalog() {
  static const std::vector<CorpusEntry> entries = detail::build_catalog();
  return entries;
}

inline void register_catalog(PairRegistry& registry) {
  for (const CorpusEntry& entry : catalog()) registry.register_pair(entry.pair);
}

inline const CorpusEntry* find_entry(const std::string& pair_id) {
  for (const CorpusEntry& entry : catalog())
    if (entry.pair.id == pair_id) return &entry;
  return nullptr;
}

// Resolves the dataset a catalog entry is gated and measured against by
// default: a fixture for the fixture-backed entries, a generated dataset
// for pattern-backed ones, and an empty dataset for payload-free pairs.
// `items` applies to generated datasets only.
inline Dataset designated_dataset(const CorpusEntry& entry, std::uint64_t seed,
                                  std::int64_t items) {
  const std::string& exposure = entry.pair.exposure_pattern;
  if (exposure.empty() || exposure == "none") {
    Dataset dataset;
    dataset.id = "payload-free";
    dataset.schema = schema::none;
    return dataset;
  }
  if (exposure == "first_nonzero_ladder") return first_nonzero_ladder();
  if (exposure == "conditional_cases") return conditional_cases();
  if (exposure == "coeff_validation_cases") return coeff_validation_cases();
  PatternSpec spec;
  spec.pattern = exposure;
  spec.bands = entry.exposure_bands;
  spec.seed = seed;
  spec.items = items;
  return synth(spec);
}

}  // namespace varbench::corpus
