#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "varbench/errors.hpp"
#include "varbench/model.hpp"

namespace varbench {

// ---------------------------------------------------------------------------
// Outcomes
// ---------------------------------------------------------------------------

// What one unit invocation produced: either a value or a captured error.
// Errors are data here, not control flow; the gate compares them by
// (error_class, message), verbatim.
struct Outcome {
  enum class Kind { value, error };

  Kind kind = Kind::value;
  json value;  // populated when kind == value
  std::string error_class;
  std::string error_message;

  static Outcome of_value(json v) {
    Outcome o;
    o.kind = Kind::value;
    o.value = std::move(v);
    return o;
  }

  static Outcome of_error(std::string error_class, std::string message) {
    Outcome o;
    o.kind = Kind::error;
    o.error_class = std::move(error_class);
    o.error_message = std::move(message);
    return o;
  }

  bool is_error() const { return kind == Kind::error; }

  // Canonical rendering, truncated to 256 characters, used in
  // counterexample reports.
  std::string digest() const {
    std::string rendered = is_error() ? error_class + ": " + error_message
                                      : value.dump();
    if (rendered.size() > 256) rendered.resize(256);
    return rendered;
  }
};

// ---------------------------------------------------------------------------
// Comparators
// ---------------------------------------------------------------------------

struct Comparator {
  std::string id;
  std::function<bool(const json&, const json&)> equal_values;
};

// Deep, order-sensitive, numerically exact structural equality.
inline Comparator exact_comparator() {
  return Comparator{"exact",
                    [](const json& a, const json& b) { return a == b; }};
}

// Two outcomes match iff both are values that compare equal, or both are
// errors with the same class and the same message.
inline bool outcomes_match(const Outcome& a, const Outcome& b,
                           const Comparator& comparator) {
  if (a.kind != b.kind) return false;
  if (a.is_error())
    return a.error_class == b.error_class && a.error_message == b.error_message;
  return comparator.equal_values(a.value, b.value);
}

// ---------------------------------------------------------------------------
// Differential execution
// ---------------------------------------------------------------------------

// Runs the unit once, capturing any raised error as an error outcome.
inline Outcome run_once(const ExecutableUnit& unit, const Payload& payload) {
  if (!unit.run) throw contract_error("unit " + unit.id + " has no run surface");
  try {
    return Outcome::of_value(unit.run(payload));
  } catch (const harness_error& e) {
    return Outcome::of_error(e.error_class(), e.what());
  } catch (const contract_error&) {
    throw;  // harness misuse, not a unit outcome
  } catch (const std::exception& e) {
    return Outcome::of_error(errclass::host_error, e.what());
  }
}

struct Counterexample {
  std::string item_id;
  std::string baseline_outcome_digest;
  std::string candidate_outcome_digest;
};

struct CorrectnessReport {
  std::string pair_id;
  std::string comparator_id;
  std::int64_t total = 0;
  std::int64_t mismatched = 0;
  double fraction = 0.0;  // mismatched / total; 0 for an empty comparison
  std::vector<Counterexample> counterexamples;  // first mismatches, capped

  static constexpr std::size_t counterexample_cap = 10;

  json to_json() const {
    json examples = json::array();
    for (const auto& ce : counterexamples)
      examples.push_back(
          {{"item_id", ce.item_id},
           {"baseline_outcome_digest", ce.baseline_outcome_digest},
           {"candidate_outcome_digest", ce.candidate_outcome_digest}});
    return json{{"pair_id", pair_id},
                {"comparator_id", comparator_id},
                {"total", total},
                {"mismatched", mismatched},
                {"fraction", fraction},
                {"counterexamples", examples}};
  }
};

// Differential correctness evaluation: both units run on every item, in
// dataset order; outcomes are compared; the first mismatches (up to the
// cap) become counterexamples. A payload-free pair with an empty dataset
// is compared once with no payload.
inline CorrectnessReport gate_pair(const VariantPair& pair,
                                   const Dataset& dataset,
                                   const Comparator& comparator = exact_comparator()) {
  if (dataset.items.empty() && pair.dataset_hint != schema::none)
    throw contract_error("pair " + pair.id +
                         " needs a non-empty dataset with schema '" +
                         pair.dataset_hint + "'");
  if (!dataset.items.empty() && dataset.schema != pair.dataset_hint)
    throw contract_error("pair " + pair.id + " expects payload schema '" +
                         pair.dataset_hint + "' but the dataset has '" +
                         dataset.schema + "'");

  CorrectnessReport report;
  report.pair_id = pair.id;
  report.comparator_id = comparator.id;

  auto compare_item = [&](const std::string& item_id, const Payload& payload) {
    const Outcome baseline = run_once(pair.baseline, payload);
    const Outcome candidate = run_once(pair.candidate, payload);
    ++report.total;
    if (!outcomes_match(baseline, candidate, comparator)) {
      ++report.mismatched;
      if (report.counterexamples.size() < CorrectnessReport::counterexample_cap)
        report.counterexamples.push_back(
            {item_id, baseline.digest(), candidate.digest()});
    }
  };

  if (dataset.items.empty())
    compare_item(no_item_id, std::monostate{});
  else
    for (const auto& item : dataset.items) compare_item(item.id, item.payload);

  report.fraction =
      report.total == 0
          ? 0.0
          : static_cast<double>(report.mismatched) / static_cast<double>(report.total);
  return report;
}

}  // namespace varbench
