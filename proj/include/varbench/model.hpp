#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "varbench/errors.hpp"

namespace varbench {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Payloads
// ---------------------------------------------------------------------------

// Flat histogram: non-negative counts, one entry per bin. Multi-band
// histograms are stored concatenated (band b occupies [256*b, 256*(b+1))).
using Histogram = std::vector<std::int64_t>;

// Input for the conditional-return units: a precomputed (res_min, res_max).
struct ScalarPair {
  std::int64_t res_min = 0;
  std::int64_t res_max = 0;
  bool operator==(const ScalarPair&) const = default;
};

// Shape descriptor for one coefficient array: element count and rank.
struct CoeffArray {
  std::int64_t size = 0;
  std::int64_t ndim = 1;
  bool operator==(const CoeffArray&) const = default;
};

using CoeffList = std::vector<CoeffArray>;

using Payload = std::variant<std::monostate, Histogram, ScalarPair, CoeffList>;

namespace schema {
inline constexpr const char* none = "none";
inline constexpr const char* histogram = "histogram";
inline constexpr const char* scalar_pair = "scalar_pair";
inline constexpr const char* coeff_list = "coeff_list";
}  // namespace schema

inline std::string schema_of(const Payload& payload) {
  switch (payload.index()) {
    case 0: return schema::none;
    case 1: return schema::histogram;
    case 2: return schema::scalar_pair;
    default: return schema::coeff_list;
  }
}

inline json payload_to_json(const Payload& payload) {
  if (std::holds_alternative<std::monostate>(payload)) return nullptr;
  if (const auto* h = std::get_if<Histogram>(&payload)) return json(*h);
  if (const auto* p = std::get_if<ScalarPair>(&payload))
    return json{{"res_min", p->res_min}, {"res_max", p->res_max}};
  const auto& coeffs = std::get<CoeffList>(payload);
  json out = json::array();
  for (const auto& c : coeffs) out.push_back({{"ndim", c.ndim}, {"size", c.size}});
  return out;
}

inline Payload payload_from_json(const json& value) {
  if (value.is_null()) return std::monostate{};
  if (value.is_object()) {
    if (!value.contains("res_min") || !value.contains("res_max") || value.size() != 2)
      throw parse_error("payload object must have exactly res_min and res_max");
    return ScalarPair{value.at("res_min").get<std::int64_t>(),
                      value.at("res_max").get<std::int64_t>()};
  }
  if (!value.is_array()) throw parse_error("payload must be null, object, or array");
  if (!value.empty() && value.front().is_object()) {
    CoeffList coeffs;
    coeffs.reserve(value.size());
    for (const auto& entry : value) {
      if (!entry.is_object() || !entry.contains("size") || !entry.contains("ndim") ||
          entry.size() != 2)
        throw parse_error("coefficient entry must have exactly size and ndim");
      coeffs.push_back({entry.at("size").get<std::int64_t>(),
                        entry.at("ndim").get<std::int64_t>()});
    }
    return coeffs;
  }
  Histogram h;
  h.reserve(value.size());
  for (const auto& entry : value) {
    if (!entry.is_number_integer())
      throw parse_error("histogram bins must be integers");
    h.push_back(entry.get<std::int64_t>());
  }
  return h;
}

// ---------------------------------------------------------------------------
// Datasets
// ---------------------------------------------------------------------------

struct DatasetItem {
  std::string id;
  Payload payload;
  std::map<std::string, std::string> meta;
};

struct Dataset {
  std::string id;
  std::string schema = schema::none;
  std::vector<DatasetItem> items;  // item ids unique within the dataset
};

// Item id recorded for the single synthetic run of a payload-free pair.
inline constexpr const char* no_item_id = "\xE2\x88\x85";  // U+2205

// ---------------------------------------------------------------------------
// Timing spec
// ---------------------------------------------------------------------------

struct TimingSpec {
  std::int64_t repeat = 10;
  std::int64_t number = 1000;
  bool warmup = true;

  void validate() const {
    if (repeat < 1) throw contract_error("timing spec: repeat must be >= 1");
    if (number < 1) throw contract_error("timing spec: number must be >= 1");
  }

  bool operator==(const TimingSpec&) const = default;
};

// ---------------------------------------------------------------------------
// Executable units and pairs
// ---------------------------------------------------------------------------

// One callable variant. `run` produces the comparable outcome value; the
// timed loop calls `run_timed`, which performs the same computation but
// sinks the result through an optimization barrier instead of boxing it.
struct ExecutableUnit {
  std::string id;
  std::string description;
  std::string listing_ref;  // key into the stored source listings, or "synthetic"
  std::vector<std::string> tags;
  std::function<json(const Payload&)> run;
  std::function<void(const Payload&)> run_timed;
};

namespace compare_mode {
inline constexpr const char* outcome = "outcome";
inline constexpr const char* speed_only = "speed_only";
}  // namespace compare_mode

struct VariantPair {
  std::string id;
  ExecutableUnit baseline;
  ExecutableUnit candidate;
  std::string dataset_hint = schema::none;  // payload schema both units expect
  std::string exposure_pattern;             // dataset pattern used by run-all
  bool expected_equivalent = true;
  std::string compare = compare_mode::outcome;
  TimingSpec default_spec;
  std::string notes;
};

class PairRegistry {
 public:
  void register_pair(VariantPair pair) {
    if (pair.id.empty()) throw contract_error("pair id must be non-empty");
    if (pair.baseline.id.empty() || pair.candidate.id.empty())
      throw contract_error("pair " + pair.id + ": unit ids must be non-empty");
    if (pair.baseline.id == pair.candidate.id)
      throw contract_error("pair " + pair.id +
                           ": baseline and candidate must have distinct ids");
    if (pairs_.contains(pair.id))
      throw contract_error("duplicate pair id: " + pair.id);
    pairs_.emplace(pair.id, std::move(pair));
  }

  const VariantPair& lookup(const std::string& id) const {
    auto it = pairs_.find(id);
    if (it == pairs_.end()) throw contract_error("unknown pair id: " + id);
    return it->second;
  }

  bool contains(const std::string& id) const { return pairs_.contains(id); }

  std::vector<std::string> ids() const {
    std::vector<std::string> out;
    out.reserve(pairs_.size());
    for (const auto& [id, pair] : pairs_) out.push_back(id);
    return out;  // std::map iterates sorted
  }

  std::size_t size() const { return pairs_.size(); }

 private:
  std::map<std::string, VariantPair> pairs_;
};

// ---------------------------------------------------------------------------
// Duration helpers
// ---------------------------------------------------------------------------

// Smallest run total; the per-unit timing estimate t = min_r t_r.
inline double min_total(const std::vector<double>& totals) {
  if (totals.empty()) throw contract_error("min_total: no run totals");
  return *std::min_element(totals.begin(), totals.end());
}

// Improvement factor g = t_baseline / t_candidate. Values above 1 mean the
// candidate is faster.
inline double speedup(double t_baseline, double t_candidate) {
  if (t_baseline <= 0.0 || t_candidate <= 0.0)
    throw contract_error("speedup: durations must be positive");
  return t_baseline / t_candidate;
}

// ---------------------------------------------------------------------------
// Measurement records
// ---------------------------------------------------------------------------

// One (pair, dataset item) measurement. Exactly nine fields persist to
// JSONL; resolution_limited is in-memory state surfaced via run metadata.
struct MeasurementRecord {
  std::string pair_id;
  std::string item_id;
  std::int64_t repeat = 0;
  std::int64_t number = 0;
  std::vector<double> baseline_totals;
  std::vector<double> candidate_totals;
  double t_baseline = 0.0;
  double t_candidate = 0.0;
  double g = 0.0;
  bool resolution_limited = false;

  static MeasurementRecord make(std::string pair_id, std::string item_id,
                                const TimingSpec& spec,
                                std::vector<double> baseline_totals,
                                std::vector<double> candidate_totals,
                                bool resolution_limited = false) {
    spec.validate();
    if (item_id.empty()) throw contract_error("record: item_id must be non-empty");
    if (std::ssize(baseline_totals) != spec.repeat ||
        std::ssize(candidate_totals) != spec.repeat)
      throw contract_error("record: totals length must equal repeat");
    for (double t : baseline_totals)
      if (t <= 0.0) throw contract_error("record: non-positive baseline total");
    for (double t : candidate_totals)
      if (t <= 0.0) throw contract_error("record: non-positive candidate total");
    MeasurementRecord rec;
    rec.pair_id = std::move(pair_id);
    rec.item_id = std::move(item_id);
    rec.repeat = spec.repeat;
    rec.number = spec.number;
    rec.baseline_totals = std::move(baseline_totals);
    rec.candidate_totals = std::move(candidate_totals);
    rec.t_baseline = min_total(rec.baseline_totals);
    rec.t_candidate = min_total(rec.candidate_totals);
    rec.g = speedup(rec.t_baseline, rec.t_candidate);
    rec.resolution_limited = resolution_limited;
    return rec;
  }

  json to_json() const {
    return json{{"pair_id", pair_id},
                {"item_id", item_id},
                {"repeat", repeat},
                {"number", number},
                {"baseline_totals", baseline_totals},
                {"candidate_totals", candidate_totals},
                {"t_baseline", t_baseline},
                {"t_candidate", t_candidate},
                {"g", g}};
  }

  // Strict load: unknown fields, missing fields, or derived values that do
  // not match a recomputation from the totals are all rejected.
  static MeasurementRecord from_json(const json& value) {
    static const std::vector<std::string> fields = {
        "pair_id", "item_id", "repeat", "number", "baseline_totals",
        "candidate_totals", "t_baseline", "t_candidate", "g"};
    if (!value.is_object()) throw parse_error("record must be a JSON object");
    for (const auto& field : fields)
      if (!value.contains(field)) throw parse_error("record missing field: " + field);
    if (value.size() != fields.size())
      throw parse_error("record has unexpected extra fields");

    MeasurementRecord rec;
    try {
      rec.pair_id = value.at("pair_id").get<std::string>();
      rec.item_id = value.at("item_id").get<std::string>();
      rec.repeat = value.at("repeat").get<std::int64_t>();
      rec.number = value.at("number").get<std::int64_t>();
      rec.baseline_totals = value.at("baseline_totals").get<std::vector<double>>();
      rec.candidate_totals = value.at("candidate_totals").get<std::vector<double>>();
      rec.t_baseline = value.at("t_baseline").get<double>();
      rec.t_candidate = value.at("t_candidate").get<double>();
      rec.g = value.at("g").get<double>();
    } catch (const json::exception& e) {
      throw parse_error(std::string("record field has wrong type: ") + e.what());
    }

    if (rec.pair_id.empty()) throw parse_error("record: empty pair_id");
    if (rec.item_id.empty()) throw parse_error("record: empty item_id");
    if (rec.repeat < 1 || rec.number < 1)
      throw parse_error("record: repeat and number must be >= 1");
    if (std::ssize(rec.baseline_totals) != rec.repeat ||
        std::ssize(rec.candidate_totals) != rec.repeat)
      throw parse_error("record: totals length disagrees with repeat");
    for (double t : rec.baseline_totals)
      if (t <= 0.0) throw parse_error("record: non-positive baseline total");
    for (double t : rec.candidate_totals)
      if (t <= 0.0) throw parse_error("record: non-positive candidate total");
    if (rec.t_baseline != min_total(rec.baseline_totals))
      throw parse_error("record: t_baseline does not equal min of baseline_totals");
    if (rec.t_candidate != min_total(rec.candidate_totals))
      throw parse_error("record: t_candidate does not equal min of candidate_totals");
    if (rec.g != speedup(rec.t_baseline, rec.t_candidate))
      throw parse_error("record: g does not equal t_baseline / t_candidate");
    return rec;
  }
};

inline void write_records(std::ostream& out,
                          const std::vector<MeasurementRecord>& records) {
  for (const auto& rec : records) out << rec.to_json().dump() << '\n';
}

inline std::vector<MeasurementRecord> read_records(std::istream& in) {
  std::vector<MeasurementRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json value;
    try {
      value = json::parse(line);
    } catch (const json::exception& e) {
      throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
    }
    try {
      records.push_back(MeasurementRecord::from_json(value));
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

}  // namespace varbench
