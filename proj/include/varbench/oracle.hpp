#pragma once

// Independent brute-force reference implementations. These are written
// against the plain definitions (per-band extrema, per-band sums, first
// set bin) with no helpers shared with the corpus units; tests compare
// corpus baselines against them to catch transliteration bugs, and the
// freeze tool persists their outputs as fixtures before anything else is
// trusted. Clarity over speed throughout.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "varbench/errors.hpp"
#include "varbench/model.hpp"

namespace varbench::oracle {

inline constexpr std::size_t band_width = 256;

// Per-band (min_index, max_index) of the set bins, indices relative to the
// band start; (255, 0) for a band with no set bins. Bands start at offsets
// 0, 256, ...; a final short band is scanned as far as it reaches. Total on
// every input.
inline json ref_extrema(const Histogram& h) {
  json out = json::array();
  for (std::size_t start = 0; start < h.size(); start += band_width) {
    std::int64_t lo = 255;
    std::int64_t hi = 0;
    const std::size_t end = std::min(h.size(), start + band_width);
    for (std::size_t i = start; i < end; ++i) {
      if (h[i] != 0) {
        const auto rel = static_cast<std::int64_t>(i - start);
        if (rel < lo) lo = rel;
        if (rel > hi) hi = rel;
      }
    }
    out.push_back(json::array({lo, hi}));
  }
  return out;
}

// Per-band sums; the final band may be short.
inline json ref_count(const Histogram& h) {
  json out = json::array();
  for (std::size_t start = 0; start < h.size(); start += band_width) {
    std::int64_t total = 0;
    const std::size_t end = std::min(h.size(), start + band_width);
    for (std::size_t i = start; i < end; ++i) total += h[i];
    out.push_back(total);
  }
  return out;
}

// Index of the first set bin within the first band, or null when the band
// has no set bin.
inline json ref_first_nonzero(const Histogram& h) {
  const std::size_t end = std::min(h.size(), band_width);
  for (std::size_t i = 0; i < end; ++i)
    if (h[i] != 0) return static_cast<std::int64_t>(i);
  return nullptr;
}

// ---------------------------------------------------------------------------
// Frozen reference fixtures
// ---------------------------------------------------------------------------

struct ReferenceResult {
  std::string case_id;
  std::string input_digest;
  json expected;

  json to_json() const {
    return json{{"case_id", case_id},
                {"expected", expected},
                {"input_digest", input_digest}};
  }

  static ReferenceResult from_json(const json& value) {
    ReferenceResult result;
    result.case_id = value.at("case_id").get<std::string>();
    result.input_digest = value.at("input_digest").get<std::string>();
    result.expected = value.at("expected");
    return result;
  }
};

inline std::string input_digest(const Payload& payload) {
  std::string dump = payload_to_json(payload).dump();
  if (dump.size() > 256) dump.resize(256);
  return dump;
}

// Applies the named reference implementation to every item of a histogram
// dataset.
inline std::vector<ReferenceResult> reference_results(const std::string& which,
                                                      const Dataset& dataset) {
  std::vector<ReferenceResult> results;
  results.reserve(dataset.items.size());
  for (const auto& item : dataset.items) {
    const auto* h = std::get_if<Histogram>(&item.payload);
    if (h == nullptr)
      throw contract_error("reference_results: histogram payload required");
    ReferenceResult result;
    result.case_id = item.id;
    result.input_digest = input_digest(item.payload);
    if (which == "extrema")
      result.expected = ref_extrema(*h);
    else if (which == "count")
      result.expected = ref_count(*h);
    else if (which == "first_nonzero")
      result.expected = ref_first_nonzero(*h);
    else
      throw contract_error("reference_results: unknown oracle " + which);
    results.push_back(std::move(result));
  }
  return results;
}

inline void write_reference_jsonl(const std::filesystem::path& path,
                                  const std::vector<ReferenceResult>& results) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw contract_error("cannot open fixture file: " + path.string());
  for (const auto& result : results) out << result.to_json().dump() << '\n';
}

inline std::vector<ReferenceResult> read_reference_jsonl(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open fixture file: " + path.string());
  std::vector<ReferenceResult> results;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      results.push_back(ReferenceResult::from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw parse_error(path.string() + " line " + std::to_string(line_no) +
                        ": " + e.what());
    }
  }
  return results;
}

}  // namespace varbench::oracle
