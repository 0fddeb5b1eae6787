#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "varbench/errors.hpp"
#include "varbench/model.hpp"

namespace varbench {

// ---------------------------------------------------------------------------
// Floor-bucketed histograms and summary statistics
// ---------------------------------------------------------------------------

// Each improvement factor g contributes one count to bucket floor(g).
// Buckets with zero count are omitted.
inline std::map<std::int64_t, std::int64_t> floor_histogram(
    const std::vector<double>& gs) {
  std::map<std::int64_t, std::int64_t> buckets;
  for (double g : gs) {
    if (!(g > 0.0)) throw contract_error("floor_histogram: g must be positive");
    ++buckets[static_cast<std::int64_t>(std::floor(g))];
  }
  return buckets;
}

struct StatsSummary {
  std::int64_t count = 0;
  double mean = 0.0;
  double std_dev = 0.0;  // population standard deviation
  double min_g = 0.0;
  double max_g = 0.0;
  std::map<std::int64_t, std::int64_t> histogram;

  json to_json() const {
    json hist = json::array();
    for (const auto& [bucket, n] : histogram)
      hist.push_back(json::array({bucket, n}));
    return json{{"count", count},   {"mean", mean},   {"std", std_dev},
                {"min_g", min_g},   {"max_g", max_g}, {"histogram", hist}};
  }

  static StatsSummary from_json(const json& value) {
    StatsSummary s;
    try {
      s.count = value.at("count").get<std::int64_t>();
      s.mean = value.at("mean").get<double>();
      s.std_dev = value.at("std").get<double>();
      s.min_g = value.at("min_g").get<double>();
      s.max_g = value.at("max_g").get<double>();
      for (const auto& row : value.at("histogram")) {
        if (!row.is_array() || row.size() != 2)
          throw parse_error("stats histogram rows must be [bucket, count]");
        s.histogram[row[0].get<std::int64_t>()] = row[1].get<std::int64_t>();
      }
    } catch (const json::exception& e) {
      throw parse_error(std::string("malformed stats summary: ") + e.what());
    }
    std::int64_t total = 0;
    for (const auto& [bucket, n] : s.histogram) total += n;
    if (total != s.count)
      throw parse_error("stats summary: histogram counts do not sum to count");
    return s;
  }

  // CSV rendering of the histogram, zero-count buckets omitted.
  std::string histogram_csv() const {
    std::string out = "bucket,count\n";
    for (const auto& [bucket, n] : histogram)
      out += std::to_string(bucket) + "," + std::to_string(n) + "\n";
    return out;
  }
};

inline StatsSummary summary(const std::vector<double>& gs) {
  if (gs.empty()) throw contract_error("summary: empty input");
  StatsSummary s;
  s.count = std::ssize(gs);
  double total = 0.0;
  for (double g : gs) total += g;
  s.mean = total / static_cast<double>(gs.size());
  double sq = 0.0;
  for (double g : gs) {
    const double d = g - s.mean;
    sq += d * d;
  }
  s.std_dev = std::sqrt(sq / static_cast<double>(gs.size()));
  s.min_g = *std::min_element(gs.begin(), gs.end());
  s.max_g = *std::max_element(gs.begin(), gs.end());
  s.histogram = floor_histogram(gs);
  return s;
}

// ---------------------------------------------------------------------------
// Correlation
// ---------------------------------------------------------------------------

inline double pearson(const std::vector<double>& xs,
                      const std::vector<double>& ys) {
  if (xs.size() != ys.size())
    throw contract_error("pearson: series lengths differ");
  if (xs.size() < 2) throw contract_error("pearson: need at least 2 points");
  const auto n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (double x : xs) mx += x;
  for (double y : ys) my += y;
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw contract_error("pearson: first series is constant");
  if (syy == 0.0) throw contract_error("pearson: second series is constant");
  const double r = sxy / (std::sqrt(sxx) * std::sqrt(syy));
  return std::clamp(r, -1.0, 1.0);
}

struct CorrelationResult {
  double r = 0.0;
  std::vector<std::pair<double, double>> scatter;  // (t_baseline, g)
};

// Pearson correlation between baseline runtime and improvement factor,
// plus the scatter points for reporting.
inline CorrelationResult correlate_runtime_speedup(
    const std::vector<MeasurementRecord>& records) {
  if (records.size() < 2)
    throw contract_error("correlate_runtime_speedup: need at least 2 records");
  std::vector<double> ts, gs;
  CorrelationResult result;
  ts.reserve(records.size());
  gs.reserve(records.size());
  for (const auto& rec : records) {
    ts.push_back(rec.t_baseline);
    gs.push_back(rec.g);
    result.scatter.emplace_back(rec.t_baseline, rec.g);
  }
  result.r = pearson(ts, gs);
  return result;
}

// ---------------------------------------------------------------------------
// Record loading and fixture replay
// ---------------------------------------------------------------------------

inline std::vector<MeasurementRecord> load_records(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open records file: " + path.string());
  try {
    return read_records(in);
  } catch (const parse_error& e) {
    throw parse_error(path.string() + ": " + e.what());
  }
}

// A previously published bucket/count distribution, replayable through the
// statistics pipeline.
struct ReplayFixture {
  std::vector<std::pair<std::int64_t, std::int64_t>> rows;  // (bucket, count)

  void validate() const {
    std::set<std::int64_t> seen;
    for (const auto& [bucket, count] : rows) {
      if (bucket < 0) throw contract_error("replay fixture: negative bucket");
      if (count < 0) throw contract_error("replay fixture: negative count");
      if (!seen.insert(bucket).second)
        throw contract_error("replay fixture: duplicate bucket");
    }
  }

  std::int64_t total_count() const {
    std::int64_t total = 0;
    for (const auto& [bucket, count] : rows) total += count;
    return total;
  }
};

// Approximates the fixture's raw values by bucket midpoints: count copies
// of (bucket + 0.5) per row, bounding the per-observation error by 0.5.
inline std::vector<double> expand_fixture(const ReplayFixture& fixture) {
  fixture.validate();
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(fixture.total_count()));
  for (const auto& [bucket, count] : fixture.rows)
    values.insert(values.end(), static_cast<std::size_t>(count),
                  static_cast<double>(bucket) + 0.5);
  return values;
}

}  // namespace varbench
