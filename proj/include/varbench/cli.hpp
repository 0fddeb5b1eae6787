#pragma once

// Command-line orchestration: ties gate -> bench -> stats -> report into
// campaigns and exposes each stage as a subcommand. Exit codes are stable
// across commands: 0 success (or expected failure), 1 gate-or-measurement
// failure, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "varbench/codesize.hpp"
#include "varbench/corpus/corpus.hpp"
#include "varbench/data.hpp"
#include "varbench/errors.hpp"
#include "varbench/gate.hpp"
#include "varbench/model.hpp"
#include "varbench/report.hpp"
#include "varbench/stats.hpp"
#include "varbench/timing.hpp"

namespace varbench::cli {

struct GlobalOptions {
  std::uint64_t seed = 1;
  std::filesystem::path output_dir = ".";
  bool json_output = false;
};

// ---------------------------------------------------------------------------
// Small helpers
// ---------------------------------------------------------------------------

inline std::string sanitize_id(const std::string& id) {
  std::string out = id;
  for (char& c : out)
    if (c == '/' || c == '\\' || c == ' ') c = '-';
  return out;
}

inline void write_text_file(const std::filesystem::path& path,
                            const std::string& text) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open for writing: " + path.string());
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("failed while writing: " + path.string());
}

inline bool known_pattern(const std::string& name) {
  static const std::set<std::string> names = {
      pattern::edge_concentrated,   pattern::uniform_dense,
      pattern::empty_band,          pattern::single_bin,
      pattern::two_band_tail,       pattern::non_multiple_length,
      pattern::grayscale_like,      pattern::coeff_mixed};
  return names.count(name) > 0;
}

inline std::optional<Dataset> builtin_fixture(const std::string& name) {
  if (name == "first_nonzero_ladder") return corpus::first_nonzero_ladder();
  if (name == "conditional_cases") return corpus::conditional_cases();
  if (name == "coeff_validation_cases") return corpus::coeff_validation_cases();
  return std::nullopt;
}

// Resolves a dataset reference: an existing file is loaded, a built-in
// fixture name returns that fixture, a pattern name is synthesized, and an
// empty reference falls back to the pair's designated dataset.
inline Dataset resolve_dataset(const std::string& ref,
                               const corpus::CorpusEntry* entry,
                               std::uint64_t seed, std::int64_t items,
                               std::int64_t bands) {
  if (ref.empty()) {
    if (entry == nullptr)
      throw usage_error("no dataset given and no pair to derive one from");
    return corpus::designated_dataset(*entry, seed, items);
  }
  if (ref == "none") {
    Dataset dataset;
    dataset.id = "payload-free";
    return dataset;
  }
  if (std::filesystem::exists(ref)) return load_dataset(ref);
  if (std::optional<Dataset> fixture = builtin_fixture(ref)) return *fixture;
  if (known_pattern(ref)) {
    PatternSpec spec;
    spec.pattern = ref;
    spec.bands = bands > 0 ? bands
                           : (entry != nullptr ? entry->exposure_bands : 1);
    spec.seed = seed;
    spec.items = items;
    return synth(spec);
  }
  throw usage_error("unresolvable dataset reference: " + ref +
                    " (not a file, fixture, or pattern name)");
}

struct GSpread {
  double min_g = 0.0;
  double median_g = 0.0;
  double max_g = 0.0;
};

inline GSpread g_spread(const std::vector<MeasurementRecord>& records) {
  std::vector<double> gs;
  gs.reserve(records.size());
  for (const auto& rec : records) gs.push_back(rec.g);
  std::sort(gs.begin(), gs.end());
  GSpread spread;
  spread.min_g = gs.front();
  spread.max_g = gs.back();
  const std::size_t mid = gs.size() / 2;
  spread.median_g =
      gs.size() % 2 == 1 ? gs[mid] : 0.5 * (gs[mid - 1] + gs[mid]);
  return spread;
}

inline void write_record_artifacts(const std::filesystem::path& records_path,
                                   const std::vector<MeasurementRecord>& records,
                                   const Dataset& dataset,
                                   const TimingSpec& spec,
                                   std::uint64_t seed) {
  std::ostringstream lines;
  write_records(lines, records);
  write_text_file(records_path, lines.str());

  json limited = json::array();
  for (const auto& rec : records)
    if (rec.resolution_limited) limited.push_back(rec.item_id);
  json meta{{"pair_id", records.empty() ? "" : records.front().pair_id},
            {"dataset_id", dataset.id},
            {"schema", dataset.schema},
            {"record_count", records.size()},
            {"repeat", spec.repeat},
            {"number", spec.number},
            {"warmup", spec.warmup},
            {"seed", seed},
            {"resolution_limited_items", limited}};
  std::filesystem::path meta_path = records_path;
  meta_path.replace_extension(".meta.json");
  write_text_file(meta_path, meta.dump(2) + "\n");
}

// Code-size delta rows for a pair whose listings the token backend can see.
inline std::vector<SizeDeltaRow> size_rows_for(const std::string& pair_id) {
  std::vector<SizeDeltaRow> rows;
  const corpus::CorpusEntry* entry = corpus::find_entry(pair_id);
  if (entry == nullptr) return rows;
  const TokenSizeBackend backend(&corpus::listings());
  const CodeSizeReport baseline = analyze(entry->pair.baseline, backend);
  const CodeSizeReport candidate = analyze(entry->pair.candidate, backend);
  if (baseline.status != "ok" || candidate.status != "ok") return rows;
  SizeDeltaRow row;
  row.baseline_id = entry->pair.baseline.id;
  row.candidate_id = entry->pair.candidate.id;
  row.backend_id = baseline.backend_id;
  row.size_unit = baseline.size_unit;
  row.baseline_size = baseline.total_size;
  row.candidate_size = candidate.total_size;
  row.delta = compare_sizes(baseline, candidate);
  row.reference_baseline =
      reference_size_for(entry->pair.baseline.listing_ref);
  row.reference_candidate =
      reference_size_for(entry->pair.candidate.listing_ref);
  rows.push_back(row);
  return rows;
}

inline ReportData build_report_data(const std::vector<MeasurementRecord>& records,
                                    std::string source, std::string title) {
  std::vector<double> gs;
  gs.reserve(records.size());
  std::set<std::string> pair_ids;
  for (const auto& rec : records) {
    gs.push_back(rec.g);
    pair_ids.insert(rec.pair_id);
  }
  ReportData data;
  data.stats = summary(gs);
  data.source = std::move(source);
  if (!title.empty())
    data.title = std::move(title);
  else if (pair_ids.size() == 1)
    data.title = *pair_ids.begin();
  else
    data.title = "measurement report";
  try {
    CorrelationResult corr = correlate_runtime_speedup(records);
    data.correlation_r = corr.r;
    data.scatter = std::move(corr.scatter);
  } catch (const contract_error&) {
    // Degenerate series (constant, or a single record): scatter still
    // renders, the correlation coefficient is simply omitted.
    for (const auto& rec : records)
      data.scatter.emplace_back(rec.t_baseline, rec.g);
  }
  if (pair_ids.size() == 1) data.sizes = size_rows_for(*pair_ids.begin());
  return data;
}

// ---------------------------------------------------------------------------
// Unified diff (line-based longest-common-subsequence)
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

struct diff_op {
  char tag;  // ' ' keep, '-' delete from a, '+' insert from b
  std::size_t a_index;
  std::size_t b_index;
};

inline std::vector<diff_op> diff_ops(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<std::vector<std::int32_t>> lcs(
      n + 1, std::vector<std::int32_t>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = m; j-- > 0;)
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1
                               : std::max(lcs[i + 1][j], lcs[i][j + 1]);
  std::vector<diff_op> ops;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n && j < m) {
    if (a[i] == b[j]) {
      ops.push_back({' ', i, j});
      ++i;
      ++j;
    } else if (lcs[i + 1][j] >= lcs[i][j + 1]) {
      ops.push_back({'-', i, j});
      ++i;
    } else {
      ops.push_back({'+', i, j});
      ++j;
    }
  }
  for (; i < n; ++i) ops.push_back({'-', i, j});
  for (; j < m; ++j) ops.push_back({'+', i, j});
  return ops;
}

}  // namespace detail

// Classic unified diff with three lines of context; an empty string when
// the inputs are line-identical.
inline std::string unified_diff(const std::string& a_text,
                                const std::string& b_text,
                                const std::string& a_label,
                                const std::string& b_label,
                                std::size_t context = 3) {
  const std::vector<std::string> a = detail::split_lines(a_text);
  const std::vector<std::string> b = detail::split_lines(b_text);
  const std::vector<detail::diff_op> ops = detail::diff_ops(a, b);
  const bool changed =
      std::any_of(ops.begin(), ops.end(),
                  [](const detail::diff_op& op) { return op.tag != ' '; });
  if (!changed) return "";

  std::ostringstream out;
  out << "--- " << a_label << "\n+++ " << b_label << "\n";
  std::size_t k = 0;
  while (k < ops.size()) {
    if (ops[k].tag == ' ') {
      ++k;
      continue;
    }
    // Back up to include leading context, then extend across change runs
    // separated by at most 2*context equal lines.
    std::size_t start = k;
    for (std::size_t backed = 0;
         start > 0 && ops[start - 1].tag == ' ' && backed < context; ++backed)
      --start;
    std::size_t last_change = k;
    std::size_t scan = k;
    while (scan < ops.size()) {
      if (ops[scan].tag != ' ') {
        last_change = scan;
        ++scan;
        continue;
      }
      std::size_t run_start = scan;
      while (scan < ops.size() && ops[scan].tag == ' ') ++scan;
      if (scan == ops.size() || scan - run_start > 2 * context) break;
    }
    const std::size_t end = std::min(ops.size(), last_change + 1 + context);

    std::size_t a_count = 0;
    std::size_t b_count = 0;
    for (std::size_t t = start; t < end; ++t) {
      if (ops[t].tag != '+') ++a_count;
      if (ops[t].tag != '-') ++b_count;
    }
    const std::size_t a_start =
        a_count == 0 ? ops[start].a_index : ops[start].a_index + 1;
    const std::size_t b_start =
        b_count == 0 ? ops[start].b_index : ops[start].b_index + 1;
    out << "@@ -" << a_start << "," << a_count << " +" << b_start << ","
        << b_count << " @@\n";
    for (std::size_t t = start; t < end; ++t) {
      const detail::diff_op& op = ops[t];
      if (op.tag == '-')
        out << "-" << a[op.a_index] << "\n";
      else if (op.tag == '+')
        out << "+" << b[op.b_index] << "\n";
      else
        out << " " << a[op.a_index] << "\n";
    }
    k = end;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

inline int cmd_list(const GlobalOptions& opts, std::ostream& out) {
  const std::vector<corpus::CorpusEntry>& entries = corpus::catalog();
  if (opts.json_output) {
    json rows = json::array();
    for (const auto& entry : entries) {
      rows.push_back(
          {{"id", entry.pair.id},
           {"category", entry.category},
           {"compare", entry.pair.compare},
           {"expected_equivalent", entry.pair.expected_equivalent},
           {"schema", entry.pair.dataset_hint},
           {"exposure_pattern", entry.pair.exposure_pattern},
           {"exposure_bands", entry.exposure_bands},
           {"repeat", entry.pair.default_spec.repeat},
           {"number", entry.pair.default_spec.number},
           {"baseline",
            {{"id", entry.pair.baseline.id},
             {"listing_ref", entry.pair.baseline.listing_ref}}},
           {"candidate",
            {{"id", entry.pair.candidate.id},
             {"listing_ref", entry.pair.candidate.listing_ref}}}});
    }
    out << rows.dump(2) << "\n";
    return 0;
  }
  std::size_t width = 0;
  for (const auto& entry : entries)
    width = std::max(width, entry.pair.id.size());
  for (const auto& entry : entries) {
    out << entry.pair.id << std::string(width - entry.pair.id.size() + 2, ' ')
        << entry.category << "  " << entry.pair.compare << "  "
        << (entry.pair.exposure_pattern.empty() ? "none"
                                                : entry.pair.exposure_pattern)
        << "  repeat=" << entry.pair.default_spec.repeat
        << " number=" << entry.pair.default_spec.number << "\n";
  }
  out << entries.size() << " pairs\n";
  return 0;
}

struct GenDataArgs {
  std::string pattern;
  std::int64_t bands = 1;
  std::int64_t items = 8;
  std::string out_path;
};

inline int cmd_gen_data(const GlobalOptions& opts, const GenDataArgs& args,
                        std::ostream& out) {
  Dataset dataset;
  if (std::optional<Dataset> fixture = builtin_fixture(args.pattern)) {
    dataset = *fixture;
  } else if (known_pattern(args.pattern)) {
    PatternSpec spec;
    spec.pattern = args.pattern;
    spec.bands = args.bands;
    spec.seed = opts.seed;
    spec.items = args.items;
    dataset = synth(spec);
  } else {
    throw usage_error("unknown pattern: " + args.pattern);
  }
  const std::filesystem::path path =
      args.out_path.empty()
          ? opts.output_dir / (sanitize_id(dataset.id) + ".jsonl")
          : std::filesystem::path(args.out_path);
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  save_dataset(dataset, path);
  if (opts.json_output) {
    out << json{{"path", path.string()},
                {"dataset_id", dataset.id},
                {"schema", dataset.schema},
                {"items", dataset.items.size()}}
               .dump(2)
        << "\n";
  } else {
    out << "wrote " << dataset.items.size() << " items (" << dataset.schema
        << ") to " << path.string() << "\n";
  }
  return 0;
}

struct ValidateArgs {
  std::string pair_id;
  std::string dataset_ref;
  std::int64_t items = 200;
  std::int64_t bands = 0;  // 0 = pair default
};

inline int cmd_validate(const GlobalOptions& opts, const ValidateArgs& args,
                        std::ostream& out) {
  const corpus::CorpusEntry* entry = corpus::find_entry(args.pair_id);
  if (entry == nullptr) throw usage_error("unknown pair id: " + args.pair_id);
  const Dataset dataset = resolve_dataset(args.dataset_ref, entry, opts.seed,
                                          args.items, args.bands);
  const CorrectnessReport report = gate_pair(entry->pair, dataset);
  const bool clean = report.mismatched == 0;
  const bool as_expected = clean == entry->pair.expected_equivalent;
  const std::string marker =
      clean ? "equivalent"
            : (entry->pair.expected_equivalent ? "unexpected-divergence"
                                               : "failed-as-expected");
  if (opts.json_output) {
    json doc = report.to_json();
    doc["expected_equivalent"] = entry->pair.expected_equivalent;
    doc["as_expected"] = as_expected;
    doc["marker"] = marker;
    doc["dataset_id"] = dataset.id;
    out << doc.dump(2) << "\n";
  } else {
    out << "pair " << args.pair_id << ": " << report.mismatched << "/"
        << report.total << " outcomes diverged (fraction " << report.fraction
        << ") -> " << marker << "\n";
    for (const auto& ce : report.counterexamples)
      out << "  item " << ce.item_id << ": baseline "
          << ce.baseline_outcome_digest << " vs candidate "
          << ce.candidate_outcome_digest << "\n";
  }
  return as_expected ? 0 : 1;
}

struct BenchArgs {
  std::string pair_id;
  std::string dataset_ref;
  std::int64_t items = 50;
  std::int64_t bands = 0;
  std::int64_t repeat = 0;  // 0 = pair default
  std::int64_t number = 0;  // 0 = pair default
  bool skip_gate = false;
  bool force = false;
  std::string records_out;
};

inline int cmd_bench(const GlobalOptions& opts, const BenchArgs& args,
                     std::ostream& out, std::ostream& err) {
  const corpus::CorpusEntry* entry = corpus::find_entry(args.pair_id);
  if (entry == nullptr) throw usage_error("unknown pair id: " + args.pair_id);
  if (entry->category == corpus::category::flawed && !args.force) {
    err << "refusing to bench flawed pair " << args.pair_id
        << "; its candidate computes different results (use --force to time "
           "it anyway)\n";
    return 1;
  }
  const Dataset dataset = resolve_dataset(args.dataset_ref, entry, opts.seed,
                                          args.items, args.bands);
  TimingSpec spec = entry->pair.default_spec;
  if (args.repeat > 0) spec.repeat = args.repeat;
  if (args.number > 0) spec.number = args.number;

  const bool gate_applicable =
      entry->pair.compare == compare_mode::outcome &&
      entry->pair.expected_equivalent;
  if (gate_applicable && !args.skip_gate) {
    const CorrectnessReport report = gate_pair(entry->pair, dataset);
    if (report.mismatched != 0) {
      err << "gate failed for " << args.pair_id << ": " << report.mismatched
          << "/" << report.total
          << " outcomes diverged; no timing was run\n";
      return 1;
    }
  } else if (!gate_applicable) {
    err << "note: equivalence gate not applicable ("
        << (entry->pair.compare == compare_mode::speed_only
                ? "speed-only pair"
                : "divergent-by-design pair")
        << ")\n";
  }

  SteadyClock clock;
  std::vector<MeasurementRecord> records;
  const std::filesystem::path records_path =
      args.records_out.empty()
          ? opts.output_dir / (sanitize_id(args.pair_id) + ".jsonl")
          : std::filesystem::path(args.records_out);
  try {
    records = measure_pair(entry->pair, dataset, spec, clock);
  } catch (const measurement_error& e) {
    // Salvage whatever completed before the failure so the run is not a
    // total loss, then report the failure.
    if (!e.partial_records().empty()) {
      std::filesystem::path partial_path = records_path;
      partial_path.replace_extension(".partial.jsonl");
      write_record_artifacts(partial_path, e.partial_records(), dataset, spec,
                             opts.seed);
      err << "partial results (" << e.partial_records().size()
          << " records) salvaged to " << partial_path.string() << "\n";
    }
    throw;
  }
  write_record_artifacts(records_path, records, dataset, spec, opts.seed);

  const GSpread spread = g_spread(records);
  std::int64_t limited = 0;
  for (const auto& rec : records)
    if (rec.resolution_limited) ++limited;
  if (opts.json_output) {
    out << json{{"pair_id", args.pair_id},
                {"records_path", records_path.string()},
                {"count", records.size()},
                {"g_min", spread.min_g},
                {"g_median", spread.median_g},
                {"g_max", spread.max_g},
                {"repeat", spec.repeat},
                {"number", spec.number},
                {"resolution_limited_count", limited}}
               .dump(2)
        << "\n";
  } else {
    out << "bench " << args.pair_id << ": " << records.size()
        << " records; g min=" << spread.min_g
        << " median=" << spread.median_g << " max=" << spread.max_g << "\n"
        << "records: " << records_path.string() << "\n";
  }
  return 0;
}

struct StatsArgs {
  std::string records_path;
  std::string csv_out;
  std::string json_out;
};

inline int cmd_stats(const GlobalOptions&, const StatsArgs& args,
                     std::ostream& out) {
  const std::vector<MeasurementRecord> records =
      load_records(args.records_path);
  if (records.empty())
    throw parse_error(args.records_path + ": no records to summarize");
  std::vector<double> gs;
  gs.reserve(records.size());
  for (const auto& rec : records) gs.push_back(rec.g);
  const StatsSummary stats = summary(gs);
  out << render_stats_json(stats);
  if (!args.csv_out.empty())
    write_text_file(args.csv_out, render_histogram_csv(stats));
  if (!args.json_out.empty())
    write_text_file(args.json_out, render_stats_json(stats));
  return 0;
}

inline std::vector<std::string> parse_formats(const std::vector<std::string>& raw) {
  std::vector<std::string> formats = raw;
  if (formats.empty()) formats = {"json", "csv", "html"};
  for (const auto& f : formats)
    if (f != "json" && f != "csv" && f != "html")
      throw usage_error("unknown format '" + f +
                        "' (expected json, csv, html)");
  return formats;
}

struct ReportArgs {
  std::string records_path;
  std::vector<std::string> formats;
  std::string title;
};

inline int cmd_report(const GlobalOptions& opts, const ReportArgs& args,
                      std::ostream& out) {
  const std::vector<std::string> formats = parse_formats(args.formats);
  const std::vector<MeasurementRecord> records =
      load_records(args.records_path);
  if (records.empty())
    throw parse_error(args.records_path +
                      ": no records; a report needs at least one");
  const ReportData data =
      build_report_data(records, args.records_path, args.title);
  const std::string stem =
      std::filesystem::path(args.records_path).stem().string();
  json written = json::object();
  for (const auto& format : formats) {
    if (format == "json") {
      const std::filesystem::path path = opts.output_dir / (stem + ".stats.json");
      write_text_file(path, render_stats_json(data.stats));
      written["stats_json"] = path.string();
    } else if (format == "csv") {
      const std::filesystem::path path = opts.output_dir / (stem + ".buckets.csv");
      write_text_file(path, render_histogram_csv(data.stats));
      written["buckets_csv"] = path.string();
    } else {
      const std::filesystem::path path = opts.output_dir / (stem + ".html");
      write_text_file(path, render_html(data));
      written["html"] = path.string();
    }
  }
  if (opts.json_output) {
    out << written.dump(2) << "\n";
  } else {
    for (const auto& [key, value] : written.items())
      out << key << ": " << value.get<std::string>() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Campaigns (run-all)
// ---------------------------------------------------------------------------

struct CampaignConfig {
  std::vector<std::string> pairs;  // empty = all
  std::string dataset;             // path, fixture, or pattern name
  std::optional<PatternSpec> dataset_inline;
  std::optional<std::int64_t> repeat;
  std::optional<std::int64_t> number;
  std::filesystem::path output_dir;  // empty = global output dir
  std::vector<std::string> formats = {"json", "csv", "html"};
  bool fail_on_gate = true;
  std::int64_t items = 40;

  void validate() const {
    if (formats.empty())
      throw usage_error("config: at least one output format is required");
    for (const auto& f : formats)
      if (f != "json" && f != "csv" && f != "html")
        throw usage_error("config: unknown format '" + f + "'");
    if (items < 1) throw usage_error("config: items must be >= 1");
  }
};

inline CampaignConfig parse_campaign_config(const json& doc) {
  if (!doc.is_object())
    throw usage_error("config: top level must be a JSON object");
  static const std::set<std::string> known = {
      "pairs",   "dataset", "repeat",       "number",
      "output_dir", "formats", "fail_on_gate", "items"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (known.count(it.key()) == 0)
      throw usage_error("config: unknown key '" + it.key() + "'");

  CampaignConfig config;
  try {
    if (doc.contains("pairs")) {
      const json& pairs = doc["pairs"];
      if (pairs.is_string()) {
        if (pairs.get<std::string>() != "all")
          throw usage_error(
              "config: pairs must be \"all\" or a list of pair ids");
      } else if (pairs.is_array()) {
        for (const json& id : pairs)
          config.pairs.push_back(id.get<std::string>());
      } else {
        throw usage_error(
            "config: pairs must be \"all\" or a list of pair ids");
      }
    }
    if (doc.contains("dataset")) {
      const json& dataset = doc["dataset"];
      if (dataset.is_string()) {
        config.dataset = dataset.get<std::string>();
      } else if (dataset.is_object()) {
        PatternSpec spec;
        spec.pattern = dataset.at("pattern").get<std::string>();
        if (dataset.contains("bands"))
          spec.bands = dataset["bands"].get<std::int64_t>();
        if (dataset.contains("items"))
          spec.items = dataset["items"].get<std::int64_t>();
        if (dataset.contains("seed"))
          spec.seed = dataset["seed"].get<std::uint64_t>();
        config.dataset_inline = spec;
      } else {
        throw usage_error(
            "config: dataset must be a path or an inline pattern object");
      }
    }
    if (doc.contains("repeat"))
      config.repeat = doc["repeat"].get<std::int64_t>();
    if (doc.contains("number"))
      config.number = doc["number"].get<std::int64_t>();
    if (doc.contains("output_dir"))
      config.output_dir = doc["output_dir"].get<std::string>();
    if (doc.contains("formats")) {
      config.formats.clear();
      for (const json& f : doc["formats"])
        config.formats.push_back(f.get<std::string>());
    }
    if (doc.contains("fail_on_gate"))
      config.fail_on_gate = doc["fail_on_gate"].get<bool>();
    if (doc.contains("items"))
      config.items = doc["items"].get<std::int64_t>();
  } catch (const json::exception& e) {
    throw usage_error(std::string("config: ") + e.what());
  }
  return config;
}

inline CampaignConfig load_campaign_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open config: " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw usage_error("config " + path.string() + ": " + e.what());
  }
  return parse_campaign_config(doc);
}

inline Dataset campaign_dataset(const CampaignConfig& config,
                                const corpus::CorpusEntry& entry,
                                std::uint64_t seed) {
  if (config.dataset_inline) {
    if (!known_pattern(config.dataset_inline->pattern))
      throw usage_error("config: unknown pattern '" +
                        config.dataset_inline->pattern + "'");
    return synth(*config.dataset_inline);
  }
  if (!config.dataset.empty())
    return resolve_dataset(config.dataset, &entry, seed, config.items, 0);
  return corpus::designated_dataset(entry, seed, config.items);
}

inline int cmd_run_all(const GlobalOptions& opts, const CampaignConfig& config,
                       std::ostream& out, std::ostream& err) {
  config.validate();

  std::vector<const corpus::CorpusEntry*> selected;
  if (config.pairs.empty()) {
    for (const auto& entry : corpus::catalog()) selected.push_back(&entry);
  } else {
    for (const auto& id : config.pairs) {
      const corpus::CorpusEntry* entry = corpus::find_entry(id);
      if (entry == nullptr)
        throw usage_error("config: unknown pair id '" + id + "'");
      selected.push_back(entry);
    }
  }

  const std::filesystem::path base =
      config.output_dir.empty() ? opts.output_dir : config.output_dir;
  std::filesystem::create_directories(base);

  bool all_gates_expected = true;
  bool any_error = false;
  json entry_rows = json::array();
  SteadyClock clock;

  std::size_t index = 0;
  for (const corpus::CorpusEntry* entry : selected) {
    ++index;
    const VariantPair& pair = entry->pair;
    json row{{"pair_id", pair.id},
             {"category", entry->category},
             {"compare", pair.compare},
             {"expected_equivalent", pair.expected_equivalent}};
    const std::filesystem::path dir = base / sanitize_id(pair.id);
    std::string status = "ok";
    try {
      const Dataset dataset = campaign_dataset(config, *entry, opts.seed);
      row["dataset_id"] = dataset.id;

      bool gate_as_expected = true;
      bool gate_clean = true;
      if (pair.compare == compare_mode::outcome) {
        const CorrectnessReport report = gate_pair(pair, dataset);
        gate_clean = report.mismatched == 0;
        gate_as_expected = gate_clean == pair.expected_equivalent;
        row["gate"] = report.to_json();
        write_text_file(dir / "gate.json", report.to_json().dump(2) + "\n");
      } else {
        row["gate"] = nullptr;
        row["gate_note"] = "speed-only pair; equivalence not asserted";
      }
      row["gate_as_expected"] = gate_as_expected;
      if (!gate_as_expected) {
        all_gates_expected = false;
        status = "gate-unexpected";
      }

      const bool do_bench =
          pair.compare == compare_mode::speed_only ||
          (pair.expected_equivalent && gate_clean);
      row["benched"] = do_bench;
      if (do_bench) {
        TimingSpec spec = pair.default_spec;
        if (config.repeat) spec.repeat = *config.repeat;
        if (config.number) spec.number = *config.number;
        const std::vector<MeasurementRecord> records =
            measure_pair(pair, dataset, spec, clock);
        const std::filesystem::path records_path = dir / "records.jsonl";
        write_record_artifacts(records_path, records, dataset, spec,
                               opts.seed);
        row["record_count"] = records.size();
        json artifacts{{"records", records_path.string()},
                       {"gate", pair.compare == compare_mode::outcome
                                    ? json((dir / "gate.json").string())
                                    : json(nullptr)}};

        const ReportData data =
            build_report_data(records, records_path.string(), pair.id);
        row["stats"] = data.stats.to_json();
        for (const auto& format : config.formats) {
          if (format == "json") {
            const std::filesystem::path path = dir / "stats.json";
            write_text_file(path, render_stats_json(data.stats));
            artifacts["stats_json"] = path.string();
          } else if (format == "csv") {
            const std::filesystem::path path = dir / "buckets.csv";
            write_text_file(path, render_histogram_csv(data.stats));
            artifacts["buckets_csv"] = path.string();
          } else {
            const std::filesystem::path path = dir / "report.html";
            write_text_file(path, render_html(data));
            artifacts["html"] = path.string();
          }
        }
        row["artifacts"] = artifacts;
        const GSpread spread = g_spread(records);
        row["g_median"] = spread.median_g;
      }
    } catch (const usage_error&) {
      throw;  // configuration problems abort the whole campaign
    } catch (const std::exception& e) {
      status = "error";
      row["error"] = e.what();
      any_error = true;
    }
    row["status"] = status;
    entry_rows.push_back(row);
    err << "[" << index << "/" << selected.size() << "] " << pair.id << ": "
        << status << "\n";
  }

  json campaign{{"seed", opts.seed},
                {"output_dir", base.string()},
                {"formats", config.formats},
                {"fail_on_gate", config.fail_on_gate},
                {"items", config.items},
                {"pair_count", selected.size()},
                {"all_gates_as_expected", all_gates_expected},
                {"had_errors", any_error},
                {"entries", entry_rows}};
  campaign["repeat"] = config.repeat ? json(*config.repeat) : json(nullptr);
  campaign["number"] = config.number ? json(*config.number) : json(nullptr);
  const std::filesystem::path campaign_path = base / "campaign.json";
  write_text_file(campaign_path, campaign.dump(2) + "\n");

  if (opts.json_output) {
    out << campaign.dump(2) << "\n";
  } else {
    out << "campaign: " << campaign_path.string() << " ("
        << selected.size() << " pairs, "
        << (all_gates_expected ? "all gates as expected"
                               : "unexpected gate outcomes")
        << (any_error ? ", with errors" : "") << ")\n";
  }
  if (any_error) return 1;
  if (!all_gates_expected && config.fail_on_gate) return 1;
  return 0;
}

inline int cmd_export_diff(const GlobalOptions&, const std::string& pair_id,
                           std::ostream& out) {
  const corpus::CorpusEntry* entry = corpus::find_entry(pair_id);
  if (entry == nullptr) throw usage_error("unknown pair id: " + pair_id);
  if (entry->category != corpus::category::case_study)
    throw usage_error("export-diff applies to case-study pairs only; '" +
                      pair_id + "' is in category '" + entry->category + "'");
  const ListingStore& store = corpus::listings();
  const auto baseline = store.find(entry->pair.baseline.listing_ref);
  const auto candidate = store.find(entry->pair.candidate.listing_ref);
  if (baseline == store.end() || candidate == store.end())
    throw usage_error("pair " + pair_id + " has no stored source listings");
  out << unified_diff(baseline->second.text, candidate->second.text,
                      "a/" + sanitize_id(baseline->first) + ".py",
                      "b/" + sanitize_id(candidate->first) + ".py");
  return 0;
}

// ---------------------------------------------------------------------------
// Argument parsing and dispatch
// ---------------------------------------------------------------------------

inline int run_cli(int argc, const char* const* argv) {
  std::uint64_t seed = 1;
  const char* env_dir = std::getenv("VARBENCH_OUTPUT_DIR");
  std::string output_dir =
      env_dir != nullptr && *env_dir != '\0' ? env_dir : ".";
  bool json_output = false;

  CLI::App app{
      "variant benchmarking harness: correctness gates, min-of-repeats "
      "timing, statistics, and self-contained reports"};
  app.require_subcommand(1);
  app.add_option("--seed", seed, "seed for synthesized datasets");
  app.add_option("--output-dir", output_dir,
                 "directory for written artifacts (default: "
                 "VARBENCH_OUTPUT_DIR or the current directory)");
  app.add_flag("--json", json_output, "machine-readable stdout");

  int exit_code = 0;
  auto global = [&]() {
    GlobalOptions opts;
    opts.seed = seed;
    opts.output_dir = output_dir;
    opts.json_output = json_output;
    return opts;
  };
  auto dispatch = [&](auto&& fn) {
    try {
      exit_code = fn();
    } catch (const usage_error& e) {
      std::cerr << "error: " << e.what() << "\n";
      exit_code = 2;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      exit_code = 1;
    }
  };

  CLI::App* list_cmd = app.add_subcommand("list", "print the pair catalog");
  list_cmd->fallthrough();
  list_cmd->callback(
      [&] { dispatch([&] { return cmd_list(global(), std::cout); }); });

  auto gen_args = std::make_shared<GenDataArgs>();
  CLI::App* gen_cmd =
      app.add_subcommand("gen-data", "synthesize a dataset and save it");
  gen_cmd->fallthrough();
  gen_cmd->add_option("--pattern", gen_args->pattern,
                      "pattern or fixture name")
      ->required();
  gen_cmd->add_option("--bands", gen_args->bands, "bands per histogram");
  gen_cmd->add_option("--items", gen_args->items, "items to generate");
  gen_cmd->add_option("--out", gen_args->out_path, "output path");
  gen_cmd->callback([&, gen_args] {
    dispatch([&] { return cmd_gen_data(global(), *gen_args, std::cout); });
  });

  auto validate_args = std::make_shared<ValidateArgs>();
  CLI::App* validate_cmd = app.add_subcommand(
      "validate", "run the differential correctness gate for one pair");
  validate_cmd->fallthrough();
  validate_cmd->add_option("pair", validate_args->pair_id, "pair id")
      ->required();
  validate_cmd->add_option("--dataset", validate_args->dataset_ref,
                           "dataset path, fixture, or pattern name");
  validate_cmd->add_option("--items", validate_args->items,
                           "items when synthesizing");
  validate_cmd->add_option("--bands", validate_args->bands,
                           "bands when synthesizing (0 = pair default)");
  validate_cmd->callback([&, validate_args] {
    dispatch(
        [&] { return cmd_validate(global(), *validate_args, std::cout); });
  });

  auto bench_args = std::make_shared<BenchArgs>();
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "time one pair and write measurement records");
  bench_cmd->fallthrough();
  bench_cmd->add_option("pair", bench_args->pair_id, "pair id")->required();
  bench_cmd->add_option("--dataset", bench_args->dataset_ref,
                        "dataset path, fixture, or pattern name");
  bench_cmd->add_option("--items", bench_args->items,
                        "items when synthesizing");
  bench_cmd->add_option("--bands", bench_args->bands,
                        "bands when synthesizing (0 = pair default)");
  bench_cmd->add_option("--repeat", bench_args->repeat,
                        "timing repeats (0 = pair default)");
  bench_cmd->add_option("--number", bench_args->number,
                        "invocations per repeat (0 = pair default)");
  bench_cmd->add_flag("--skip-gate", bench_args->skip_gate,
                      "skip the correctness gate");
  bench_cmd->add_flag("--force", bench_args->force,
                      "bench a flawed pair anyway");
  bench_cmd->add_option("--out", bench_args->records_out,
                        "records output path");
  bench_cmd->callback([&, bench_args] {
    dispatch([&] {
      return cmd_bench(global(), *bench_args, std::cout, std::cerr);
    });
  });

  auto stats_args = std::make_shared<StatsArgs>();
  CLI::App* stats_cmd = app.add_subcommand(
      "stats", "summarize a records file as statistics JSON");
  stats_cmd->fallthrough();
  stats_cmd->add_option("records", stats_args->records_path,
                        "measurement records JSONL")
      ->required();
  stats_cmd->add_option("--csv", stats_args->csv_out,
                        "also write the bucket histogram CSV here");
  stats_cmd->add_option("--out", stats_args->json_out,
                        "also write the statistics JSON here");
  stats_cmd->callback([&, stats_args] {
    dispatch([&] { return cmd_stats(global(), *stats_args, std::cout); });
  });

  auto report_args = std::make_shared<ReportArgs>();
  CLI::App* report_cmd = app.add_subcommand(
      "report", "render statistics JSON, bucket CSV, and an HTML report");
  report_cmd->fallthrough();
  report_cmd->add_option("records", report_args->records_path,
                         "measurement records JSONL")
      ->required();
  report_cmd->add_option("--formats", report_args->formats,
                         "subset of json,csv,html (default: all)")
      ->delimiter(',');
  report_cmd->add_option("--title", report_args->title, "report title");
  report_cmd->callback([&, report_args] {
    dispatch([&] { return cmd_report(global(), *report_args, std::cout); });
  });

  struct RunAllFlags {
    std::string config_path;
    std::vector<std::string> pairs;
    std::string dataset;
    std::int64_t repeat = 0;
    std::int64_t number = 0;
    std::int64_t items = 0;
    std::vector<std::string> formats;
    bool fail_on_gate = true;
  };
  auto run_all_args = std::make_shared<RunAllFlags>();
  CLI::App* run_all_cmd = app.add_subcommand(
      "run-all", "gate, bench, and report every selected pair");
  run_all_cmd->fallthrough();
  run_all_cmd->add_option("config", run_all_args->config_path,
                          "campaign config JSON");
  run_all_cmd->add_option("--pairs", run_all_args->pairs,
                          "pair ids (default: the whole catalog)")
      ->delimiter(',');
  run_all_cmd->add_option("--dataset", run_all_args->dataset,
                          "dataset path, fixture, or pattern for every pair");
  run_all_cmd->add_option("--repeat", run_all_args->repeat,
                          "timing repeats override (0 = pair defaults)");
  run_all_cmd->add_option(
      "--number", run_all_args->number,
      "invocations-per-repeat override (0 = pair defaults)");
  run_all_cmd->add_option("--items", run_all_args->items,
                          "items per synthesized dataset (0 = default)");
  run_all_cmd->add_option("--formats", run_all_args->formats,
                          "subset of json,csv,html (default: all)")
      ->delimiter(',');
  CLI::Option* fail_opt = run_all_cmd->add_flag(
      "--fail-on-gate,!--no-fail-on-gate", run_all_args->fail_on_gate,
      "exit 1 on unexpected gate outcomes (default: on)");
  run_all_cmd->callback([&, run_all_args, fail_opt] {
    dispatch([&] {
      CampaignConfig config;
      if (!run_all_args->config_path.empty())
        config = load_campaign_config(run_all_args->config_path);
      if (!run_all_args->pairs.empty()) config.pairs = run_all_args->pairs;
      if (!run_all_args->dataset.empty()) {
        config.dataset = run_all_args->dataset;
        config.dataset_inline.reset();
      }
      if (run_all_args->repeat > 0) config.repeat = run_all_args->repeat;
      if (run_all_args->number > 0) config.number = run_all_args->number;
      if (run_all_args->items > 0) config.items = run_all_args->items;
      if (!run_all_args->formats.empty())
        config.formats = parse_formats(run_all_args->formats);
      if (fail_opt->count() > 0)
        config.fail_on_gate = run_all_args->fail_on_gate;
      return cmd_run_all(global(), config, std::cout, std::cerr);
    });
  });

  auto diff_pair = std::make_shared<std::string>();
  CLI::App* diff_cmd = app.add_subcommand(
      "export-diff", "print the unified diff between a pair's listings");
  diff_cmd->fallthrough();
  diff_cmd->add_option("pair", *diff_pair, "case-study pair id")->required();
  diff_cmd->callback([&, diff_pair] {
    dispatch([&] { return cmd_export_diff(global(), *diff_pair, std::cout); });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return exit_code;
}

}  // namespace varbench::cli
