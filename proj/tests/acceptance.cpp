// Acceptance suite: ten end-to-end checks over the library and the CLI
// binary. Each criterion prints exactly one PASS/FAIL line; the process
// exits nonzero if any criterion fails.
//
// Environment:
//   VARBENCH_FIXTURES        directory with the frozen reference fixtures
//   VARBENCH_BIN             path to the command-line binary (criterion 10)
//   VARBENCH_REFERENCE_HOST  set to assert host-dependent speedup floors;
//                            unset, those figures are reported, not asserted

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "subprocess.hpp"
#include "varbench/codesize.hpp"
#include "varbench/corpus/corpus.hpp"
#include "varbench/data.hpp"
#include "varbench/gate.hpp"
#include "varbench/model.hpp"
#include "varbench/replay_fixture.hpp"
#include "varbench/report.hpp"
#include "varbench/stats.hpp"
#include "varbench/timing.hpp"

using namespace varbench;
namespace fs = std::filesystem;

namespace {

struct check_result {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& what) { notes.push_back(what); }
};

bool reference_host() {
  const char* flag = std::getenv("VARBENCH_REFERENCE_HOST");
  return flag != nullptr && *flag != '\0';
}

std::string fmt(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3f", value);
  return buffer;
}

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid]
                                : 0.5 * (values[mid - 1] + values[mid]);
}

std::vector<double> gs_of(const std::vector<MeasurementRecord>& records) {
  std::vector<double> gs;
  gs.reserve(records.size());
  for (const auto& rec : records) gs.push_back(rec.g);
  return gs;
}

const corpus::CorpusEntry& entry_of(const std::string& pair_id) {
  const corpus::CorpusEntry* entry = corpus::find_entry(pair_id);
  if (entry == nullptr)
    throw std::runtime_error("missing catalog entry: " + pair_id);
  return *entry;
}

Dataset synth_pattern(const std::string& name, std::int64_t bands,
                      std::uint64_t seed, std::int64_t items) {
  PatternSpec spec;
  spec.pattern = name;
  spec.bands = bands;
  spec.seed = seed;
  spec.items = items;
  return synth(spec);
}

// --------------------------------------------------------------------------
// 1. Differential gate soundness
// --------------------------------------------------------------------------

void check_gate_soundness(check_result& r) {
  const auto start = std::chrono::steady_clock::now();
  struct pattern_row {
    const char* name;
    std::int64_t bands;
  };
  const pattern_row histogram_patterns[] = {
      {pattern::edge_concentrated, 2}, {pattern::uniform_dense, 2},
      {pattern::empty_band, 2},        {pattern::single_bin, 2},
      {pattern::two_band_tail, 2},     {pattern::non_multiple_length, 2},
      {pattern::grayscale_like, 1},
  };

  const char* sound_pairs[] = {"getextrema/original-vs-final",
                               "getcount/original-vs-sum",
                               "as_series/original-vs-earlyexit"};
  std::uint64_t seed = 9100;
  for (const char* pair_id : sound_pairs) {
    const corpus::CorpusEntry& entry = entry_of(pair_id);
    if (entry.pair.dataset_hint == schema::histogram) {
      for (const pattern_row& row : histogram_patterns) {
        const Dataset dataset =
            synth_pattern(row.name, row.bands, ++seed, 1000);
        const CorrectnessReport report = gate_pair(entry.pair, dataset);
        r.require(report.total == 1000 && report.fraction == 0.0,
                  std::string(pair_id) + " diverged on " + row.name + " (" +
                      std::to_string(report.mismatched) + "/" +
                      std::to_string(report.total) + ")");
      }
    } else {
      const Dataset dataset =
          synth_pattern(pattern::coeff_mixed, 1, ++seed, 1000);
      const CorrectnessReport report = gate_pair(entry.pair, dataset);
      r.require(report.total == 1000 && report.fraction == 0.0,
                std::string(pair_id) + " diverged on coeff_mixed (" +
                    std::to_string(report.mismatched) + "/" +
                    std::to_string(report.total) + ")");
    }
  }

  const char* flawed_pairs[] = {"getextrema/original-vs-oneliner",
                                "getextrema/original-vs-wholescan",
                                "getextrema/original-vs-valuefilter",
                                "getextrema/original-vs-islice"};
  for (const char* pair_id : flawed_pairs) {
    const corpus::CorpusEntry& entry = entry_of(pair_id);
    const Dataset dataset = corpus::designated_dataset(entry, ++seed, 200);
    const CorrectnessReport report = gate_pair(entry.pair, dataset);
    r.require(report.fraction > 0.0,
              std::string(pair_id) +
                  " was not exposed by its designated pattern");
  }

  // Every flawed pair ships a frozen counterexample that still reproduces.
  const fs::path fixtures = testutil::require_env("VARBENCH_FIXTURES");
  std::ifstream in(fixtures / "flawed_counterexamples.jsonl");
  r.require(in.good(), "flawed_counterexamples.jsonl is missing");
  std::string line;
  int cases = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++cases;
    const json fixture = json::parse(line);
    const std::string pair_id = fixture.at("pair_id").get<std::string>();
    const corpus::CorpusEntry& entry = entry_of(pair_id);
    const Payload payload = payload_from_json(fixture.at("payload"));
    const Outcome baseline = run_once(entry.pair.baseline, payload);
    const Outcome candidate = run_once(entry.pair.candidate, payload);
    if (fixture.at("baseline_raises").get<bool>())
      r.require(baseline.is_error(),
                pair_id + ": frozen case no longer raises in the baseline");
    else
      r.require(!baseline.is_error() &&
                    baseline.value == fixture.at("correct_result"),
                pair_id + ": baseline drifted from the frozen correct result");
    r.require(!outcomes_match(baseline, candidate, exact_comparator()),
              pair_id + ": frozen counterexample no longer diverges");
  }
  r.require(cases == 4, "expected 4 frozen counterexamples, found " +
                            std::to_string(cases));

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  r.require(elapsed < 180.0,
            "gate sweep took " + fmt(elapsed) + "s (budget 180s)");
  r.note("3 sound pairs clean on 7 patterns x 1000 items; 4 flawed pairs "
         "exposed; frozen counterexamples reproduce (" +
         fmt(elapsed) + "s)");
}

// --------------------------------------------------------------------------
// 2. Early-exit mechanism: inspection counts and measured speedup
// --------------------------------------------------------------------------

void check_early_exit_speedup(check_result& r) {
  const Dataset dataset =
      synth_pattern(pattern::edge_concentrated, 1, 4242, 100);
  for (const DatasetItem& item : dataset.items) {
    const Histogram& h = std::get<Histogram>(item.payload);
    const std::int64_t bands =
        static_cast<std::int64_t>(h.size()) / 256;
    const std::int64_t full =
        corpus::count_bin_reads(corpus::extrema_full_scan, h);
    const std::int64_t early =
        corpus::count_bin_reads(corpus::extrema_early_exit, h);
    r.require(full == 256 * bands,
              item.id + ": full scan read " + std::to_string(full) +
                  " bins, expected " + std::to_string(256 * bands));
    r.require(early <= 2 * bands,
              item.id + ": early exit read " + std::to_string(early) +
                  " bins, expected <= " + std::to_string(2 * bands));
  }

  TimingSpec spec;
  spec.repeat = 10;
  spec.number = 1000;
  SteadyClock clock;
  const std::vector<MeasurementRecord> records =
      measure_pair(entry_of("getextrema/original-vs-final").pair, dataset,
                   spec, clock);
  r.require(records.size() == 100,
            "expected 100 records, got " + std::to_string(records.size()));
  int above = 0;
  for (const auto& rec : records)
    if (rec.g > 3.0) ++above;
  r.require(above >= 95, "g > 3.0 on only " + std::to_string(above) +
                             "/100 items (need >= 95)");
  r.note("inspection counts 256 vs <= 2 per band on all 100 items; g > 3.0 "
         "on " +
         std::to_string(above) + "/100, median g = " +
         fmt(median_of(gs_of(records))));
}

// --------------------------------------------------------------------------
// 3. Band-count rewrite speedup (asserted on the reference host only)
// --------------------------------------------------------------------------

void check_count_speedup(check_result& r) {
  const corpus::CorpusEntry& entry = entry_of("getcount/original-vs-sum");
  const Dataset dataset = synth_pattern(pattern::uniform_dense, 2, 515, 50);
  const CorrectnessReport gate = gate_pair(entry.pair, dataset);
  r.require(gate.fraction == 0.0, "gate not clean before timing");

  SteadyClock clock;
  const std::vector<MeasurementRecord> records =
      measure_pair(entry.pair, dataset, entry.pair.default_spec, clock);
  const double median = median_of(gs_of(records));
  if (reference_host()) {
    r.require(median >= 1.3,
              "median g = " + fmt(median) + " below the 1.3 floor");
    r.note("median g = " + fmt(median) + " (asserted >= 1.3)");
  } else {
    r.note("median g = " + fmt(median) +
           " reported, not asserted (set VARBENCH_REFERENCE_HOST to assert "
           "the 1.3 floor)");
  }
}

// --------------------------------------------------------------------------
// 4. Scripted-clock determinism
// --------------------------------------------------------------------------

void check_scripted_determinism(check_result& r) {
  ExecutableUnit nop;
  nop.id = "nop";
  nop.listing_ref = "synthetic";
  nop.run = [](const Payload&) -> json { return nullptr; };
  nop.run_timed = [](const Payload&) {};
  VariantPair pair;
  pair.id = "acceptance/doubling";
  pair.baseline = nop;
  pair.baseline.id = "nop-a";
  pair.candidate = nop;
  pair.candidate.id = "nop-b";

  TimingSpec spec;
  spec.repeat = 3;
  spec.number = 1000;
  spec.warmup = false;
  for (int attempt = 0; attempt < 5; ++attempt) {
    ScriptedClock clock =
        ScriptedClock::from_run_totals_ms({10, 8, 9, 5, 4, 6});
    Dataset empty;
    const std::vector<MeasurementRecord> records =
        measure_pair(pair, empty, spec, clock);
    r.require(records.size() == 1, "expected one payload-free record");
    if (records.empty()) return;
    r.require(records[0].g == 2.0,
              "attempt " + std::to_string(attempt) + ": g = " +
                  fmt(records[0].g) + ", expected exactly 2.0");
    r.require(records[0].t_baseline == 2.0 * records[0].t_candidate,
              "minima are not in an exact 2:1 ratio");
  }
  r.note("run totals 10/8/9 ms vs 5/4/6 ms give g == 2.0 bit-exactly, 5 "
         "times over");
}

// --------------------------------------------------------------------------
// 5. Full-scale replay fixture aggregates
// --------------------------------------------------------------------------

void check_replay_aggregates(check_result& r) {
  const auto start = std::chrono::steady_clock::now();
  const ReplayFixture fixture = full_scale_replay_fixture();
  const std::vector<double> gs = expand_fixture(fixture);
  r.require(gs.size() == 1431167,
            "expanded " + std::to_string(gs.size()) +
                " measurements, expected 1431167");
  const StatsSummary stats = summary(gs);
  r.require(std::abs(stats.mean - 38.41) <= 1.0,
            "mean " + fmt(stats.mean) + " outside 38.41 +/- 1.0");
  r.require(std::abs(stats.std_dev - 8.06) <= 1.0,
            "std " + fmt(stats.std_dev) + " outside 8.06 +/- 1.0");
  r.require(peak_bucket(stats) == 40,
            "peak bucket " + std::to_string(peak_bucket(stats)) +
                ", expected 40");
  r.require(stats.histogram.at(40) == 204995,
            "peak bucket count " + std::to_string(stats.histogram.at(40)) +
                ", expected 204995");
  std::int64_t total = 0;
  for (const auto& [bucket, count] : stats.histogram) total += count;
  r.require(total == 1431167, "histogram total " + std::to_string(total));
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  r.require(elapsed < 10.0, "replay took " + fmt(elapsed) + "s (budget 10s)");
  r.note("1431167 bucket-midpoint measurements: mean " + fmt(stats.mean) +
         ", std " + fmt(stats.std_dev) + ", peak bucket 40 (" + fmt(elapsed) +
         "s)");
}

// --------------------------------------------------------------------------
// 6. Statistics correctness
// --------------------------------------------------------------------------

void check_statistics(check_result& r) {
  r.require(std::abs(pearson({1, 2, 3}, {2, 4, 6}) - 1.0) <= 1e-9,
            "perfectly correlated series not at r = 1");
  r.require(std::abs(pearson({1, 2, 3}, {6, 4, 2}) + 1.0) <= 1e-9,
            "perfectly anticorrelated series not at r = -1");
  r.require(std::abs(pearson({1, 2, 3, 4}, {2, 1, 4, 3}) - 0.6) <= 1e-9,
            "interleaved series not at r = 0.6");

  std::mt19937_64 rng(20260821);
  std::uniform_real_distribution<double> value(0.1, 50.0);
  std::uniform_real_distribution<double> scale(0.25, 8.0);
  std::uniform_int_distribution<std::size_t> length(2, 200);
  const auto close_to = [](double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b));
  };
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> xs(length(rng));
    for (double& x : xs) x = value(rng);
    const double a = scale(rng);
    std::vector<double> scaled(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) scaled[i] = a * xs[i];
    const StatsSummary base = summary(xs);
    const StatsSummary widened = summary(scaled);
    r.require(close_to(widened.mean, a * base.mean),
              "mean not scale-equivariant on trial " + std::to_string(trial));
    r.require(close_to(widened.std_dev, a * base.std_dev),
              "std not scale-equivariant on trial " + std::to_string(trial));
    r.require(close_to(widened.min_g, a * base.min_g) &&
                  close_to(widened.max_g, a * base.max_g),
              "extrema not scale-equivariant on trial " +
                  std::to_string(trial));
  }
  r.note("pearson anchors within 1e-9; 40 scale-equivariance trials within "
         "1e-12");
}

// --------------------------------------------------------------------------
// 7. Code-size analyzer consistency
// --------------------------------------------------------------------------

void check_code_size(check_result& r) {
  const TokenSizeBackend backend(&corpus::listings());
  int analyzed = 0;
  for (const corpus::CorpusEntry& entry : corpus::catalog()) {
    for (const ExecutableUnit* unit :
         {&entry.pair.baseline, &entry.pair.candidate}) {
      const CodeSizeReport report = analyze(*unit, backend);
      r.require(report.status == "ok" || report.status == "unsupported",
                unit->id + ": analyzer status '" + report.status + "'");
      if (report.status != "ok") continue;
      ++analyzed;
      std::int64_t sum = 0;
      for (const auto& [part, size] : report.parts) sum += size;
      r.require(sum == report.total_size,
                unit->id + ": parts sum " + std::to_string(sum) +
                    " != total " + std::to_string(report.total_size));
      r.require(report.cross_check.has_value() &&
                    *report.cross_check == report.total_size,
                unit->id + ": cross-check tokenizer disagrees");
    }
  }
  r.require(analyzed >= 20, "only " + std::to_string(analyzed) +
                                " units had an available backend");

  // The reference size table renders informationally; no live assertion.
  ReportData data;
  data.title = "size table";
  data.source = "acceptance";
  data.stats = summary({38.4, 40.2});
  SizeDeltaRow row;
  const CodeSizeReport baseline =
      analyze(entry_of("getextrema/original-vs-final").pair.baseline, backend);
  const CodeSizeReport candidate =
      analyze(entry_of("getextrema/original-vs-final").pair.candidate, backend);
  row.baseline_id = "getextrema/original";
  row.candidate_id = "getextrema/final";
  row.backend_id = baseline.backend_id;
  row.size_unit = baseline.size_unit;
  row.baseline_size = baseline.total_size;
  row.candidate_size = candidate.total_size;
  row.delta = candidate.total_size - baseline.total_size;
  row.reference_baseline = reference_size_for("getextrema/original");
  row.reference_candidate = reference_size_for("getextrema/final");
  data.sizes.push_back(row);
  const std::string html = render_html(data);
  r.require(html.find("122 / 160") != std::string::npos,
            "reference sizes missing from the rendered table");
  r.note(std::to_string(analyzed) +
         " units additive and cross-checked; reference table renders 122 / "
         "160");
}

// --------------------------------------------------------------------------
// 8. Error-path equivalence and timing
// --------------------------------------------------------------------------

void check_error_path(check_result& r) {
  const corpus::CorpusEntry& entry = entry_of("as_series/original-vs-earlyexit");
  const Dataset cases = corpus::coeff_validation_cases();

  int empties = 0;
  Dataset error_only;
  error_only.id = "error-empty-only";
  error_only.schema = schema::coeff_list;
  for (const DatasetItem& item : cases.items) {
    if (item.id.rfind("empty", 0) != 0) continue;
    ++empties;
    for (const ExecutableUnit* unit :
         {&entry.pair.baseline, &entry.pair.candidate}) {
      const Outcome outcome = run_once(*unit, item.payload);
      r.require(outcome.is_error() &&
                    outcome.error_class == errclass::value_error &&
                    outcome.error_message == "Coefficient array is empty",
                unit->id + " on " + item.id + ": got " + outcome.digest());
    }
    for (int copy = 0; copy < 4; ++copy) {
      DatasetItem clone = item;
      clone.id = item.id + "-" + std::to_string(copy);
      error_only.items.push_back(clone);
    }
  }
  r.require(empties == 3,
            "expected 3 empty-coefficient cases, found " +
                std::to_string(empties));

  const CorrectnessReport gate = gate_pair(entry.pair, cases);
  r.require(gate.fraction == 0.0,
            "validation-case gate diverged (" +
                std::to_string(gate.mismatched) + "/" +
                std::to_string(gate.total) + ")");

  TimingSpec spec = entry.pair.default_spec;
  spec.repeat = 5;
  spec.number = 500;
  SteadyClock clock;
  const std::vector<MeasurementRecord> records =
      measure_pair(entry.pair, error_only, spec, clock);
  const double median = median_of(gs_of(records));
  if (reference_host()) {
    r.require(median >= 1.0,
              "error-path median g = " + fmt(median) + " below 1.0");
    r.note("error-path median g = " + fmt(median) + " (asserted >= 1.0)");
  } else {
    r.note("both variants raise identically; error-path median g = " +
           fmt(median) +
           " reported, not asserted (set VARBENCH_REFERENCE_HOST to assert)");
  }
}

// --------------------------------------------------------------------------
// 9. Image ingestion and byte-stable persistence
// --------------------------------------------------------------------------

void check_ingestion(check_result& r) {
  const fs::path dir = testutil::fresh_dir("acceptance_ingest");
  {
    std::ofstream out(dir / "black.ppm", std::ios::binary);
    out << "P3\n2 2\n255\n0 0 0 0 0 0 0 0 0 0 0 0\n";
  }
  {
    std::ofstream out(dir / "gray.pgm", std::ios::binary);
    out << "P2\n2 2\n255\n0 255 255 255\n";
  }
  {
    std::ofstream out(dir / "tricolor.ppm", std::ios::binary);
    out << "P3\n3 1\n255\n1 2 3 1 2 3 5 6 7\n";
  }

  const Dataset ingested = ingest_ppm(dir);
  r.require(ingested.items.size() == 3, "expected 3 ingested images");
  auto histogram_of = [&](const std::string& id) -> const Histogram* {
    for (const DatasetItem& item : ingested.items)
      if (item.id == id) return &std::get<Histogram>(item.payload);
    r.require(false, "missing ingested item " + id);
    return nullptr;
  };

  if (const Histogram* black = histogram_of("black")) {
    r.require(black->size() == 768, "black: wrong band count");
    std::int64_t total = 0;
    for (std::int64_t bin : *black) total += bin;
    r.require((*black)[0] == 4 && (*black)[256] == 4 && (*black)[512] == 4 &&
                  total == 12,
              "black: histogram is not 4/4/4 at bin 0 of each band");
  }
  if (const Histogram* gray = histogram_of("gray")) {
    r.require(gray->size() == 256, "gray: expected a single band");
    r.require((*gray)[0] == 1 && (*gray)[255] == 3,
              "gray: histogram is not bin0=1, bin255=3");
  }
  if (const Histogram* tri = histogram_of("tricolor")) {
    r.require(tri->size() == 768, "tricolor: wrong band count");
    r.require((*tri)[1] == 2 && (*tri)[5] == 1 && (*tri)[258] == 2 &&
                  (*tri)[262] == 1 && (*tri)[515] == 2 && (*tri)[519] == 1,
              "tricolor: per-channel counts drifted from the hand count");
  }

  // Byte-stable persistence: save -> load -> save is the identity.
  const fs::path first = dir / "ingested.jsonl";
  const fs::path second = dir / "ingested2.jsonl";
  save_dataset(ingested, first);
  save_dataset(load_dataset(first), second);
  r.require(testutil::slurp(first) == testutil::slurp(second),
            "ingested dataset round trip changed bytes");

  const Dataset synthetic = synth_pattern(pattern::uniform_dense, 2, 77, 5);
  const fs::path s1 = dir / "synth.jsonl";
  const fs::path s2 = dir / "synth2.jsonl";
  save_dataset(synthetic, s1);
  save_dataset(load_dataset(s1), s2);
  r.require(testutil::slurp(s1) == testutil::slurp(s2),
            "synthetic dataset round trip changed bytes");

  fs::remove_all(dir);
  r.note("three pixmap fixtures hand-counted exactly; persistence round "
         "trips are byte-identical");
}

// --------------------------------------------------------------------------
// 10. End-to-end campaign over the whole catalog
// --------------------------------------------------------------------------

std::string artifact_dir_name(const std::string& pair_id) {
  std::string out = pair_id;
  for (char& c : out)
    if (c == '/') c = '-';
  return out;
}

void check_campaign(check_result& r) {
  const std::string bin = testutil::require_env("VARBENCH_BIN");
  const fs::path out_dir = testutil::fresh_dir("acceptance_campaign");

  const auto start = std::chrono::steady_clock::now();
  const auto run = testutil::run_command(bin + " --output-dir " +
                                         out_dir.string() + " run-all");
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  r.require(run.exit_code == 0, "run-all exited " +
                                    std::to_string(run.exit_code) + ": " +
                                    run.err.substr(0, 200));
  r.require(elapsed < 900.0,
            "campaign took " + fmt(elapsed) + "s (budget 900s)");

  const fs::path campaign_path = out_dir / "campaign.json";
  r.require(fs::exists(campaign_path), "campaign.json was not written");
  if (!fs::exists(campaign_path)) return;
  const json campaign = json::parse(testutil::slurp(campaign_path));
  r.require(campaign["all_gates_as_expected"] == true,
            "some gate outcome surprised the campaign");
  r.require(campaign["had_errors"] == false, "campaign recorded errors");
  r.require(campaign["pair_count"] == 17,
            "expected 17 pairs, campaign saw " +
                campaign["pair_count"].dump());

  int benched = 0;
  int gate_only = 0;
  for (const json& entry : campaign["entries"]) {
    const std::string pair_id = entry["pair_id"].get<std::string>();
    const fs::path pair_dir = out_dir / artifact_dir_name(pair_id);
    r.require(entry["status"] == "ok",
              pair_id + ": status " + entry["status"].dump());
    if (!entry["benched"].get<bool>()) {
      ++gate_only;
      const json gate = json::parse(testutil::slurp(pair_dir / "gate.json"));
      r.require(gate["mismatched"].get<std::int64_t>() > 0,
                pair_id + ": unbenched pair with a clean gate");
      continue;
    }
    ++benched;
    const fs::path records_path = pair_dir / "records.jsonl";
    const fs::path stats_path = pair_dir / "stats.json";
    const fs::path csv_path = pair_dir / "buckets.csv";
    const fs::path html_path = pair_dir / "report.html";
    for (const fs::path* artifact :
         {&records_path, &stats_path, &csv_path, &html_path})
      r.require(fs::exists(*artifact),
                pair_id + ": missing " + artifact->filename().string());
    if (!fs::exists(records_path) || !fs::exists(stats_path) ||
        !fs::exists(csv_path) || !fs::exists(html_path))
      continue;

    // Every artifact must be re-parseable by the loaders that wrote it.
    const std::vector<MeasurementRecord> records = load_records(records_path);
    r.require(records.size() ==
                  entry["record_count"].get<std::size_t>(),
              pair_id + ": records.jsonl does not reload");
    const StatsSummary stats =
        StatsSummary::from_json(json::parse(testutil::slurp(stats_path)));
    r.require(stats.count == static_cast<std::int64_t>(records.size()),
              pair_id + ": stats.json count mismatch");
    r.require(testutil::slurp(csv_path).rfind("bucket,count\n", 0) == 0,
              pair_id + ": buckets.csv header drifted");
    const std::string html = testutil::slurp(html_path);
    const json payload = parse_html_payload(html);
    r.require(payload["stats"]["count"].get<std::int64_t>() ==
                  static_cast<std::int64_t>(records.size()),
              pair_id + ": embedded report payload count mismatch");

    // Self-contained: no external fetches, a single inline script block.
    r.require(html.find("<link") == std::string::npos &&
                  html.find("src=") == std::string::npos &&
                  html.find("@import") == std::string::npos &&
                  html.find("https://") == std::string::npos,
              pair_id + ": report.html references external resources");
    const std::string open_tag = "<script";
    std::size_t scripts = 0;
    for (std::size_t at = html.find(open_tag); at != std::string::npos;
         at = html.find(open_tag, at + open_tag.size()))
      ++scripts;
    r.require(scripts == 1,
              pair_id + ": expected exactly one inline script block");
  }
  r.require(benched == 13, "expected 13 benched pairs, saw " +
                               std::to_string(benched));
  r.require(gate_only == 4, "expected 4 gate-only pairs, saw " +
                                std::to_string(gate_only));
  fs::remove_all(out_dir);
  r.note("17 pairs in " + fmt(elapsed) +
         "s: 13 benched with reloadable records/stats/CSV/HTML, 4 "
         "divergent-by-design gated only");
}

}  // namespace

int main() {
  struct criterion {
    const char* name;
    std::function<void(check_result&)> body;
  };
  const std::vector<criterion> criteria = {
      {"differential gate soundness", check_gate_soundness},
      {"early-exit inspection counts and speedup", check_early_exit_speedup},
      {"band-count rewrite speedup", check_count_speedup},
      {"scripted-clock determinism", check_scripted_determinism},
      {"full-scale replay aggregates", check_replay_aggregates},
      {"statistics correctness", check_statistics},
      {"code-size analyzer consistency", check_code_size},
      {"error-path equivalence and timing", check_error_path},
      {"image ingestion and persistence", check_ingestion},
      {"end-to-end campaign", check_campaign},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    check_result result;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].body(result);
    } catch (const std::exception& e) {
      result.failures.push_back(std::string("unhandled exception: ") +
                                e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();

    std::string detail;
    if (result.failures.empty()) {
      for (const auto& note : result.notes) {
        if (!detail.empty()) detail += "; ";
        detail += note;
      }
    } else {
      const std::size_t shown = std::min<std::size_t>(result.failures.size(), 3);
      for (std::size_t k = 0; k < shown; ++k) {
        if (!detail.empty()) detail += "; ";
        detail += result.failures[k];
      }
      if (result.failures.size() > shown)
        detail += "; (+" + std::to_string(result.failures.size() - shown) +
                  " more)";
    }
    std::printf("%s %2zu/%zu %s [%.1fs] %s\n",
                result.failures.empty() ? "PASS" : "FAIL", i + 1,
                criteria.size(), criteria[i].name, elapsed, detail.c_str());
    std::fflush(stdout);
    if (!result.failures.empty()) ++failed;
  }

  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
