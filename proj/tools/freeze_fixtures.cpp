// Writes the frozen reference fixtures the test suite replays:
//   ref_extrema.jsonl / ref_count.jsonl / ref_first_nonzero.jsonl —
//     brute-force reference outputs over fixed seeded synthetic suites;
//   flawed_counterexamples.jsonl — hand-built inputs on which each flawed
//     variant diverges, with the brute-force correct result attached.
// Output is deterministic; a test regenerates it and asserts the committed
// files are byte-identical.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "varbench/data.hpp"
#include "varbench/oracle.hpp"

namespace {

using namespace varbench;

Dataset suite(const char* name, std::int64_t bands, std::uint64_t seed,
              std::int64_t items) {
  PatternSpec spec;
  spec.pattern = name;
  spec.bands = bands;
  spec.seed = seed;
  spec.items = items;
  return synth(spec);
}

struct SuiteRow {
  const char* pattern;
  std::int64_t bands;
  std::uint64_t seed;
  std::int64_t items;
};

void append_results(std::vector<oracle::ReferenceResult>& all,
                    const std::string& which, const Dataset& dataset) {
  for (auto& result : oracle::reference_results(which, dataset))
    all.push_back(std::move(result));
}

json counterexample(const std::string& case_id, const std::string& pair_id,
                    const Histogram& h, bool baseline_raises) {
  return json{{"case_id", case_id},
              {"pair_id", pair_id},
              {"payload", payload_to_json(Payload{h})},
              {"correct_result", oracle::ref_extrema(h)},
              {"baseline_raises", baseline_raises}};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: freeze_fixtures <output-dir>\n");
    return 2;
  }
  const std::filesystem::path out_dir = argv[1];
  std::filesystem::create_directories(out_dir);

  // Band extrema over a mixed histogram suite, including inputs outside the
  // 256-multiple contract (the reference scan is total on every input).
  {
    std::vector<oracle::ReferenceResult> all;
    const SuiteRow rows[] = {
        {pattern::edge_concentrated, 1, 11, 8},
        {pattern::uniform_dense, 2, 12, 8},
        {pattern::empty_band, 1, 13, 8},
        {pattern::single_bin, 1, 14, 8},
        {pattern::two_band_tail, 2, 15, 8},
        {pattern::grayscale_like, 1, 16, 8},
        {pattern::non_multiple_length, 2, 17, 8},
    };
    for (const SuiteRow& row : rows)
      append_results(all, "extrema", suite(row.pattern, row.bands, row.seed,
                                           row.items));
    oracle::write_reference_jsonl(out_dir / "ref_extrema.jsonl", all);
    std::printf("wrote %s (%zu cases)\n",
                (out_dir / "ref_extrema.jsonl").string().c_str(), all.size());
  }

  // Per-band sums over dense multi-band and edge-heavy suites.
  {
    std::vector<oracle::ReferenceResult> all;
    const SuiteRow rows[] = {
        {pattern::uniform_dense, 4, 21, 10},
        {pattern::uniform_dense, 1, 22, 6},
        {pattern::edge_concentrated, 1, 23, 6},
        {pattern::empty_band, 2, 24, 4},
    };
    for (const SuiteRow& row : rows)
      append_results(all, "count", suite(row.pattern, row.bands, row.seed,
                                         row.items));
    oracle::write_reference_jsonl(out_dir / "ref_count.jsonl", all);
    std::printf("wrote %s (%zu cases)\n",
                (out_dir / "ref_count.jsonl").string().c_str(), all.size());
  }

  // First set bin: the needle ladder (rebuilt here by definition) plus
  // seeded single-bin and empty-band histograms.
  {
    std::vector<oracle::ReferenceResult> all;
    Dataset ladder;
    ladder.id = "needle-ladder";
    ladder.schema = schema::histogram;
    for (const std::int64_t position : {1, 16, 128, 240, 256}) {
      DatasetItem item;
      char suffix[24];
      std::snprintf(suffix, sizeof suffix, "%03lld",
                    static_cast<long long>(position));
      item.id = std::string("needle-") + suffix;
      Histogram h(256, 0);
      h[static_cast<std::size_t>(position - 1)] = 1;
      item.payload = h;
      ladder.items.push_back(std::move(item));
    }
    append_results(all, "first_nonzero", ladder);
    append_results(all, "first_nonzero", suite(pattern::single_bin, 1, 31, 8));
    append_results(all, "first_nonzero", suite(pattern::empty_band, 1, 32, 4));
    oracle::write_reference_jsonl(out_dir / "ref_first_nonzero.jsonl", all);
    std::printf("wrote %s (%zu cases)\n",
                (out_dir / "ref_first_nonzero.jsonl").string().c_str(),
                all.size());
  }

  // One divergence witness per flawed variant. "baseline_raises" marks the
  // input as outside the full-scan baseline's domain (it throws the
  // out-of-range error there while the flawed variant returns a value).
  {
    const std::filesystem::path path = out_dir / "flawed_counterexamples.jsonl";
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::fprintf(stderr, "cannot open %s\n", path.string().c_str());
      return 1;
    }

    // Count-extrema confusion: every bin holds count 2, so min/max of the
    // counts is (2, 2) while the set-index extrema are (0, 255).
    Histogram uniform_counts(256, 2);
    out << counterexample("uniform-counts", "getextrema/original-vs-oneliner",
                          uniform_counts, false)
               .dump()
        << '\n';

    // Whole-tail scan: with two bands, bin 511 lands in the first band's
    // unclamped tail, so its band-0 maximum becomes 511 instead of 0.
    Histogram two_bands(512, 0);
    two_bands[0] = 1;
    two_bands[511] = 3;
    out << counterexample("tail-leak", "getextrema/original-vs-wholescan",
                          two_bands, false)
               .dump()
        << '\n';

    // Value filter: the only set bin is index 10 with count 42; filtering
    // values instead of indices reports (42, 42).
    Histogram count_not_index(256, 0);
    count_not_index[10] = 42;
    out << counterexample("count-not-index",
                          "getextrema/original-vs-valuefilter",
                          count_not_index, false)
               .dump()
        << '\n';

    // Rebase-from-255: a short final band (384 = 256 + 128) makes the
    // fixed-width scan raise, while the clamped-and-rebased variant returns
    // a maximum computed from the wrong band width.
    Histogram short_tail(384, 0);
    short_tail[0] = 1;
    short_tail[300] = 5;
    out << counterexample("short-tail-band", "getextrema/original-vs-islice",
                          short_tail, true)
               .dump()
        << '\n';
    out.flush();
    std::printf("wrote %s (4 cases)\n", path.string().c_str());
  }

  return 0;
}
