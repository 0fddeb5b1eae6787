#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "subprocess.hpp"
#include "varbench/corpus/corpus.hpp"
#include "varbench/data.hpp"
#include "varbench/gate.hpp"
#include "varbench/oracle.hpp"

using namespace varbench;

namespace {

Dataset suite(const char* name, std::int64_t bands, std::uint64_t seed,
              std::int64_t items) {
  PatternSpec spec;
  spec.pattern = name;
  spec.bands = bands;
  spec.seed = seed;
  spec.items = items;
  return synth(spec);
}

std::filesystem::path fixtures_dir() {
  return testutil::require_env("VARBENCH_FIXTURES");
}

const ExecutableUnit& unit_of(const std::string& pair_id, bool baseline) {
  const corpus::CorpusEntry* entry = corpus::find_entry(pair_id);
  REQUIRE(entry != nullptr);
  return baseline ? entry->pair.baseline : entry->pair.candidate;
}

bool in_band_contract(const Histogram& h) { return h.size() % 256 == 0; }

}  // namespace

TEST_CASE("band extrema reference on hand-built inputs", "[oracle]") {
  Histogram h(256, 0);
  h[3] = 5;
  h[10] = 1;
  REQUIRE(oracle::ref_extrema(h) == json::array({json::array({3, 10})}));

  REQUIRE(oracle::ref_extrema(Histogram(256, 0)) ==
          json::array({json::array({255, 0})}));

  Histogram two(512, 0);
  two[0] = 1;
  two[255] = 2;
  REQUIRE(oracle::ref_extrema(two) ==
          json::array({json::array({0, 255}), json::array({255, 0})}));

  Histogram short_tail(300, 0);
  short_tail[7] = 1;
  short_tail[280] = 9;  // relative index 24 in the 44-bin final band
  REQUIRE(oracle::ref_extrema(short_tail) ==
          json::array({json::array({7, 7}), json::array({24, 24})}));

  REQUIRE(oracle::ref_extrema(Histogram{}) == json::array());
}

TEST_CASE("band totals reference on hand-built inputs", "[oracle]") {
  Histogram h(300, 1);
  h[0] = 10;
  // band 0: 10 + 255 ones; band 1: 44 ones.
  REQUIRE(oracle::ref_count(h) == json::array({265, 44}));
  REQUIRE(oracle::ref_count(Histogram{}) == json::array());
}

TEST_CASE("first set bin reference on hand-built inputs", "[oracle]") {
  Histogram h(256, 0);
  h[17] = 3;
  REQUIRE(oracle::ref_first_nonzero(h) == json(17));
  h[17] = 0;
  REQUIRE(oracle::ref_first_nonzero(h) == json(nullptr));

  Histogram second_band_only(512, 0);
  second_band_only[300] = 5;  // outside the first band
  REQUIRE(oracle::ref_first_nonzero(second_band_only) == json(nullptr));

  Histogram short_h(40, 0);
  short_h[39] = 1;
  REQUIRE(oracle::ref_first_nonzero(short_h) == json(39));
}

TEST_CASE("reference results carry the item id and a bounded digest",
          "[oracle]") {
  const Dataset dataset = suite(pattern::single_bin, 1, 3, 2);
  const auto results = oracle::reference_results("extrema", dataset);
  REQUIRE(results.size() == 2);
  REQUIRE(results[0].case_id == "single_bin-0000");
  REQUIRE(results[0].input_digest.size() <= 256);
  REQUIRE_THROWS_AS(oracle::reference_results("no_such_oracle", dataset),
                    contract_error);
  Dataset wrong;
  wrong.schema = schema::coeff_list;
  DatasetItem item;
  item.id = "c";
  item.payload = CoeffList{{3, 1}};
  wrong.items.push_back(item);
  REQUIRE_THROWS_AS(oracle::reference_results("extrema", wrong),
                    contract_error);
}

TEST_CASE("frozen extrema fixture replays against live regeneration",
          "[oracle]") {
  const auto frozen =
      oracle::read_reference_jsonl(fixtures_dir() / "ref_extrema.jsonl");
  REQUIRE(frozen.size() == 56);

  struct Row {
    const char* pattern;
    std::int64_t bands;
    std::uint64_t seed;
  };
  const Row rows[] = {
      {pattern::edge_concentrated, 1, 11}, {pattern::uniform_dense, 2, 12},
      {pattern::empty_band, 1, 13},        {pattern::single_bin, 1, 14},
      {pattern::two_band_tail, 2, 15},     {pattern::grayscale_like, 1, 16},
      {pattern::non_multiple_length, 2, 17},
  };

  const ExecutableUnit& baseline = unit_of("getextrema/original-vs-final", true);
  const ExecutableUnit& candidate =
      unit_of("getextrema/original-vs-final", false);

  std::size_t row_index = 0;
  for (const Row& row : rows) {
    const Dataset dataset = suite(row.pattern, row.bands, row.seed, 8);
    const auto live = oracle::reference_results("extrema", dataset);
    for (std::size_t i = 0; i < live.size(); ++i, ++row_index) {
      INFO("fixture row " << row_index << " (" << frozen[row_index].case_id
                          << ")");
      REQUIRE(frozen[row_index].case_id == live[i].case_id);
      REQUIRE(frozen[row_index].input_digest == live[i].input_digest);
      REQUIRE(frozen[row_index].expected == live[i].expected);

      // The corpus scanners must agree with the frozen expectation inside
      // their documented domain and raise the sequence error outside it.
      const Histogram& h = std::get<Histogram>(dataset.items[i].payload);
      for (const ExecutableUnit* unit : {&baseline, &candidate}) {
        const Outcome outcome = run_once(*unit, dataset.items[i].payload);
        if (in_band_contract(h)) {
          REQUIRE_FALSE(outcome.is_error());
          REQUIRE(outcome.value == frozen[row_index].expected);
        } else {
          REQUIRE(outcome.is_error());
          REQUIRE(outcome.error_class == errclass::index_error);
          REQUIRE(outcome.error_message == "list index out of range");
        }
      }
    }
  }
  REQUIRE(row_index == frozen.size());
}

TEST_CASE("frozen band-total fixture replays against live regeneration",
          "[oracle]") {
  const auto frozen =
      oracle::read_reference_jsonl(fixtures_dir() / "ref_count.jsonl");
  REQUIRE(frozen.size() == 26);

  struct Row {
    const char* pattern;
    std::int64_t bands;
    std::uint64_t seed;
    std::int64_t items;
  };
  const Row rows[] = {
      {pattern::uniform_dense, 4, 21, 10},
      {pattern::uniform_dense, 1, 22, 6},
      {pattern::edge_concentrated, 1, 23, 6},
      {pattern::empty_band, 2, 24, 4},
  };

  const ExecutableUnit& baseline = unit_of("getcount/original-vs-sum", true);
  const ExecutableUnit& candidate = unit_of("getcount/original-vs-sum", false);

  std::size_t row_index = 0;
  for (const Row& row : rows) {
    const Dataset dataset = suite(row.pattern, row.bands, row.seed, row.items);
    const auto live = oracle::reference_results("count", dataset);
    for (std::size_t i = 0; i < live.size(); ++i, ++row_index) {
      INFO("fixture row " << row_index << " (" << frozen[row_index].case_id
                          << ")");
      REQUIRE(frozen[row_index].case_id == live[i].case_id);
      REQUIRE(frozen[row_index].input_digest == live[i].input_digest);
      REQUIRE(frozen[row_index].expected == live[i].expected);
      for (const ExecutableUnit* unit : {&baseline, &candidate}) {
        const Outcome outcome = run_once(*unit, dataset.items[i].payload);
        REQUIRE_FALSE(outcome.is_error());
        REQUIRE(outcome.value == frozen[row_index].expected);
      }
    }
  }
  REQUIRE(row_index == frozen.size());
}

TEST_CASE("frozen first-set-bin fixture replays against live regeneration",
          "[oracle]") {
  const auto frozen = oracle::read_reference_jsonl(fixtures_dir() /
                                                   "ref_first_nonzero.jsonl");
  REQUIRE(frozen.size() == 17);

  // The needle ladder: one set bin at position p (1-based fixture naming,
  // 0-based bin index p - 1).
  std::vector<Dataset> suites;
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
  suites.push_back(std::move(ladder));
  suites.push_back(suite(pattern::single_bin, 1, 31, 8));
  suites.push_back(suite(pattern::empty_band, 1, 32, 4));

  const ExecutableUnit& baseline = unit_of("micro/generator-vs-loop", true);
  const ExecutableUnit& candidate = unit_of("micro/generator-vs-loop", false);

  std::size_t row_index = 0;
  for (const Dataset& dataset : suites) {
    const auto live = oracle::reference_results("first_nonzero", dataset);
    for (std::size_t i = 0; i < live.size(); ++i, ++row_index) {
      INFO("fixture row " << row_index << " (" << frozen[row_index].case_id
                          << ")");
      REQUIRE(frozen[row_index].case_id == live[i].case_id);
      REQUIRE(frozen[row_index].input_digest == live[i].input_digest);
      REQUIRE(frozen[row_index].expected == live[i].expected);
      for (const ExecutableUnit* unit : {&baseline, &candidate}) {
        const Outcome outcome = run_once(*unit, dataset.items[i].payload);
        REQUIRE_FALSE(outcome.is_error());
        REQUIRE(outcome.value == frozen[row_index].expected);
      }
    }
  }
  REQUIRE(row_index == frozen.size());

  // The ladder's single-bin positions are the documented probe depths.
  REQUIRE(frozen[0].expected == json(0));
  REQUIRE(frozen[1].expected == json(15));
  REQUIRE(frozen[2].expected == json(127));
  REQUIRE(frozen[3].expected == json(239));
  REQUIRE(frozen[4].expected == json(255));
}

TEST_CASE("randomized cross-check of the scanners against the references",
          "[oracle]") {
  const ExecutableUnit& extrema = unit_of("getextrema/original-vs-final", true);
  const ExecutableUnit& count_baseline =
      unit_of("getcount/original-vs-sum", true);
  const ExecutableUnit& count_candidate =
      unit_of("getcount/original-vs-sum", false);

  struct Row {
    const char* pattern;
    std::int64_t bands;
  };
  const Row rows[] = {
      {pattern::uniform_dense, 1},  {pattern::uniform_dense, 3},
      {pattern::edge_concentrated, 2}, {pattern::empty_band, 2},
      {pattern::single_bin, 1},     {pattern::two_band_tail, 2},
      {pattern::grayscale_like, 1}, {pattern::non_multiple_length, 3},
  };

  std::int64_t cases = 0;
  std::uint64_t seed = 1000;
  for (const Row& row : rows) {
    const Dataset dataset = suite(row.pattern, row.bands, ++seed, 1250);
    for (const auto& item : dataset.items) {
      const Histogram& h = std::get<Histogram>(item.payload);

      // Totals are in contract on every input, including short bands.
      const json expected_counts = oracle::ref_count(h);
      REQUIRE(run_once(count_baseline, item.payload).value == expected_counts);
      REQUIRE(run_once(count_candidate, item.payload).value == expected_counts);

      const Outcome extrema_outcome = run_once(extrema, item.payload);
      if (in_band_contract(h)) {
        REQUIRE(extrema_outcome.value == oracle::ref_extrema(h));
      } else {
        REQUIRE(extrema_outcome.is_error());
        REQUIRE(extrema_outcome.error_class == errclass::index_error);
      }
      ++cases;
    }
  }
  REQUIRE(cases == 10000);
}
