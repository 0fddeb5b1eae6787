#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "varbench/errors.hpp"
#include "varbench/model.hpp"

namespace varbench {

// ---------------------------------------------------------------------------
// Deterministic generation
// ---------------------------------------------------------------------------

// 64-bit linear congruential generator, constants from Knuth's MMIX
// (multiplier 6364136223846793005, increment 1442695040888963407). Chosen
// so datasets regenerate bit-identically on any host.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  // Uniform in [0, n); top bits have the longest period.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw contract_error("Lcg64::below: n must be positive");
    return (next() >> 16) % n;
  }

  // Uniform in [lo, hi], inclusive.
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw contract_error("Lcg64::between: empty range");
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Synthetic patterns
// ---------------------------------------------------------------------------

namespace pattern {
inline constexpr const char* edge_concentrated = "edge_concentrated";
inline constexpr const char* uniform_dense = "uniform_dense";
inline constexpr const char* empty_band = "empty_band";
inline constexpr const char* single_bin = "single_bin";
inline constexpr const char* two_band_tail = "two_band_tail";
inline constexpr const char* non_multiple_length = "non_multiple_length";
inline constexpr const char* grayscale_like = "grayscale_like";
// Coefficient-array descriptor lists (validation workloads). Generated
// lists are never empty: the validated segment's behavior on an empty
// list is outside its documented domain.
inline constexpr const char* coeff_mixed = "coeff_mixed";

inline const std::vector<std::string>& histogram_patterns() {
  static const std::vector<std::string> all{
      edge_concentrated, uniform_dense,       empty_band,    single_bin,
      two_band_tail,     non_multiple_length, grayscale_like};
  return all;
}

inline bool is_known(const std::string& p) {
  if (p == coeff_mixed) return true;
  const auto& hist = histogram_patterns();
  return std::find(hist.begin(), hist.end(), p) != hist.end();
}
}  // namespace pattern

struct PatternSpec {
  std::string pattern;
  std::int64_t bands = 1;
  std::uint64_t seed = 0;
  std::int64_t items = 1;

  void validate() const {
    if (!pattern::is_known(pattern))
      throw contract_error("unknown pattern: " + pattern);
    if (bands < 1) throw contract_error("pattern spec: bands must be >= 1");
    if (items < 1) throw contract_error("pattern spec: items must be >= 1");
  }
};

namespace detail {

inline Histogram synth_histogram(const std::string& p, std::int64_t bands,
                                 Lcg64& rng) {
  constexpr std::int64_t width = 256;
  auto count = [&rng] { return rng.between(1, 1000); };

  if (p == pattern::edge_concentrated) {
    Histogram h(static_cast<std::size_t>(bands * width), 0);
    for (std::int64_t b = 0; b < bands; ++b) {
      h[static_cast<std::size_t>(b * width)] = count();
      h[static_cast<std::size_t>(b * width + 255)] = count();
    }
    return h;
  }
  if (p == pattern::uniform_dense) {
    Histogram h(static_cast<std::size_t>(bands * width));
    for (auto& bin : h) bin = count();
    return h;
  }
  if (p == pattern::empty_band) {
    Histogram h(static_cast<std::size_t>(bands * width), 0);
    const std::int64_t zero_band =
        rng.between(0, bands - 1);  // stays all-zero
    for (std::int64_t b = 0; b < bands; ++b) {
      if (b == zero_band) continue;
      for (std::int64_t i = 0; i < width; ++i)
        h[static_cast<std::size_t>(b * width + i)] = count();
    }
    return h;
  }
  if (p == pattern::single_bin) {
    Histogram h(static_cast<std::size_t>(bands * width), 0);
    const std::int64_t b = rng.between(0, bands - 1);
    const std::int64_t pos = rng.between(0, width - 1);
    h[static_cast<std::size_t>(b * width + pos)] = count();
    return h;
  }
  if (p == pattern::two_band_tail) {
    const std::int64_t n = std::max<std::int64_t>(bands, 2);
    Histogram h(static_cast<std::size_t>(n * width), 0);
    for (std::int64_t b = 0; b < n; ++b)
      for (int k = 0; k < 6; ++k)
        h[static_cast<std::size_t>(b * width + rng.between(0, width - 1))] =
            count();
    // guaranteed nonzero in the last band
    h[static_cast<std::size_t>((n - 1) * width + rng.between(0, width - 1))] =
        count();
    return h;
  }
  if (p == pattern::non_multiple_length) {
    const std::int64_t cut = rng.between(1, width - 1);
    const std::int64_t length = bands * width - cut;
    Histogram h(static_cast<std::size_t>(length), 0);
    for (std::int64_t b = 0; b < bands; ++b)
      for (int k = 0; k < 6; ++k) {
        const std::int64_t pos = rng.between(0, length - 1);
        h[static_cast<std::size_t>(pos)] = count();
      }
    return h;
  }
  if (p == pattern::grayscale_like) {
    Histogram h(width, 0);  // single band by definition
    for (std::int64_t i = 0; i < width; ++i) {
      const std::int64_t distance = std::abs(i - 128);
      if (distance > 96) continue;
      h[static_cast<std::size_t>(i)] = rng.between(1, 1 + (96 - distance) * 20);
    }
    return h;
  }
  throw contract_error("synth_histogram: not a histogram pattern: " + p);
}

inline std::pair<CoeffList, std::string> synth_coeff_list(Lcg64& rng) {
  const std::int64_t length = rng.between(20, 200);
  CoeffList coeffs(static_cast<std::size_t>(length));
  for (auto& c : coeffs) c = {rng.between(1, 64), 1};

  const std::int64_t kind = rng.between(0, 9);
  std::string label = "valid";
  if (kind == 4 || kind == 5) {
    coeffs[0].size = 0;
    label = "error-empty";
  } else if (kind == 6) {
    coeffs[static_cast<std::size_t>(rng.between(0, length - 1))].size = 0;
    label = "error-empty";
  } else if (kind == 7) {
    coeffs[static_cast<std::size_t>(rng.between(0, length - 1))].ndim = 2;
    label = "error-ndim";
  } else if (kind == 8) {
    coeffs[0].ndim = 3;
    label = "error-ndim";
  } else if (kind == 9) {
    coeffs[static_cast<std::size_t>(rng.between(0, length - 1))].size = 0;
    coeffs[static_cast<std::size_t>(rng.between(0, length - 1))].ndim = 2;
    label = "error-mixed";
  }
  return {std::move(coeffs), label};
}

}  // namespace detail

// Deterministic synthesis: the dataset is a pure function of the spec.
inline Dataset synth(const PatternSpec& spec) {
  spec.validate();
  Lcg64 rng(spec.seed);

  Dataset dataset;
  dataset.id = spec.pattern + "-b" + std::to_string(spec.bands) + "-s" +
               std::to_string(spec.seed) + "-n" + std::to_string(spec.items);
  dataset.schema = spec.pattern == pattern::coeff_mixed ? schema::coeff_list
                                                        : schema::histogram;

  for (std::int64_t index = 0; index < spec.items; ++index) {
    DatasetItem item;
    char suffix[24];
    std::snprintf(suffix, sizeof suffix, "%04lld",
                  static_cast<long long>(index));
    item.id = spec.pattern + "-" + suffix;
    item.meta["pattern"] = spec.pattern;
    if (spec.pattern == pattern::coeff_mixed) {
      auto [coeffs, label] = detail::synth_coeff_list(rng);
      item.payload = std::move(coeffs);
      item.meta["kind"] = label;
    } else {
      item.payload = detail::synth_histogram(spec.pattern, spec.bands, rng);
      item.meta["bands"] = std::to_string(spec.bands);
    }
    dataset.items.push_back(std::move(item));
  }
  return dataset;
}

// ---------------------------------------------------------------------------
// Portable pixmap ingestion
// ---------------------------------------------------------------------------

namespace detail {

class PnmReader {
 public:
  explicit PnmReader(std::string bytes, std::string origin)
      : bytes_(std::move(bytes)), origin_(std::move(origin)) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(origin_ + ": " + what + " at byte " +
                      std::to_string(pos_));
  }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::int64_t read_int(const char* what) {
    skip_space_and_comments();
    if (pos_ >= bytes_.size()) fail(std::string("missing ") + what);
    if (bytes_[pos_] < '0' || bytes_[pos_] > '9')
      fail(std::string("malformed ") + what);
    std::int64_t value = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 1'000'000'000) fail(std::string("oversized ") + what);
      ++pos_;
    }
    return value;
  }

  std::string read_magic() {
    if (bytes_.size() < 2 || bytes_[0] != 'P') fail("missing magic number");
    std::string magic = bytes_.substr(0, 2);
    pos_ = 2;
    return magic;
  }

  unsigned char read_raw_byte() {
    if (pos_ >= bytes_.size()) fail("truncated pixel data");
    return static_cast<unsigned char>(bytes_[pos_++]);
  }

  void expect_single_separator() {
    if (pos_ >= bytes_.size()) fail("truncated pixel data");
    const char c = bytes_[pos_];
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r')
      fail("missing separator before pixel data");
    ++pos_;
  }

  std::size_t position() const { return pos_; }

 private:
  std::string bytes_;
  std::string origin_;
  std::size_t pos_ = 0;
};

inline DatasetItem ingest_one_pnm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open image file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  PnmReader reader(buffer.str(), path.string());

  const std::string magic = reader.read_magic();
  int channels = 0;
  bool binary = false;
  if (magic == "P2") channels = 1;
  else if (magic == "P3") channels = 3;
  else if (magic == "P5") channels = 1, binary = true;
  else if (magic == "P6") channels = 3, binary = true;
  else reader.fail("unsupported magic number '" + magic + "'");

  const std::int64_t width = reader.read_int("width");
  const std::int64_t height = reader.read_int("height");
  if (width < 1 || height < 1) reader.fail("empty image dimensions");
  const std::int64_t maxval = reader.read_int("max value");
  if (maxval != 255)
    reader.fail("unsupported max value " + std::to_string(maxval));

  const std::int64_t samples = width * height * channels;
  Histogram h(static_cast<std::size_t>(channels) * 256, 0);
  if (binary) {
    reader.expect_single_separator();
    for (std::int64_t i = 0; i < samples; ++i) {
      const unsigned char value = reader.read_raw_byte();
      const std::int64_t channel = i % channels;
      ++h[static_cast<std::size_t>(channel) * 256 + value];
    }
  } else {
    for (std::int64_t i = 0; i < samples; ++i) {
      const std::int64_t value = reader.read_int("pixel sample");
      if (value > 255) reader.fail("sample exceeds max value");
      const std::int64_t channel = i % channels;
      ++h[static_cast<std::size_t>(channel) * 256 +
          static_cast<std::size_t>(value)];
    }
  }

  DatasetItem item;
  item.id = path.stem().string();
  item.payload = std::move(h);
  item.meta["width"] = std::to_string(width);
  item.meta["height"] = std::to_string(height);
  item.meta["source"] = path.string();
  return item;
}

}  // namespace detail

// Ingests one image file, or every .ppm/.pgm/.pnm in a directory (sorted
// by filename). Payloads are concatenated per-channel 256-bin histograms:
// 3 bands for color pixmaps, 1 for graymaps.
inline Dataset ingest_ppm(const std::filesystem::path& path) {
  Dataset dataset;
  dataset.schema = schema::histogram;
  dataset.id = path.stem().string();

  if (std::filesystem::is_directory(path)) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(path)) {
      const auto ext = entry.path().extension().string();
      if (ext == ".ppm" || ext == ".pgm" || ext == ".pnm")
        files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files)
      dataset.items.push_back(detail::ingest_one_pnm(file));
  } else {
    dataset.items.push_back(detail::ingest_one_pnm(path));
  }
  return dataset;
}

// ---------------------------------------------------------------------------
// Dataset persistence (JSON Lines of {id, payload, meta})
// ---------------------------------------------------------------------------

inline void save_dataset(const Dataset& dataset,
                         const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw contract_error("cannot open dataset file for writing: " +
                                 path.string());
  for (const auto& item : dataset.items) {
    json line{{"id", item.id},
              {"meta", item.meta},
              {"payload", payload_to_json(item.payload)}};
    out << line.dump() << '\n';
  }
}

inline Dataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open dataset file: " + path.string());

  Dataset dataset;
  dataset.id = path.stem().string();
  std::string line;
  std::size_t line_no = 0;
  std::set<std::string> seen_ids;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where = path.string() + " line " + std::to_string(line_no);
    json value;
    try {
      value = json::parse(line);
    } catch (const json::exception& e) {
      throw parse_error(where + ": " + e.what());
    }
    if (!value.is_object() || !value.contains("id") ||
        !value.contains("payload") || !value.contains("meta"))
      throw parse_error(where + ": item must have id, payload, meta");

    DatasetItem item;
    try {
      item.id = value.at("id").get<std::string>();
      item.meta = value.at("meta").get<std::map<std::string, std::string>>();
      item.payload = payload_from_json(value.at("payload"));
    } catch (const json::exception& e) {
      throw parse_error(where + ": " + e.what());
    } catch (const parse_error& e) {
      throw parse_error(where + ": " + e.what());
    }
    if (!seen_ids.insert(item.id).second)
      throw parse_error(where + ": duplicate item id '" + item.id + "'");

    const std::string item_schema = schema_of(item.payload);
    if (dataset.items.empty())
      dataset.schema = item_schema;
    else if (item_schema != dataset.schema)
      throw parse_error(where + ": payload schema '" + item_schema +
                        "' conflicts with '" + dataset.schema + "'");
    dataset.items.push_back(std::move(item));
  }
  return dataset;
}

}  // namespace varbench
