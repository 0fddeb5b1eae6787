#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "varbench/errors.hpp"
#include "varbench/model.hpp"

namespace varbench {

// ---------------------------------------------------------------------------
// Source listings
// ---------------------------------------------------------------------------

// Stored source text of a unit, with nested definitions as subtrees. A
// node's text includes the text of its nested definitions.
struct SourceListing {
  std::string name;
  std::string text;
  std::vector<SourceListing> nested;
};

using ListingStore = std::map<std::string, SourceListing>;

// ---------------------------------------------------------------------------
// Backends
// ---------------------------------------------------------------------------

// Pluggable size analysis. size_of reports a node's own size with nested
// definitions excluded; cross_check, when available, independently counts
// the whole tree.
class SizeBackend {
 public:
  virtual ~SizeBackend() = default;
  virtual std::string id() const = 0;
  virtual std::string size_unit() const = 0;
  virtual const SourceListing* representation(const ExecutableUnit& unit) const = 0;
  virtual std::int64_t size_of(const SourceListing& node) const = 0;
  virtual std::vector<const SourceListing*> children_of(
      const SourceListing& node) const = 0;
  virtual std::optional<std::int64_t> cross_check(
      const SourceListing& root) const = 0;
};

// Counts lexical tokens in stored listings: string literals and
// identifier/number runs count one each, every other non-space character
// counts one, comments count zero. Two independent tokenizers (a character
// state machine and a regex scan) back size_of and cross_check.
class TokenSizeBackend final : public SizeBackend {
 public:
  explicit TokenSizeBackend(const ListingStore* store) : store_(store) {}

  std::string id() const override { return "listing-tokens"; }
  std::string size_unit() const override { return "lexical tokens"; }

  const SourceListing* representation(const ExecutableUnit& unit) const override {
    if (unit.listing_ref.empty() || unit.listing_ref == "synthetic")
      return nullptr;
    auto it = store_->find(unit.listing_ref);
    return it == store_->end() ? nullptr : &it->second;
  }

  std::int64_t size_of(const SourceListing& node) const override {
    std::int64_t own = count_tokens(node.text);
    for (const auto& child : node.nested) own -= count_tokens(child.text);
    if (own < 0)
      throw contract_error("listing " + node.name +
                           ": nested text larger than enclosing text");
    return own;
  }

  std::vector<const SourceListing*> children_of(
      const SourceListing& node) const override {
    std::vector<const SourceListing*> out;
    out.reserve(node.nested.size());
    for (const auto& child : node.nested) out.push_back(&child);
    return out;
  }

  std::optional<std::int64_t> cross_check(const SourceListing& root) const override {
    return count_tokens_regex(root.text);
  }

  // Character state machine.
  static std::int64_t count_tokens(const std::string& text) {
    std::int64_t tokens = 0;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto is_word = [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
             (c >= '0' && c <= '9') || c == '_';
    };
    while (i < n) {
      const char c = text[i];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++i;
      } else if (c == '#') {
        while (i < n && text[i] != '\n') ++i;
      } else if (c == '"' || c == '\'') {
        const char quote = c;
        ++i;
        while (i < n && text[i] != quote) {
          if (text[i] == '\\' && i + 1 < n) ++i;
          ++i;
        }
        if (i < n) ++i;  // closing quote
        ++tokens;
      } else if (is_word(c)) {
        while (i < n && is_word(text[i])) ++i;
        ++tokens;
      } else {
        ++i;
        ++tokens;
      }
    }
    return tokens;
  }

  // Independent regex scan over the same grammar.
  static std::int64_t count_tokens_regex(const std::string& text) {
    static const std::regex token_re(
        R"re("(?:[^"\\]|\\.)*"|'(?:[^'\\]|\\.)*'|#[^\n]*|[A-Za-z0-9_]+|\S)re");
    std::int64_t tokens = 0;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), token_re);
         it != std::sregex_iterator(); ++it) {
      if (it->str()[0] != '#') ++tokens;
    }
    return tokens;
  }

 private:
  const ListingStore* store_;
};

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct CodeSizeReport {
  std::string unit_id;
  std::string backend_id;
  std::string size_unit;
  std::string status;  // "ok" | "inconsistent" | "unsupported"
  std::int64_t total_size = 0;
  std::vector<std::pair<std::string, std::int64_t>> parts;
  std::optional<std::int64_t> cross_check;

  json to_json() const {
    json part_rows = json::array();
    for (const auto& [name, size] : parts)
      part_rows.push_back(json::array({name, size}));
    json out{{"unit_id", unit_id},     {"backend_id", backend_id},
             {"size_unit", size_unit}, {"status", status},
             {"total_size", total_size}, {"parts", part_rows}};
    out["cross_check"] = cross_check ? json(*cross_check) : json(nullptr);
    return out;
  }
};

// Walks the unit's representation tree (outer definition first, nested
// after), sums part sizes, and verifies against the backend's independent
// count when one is available.
inline CodeSizeReport analyze(const ExecutableUnit& unit,
                              const SizeBackend& backend) {
  CodeSizeReport report;
  report.unit_id = unit.id;
  report.backend_id = backend.id();
  report.size_unit = backend.size_unit();

  const SourceListing* root = backend.representation(unit);
  if (root == nullptr) {
    report.status = "unsupported";
    return report;
  }

  std::set<const SourceListing*> visited;
  auto walk = [&](auto&& self, const SourceListing& node) -> void {
    if (!visited.insert(&node).second) return;
    report.parts.emplace_back(node.name, backend.size_of(node));
    for (const SourceListing* child : backend.children_of(node))
      self(self, *child);
  };
  walk(walk, *root);

  for (const auto& [name, size] : report.parts) report.total_size += size;
  report.cross_check = backend.cross_check(*root);
  report.status =
      (report.cross_check && *report.cross_check != report.total_size)
          ? "inconsistent"
          : "ok";
  return report;
}

// delta = b.total_size - a.total_size; positive means b is larger.
inline std::int64_t compare_sizes(const CodeSizeReport& a,
                                  const CodeSizeReport& b) {
  if (a.backend_id != b.backend_id)
    throw contract_error("compare_sizes: backend mismatch: " + a.backend_id +
                         " vs " + b.backend_id);
  if (a.status == "unsupported" || b.status == "unsupported")
    throw contract_error("compare_sizes: unsupported report");
  return b.total_size - a.total_size;
}

// ---------------------------------------------------------------------------
// Reference host sizes (informational)
// ---------------------------------------------------------------------------

// Instruction counts published for these listings on the corpus's
// reference runtime (a bytecode interpreter). Shipped for display next to
// live analysis; never asserted against other backends, since instruction
// encodings are host- and version-specific.
struct ReferenceSizeRow {
  std::string listing_ref;
  std::int64_t size;
};

inline const std::vector<ReferenceSizeRow>& reference_size_table() {
  static const std::vector<ReferenceSizeRow> table{
      {"getextrema/original", 122},
      {"getextrema/final", 160},
      {"micro/loop-family/range", 18},
      {"micro/loop-family/while", 26},
      {"micro/loop-family/boxed-scalar", 32},
      {"micro/loop-family/boxed-fixed", 32},
      {"micro/loop-family/unrolled", 34},
      {"micro/loop-family/iter-counter", 28},
      {"micro/first-nonzero/loop", 34},
      {"micro/first-nonzero/generator", 56},
      {"micro/assignment/sequential", 44},
      {"micro/assignment/tuple", 28},
      {"micro/conditional/ternary", 24},
      {"micro/conditional/if-else", 24},
      {"micro/build/append", 58},
      {"micro/build/comprehension", 64},
  };
  return table;
}

inline constexpr const char* reference_size_backend_id = "reference-bytecode";

inline std::optional<std::int64_t> reference_size_for(
    const std::string& listing_ref) {
  for (const auto& row : reference_size_table())
    if (row.listing_ref == listing_ref) return row.size;
  return std::nullopt;
}

}  // namespace varbench
