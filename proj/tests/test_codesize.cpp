#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "varbench/codesize.hpp"
#include "varbench/corpus/corpus.hpp"

using namespace varbench;

TEST_CASE("token counting follows the documented grammar", "[codesize]") {
  // def f ( x ) : return x + 1  -> ten tokens
  REQUIRE(TokenSizeBackend::count_tokens("def f(x):\n    return x + 1\n") ==
          10);
  // Comments vanish; the code before them still counts.
  REQUIRE(TokenSizeBackend::count_tokens("x = 1  # trailing note\n") == 3);
  REQUIRE(TokenSizeBackend::count_tokens("# only a comment\n") == 0);
  // A string literal is one token regardless of its content.
  REQUIRE(TokenSizeBackend::count_tokens("s = 'a b c'") == 3);
  REQUIRE(TokenSizeBackend::count_tokens(R"(s = "it\"s")") == 3);
  // Identifier/number runs collapse; punctuation counts per character.
  REQUIRE(TokenSizeBackend::count_tokens("value_1 += 200") == 4);
  REQUIRE(TokenSizeBackend::count_tokens("") == 0);
  REQUIRE(TokenSizeBackend::count_tokens("   \n\t  ") == 0);
}

TEST_CASE("the two tokenizers agree on every stored listing", "[codesize]") {
  for (const auto& [name, listing] : corpus::listings()) {
    INFO("listing " << name);
    REQUIRE(TokenSizeBackend::count_tokens(listing.text) ==
            TokenSizeBackend::count_tokens_regex(listing.text));
  }
}

TEST_CASE("analysis is additive over nested definitions", "[codesize]") {
  const ListingStore& store = corpus::listings();
  const TokenSizeBackend backend(&store);

  ExecutableUnit unit;
  unit.id = "append";
  unit.listing_ref = "micro/build/append";
  const CodeSizeReport report = analyze(unit, backend);
  REQUIRE(report.status == "ok");
  REQUIRE(report.backend_id == "listing-tokens");
  REQUIRE(report.size_unit == "lexical tokens");
  REQUIRE(report.parts.size() == 2);  // outer definition + nested helper
  std::int64_t part_sum = 0;
  for (const auto& [name, size] : report.parts) {
    REQUIRE(size > 0);
    part_sum += size;
  }
  REQUIRE(part_sum == report.total_size);
  // The part decomposition must re-add to a direct count of the whole text.
  const SourceListing& root = store.at("micro/build/append");
  REQUIRE(report.total_size == TokenSizeBackend::count_tokens(root.text));
  REQUIRE(report.cross_check.has_value());
  REQUIRE(*report.cross_check == report.total_size);
}

TEST_CASE("analysis is deterministic", "[codesize]") {
  const ListingStore& store = corpus::listings();
  const TokenSizeBackend backend(&store);
  ExecutableUnit unit;
  unit.id = "original";
  unit.listing_ref = "getextrema/original";
  const CodeSizeReport first = analyze(unit, backend);
  const CodeSizeReport second = analyze(unit, backend);
  REQUIRE(first.to_json() == second.to_json());
}

TEST_CASE("every catalog unit analyzes cleanly or is declared unsupported",
          "[codesize]") {
  const ListingStore& store = corpus::listings();
  const TokenSizeBackend backend(&store);
  for (const auto& entry : corpus::catalog()) {
    for (const ExecutableUnit* unit : {&entry.pair.baseline, &entry.pair.candidate}) {
      const CodeSizeReport report = analyze(*unit, backend);
      INFO("unit " << unit->id << " (listing_ref '" << unit->listing_ref
                   << "')");
      REQUIRE((report.status == "ok" || report.status == "unsupported"));
      if (unit->listing_ref != "synthetic" && !unit->listing_ref.empty())
        REQUIRE(report.status == "ok");
    }
  }
}

namespace {

// A deliberately broken backend whose independent count always disagrees.
class skewed_backend final : public SizeBackend {
 public:
  explicit skewed_backend(const SourceListing* root) : root_(root) {}
  std::string id() const override { return "skewed"; }
  std::string size_unit() const override { return "lexical tokens"; }
  const SourceListing* representation(const ExecutableUnit&) const override {
    return root_;
  }
  std::int64_t size_of(const SourceListing& node) const override {
    return TokenSizeBackend::count_tokens(node.text);
  }
  std::vector<const SourceListing*> children_of(
      const SourceListing&) const override {
    return {};
  }
  std::optional<std::int64_t> cross_check(
      const SourceListing& root) const override {
    return TokenSizeBackend::count_tokens(root.text) + 1;
  }

 private:
  const SourceListing* root_;
};

}  // namespace

TEST_CASE("a failed cross-check is reported, not silently accepted",
          "[codesize]") {
  const SourceListing& root = corpus::listings().at("getextrema/original");
  const skewed_backend backend(&root);
  ExecutableUnit unit;
  unit.id = "original";
  unit.listing_ref = "getextrema/original";
  const CodeSizeReport report = analyze(unit, backend);
  REQUIRE(report.status == "inconsistent");
  REQUIRE(*report.cross_check == report.total_size + 1);
}

TEST_CASE("units without a stored listing are unsupported", "[codesize]") {
  const ListingStore& store = corpus::listings();
  const TokenSizeBackend backend(&store);
  ExecutableUnit synthetic;
  synthetic.id = "made-up";
  synthetic.listing_ref = "synthetic";
  REQUIRE(analyze(synthetic, backend).status == "unsupported");
  ExecutableUnit unknown;
  unknown.id = "ghost";
  unknown.listing_ref = "no/such/listing";
  REQUIRE(analyze(unknown, backend).status == "unsupported");
}

TEST_CASE("size deltas are candidate minus baseline", "[codesize]") {
  const ListingStore& store = corpus::listings();
  const TokenSizeBackend backend(&store);
  ExecutableUnit a, b;
  a.id = "original";
  a.listing_ref = "getextrema/original";
  b.id = "final";
  b.listing_ref = "getextrema/final";
  const CodeSizeReport ra = analyze(a, backend);
  const CodeSizeReport rb = analyze(b, backend);
  REQUIRE(compare_sizes(ra, rb) == rb.total_size - ra.total_size);
  REQUIRE(compare_sizes(ra, rb) == -compare_sizes(rb, ra));
  REQUIRE(compare_sizes(ra, ra) == 0);

  SECTION("mismatched backends cannot be compared") {
    CodeSizeReport other = rb;
    other.backend_id = "something-else";
    REQUIRE_THROWS_AS(compare_sizes(ra, other), contract_error);
  }
  SECTION("unsupported reports cannot be compared") {
    ExecutableUnit synthetic;
    synthetic.id = "made-up";
    synthetic.listing_ref = "synthetic";
    const CodeSizeReport ru = analyze(synthetic, backend);
    REQUIRE_THROWS_AS(compare_sizes(ra, ru), contract_error);
  }
}

TEST_CASE("reference host sizes are available for display", "[codesize]") {
  REQUIRE(reference_size_for("getextrema/original") == 122);
  REQUIRE(reference_size_for("getextrema/final") == 160);
  REQUIRE(*reference_size_for("getextrema/final") -
              *reference_size_for("getextrema/original") ==
          38);
  REQUIRE_FALSE(reference_size_for("no/such/listing").has_value());
  REQUIRE(reference_size_table().size() == 16);
  // Every reference row points at a listing we actually store.
  for (const auto& row : reference_size_table()) {
    INFO("reference row " << row.listing_ref);
    REQUIRE(corpus::listings().count(row.listing_ref) == 1);
    REQUIRE(row.size > 0);
  }
}
