#include <doctest.h>

#include "support/properties.hpp"

using namespace posetlab::testing;

namespace {

constexpr std::uint64_t kSeed = 20240601;

void expect(const PropertyResult& r) {
  INFO(r.name << ": " << r.cases << " cases, " << r.failures << " failures");
  INFO("first counterexample: " << r.counterexample);
  CHECK(r.cases >= kMinCases);
  CHECK(r.failures == 0);
}

const std::vector<CorpusEmbedding>& corpus() {
  static const auto c = embedding_corpus();
  return c;
}

}  // namespace

TEST_CASE("poset axioms") { expect(check_poset_axioms(kSeed)); }
TEST_CASE("realizer validity") { expect(check_realizers(kSeed + 1)); }
TEST_CASE("dimension matches brute force") { expect(check_dim_oracle(kSeed + 2)); }
TEST_CASE("standard example number matches brute force") { expect(check_se_oracle(kSeed + 3)); }
TEST_CASE("lifted extensions") { expect(check_lift_extension(kSeed + 4)); }
TEST_CASE("extreme paths never meet after splitting") { expect(check_split(corpus())); }
TEST_CASE("path comparison is antisymmetric") { expect(check_compare_antisymmetry(corpus(), kSeed + 5)); }
TEST_CASE("Euler formula on every embedding") { expect(check_euler(corpus())); }
TEST_CASE("side partition under reflection") { expect(check_side_reflection(corpus())); }
TEST_CASE("separating paths put a' on the expected side") { expect(check_separating_sides(corpus())); }
