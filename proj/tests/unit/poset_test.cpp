#include <doctest.h>

#include <algorithm>
#include <set>

#include "posetlab/dimension.hpp"
#include "posetlab/error.hpp"
#include "posetlab/families.hpp"
#include "posetlab/poset.hpp"
#include "support/oracles.hpp"

using namespace posetlab;

namespace {

std::set<std::string> names(const Poset& p, const std::vector<Element>& elems) {
  std::set<std::string> out;
  for (Element e : elems) out.insert(p.name(e));
  return out;
}

Poset s3_with_bottom() {
  return Poset::from_cover_pairs({"z", "a1", "a2", "a3", "b1", "b2", "b3"},
                                 {{"z", "a1"}, {"z", "a2"}, {"z", "a3"}, {"a1", "b2"}, {"a1", "b3"}, {"a2", "b1"},
                                  {"a2", "b3"}, {"a3", "b1"}, {"a3", "b2"}});
}

}  // namespace

TEST_CASE("from_cover_pairs builds the closure") {
  const Poset chain2 = Poset::from_cover_pairs({"a", "b"}, {{"a", "b"}});
  CHECK(chain2.less(chain2.index_of("a"), chain2.index_of("b")));
  CHECK_FALSE(chain2.less(chain2.index_of("b"), chain2.index_of("a")));

  const Poset anti = Poset::from_cover_pairs({"a", "b"}, {});
  CHECK(anti.incomparable(0, 1));

  const Poset chain3 = Poset::from_cover_pairs({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(chain3.less(0, 2));
  CHECK(chain3.cover_pairs() == std::vector<ElementPair>{{0, 1}, {1, 2}});
  CHECK_FALSE(chain3.covers(0, 2));
}

TEST_CASE("from_cover_pairs rejects bad input") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code([] { Poset::from_cover_pairs({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == ErrorCode::CycleDetected);
  CHECK(code([] { Poset::from_cover_pairs({"a"}, {{"a", "q"}}); }) == ErrorCode::UnknownElement);
  CHECK(code([] { Poset::from_cover_pairs({"a", "a"}, {}); }) == ErrorCode::DuplicateElement);
}

TEST_CASE("height, width and extremal elements") {
  CHECK(height(families::standard_example(6)) == 2);
  CHECK(width(families::standard_example(6)) == 6);
  const Poset w6 = families::wheel(6);
  CHECK(names(w6, minimal_elements(w6)) == std::set<std::string>{"min"});
  for (int n = 3; n <= 6; ++n) CHECK(height(families::wheel(n)) == static_cast<std::size_t>(n));
  CHECK(height(Poset{}) == 0);
  CHECK(names(families::standard_example(2), maximal_elements(families::standard_example(2))) ==
        std::set<std::string>{"b1", "b2"});
}

TEST_CASE("induced subposets") {
  const Poset w = families::wheel(4);
  std::vector<Element> all(w.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<Element>(k);
  CHECK(induced_subposet(w, all) == w);

  const Poset c3 = families::chain(3);
  const Poset ends = c3.induced(std::vector<Element>{0, 2});
  CHECK(ends.size() == 2);
  CHECK(ends.less(0, 1));

  const auto [as, bs] = families::wheel_standard_example(4);
  std::vector<std::string> subset = as;
  subset.insert(subset.end(), bs.begin(), bs.end());
  const Poset s4 = induced_subposet(w, subset);
  CHECK(s4.comparable_pair_count() == 12);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(s4.less(i, 4 + j) == (i != j));
  }
  CHECK_THROWS_AS(induced_subposet(w, std::vector<std::string>{"nope"}), Error);
}

TEST_CASE("incomparable and critical pairs") {
  const Poset s2 = families::standard_example(2);
  const auto crit = critical_pairs(s2);
  CHECK(names(s2, {crit[0].first, crit[0].second}) == std::set<std::string>{"a1", "b1"});
  CHECK(crit.size() == 2);
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& [a, b] : crit) got.emplace(s2.name(a), s2.name(b));
  CHECK(got == std::set<std::pair<std::string, std::string>>{{"a1", "b1"}, {"a2", "b2"}});

  CHECK(incomparable_pairs(families::chain(4)).empty());
  CHECK(incomparable_pairs(families::antichain(2)).size() == 2);

  // Critical pairs are incomparable pairs.
  const Poset w = families::wheel(4);
  const auto inc = incomparable_pairs(w);
  for (const auto& pair : critical_pairs(w)) CHECK(std::find(inc.begin(), inc.end(), pair) != inc.end());
}

TEST_CASE("lift_extension keeps the upset order at the end") {
  const Poset w = families::wheel(3);
  const Element x = w.index_of("min");
  const auto lu = default_extension(w);
  CHECK(lift_extension(w, x, lu) == lu);

  const Poset c = families::chain(3);
  CHECK(lift_extension(c, 1, std::vector<Element>{1, 2}) == LinearExtension{0, 1, 2});

  // S_3 with a bottom z, x = a1: z, a2, a3 and b1 come first.
  const Poset p = s3_with_bottom();
  const Element a1 = p.index_of("a1");
  const std::vector<Element> lu3{a1, p.index_of("b3"), p.index_of("b2")};
  const auto lifted = lift_extension(p, a1, lu3);
  CHECK(is_linear_extension(p, lifted));
  CHECK(names(p, {lifted.begin(), lifted.begin() + 4}) == std::set<std::string>{"z", "a2", "a3", "b1"});
  CHECK(std::equal(lu3.begin(), lu3.end(), lifted.begin() + 4));

  // Every valid lift agrees with the returned one on the two conditions.
  std::size_t valid = 0;
  for (const auto& ext : testing::all_linear_extensions(p)) {
    if (std::equal(lu3.begin(), lu3.end(), ext.begin() + 4)) ++valid;
  }
  CHECK(valid > 0);

  try {
    lift_extension(p, a1, std::vector<Element>{p.index_of("b2"), a1, p.index_of("b3")});
    FAIL("expected NotAnUpsetExtension");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnUpsetExtension);
  }
}

TEST_CASE("linear extensions and realizers") {
  const Poset c = families::chain(4);
  CHECK(is_linear_extension(c, std::vector<Element>{0, 1, 2, 3}));
  CHECK_FALSE(is_linear_extension(c, std::vector<Element>{3, 2, 1, 0}));

  const Poset s2 = families::standard_example(2);
  const Element a1 = s2.index_of("a1"), a2 = s2.index_of("a2");
  const Element b1 = s2.index_of("b1"), b2 = s2.index_of("b2");
  const Realizer r{{a1, b2, a2, b1}, {a2, b1, a1, b2}};
  CHECK(verify_realizer(s2, r));
  // The same pair found by enumerating every 2-realizer.
  const auto exts = testing::all_linear_extensions(s2);
  std::size_t found = 0;
  for (std::size_t i = 0; i < exts.size(); ++i) {
    for (std::size_t j = i + 1; j < exts.size(); ++j) found += verify_realizer(s2, {exts[i], exts[j]});
  }
  CHECK(found > 0);
  CHECK_FALSE(verify_realizer(s2, {r[0]}));
}
