#include <doctest.h>

#include <algorithm>
#include <set>

#include "posetlab/containment.hpp"
#include "posetlab/dimension.hpp"
#include "posetlab/embedding.hpp"
#include "posetlab/error.hpp"
#include "posetlab/families.hpp"
#include "posetlab/graph_metrics.hpp"
#include "support/oracles.hpp"

using namespace posetlab;
using families::cyclic_interval_members;

TEST_CASE("cyclic intervals") {
  CHECK(cyclic_interval_members(2, 4, 7) == std::vector<int>{2, 3, 4});
  CHECK(cyclic_interval_members(5, 5, 7) == std::vector<int>{5});
  const auto wrap = cyclic_interval_members(5, 2, 7);
  CHECK(std::set<int>(wrap.begin(), wrap.end()) == std::set<int>{5, 6, 7, 1, 2});
  CHECK_THROWS_AS(cyclic_interval_members(0, 2, 7), Error);
  CHECK_THROWS_AS(cyclic_interval_members(1, 8, 7), Error);
  CHECK_THROWS_AS(cyclic_interval_members(1, 1, 2), Error);
}

TEST_CASE("only the chosen wrap reading yields a standard example") {
  // a_i = <i+1, i-1>, b_i = <i, i>, ordered by strict reverse containment.
  auto induces_standard_example = [](int n, auto members) {
    auto at = [n](int k) { return (k - 1 + 2 * n) % n + 1; };
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const std::set<int> a = members(at(i + 1), at(i - 1));
        const std::set<int> b = members(j, j);
        const bool below = a != b && std::includes(a.begin(), a.end(), b.begin(), b.end());
        if (below != (i != j)) return false;
      }
    }
    return true;
  };
  for (int n = 3; n <= 8; ++n) {
    auto chosen = [n](int i, int j) {
      const auto m = cyclic_interval_members(i, j, n);
      return std::set<int>(m.begin(), m.end());
    };
    auto printed = [n](int i, int j) {
      std::set<int> s;
      if (i <= j) {
        for (int k = i; k <= j; ++k) s.insert(k);
      } else {
        for (int k = j; k <= n; ++k) s.insert(k);
        for (int k = 1; k <= i; ++k) s.insert(k);
      }
      return s;
    };
    CHECK(induces_standard_example(n, chosen));
    CHECK_FALSE(induces_standard_example(n, printed));

    const auto [as, bs] = families::wheel_standard_example(n);
    std::vector<std::string> subset = as;
    subset.insert(subset.end(), bs.begin(), bs.end());
    const Poset q = induced_subposet(families::wheel(n), subset);
    CHECK(contains_subposet(q, families::standard_example(n)).has_value());
  }
}

TEST_CASE("standard examples") {
  const Poset s2 = families::standard_example(2);
  CHECK(s2.size() == 4);
  CHECK(s2.less(s2.index_of("a1"), s2.index_of("b2")));
  CHECK(s2.less(s2.index_of("a2"), s2.index_of("b1")));
  CHECK(s2.comparable_pair_count() == 2);
  CHECK(families::standard_example(3).comparable_pair_count() == 6);
  CHECK(dim_exact(families::standard_example(6)).dimension == 6);
  CHECK_THROWS_AS(families::standard_example(1), Error);
}

TEST_CASE("wheels") {
  CHECK(families::wheel(7).size() == 43);
  CHECK(families::wheel(5, true).size() == 22);
  CHECK(dim_exact(families::wheel(4)).dimension == 4);
  CHECK_THROWS_AS(families::wheel(2), Error);

  for (int n = 3; n <= 6; ++n) {
    const Poset w = families::wheel(n);
    const Element mn = w.index_of("min");
    for (Element e = 0; e < static_cast<Element>(w.size()); ++e) {
      if (e != mn) CHECK(w.less(mn, e));
    }
    // Order is strict reverse containment of member sets.
    std::vector<std::set<int>> members(w.size());
    for (Element e = 0; e < static_cast<Element>(w.size()); ++e) {
      const auto label = families::WheelLabel::parse(w.name(e));
      REQUIRE(label);
      if (label->kind == families::WheelLabel::Kind::R) {
        const auto m = cyclic_interval_members(label->i, label->j, n);
        members[e] = {m.begin(), m.end()};
        CHECK(members[e].size() < static_cast<std::size_t>(n));
      }
    }
    for (Element a = 0; a < static_cast<Element>(w.size()); ++a) {
      for (Element b = 0; b < static_cast<Element>(w.size()); ++b) {
        if (a == mn || b == mn || a == b) continue;
        CHECK(members[a] != members[b]);
        const bool contained = std::includes(members[a].begin(), members[a].end(), members[b].begin(), members[b].end());
        CHECK(w.less(a, b) == contained);
      }
    }
    // r(i,j) < r(k,k) iff k lies in <i,j>, other than the element itself.
    for (int k = 1; k <= n; ++k) {
      const Element top = w.index_of(families::wheel_name(k, k));
      for (Element e = 0; e < static_cast<Element>(w.size()); ++e) {
        if (e == mn || e == top) continue;
        CHECK(w.less(e, top) == (members[e].count(k) == 1));
      }
    }
  }
}

TEST_CASE("wheel labels") {
  CHECK(families::wheel_name(2, 5) == "r(2,5)");
  const auto label = families::WheelLabel::parse("r(3,1)");
  REQUIRE(label);
  CHECK(label->i == 3);
  CHECK(label->j == 1);
  CHECK(label->str() == "r(3,1)");
  CHECK(families::WheelLabel::parse("min")->kind == families::WheelLabel::Kind::Min);
  CHECK_FALSE(families::WheelLabel::parse("r(3"));
}

TEST_CASE("Kelly posets") {
  CHECK(dim_exact(families::kelly(5)).dimension == 5);
  const auto tw = metrics::treewidth_exact(metrics::Graph::cover_graph_of(families::kelly(6)));
  CHECK(tw.width <= 3);
  CHECK(contains_subposet(families::wheel(4), families::kelly(4)).has_value());
  CHECK_THROWS_AS(families::kelly(2), Error);
  for (int d = 3; d <= 6; ++d) {
    const Poset k = families::kelly(d);
    CHECK(contains_subposet(k, families::standard_example(d)).has_value());
    CHECK(is_planar(cover_graph(k)).planar());
  }
}

TEST_CASE("random cover-planar posets") {
  const Poset tiny = families::random_cover_planar_with_unique_min(0, 1);
  REQUIRE(tiny.size() == 2);
  CHECK(tiny.less(tiny.index_of("v0"), tiny.index_of("v1")));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Poset p = families::random_cover_planar_with_unique_min(seed, 14);
    CHECK(p == families::random_cover_planar_with_unique_min(seed, 14));
    CHECK(minimal_elements(p).size() == 1);
    CHECK(p.size() <= 14);
    CHECK(is_planar(cover_graph(p)).planar());
  }
}

TEST_CASE("interval orders") {
  CHECK(families::interval_order(3, 1).size() == 1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Poset p = families::interval_order(seed, 9);
    CHECK(testing::se_oracle(p) == 1);
    CHECK(se(p).order == 1);
  }
  const Poset canonical = families::canonical_interval_order(5);
  CHECK(canonical.size() == 10);
  CHECK(se(canonical).order == 1);
  // Two extensions suffice at this size; check the realizer directly.
  const auto r = dim_exact(canonical);
  CHECK(r.dimension == 2);
  REQUIRE(r.realizer.size() == 2);
  for (Element x = 0; x < static_cast<Element>(canonical.size()); ++x) {
    for (Element y = 0; y < static_cast<Element>(canonical.size()); ++y) {
      if (x == y) continue;
      bool below_in_all = true;
      for (const auto& ext : r.realizer) {
        const auto px = std::find(ext.begin(), ext.end(), x);
        const auto py = std::find(ext.begin(), ext.end(), y);
        below_in_all = below_in_all && px < py;
      }
      CHECK(below_in_all == canonical.less(x, y));
    }
  }
}
