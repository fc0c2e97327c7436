#include <doctest.h>

#include <algorithm>

#include "posetlab/error.hpp"
#include "posetlab/harness.hpp"
#include "posetlab/io.hpp"

using namespace posetlab;
using namespace posetlab::harness;

namespace {

Manifest single(InstanceSpec spec) {
  Manifest m;
  m.instances.push_back(std::move(spec));
  m.threads = 1;
  return m;
}

const Entry& only(const Report& r, Suite s) {
  const auto it = std::find_if(r.suites.begin(), r.suites.end(), [&](const SuiteReport& x) { return x.suite == s; });
  REQUIRE(it != r.suites.end());
  REQUIRE(it->entries.size() == 1);
  return it->entries.front();
}

std::optional<long long> value(const Entry& e, const std::string& key) {
  for (const auto& v : e.values) {
    if (v.key == key) return v.value;
  }
  return std::nullopt;
}

Entry run(const InstanceSpec& spec, Suite s) {
  const std::vector<Suite> suites{s};
  const auto report = verify(single(spec), suites);
  return only(report, s);
}

}  // namespace

TEST_CASE("suite names") {
  CHECK(parse_suites("all").size() == 4);
  CHECK(parse_suites("minimal-tw") == std::vector<Suite>{Suite::MinimalTw});
  CHECK_THROWS_AS(parse_suites("bogus"), Error);
  CHECK(to_string(Status::NotApplicable) == "not_applicable");
}

TEST_CASE("wheel bound suite") {
  for (int d = 3; d <= 5; ++d) {
    const auto e = run({"w", "wheel", d}, Suite::Wheel);
    CHECK(e.status == Status::Pass);
    CHECK(value(e, "dim") == d);
  }
  const auto chain = run({"c", "chain", 2}, Suite::Wheel);
  CHECK(chain.status == Status::Pass);
  CHECK(value(chain, "wheel") == 1);
  CHECK(run({"s5", "standard", 5}, Suite::Wheel).status == Status::NotApplicable);
}

TEST_CASE("height bound suite") {
  const auto e = run({"ab", "antichain-bottom", 3}, Suite::Height);
  CHECK(e.status == Status::Pass);
  CHECK(value(e, "height") == 2);
  for (int d = 3; d <= 5; ++d) {
    const auto w = run({"w", "wheel", d}, Suite::Height);
    CHECK(w.status == Status::Pass);
    CHECK(value(w, "height") == d);
  }
  // The Kelly construction has several minimal elements.
  const auto k = run({"k5", "kelly", 5}, Suite::Height);
  CHECK(k.status == Status::NotApplicable);
}

TEST_CASE("minimal elements and treewidth suite") {
  const auto s4 = run({"s4", "standard", 4}, Suite::MinimalTw);
  CHECK(s4.status == Status::Pass);
  CHECK(value(s4, "minimal") == 4);
  const auto k6 = run({"k6", "kelly", 6}, Suite::MinimalTw);
  CHECK(k6.status == Status::Pass);
  CHECK(run({"c", "chain", 5}, Suite::MinimalTw).status == Status::Pass);
  CHECK(run({"s5", "standard", 5}, Suite::MinimalTw).status == Status::NotApplicable);
}

TEST_CASE("grid suite") {
  InstanceSpec w11{"wheel-11", "wheel", 11};
  w11.dimension = 11;
  const auto big = run(w11, Suite::Grid);
  CHECK(big.status == Status::Pass);
  CHECK(value(big, "grid2") == 1);
  CHECK(big.detail.find("wheel certificate") != std::string::npos);

  const auto w5 = run({"w5", "wheel", 5}, Suite::Grid);
  CHECK(w5.status == Status::Pass);
  CHECK(w5.detail.find("vacuous") != std::string::npos);
  CHECK(value(w5, "grid2_subgraph") == 1);
}

TEST_CASE("reports are deterministic and sorted") {
  Manifest m;
  for (int s = 0; s < 12; ++s) m.instances.push_back({"random-" + std::to_string(100 + s), "random", 12, false, 100u + s});
  m.instances.push_back({"a-first", "wheel", 3});
  m.threads = 4;
  const auto suites = parse_suites("all");
  const auto r1 = verify(m, suites);
  m.threads = 1;
  const auto r2 = verify(m, suites);
  CHECK(report_to_json(r1) == report_to_json(r2));
  CHECK(r1.exit_code() == 0);
  for (const auto& s : r1.suites) {
    CHECK(std::is_sorted(s.entries.begin(), s.entries.end(), [](const Entry& a, const Entry& b) { return a.id < b.id; }));
  }
}

TEST_CASE("exit codes") {
  Report r;
  r.suites.push_back({Suite::Wheel, {{"a", Status::Pass}, {"b", Status::NotApplicable}}});
  CHECK(r.exit_code() == 0);
  r.suites.back().entries.push_back({"c", Status::Unknown});
  CHECK(r.exit_code() == 3);
  r.suites.back().entries.push_back({"d", Status::Fail});
  CHECK(r.exit_code() == 1);

  // A tight node cap leaves the exact dimension unknown, never passed.
  InstanceSpec s{"s7", "standard", 7};
  Manifest m = single(s);
  m.limits.node_cap = 3;
  const std::vector<Suite> suites{Suite::MinimalTw};
  const auto tight = verify(m, suites);
  CHECK(only(tight, Suite::MinimalTw).status != Status::Pass);
}

TEST_CASE("manifests") {
  const auto m = parse_manifest(R"({"instances": [
      {"id": "w4", "family": "wheel", "order": 4},
      {"family": "random", "seed_from": 10, "count": 3, "max_size": 16}]})");
  REQUIRE(m.instances.size() == 4);
  CHECK(m.instances[1].id == "random-010");
  CHECK(m.instances[1].order == 4 + 10 % 13);
  CHECK(parse_manifest(manifest_to_json(m)).instances.size() == 4);
  CHECK_THROWS_AS(parse_manifest("[]"), Error);
  CHECK_THROWS_AS(parse_manifest(R"({"instances": [{"id": "x", "family": "nope", "order": 3}]})"), Error);

  const auto def = default_manifest();
  CHECK(std::count_if(def.instances.begin(), def.instances.end(),
                      [](const InstanceSpec& s) { return s.family == "random"; }) == 200);
  CHECK(manifest_to_json(parse_manifest(manifest_to_json(def))) == manifest_to_json(def));
  CHECK(manifest_to_json(parse_manifest(io::read_text(POSETLAB_MANIFEST))) == manifest_to_json(def));
}
