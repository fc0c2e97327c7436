#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posetlab/budget.hpp"
#include "posetlab/poset.hpp"

namespace posetlab::harness {

enum class Status { Pass, Fail, Unknown, NotApplicable };
enum class Suite { Wheel, Height, MinimalTw, Grid };

std::string_view to_string(Status s);
std::string_view to_string(Suite s);
/// "wheel", "height", "minimal-tw", "grid"; "all" expands to every suite.
std::vector<Suite> parse_suites(std::string_view name);

struct InstanceSpec {
  std::string id;
  /// standard, wheel, kelly, chain, antichain-bottom, interval, random.
  std::string family;
  int order = 0;
  bool attach_max = false;
  std::uint64_t seed = 0;
  /// Dimension taken as known instead of solved (large wheels).
  std::optional<int> dimension;
};

struct Manifest {
  std::vector<InstanceSpec> instances;
  int dim_cap = 12;
  int grid_n_max = 2;
  SearchLimits limits;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Throws ParseError. A {"family": "random", "seed_from": s, "count": c,
/// "max_size": m} entry expands into c instances random-<seed> whose size
/// budget is 4 + seed mod (m - 3).
Manifest parse_manifest(const std::string& text);
std::string manifest_to_json(const Manifest& m);
/// Families at desk scale plus 200 random cover-planar posets with a unique
/// minimal element and at most 16 elements.
Manifest default_manifest();

Poset build_instance(const InstanceSpec& spec);

struct Value {
  std::string key;
  long long value;
};

struct Entry {
  std::string id;
  Status status = Status::Unknown;
  std::string detail;
  std::vector<Value> values;
};

struct SuiteReport {
  Suite suite = Suite::Wheel;
  std::vector<Entry> entries;  // sorted by id
  std::size_t count(Status s) const;
};

struct Report {
  std::vector<SuiteReport> suites;
  /// 0 when nothing failed and nothing is Unknown, 1 on any Fail, 3 when
  /// only Unknown entries block.
  int exit_code() const;
};

Report verify(const Manifest& m, std::span<const Suite> suites);
std::string report_to_json(const Report& r);

}  // namespace posetlab::harness
