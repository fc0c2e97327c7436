#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "posetlab/containment.hpp"
#include "posetlab/dimension.hpp"
#include "posetlab/error.hpp"
#include "posetlab/families.hpp"
#include "posetlab/graph_metrics.hpp"
#include "posetlab/harness.hpp"
#include "posetlab/io.hpp"
#include "posetlab/witness_paths.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace posetlab;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

SearchLimits wall(int secs) {
  SearchLimits l;
  l.node_cap = 2'000'000'000;
  l.wall_cap = std::chrono::seconds(secs);
  return l;
}

struct Criterion {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail << what << (ok ? " ok; " : " FAILED; ");
  }
};

/// Exact dimension within a time limit; nullopt when the cap is hit.
std::optional<int> timed_dim(const Poset& p, int limit_s, double& elapsed) {
  const auto t0 = Clock::now();
  try {
    const auto r = dim_exact(p, 12, wall(limit_s));
    elapsed = seconds_since(t0);
    if (!verify_realizer(p, r.realizer)) return -1;
    return r.dimension;
  } catch (const Error& e) {
    elapsed = seconds_since(t0);
    if (e.code() == ErrorCode::BudgetExceeded) return std::nullopt;
    throw;
  }
}

void ac1(Criterion& c) {
  for (int d = 2; d <= 7; ++d) {
    double t = 0;
    const auto dim = timed_dim(families::standard_example(d), 60, t);
    char buf[64];
    std::snprintf(buf, sizeof buf, "S_%d=%d (%.2fs)", d, dim.value_or(0), t);
    c.require(dim == d && t < 60, buf);
  }
}

void ac2(Criterion& c) {
  for (int d = 3; d <= 5; ++d) {
    double t = 0;
    const auto dim = timed_dim(families::wheel(d), 300, t);
    char buf[64];
    std::snprintf(buf, sizeof buf, "H_%d=%d (%.2fs)", d, dim.value_or(0), t);
    c.require(dim == d && t < 300, buf);
  }
  double t = 0;
  const auto dim6 = timed_dim(families::wheel(6), 120, t);
  char buf[80];
  if (dim6) {
    std::snprintf(buf, sizeof buf, "H_6=%d (%.2fs)", *dim6, t);
    c.require(*dim6 == 6, buf);
  } else {
    std::snprintf(buf, sizeof buf, "H_6 unknown at cap (%.2fs, permitted)", t);
    c.detail << buf << "; ";
  }
}

void ac3(Criterion& c) {
  for (int d = 3; d <= 6; ++d) {
    double t = 0;
    const auto dim = timed_dim(families::kelly(d), 120, t);
    char buf[64];
    std::snprintf(buf, sizeof buf, "K_%d=%d (%.2fs)", d, dim.value_or(0), t);
    c.require(dim == d && t < 120, buf);
  }
}

void ac4(Criterion& c) {
  for (int d = 3; d <= 7; ++d) {
    const Poset h = families::wheel(d);
    const auto t0 = Clock::now();
    const auto w = se(h, 12, wall(60));
    const double t = seconds_since(t0);
    const bool witness = verify_embedding(h, families::standard_example(w.order), standard_example_map(w));
    char buf[64];
    std::snprintf(buf, sizeof buf, "se(H_%d)=%d (%.2fs)", d, w.order, t);
    c.require(w.order == d && witness && t < 60, buf);
  }
}

void ac5(Criterion& c) {
  for (int d = 3; d <= 5; ++d) {
    const Poset h = families::wheel(d);
    const Poset k = families::kelly(d);
    const auto map = contains_subposet(h, k, wall(300));
    c.require(map && verify_embedding(h, k, *map), "K_" + std::to_string(d) + " in H_" + std::to_string(d));
  }
}

void ac6(Criterion& c) {
  using namespace metrics;
  for (int d = 3; d <= 7; ++d) {
    const auto tw = treewidth_exact(Graph::cover_graph_of(families::kelly(d)), 64, wall(120));
    c.require(tw.width <= 3, "tw(K_" + std::to_string(d) + ")=" + std::to_string(tw.width));
  }
  for (int n = 2; n <= 4; ++n) {
    const Graph g = Graph::grid(n);
    const auto tw = treewidth_exact(g, 64, wall(120));
    c.require(tw.width == n && validate_decomposition(g, tw.decomposition),
              "tw(grid " + std::to_string(n) + ")=" + std::to_string(tw.width));
  }
}

void ac7(Criterion& c) {
  using namespace metrics;
  for (int n = 2; n <= 3; ++n) {
    const Poset h = families::wheel(2 * n + 1);
    std::vector<Vertex> map;
    for (const auto& name : wheel_grid_certificate(n)) map.push_back(h.index_of(name));
    c.require(verify_grid_subgraph(Graph::cover_graph_of(h), n, map),
              std::to_string(n) + "x" + std::to_string(n) + " in H_" + std::to_string(2 * n + 1));
  }
}

void ac8(Criterion& c) {
  const auto t0 = Clock::now();
  const auto manifest = harness::parse_manifest(io::read_text(POSETLAB_MANIFEST));
  const auto report = harness::verify(manifest, harness::parse_suites("all"));
  const double t = seconds_since(t0);
  for (const auto& s : report.suites) {
    const auto fails = s.count(harness::Status::Fail);
    std::ostringstream line;
    line << harness::to_string(s.suite) << ": " << s.count(harness::Status::Pass) << " pass, "
         << s.count(harness::Status::NotApplicable) << " n/a, " << s.count(harness::Status::Unknown) << " unknown, "
         << fails << " fail";
    c.require(fails == 0, line.str());
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%zu instances in %.1fs", manifest.instances.size(), t);
  c.require(t < 1800, buf);
}

void ac9(Criterion& c) {
  for (const auto& r : testing::run_all_properties(20240601)) {
    std::string what = r.name + " " + std::to_string(r.cases) + "/" + std::to_string(r.failures);
    if (!r.ok() && !r.counterexample.empty()) what += " [" + r.counterexample + "]";
    c.require(r.ok(), what);
  }
}

void ac10(Criterion& c) {
  const auto emb = canonical_wheel_embedding(5);
  const Poset& p = emb.poset();
  const auto check = [&](const IntervalCertificate& cert, const std::string& expected, const std::string& label) {
    const auto pattern = testing::item_pattern(verify_lemma_certificate(emb, cert));
    c.require(pattern == expected, label + " " + pattern + " (want " + expected + ")");
  };
  check(testing::wheel_certificate(p), "1111", "certificate");
  check(testing::mutate_standard_example(p), "1011", "item 2 mutation");
  check(testing::mutate_above_y(p), "1101", "item 3 mutation");
  check(testing::mutate_left_pairs(p), "1110", "item 4 mutation");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Criterion&)>>> criteria = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}};
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Criterion c;
    const auto t0 = Clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.1fs", seconds_since(t0));
    std::cout << name << " " << (c.pass ? "PASS" : "FAIL") << " [" << elapsed << "] " << c.detail.str() << std::endl;
    if (!c.pass) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
