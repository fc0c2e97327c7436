#include "posetlab/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "posetlab/containment.hpp"
#include "posetlab/dimension.hpp"
#include "posetlab/embedding.hpp"
#include "posetlab/error.hpp"
#include "posetlab/families.hpp"
#include "posetlab/graph_metrics.hpp"

namespace posetlab::harness {

namespace {

bool known_family(const std::string& f) {
  static const std::array<std::string_view, 7> names{"standard", "wheel",  "kelly",          "chain",
                                                     "interval", "random", "antichain-bottom"};
  return std::find(names.begin(), names.end(), f) != names.end();
}

using nlohmann::json;

constexpr Suite kAllSuites[] = {Suite::Wheel, Suite::Height, Suite::MinimalTw, Suite::Grid};

std::string pad(std::uint64_t v) {
  std::string s = std::to_string(v);
  return s.size() < 3 ? std::string(3 - s.size(), '0') + s : s;
}

enum class Answer { Yes, No, Unknown };

// Everything the suites share about one instance, computed on demand.
class Facts {
 public:
  Facts(const InstanceSpec& spec, const Manifest& m) : spec_(spec), manifest_(m), p_(build_instance(spec)) {
    minima_ = minimal_elements(p_).size();
    height_ = posetlab::height(p_);
    try {
      planar_ = is_planar(cover_graph(p_)).planar();
    } catch (const Error&) {
      planar_ = false;
    }
  }

  const Poset& poset() const { return p_; }
  bool planar() const { return planar_; }
  std::size_t minima() const { return minima_; }
  std::size_t height() const { return height_; }

  const metrics::Graph& graph() {
    if (!graph_) graph_ = metrics::Graph::cover_graph_of(p_);
    return *graph_;
  }

  // Exact dimension, declared or solved; nullopt when the solve hit a cap.
  std::optional<int> dimension() {
    if (spec_.dimension) return spec_.dimension;
    if (!dim_tried_) {
      dim_tried_ = true;
      try {
        dim_ = dim_exact(p_, manifest_.dim_cap, manifest_.limits).dimension;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
      }
    }
    return dim_;
  }

  bool dimension_declared() const { return spec_.dimension.has_value(); }

  // dim(P) <= bound?
  Answer dimension_at_most(long long bound) {
    if (auto d = dimension()) return *d <= bound ? Answer::Yes : Answer::No;
    if (bound >= static_cast<long long>(p_.size())) return Answer::Yes;
    try {
      return dim_at_most(p_, static_cast<int>(bound), manifest_.limits) ? Answer::Yes : Answer::No;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      return Answer::Unknown;
    }
  }

  // Largest wheel found by label; a cheap lower bound for generated wheels.
  int wheel_by_label() const {
    int upper = static_cast<int>(height_);
    while (upper >= 3 && upper * upper - upper + 1 > static_cast<int>(p_.size())) --upper;
    for (int n = upper; n >= 3; --n) {
      const Poset pattern = families::wheel(n);
      SubposetMap map;
      for (const auto& name : pattern.names()) {
        auto e = p_.find(name);
        if (!e) break;
        map.push_back(*e);
      }
      if (map.size() == pattern.size() && verify_embedding(p_, pattern, map)) return n;
    }
    return 0;
  }

 private:
  const InstanceSpec& spec_;
  const Manifest& manifest_;
  Poset p_;
  bool planar_ = false;
  std::size_t minima_ = 0;
  std::size_t height_ = 0;
  std::optional<metrics::Graph> graph_;
  bool dim_tried_ = false;
  std::optional<int> dim_;
};

Entry not_applicable(const std::string& id, const std::string& why) { return {id, Status::NotApplicable, why, {}}; }

Status from(Answer a) {
  switch (a) {
    case Answer::Yes: return Status::Pass;
    case Answer::No: return Status::Fail;
    default: return Status::Unknown;
  }
}

void add_dimension(Entry& e, Facts& f) {
  if (auto d = f.dimension()) e.values.push_back({f.dimension_declared() ? "dim_declared" : "dim", *d});
}

Entry check_wheel(const std::string& id, Facts& f, const Manifest& m) {
  if (!f.planar()) return not_applicable(id, "cover graph not planar");
  if (f.minima() != 1) return not_applicable(id, "not a unique minimal element");
  Entry e{id, Status::Unknown, "", {}};
  // A contained wheel bounds wheel(P) from below, which suffices unless the
  // inequality fails.
  int w = f.wheel_by_label();
  bool exact = false;
  Answer a = w > 0 ? f.dimension_at_most(2LL * w + 2) : Answer::No;
  if (a != Answer::Yes) {
    try {
      const auto number = wheel_number(f.poset(), m.dim_cap, m.limits);
      w = number.value;
      exact = true;
      a = f.dimension_at_most(2LL * w + 2);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::BudgetExceeded) throw;
      e.detail = err.what();
      return e;
    }
  }
  e.values.push_back({exact ? "wheel" : "wheel_lower", w});
  add_dimension(e, f);
  e.status = from(a);
  e.detail = "dim <= 2*" + std::to_string(w) + "+2";
  if (a == Answer::No) e.detail = "violated: " + e.detail;
  return e;
}

Entry check_height(const std::string& id, Facts& f) {
  if (!f.planar()) return not_applicable(id, "cover graph not planar");
  if (f.minima() != 1) return not_applicable(id, "not a unique minimal element");
  Entry e{id, Status::Unknown, "", {}};
  const auto h = static_cast<long long>(f.height());
  const Answer a = f.dimension_at_most(2 * h + 2);
  e.values.push_back({"height", h});
  add_dimension(e, f);
  e.status = from(a);
  e.detail = "dim <= 2*" + std::to_string(h) + "+2";
  if (a == Answer::No) e.detail = "violated: " + e.detail;
  return e;
}

Entry check_minimal_tw(const std::string& id, Facts& f, const Manifest& m) {
  if (!f.planar()) return not_applicable(id, "cover graph not planar");
  Entry e{id, Status::Unknown, "", {}};
  const auto minima = static_cast<long long>(f.minima());
  e.values.push_back({"minimal", minima});
  // A treewidth lower bound settles the inequality whenever it holds with it.
  long long tw = metrics::treewidth_lower_bound(f.graph());
  std::string key = "tw_lower";
  Answer a = f.dimension_at_most(minima * (4 * tw + 6));
  if (a != Answer::Yes) {
    try {
      tw = metrics::treewidth_exact(f.graph(), 64, m.limits).width;
      key = "tw";
      a = f.dimension_at_most(minima * (4 * tw + 6));
    } catch (const Error& err) {
      if (err.code() != ErrorCode::BudgetExceeded && err.code() != ErrorCode::PreconditionViolated) throw;
      e.detail = err.what();
      return e;
    }
  }
  e.values.push_back({key, tw});
  add_dimension(e, f);
  e.status = from(a);
  e.detail = "dim <= " + std::to_string(minima) + "*(4*" + std::to_string(tw) + "+6)";
  if (a == Answer::No) e.detail = "violated: " + e.detail;
  return e;
}

// Grid of side n inside the cover graph: labels first, then searches.
Answer find_grid(Facts& f, int n, const Manifest& m, std::string& how) {
  const metrics::Graph& g = f.graph();
  std::vector<metrics::Vertex> map;
  for (const auto& name : metrics::wheel_grid_certificate(n)) {
    auto e = f.poset().find(name);
    if (!e) break;
    map.push_back(*e);
  }
  if (map.size() == static_cast<std::size_t>(n * n) && metrics::verify_grid_subgraph(g, n, map)) {
    how = "wheel certificate";
    return Answer::Yes;
  }
  try {
    if (n <= 3 && g.size() <= 30) {
      auto minor = metrics::grid_minor(g, n, m.limits);
      how = "minor search";
      if (minor && metrics::verify_grid_minor(g, n, *minor)) return Answer::Yes;
      return minor ? Answer::Unknown : Answer::No;
    }
    auto sub = metrics::grid_subgraph(g, n, m.limits);
    how = "subgraph search";
    if (sub && metrics::verify_grid_subgraph(g, n, *sub)) return Answer::Yes;
  } catch (const Error& err) {
    if (err.code() != ErrorCode::BudgetExceeded) throw;
    how = err.what();
  }
  return Answer::Unknown;
}

Entry check_grid(const std::string& id, Facts& f, const Manifest& m) {
  if (!f.planar()) return not_applicable(id, "cover graph not planar");
  if (f.minima() != 1) return not_applicable(id, "not a unique minimal element");
  Entry e{id, Status::Pass, "", {}};
  const auto size = static_cast<long long>(f.poset().size());
  // Cheap upper bounds on the dimension: width, and |P|/2 from four elements on.
  long long upper = static_cast<long long>(posetlab::width(f.poset()));
  if (size >= 4) upper = std::min(upper, size / 2);
  std::vector<std::string> notes;
  for (int n = 2; n <= m.grid_n_max; ++n) {
    const long long threshold = 4LL * n + 3;
    const std::string tag = "n=" + std::to_string(n);
    if (upper < threshold) {
      notes.push_back(tag + " vacuous");
      continue;
    }
    const auto d = f.dimension();
    if (!d) {
      e.status = Status::Unknown;
      notes.push_back(tag + " dimension unknown");
      continue;
    }
    if (*d < threshold) {
      notes.push_back(tag + " vacuous");
      continue;
    }
    std::string how;
    const Answer a = find_grid(f, n, m, how);
    e.values.push_back({"grid" + std::to_string(n), a == Answer::Yes ? 1 : 0});
    notes.push_back(tag + " grid " + (a == Answer::Yes ? "found" : a == Answer::No ? "missing" : "unknown") + " (" + how + ")");
    if (a == Answer::No) e.status = Status::Fail;
    if (a == Answer::Unknown && e.status == Status::Pass) e.status = Status::Unknown;
  }
  // Informative: the 2x2 grid on small instances regardless of obligations.
  if (f.graph().size() <= 30) {
    try {
      e.values.push_back({"grid2_subgraph", metrics::grid_subgraph(f.graph(), 2, m.limits) ? 1 : 0});
    } catch (const Error&) {
    }
  }
  // dim <= 4 tw + 6, with the lower bound first.
  long long tw = metrics::treewidth_lower_bound(f.graph());
  Answer a = f.dimension_at_most(4 * tw + 6);
  if (a != Answer::Yes && f.graph().size() <= 64) {
    try {
      tw = metrics::treewidth_exact(f.graph(), 64, m.limits).width;
      a = f.dimension_at_most(4 * tw + 6);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::BudgetExceeded) throw;
      a = Answer::Unknown;
    }
  }
  if (a == Answer::No) {
    e.status = Status::Fail;
    notes.push_back("violated: dim <= 4*" + std::to_string(tw) + "+6");
  } else if (a == Answer::Unknown && e.status == Status::Pass) {
    e.status = Status::Unknown;
  }
  add_dimension(e, f);
  for (std::size_t k = 0; k < notes.size(); ++k) e.detail += (k ? "; " : "") + notes[k];
  return e;
}

Entry run_suite(Suite s, const InstanceSpec& spec, Facts& f, const Manifest& m) {
  switch (s) {
    case Suite::Wheel: return check_wheel(spec.id, f, m);
    case Suite::Height: return check_height(spec.id, f);
    case Suite::MinimalTw: return check_minimal_tw(spec.id, f, m);
    case Suite::Grid: return check_grid(spec.id, f, m);
  }
  return {};
}

json spec_to_json(const InstanceSpec& s) {
  json j{{"id", s.id}, {"family", s.family}};
  if (s.family == "random" || s.family == "interval") {
    j["seed"] = s.seed;
    j["size"] = s.order;
  } else {
    j["order"] = s.order;
  }
  if (s.attach_max) j["attach_max"] = true;
  if (s.dimension) j["dimension"] = *s.dimension;
  return j;
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Unknown: return "unknown";
    case Status::NotApplicable: return "not_applicable";
  }
  return "?";
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Wheel: return "wheel";
    case Suite::Height: return "height";
    case Suite::MinimalTw: return "minimal-tw";
    case Suite::Grid: return "grid";
  }
  return "?";
}

std::vector<Suite> parse_suites(std::string_view name) {
  if (name == "all") return {std::begin(kAllSuites), std::end(kAllSuites)};
  for (Suite s : kAllSuites) {
    if (to_string(s) == name) return {s};
  }
  throw Error(ErrorCode::ParseError, "unknown suite '" + std::string(name) + "'");
}

Manifest parse_manifest(const std::string& text) {
  try {
    const json j = json::parse(text);
    Manifest m;
    m.dim_cap = j.value("dim_cap", m.dim_cap);
    m.grid_n_max = j.value("grid_n_max", m.grid_n_max);
    m.limits.node_cap = j.value("node_cap", m.limits.node_cap);
    m.limits.wall_cap = std::chrono::milliseconds(
        static_cast<long long>(1000 * j.value("wall_seconds", m.limits.wall_cap.count() / 1000.0)));
    m.threads = j.value("threads", 0u);
    if (m.grid_n_max > 3) throw Error(ErrorCode::ParseError, "grid_n_max is limited to 3");
    for (const auto& item : j.at("instances")) {
      const auto family = item.at("family").get<std::string>();
      if (family == "random" && item.contains("count")) {
        const auto from = item.value("seed_from", std::uint64_t{0});
        const auto count = item.at("count").get<std::uint64_t>();
        const int max_size = item.value("max_size", 16);
        if (max_size < 4) throw Error(ErrorCode::ParseError, "max_size must be at least 4");
        for (std::uint64_t s = from; s < from + count; ++s) {
          InstanceSpec spec;
          spec.family = "random";
          spec.seed = s;
          spec.order = 4 + static_cast<int>(s % static_cast<std::uint64_t>(max_size - 3));
          spec.id = "random-" + pad(s);
          m.instances.push_back(std::move(spec));
        }
        continue;
      }
      if (!known_family(family)) throw Error(ErrorCode::ParseError, "unknown family '" + family + "'");
      InstanceSpec spec;
      spec.family = family;
      spec.order = item.value("order", item.value("size", 0));
      spec.seed = item.value("seed", std::uint64_t{0});
      spec.attach_max = item.value("attach_max", false);
      if (item.contains("dimension")) spec.dimension = item.at("dimension").get<int>();
      spec.id = item.value("id", family + "-" + std::to_string(spec.order));
      m.instances.push_back(std::move(spec));
    }
    std::vector<std::string> ids;
    for (const auto& s : m.instances) ids.push_back(s.id);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw Error(ErrorCode::ParseError, "duplicate instance id");
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string manifest_to_json(const Manifest& m) {
  json j;
  j["dim_cap"] = m.dim_cap;
  j["grid_n_max"] = m.grid_n_max;
  j["node_cap"] = m.limits.node_cap;
  j["wall_seconds"] = m.limits.wall_cap.count() / 1000.0;
  json items = json::array();
  for (const auto& s : m.instances) items.push_back(spec_to_json(s));
  j["instances"] = std::move(items);
  return j.dump(1);
}

Manifest default_manifest() {
  Manifest m;
  auto add = [&](std::string id, std::string family, int order, bool attach_max = false) {
    InstanceSpec s;
    s.id = std::move(id);
    s.family = std::move(family);
    s.order = order;
    s.attach_max = attach_max;
    m.instances.push_back(std::move(s));
  };
  for (int d = 2; d <= 7; ++d) add("standard-" + std::to_string(d), "standard", d);
  for (int d = 3; d <= 7; ++d) add("wheel-" + std::to_string(d), "wheel", d);
  for (int d = 3; d <= 5; ++d) add("wheel-max-" + std::to_string(d), "wheel", d, true);
  add("wheel-11", "wheel", 11);
  m.instances.back().dimension = 11;
  for (int d = 3; d <= 7; ++d) add("kelly-" + std::to_string(d), "kelly", d);
  for (int d : {1, 2, 5}) add("chain-" + std::to_string(d), "chain", d);
  for (int d = 2; d <= 4; ++d) add("antichain-bottom-" + std::to_string(d), "antichain-bottom", d);
  for (std::uint64_t s = 1; s <= 3; ++s) {
    InstanceSpec spec;
    spec.id = "interval-" + pad(s);
    spec.family = "interval";
    spec.seed = s;
    spec.order = 8;
    m.instances.push_back(std::move(spec));
  }
  for (std::uint64_t s = 0; s < 200; ++s) {
    InstanceSpec spec;
    spec.id = "random-" + pad(s);
    spec.family = "random";
    spec.seed = s;
    spec.order = 4 + static_cast<int>(s % 13);
    m.instances.push_back(std::move(spec));
  }
  return m;
}

Poset build_instance(const InstanceSpec& s) {
  if (s.family == "standard") return families::standard_example(s.order);
  if (s.family == "wheel") return families::wheel(s.order, s.attach_max);
  if (s.family == "kelly") return families::kelly(s.order);
  if (s.family == "chain") return families::chain(s.order);
  if (s.family == "interval") return families::interval_order(s.seed, s.order);
  if (s.family == "random") return families::random_cover_planar_with_unique_min(s.seed, s.order);
  if (s.family == "antichain-bottom") {
    if (s.order < 1) throw Error(ErrorCode::OrderTooSmall, "antichain-bottom needs order >= 1");
    std::vector<std::string> names{"bottom"};
    std::vector<std::pair<std::string, std::string>> covers;
    for (int k = 1; k <= s.order; ++k) {
      names.push_back("t" + std::to_string(k));
      covers.emplace_back("bottom", names.back());
    }
    return Poset::from_cover_pairs(std::move(names), covers);
  }
  throw Error(ErrorCode::ParseError, "unknown family '" + s.family + "'");
}

std::size_t SuiteReport::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [&](const Entry& e) { return e.status == s; }));
}

int Report::exit_code() const {
  bool unknown = false;
  for (const auto& s : suites) {
    if (s.count(Status::Fail)) return 1;
    unknown = unknown || s.count(Status::Unknown);
  }
  return unknown ? 3 : 0;
}

Report verify(const Manifest& m, std::span<const Suite> suites) {
  const std::size_t n = m.instances.size();
  std::vector<std::vector<Entry>> rows(n);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t k; (k = next++) < n;) {
      const auto& spec = m.instances[k];
      try {
        Facts f(spec, m);
        for (Suite s : suites) rows[k].push_back(run_suite(s, spec, f, m));
      } catch (const Error& e) {
        // A malformed instance is reported, not fatal.
        rows[k].clear();
        for (std::size_t s = 0; s < suites.size(); ++s) rows[k].push_back({spec.id, Status::Unknown, e.what(), {}});
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  unsigned threads = m.threads ? m.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  Report r;
  for (std::size_t s = 0; s < suites.size(); ++s) {
    SuiteReport sr;
    sr.suite = suites[s];
    for (std::size_t k = 0; k < n; ++k) sr.entries.push_back(rows[k][s]);
    std::sort(sr.entries.begin(), sr.entries.end(), [](const Entry& a, const Entry& b) { return a.id < b.id; });
    r.suites.push_back(std::move(sr));
  }
  return r;
}

std::string report_to_json(const Report& r) {
  json j;
  j["exit_code"] = r.exit_code();
  json suites = json::array();
  for (const auto& s : r.suites) {
    json js;
    js["suite"] = to_string(s.suite);
    json summary;
    for (Status st : {Status::Pass, Status::Fail, Status::Unknown, Status::NotApplicable}) summary[std::string(to_string(st))] = s.count(st);
    js["summary"] = std::move(summary);
    json entries = json::array();
    for (const auto& e : s.entries) {
      json je{{"id", e.id}, {"status", to_string(e.status)}, {"detail", e.detail}};
      json values = json::object();
      for (const auto& v : e.values) values[v.key] = v.value;
      je["values"] = std::move(values);
      entries.push_back(std::move(je));
    }
    js["entries"] = std::move(entries);
    suites.push_back(std::move(js));
  }
  j["suites"] = std::move(suites);
  return j.dump(1);
}

}  // namespace posetlab::harness
