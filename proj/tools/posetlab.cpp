#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "posetlab/containment.hpp"
#include "posetlab/dimension.hpp"
#include "posetlab/drawing.hpp"
#include "posetlab/embedding.hpp"
#include "posetlab/error.hpp"
#include "posetlab/families.hpp"
#include "posetlab/graph_metrics.hpp"
#include "posetlab/harness.hpp"
#include "posetlab/io.hpp"
#include "posetlab/witness_paths.hpp"

using namespace posetlab;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitCap = 3;

struct Options {
  std::string in;
  std::string out;
  std::string pattern;
  std::string embedding;
  std::string cert;
  std::string svg;
  std::string dot;
  std::string witness;
  std::string target;
  std::string side = "left";
  std::string family;
  std::string suite = "all";
  std::string manifest;
  int order = 0;
  int cap = 12;
  int n = 2;
  std::uint64_t seed = 0;
  bool attach_max = false;
  bool minor = false;
  std::uint64_t node_cap = SearchLimits{}.node_cap;
};

SearchLimits limits(const Options& o) {
  SearchLimits l;
  l.node_cap = o.node_cap;
  if (const char* env = std::getenv("POSETLAB_CAP_SECONDS")) {
    try {
      l.wall_cap = std::chrono::milliseconds(static_cast<long long>(std::stod(env) * 1000));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "POSETLAB_CAP_SECONDS is not a number");
    }
  }
  return l;
}

void emit(const std::string& file, const std::string& text) {
  if (file.empty() || file == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    io::write_text(file, text);
  }
}

// The canonical radial embedding for wheels, else any anchored one.
PlaneEmbedding embedding_for(const Poset& p) {
  const auto n = static_cast<int>(p.size());
  for (int order = 3; order * order - order + 1 <= n; ++order) {
    const int size = order * order - order + 1;
    if (size == n && p == families::wheel(order)) return canonical_wheel_embedding(order);
    if (size + 1 == n && p == families::wheel(order, true)) return canonical_wheel_embedding(order, true);
  }
  return anchored_embedding(p);
}

int cmd_gen(const Options& o) {
  Poset p;
  if (o.family == "standard") {
    p = families::standard_example(o.order);
  } else if (o.family == "wheel") {
    p = families::wheel(o.order, o.attach_max);
  } else if (o.family == "kelly") {
    p = families::kelly(o.order);
  } else if (o.family == "interval") {
    p = families::interval_order(o.seed, o.order);
  } else if (o.family == "random") {
    p = families::random_cover_planar_with_unique_min(o.seed, o.order);
  } else {
    throw Error(ErrorCode::ParseError, "unknown family '" + o.family + "'");
  }
  emit(o.out, io::poset_to_json(p));
  if (!o.out.empty() && o.out != "-") std::cout << "elements " << p.size() << "\n";
  return 0;
}

int cmd_dim(const Options& o) {
  const Poset p = io::read_poset(o.in);
  const auto r = dim_exact(p, o.cap, limits(o));
  std::cout << r.dimension << "\n";
  if (!o.cert.empty()) io::write_text(o.cert, io::realizer_to_json(p, r.realizer));
  return 0;
}

int cmd_se(const Options& o) {
  const Poset p = io::read_poset(o.in);
  const auto w = se(p, o.cap, limits(o));
  std::cout << w.order << "\n";
  if (!o.witness.empty()) io::write_text(o.witness, io::standard_example_to_json(p, w));
  return 0;
}

int cmd_family_number(const Options& o, const std::string& family) {
  const Poset p = io::read_poset(o.in);
  const auto r = family == "wheel" ? wheel_number(p, o.cap, limits(o)) : kelly_number(p, o.cap, limits(o));
  std::cout << r.value << "\n";
  if (!o.witness.empty()) {
    if (r.found_order > 0) {
      const Poset pattern = family == "wheel" ? families::wheel(r.found_order) : families::kelly(r.found_order);
      io::write_text(o.witness, io::family_witness_to_json(p, pattern, family, r.found_order, r.witness));
    } else {
      io::write_text(o.witness, io::standard_example_to_json(p, r.se));
    }
  }
  return 0;
}

int cmd_contains(const Options& o) {
  const Poset host = io::read_poset(o.in);
  const Poset pattern = io::read_poset(o.pattern);
  const auto map = contains_subposet(host, pattern, limits(o));
  std::cout << (map ? "yes" : "no") << "\n";
  if (map && !o.witness.empty()) {
    io::write_text(o.witness, io::family_witness_to_json(host, pattern, "pattern", static_cast<int>(pattern.size()), *map));
  }
  return 0;
}

int cmd_embed(const Options& o) {
  const Poset p = io::read_poset(o.in);
  auto planarity = is_planar(cover_graph(p));
  if (!planarity.planar()) {
    std::cout << "nonplanar " << planarity.kuratowski_kind << "\n";
    for (const auto& [a, b] : planarity.kuratowski_edges) std::cout << p.name(a) << " " << p.name(b) << "\n";
    return kExitFail;
  }
  const PlaneEmbedding emb = minimal_elements(p).size() == 1 ? embedding_for(p) : *planarity.embedding;
  std::cout << "planar faces " << emb.faces().size() << "\n";
  if (auto x0 = emb.e_infinity()) std::cout << "e_infinity " << p.name(*x0) << "\n";
  if (!o.out.empty()) io::write_text(o.out, io::embedding_to_json(emb));
  if (!o.svg.empty()) io::write_text(o.svg, drawing::to_svg(emb, drawing::planar_layout(emb)));
  if (!o.dot.empty()) io::write_text(o.dot, drawing::to_dot(p));
  return 0;
}

int cmd_paths(const Options& o) {
  const Poset p = io::read_poset(o.in);
  const PlaneEmbedding emb = io::parse_embedding(p, io::read_text(o.embedding));
  const Element u = p.index_of(o.target);
  Direction dir;
  if (o.side == "left") {
    dir = Direction::Left;
  } else if (o.side == "right") {
    dir = Direction::Right;
  } else {
    throw Error(ErrorCode::ParseError, "side must be left or right");
  }
  const Path path = witnessing_path(emb, u, dir);
  for (std::size_t k = 0; k < path.size(); ++k) std::cout << (k ? " " : "") << p.name(path[k]);
  std::cout << "\n";
  if (!o.svg.empty()) io::write_text(o.svg, drawing::to_svg(emb, drawing::planar_layout(emb), path));
  if (!o.dot.empty()) io::write_text(o.dot, drawing::to_dot(p, path));
  return 0;
}

int cmd_verify_certificate(const Options& o) {
  const Poset p = io::read_poset(o.in);
  const PlaneEmbedding emb = io::parse_embedding(p, io::read_text(o.embedding));
  const IntervalCertificate cert = io::parse_certificate(p, io::read_text(o.cert));
  const CertificateReport report = verify_lemma_certificate(emb, cert);
  for (std::size_t k = 0; k < report.items.size(); ++k) {
    std::cout << "item" << k + 1 << " " << (report.items[k].pass ? "pass" : "fail");
    if (!report.items[k].pass) std::cout << " " << report.items[k].detail;
    std::cout << "\n";
  }
  std::cout << (report.pass() ? "pass" : "fail") << "\n";
  if (!o.out.empty()) io::write_text(o.out, io::certificate_report_to_json(report));
  return report.pass() ? 0 : kExitFail;
}

int cmd_tw(const Options& o) {
  const metrics::Graph g = io::parse_graph(io::read_text(o.in));
  const auto r = metrics::treewidth_exact(g, o.cap, limits(o));
  std::cout << r.width << "\n";
  if (!o.out.empty()) io::write_text(o.out, io::tree_decomposition_to_json(g, r));
  return 0;
}

int cmd_grid(const Options& o) {
  const metrics::Graph g = io::parse_graph(io::read_text(o.in));
  if (o.minor) {
    const auto sets = metrics::grid_minor(g, o.n, limits(o));
    std::cout << (sets ? "found" : "not-found") << "\n";
    if (sets) {
      for (std::size_t k = 0; k < sets->size(); ++k) {
        std::cout << "g(" << k / o.n << "," << k % o.n << ")";
        for (auto v : (*sets)[k]) std::cout << " " << g.name(v);
        std::cout << "\n";
      }
    }
    return 0;
  }
  const auto map = metrics::grid_subgraph(g, o.n, limits(o));
  std::cout << (map ? "found" : "not-found") << "\n";
  if (map) {
    for (std::size_t k = 0; k < map->size(); ++k) {
      std::cout << "g(" << k / o.n << "," << k % o.n << ") " << g.name((*map)[k]) << "\n";
    }
  }
  return 0;
}

int cmd_verify(const Options& o) {
  harness::Manifest m =
      o.manifest.empty() ? harness::default_manifest() : harness::parse_manifest(io::read_text(o.manifest));
  if (std::getenv("POSETLAB_CAP_SECONDS")) m.limits.wall_cap = limits(o).wall_cap;
  const auto suites = harness::parse_suites(o.suite);
  const auto report = harness::verify(m, suites);
  for (const auto& s : report.suites) {
    std::cout << harness::to_string(s.suite) << " pass " << s.count(harness::Status::Pass) << " fail "
              << s.count(harness::Status::Fail) << " unknown " << s.count(harness::Status::Unknown)
              << " not_applicable " << s.count(harness::Status::NotApplicable) << "\n";
    for (const auto& e : s.entries) {
      if (e.status == harness::Status::Fail || e.status == harness::Status::Unknown) {
        std::cout << harness::to_string(s.suite) << " " << e.id << " " << harness::to_string(e.status) << " " << e.detail
                  << "\n";
      }
    }
  }
  if (!o.out.empty()) io::write_text(o.out, harness::report_to_json(report));
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"posetlab: dimension of posets with planar cover graphs"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--node-cap", o.node_cap, "Node cap for exhaustive searches");

  auto in = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("--in", o.in, "Input poset JSON");
    if (required) opt->required();
  };

  auto* gen = app.add_subcommand("gen", "Generate a poset");
  gen->add_option("--family", o.family, "standard|wheel|kelly|interval|random")->required();
  gen->add_option("--order", o.order, "Order or size")->required();
  gen->add_flag("--attach-max", o.attach_max, "Add a global maximum (wheel)");
  gen->add_option("--seed", o.seed, "Seed (interval, random)");
  gen->add_option("--out", o.out, "Output file, stdout when omitted");

  auto* dim = app.add_subcommand("dim", "Exact dimension");
  in(dim);
  dim->add_option("--cap", o.cap, "Largest dimension searched");
  dim->add_option("--certificate", o.cert, "Write the realizer");

  std::vector<std::pair<CLI::App*, std::string>> numbers;
  for (const std::string name : {"se", "wheel", "kelly"}) {
    auto* c = app.add_subcommand(name, name + " number");
    in(c);
    c->add_option("--cap", o.cap, "Largest order searched");
    c->add_option("--witness", o.witness, "Write the witness");
    numbers.emplace_back(c, name);
  }

  auto* contains = app.add_subcommand("contains", "Subposet containment");
  in(contains);
  contains->add_option("--pattern", o.pattern, "Pattern poset JSON")->required();
  contains->add_option("--witness", o.witness, "Write the embedding map");

  auto* embed = app.add_subcommand("embed", "Planarity and plane embedding");
  in(embed);
  embed->add_option("--out", o.out, "Write the embedding JSON");
  embed->add_option("--svg", o.svg, "Write an SVG drawing");
  embed->add_option("--dot", o.dot, "Write the cover diagram in DOT");

  auto* paths = app.add_subcommand("paths", "Leftmost or rightmost witnessing path");
  in(paths);
  paths->add_option("--embedding", o.embedding, "Embedding JSON")->required();
  paths->add_option("--target", o.target, "Target element")->required();
  paths->add_option("--side", o.side, "left|right");
  paths->add_option("--svg", o.svg, "Write an SVG overlay");
  paths->add_option("--dot", o.dot, "Write a DOT overlay");

  auto* cert = app.add_subcommand("verify-certificate", "Check an interval certificate");
  in(cert);
  cert->add_option("--embedding", o.embedding, "Embedding JSON")->required();
  cert->add_option("--cert", o.cert, "Certificate JSON")->required();
  cert->add_option("--report", o.out, "Write the report JSON");

  auto* tw = app.add_subcommand("tw", "Exact treewidth of a graph");
  in(tw);
  tw->add_option("--cap", o.cap, "Largest width accepted")->default_val(64);
  tw->add_option("--decomposition", o.out, "Write the tree decomposition");

  auto* grid = app.add_subcommand("grid", "Grid subgraph or minor");
  in(grid);
  grid->add_option("--n", o.n, "Grid side")->required();
  grid->add_flag("--minor", o.minor, "Search for a minor instead of a subgraph");

  auto* verify = app.add_subcommand("verify", "Run the bound-verification suites");
  verify->add_option("--suite", o.suite, "wheel|height|minimal-tw|grid|all");
  verify->add_option("--manifest", o.manifest, "Manifest JSON, built-in default when omitted");
  verify->add_option("--out", o.out, "Write the report JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitMalformed;
  }

  try {
    if (gen->parsed()) return cmd_gen(o);
    if (dim->parsed()) return cmd_dim(o);
    for (const auto& [c, name] : numbers) {
      if (c->parsed()) return name == "se" ? cmd_se(o) : cmd_family_number(o, name);
    }
    if (contains->parsed()) return cmd_contains(o);
    if (embed->parsed()) return cmd_embed(o);
    if (paths->parsed()) return cmd_paths(o);
    if (cert->parsed()) return cmd_verify_certificate(o);
    if (tw->parsed()) return cmd_tw(o);
    if (grid->parsed()) return cmd_grid(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::BudgetExceeded ? kExitCap : kExitMalformed;
  }
  return kExitMalformed;
}
