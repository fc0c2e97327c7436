#include "posetlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "posetlab/error.hpp"

namespace posetlab::io {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

// Converts nlohmann type errors into ParseError.
template <class F>
auto guarded(F f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error(ErrorCode::ParseError, std::string(what) + " must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw Error(ErrorCode::ParseError, std::string(what) + " entries must be [\"x\", \"y\"]");
    }
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

std::vector<Element> element_list(const Poset& p, const json& j, const char* what) {
  std::vector<Element> out;
  for (const auto& n : string_list(j, what)) out.push_back(p.index_of(n));
  return out;
}

json names_of(const Poset& p, std::span<const Element> es) {
  json out = json::array();
  for (Element e : es) out.push_back(p.name(e));
  return out;
}

}  // namespace

std::string read_text(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + file.string());
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

Poset parse_poset(const std::string& text) {
  const json j = parse_json(text);
  return Poset::from_cover_pairs(string_list(field(j, "elements"), "elements"), pair_list(field(j, "cover"), "cover"));
}

std::string poset_to_json(const Poset& p) {
  json j;
  j["elements"] = p.names();
  json cover = json::array();
  for (const auto& [a, b] : p.cover_pairs()) cover.push_back({p.name(a), p.name(b)});
  j["cover"] = std::move(cover);
  return j.dump(1);
}

Poset read_poset(const std::filesystem::path& file) { return parse_poset(read_text(file)); }

metrics::Graph parse_graph(const std::string& text) {
  const json j = parse_json(text);
  return metrics::Graph::from_edges(string_list(field(j, "elements"), "elements"), pair_list(field(j, "cover"), "cover"));
}

PlaneEmbedding parse_embedding(const Poset& p, const std::string& text) {
  const json j = parse_json(text);
  const json& rot = field(j, "rotation");
  if (!rot.is_object()) throw Error(ErrorCode::ParseError, "rotation must be an object");
  std::vector<std::vector<Element>> rotation(p.size());
  std::vector<bool> seen(p.size(), false);
  std::optional<Element> inf_at;
  for (const auto& [name, entries] : rot.items()) {
    const Element v = p.index_of(name);
    if (seen[v]) throw Error(ErrorCode::ParseError, "rotation of '" + name + "' given twice");
    seen[v] = true;
    if (!entries.is_array()) throw Error(ErrorCode::ParseError, "rotation of '" + name + "' must be an array");
    for (const auto& e : entries) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw Error(ErrorCode::ParseError, "rotation entries must be [\"u\", \"up|down|inf\"]");
      }
      const auto dir = e[1].get<std::string>();
      if (dir == "inf") {
        rotation[v].push_back(kInfinity);
        inf_at = v;
        continue;
      }
      const Element u = p.index_of(e[0].get<std::string>());
      if ((dir == "up" && !p.covers(v, u)) || (dir == "down" && !p.covers(u, v)) || (dir != "up" && dir != "down")) {
        throw Error(ErrorCode::ParseError, "entry '" + p.name(u) + "' at '" + name + "' has a wrong direction");
      }
      rotation[v].push_back(u);
    }
  }
  const CoverGraph g = cover_graph(p);
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (!seen[v] && !g.neighbors(static_cast<Element>(v)).empty()) {
      throw Error(ErrorCode::ParseError, "missing rotation for '" + p.name(static_cast<Element>(v)) + "'");
    }
  }
  if (j.contains("e_infinity") && !j["e_infinity"].is_null()) {
    const Element x0 = p.index_of(guarded([&] { return j["e_infinity"].get<std::string>(); }));
    if (!inf_at || *inf_at != x0) throw Error(ErrorCode::ParseError, "e_infinity does not match the inf rotation slot");
  } else if (inf_at) {
    throw Error(ErrorCode::ParseError, "inf rotation slot without e_infinity");
  }
  PlaneEmbedding emb(g, std::move(rotation));
  if (j.contains("outer_face") && inf_at) {
    auto given = element_list(p, j["outer_face"], "outer_face");
    auto actual = emb.outer_face().vertices;
    std::sort(given.begin(), given.end());
    given.erase(std::unique(given.begin(), given.end()), given.end());
    std::sort(actual.begin(), actual.end());
    actual.erase(std::unique(actual.begin(), actual.end()), actual.end());
    if (given != actual) throw Error(ErrorCode::ParseError, "outer_face does not match the rotation system");
  }
  return emb;
}

std::string embedding_to_json(const PlaneEmbedding& emb) {
  const Poset& p = emb.poset();
  json rot = json::object();
  for (std::size_t v = 0; v < p.size(); ++v) {
    const auto ve = static_cast<Element>(v);
    json entries = json::array();
    for (Element u : emb.rotation(ve)) {
      if (u == kInfinity) {
        entries.push_back({"e_inf", "inf"});
      } else {
        entries.push_back({p.name(u), p.less(ve, u) ? "up" : "down"});
      }
    }
    rot[p.name(ve)] = std::move(entries);
  }
  json j;
  j["rotation"] = std::move(rot);
  if (auto x0 = emb.e_infinity()) {
    j["e_infinity"] = p.name(*x0);
    j["outer_face"] = names_of(p, emb.outer_face().vertices);
  } else {
    j["e_infinity"] = nullptr;
  }
  return j.dump(1);
}

std::string realizer_to_json(const Poset& p, const Realizer& r) {
  json j;
  j["dimension"] = r.size();
  json ext = json::array();
  for (const auto& l : r) ext.push_back(names_of(p, l));
  j["extensions"] = std::move(ext);
  return j.dump(1);
}

Realizer parse_realizer(const Poset& p, const std::string& text) {
  const json j = parse_json(text);
  const json& ext = field(j, "extensions");
  if (!ext.is_array()) throw Error(ErrorCode::ParseError, "extensions must be an array");
  Realizer r;
  for (const auto& l : ext) r.push_back(element_list(p, l, "extension"));
  return r;
}

std::string standard_example_to_json(const Poset& p, const StandardExampleWitness& w) {
  json j;
  j["order"] = w.order;
  json pairs = json::array();
  for (const auto& [a, b] : w.pairs) pairs.push_back({p.name(a), p.name(b)});
  j["pairs"] = std::move(pairs);
  return j.dump(1);
}

std::string family_witness_to_json(const Poset& host, const Poset& pattern, const std::string& family, int order,
                                   const SubposetMap& map) {
  json j;
  j["family"] = family;
  j["order"] = order;
  json m = json::object();
  for (std::size_t k = 0; k < map.size(); ++k) m[pattern.name(static_cast<Element>(k))] = host.name(map[k]);
  j["map"] = std::move(m);
  return j.dump(1);
}

IntervalCertificate parse_certificate(const Poset& p, const std::string& text) {
  const json j = parse_json(text);
  IntervalCertificate c;
  c.x = p.index_of(guarded([&] { return field(j, "x").get<std::string>(); }));
  c.y = p.index_of(guarded([&] { return field(j, "y").get<std::string>(); }));
  c.w = element_list(p, field(j, "W"), "W");
  c.w2 = element_list(p, field(j, "W_prime"), "W_prime");
  c.a = element_list(p, field(j, "a"), "a");
  c.b = element_list(p, field(j, "b"), "b");
  return c;
}

std::string certificate_to_json(const Poset& p, const IntervalCertificate& cert) {
  json j;
  j["x"] = p.name(cert.x);
  j["y"] = p.name(cert.y);
  j["W"] = names_of(p, cert.w);
  j["W_prime"] = names_of(p, cert.w2);
  j["a"] = names_of(p, cert.a);
  j["b"] = names_of(p, cert.b);
  return j.dump(1);
}

std::string certificate_report_to_json(const CertificateReport& report) {
  json j;
  j["pass"] = report.pass();
  json items = json::array();
  for (std::size_t k = 0; k < report.items.size(); ++k) {
    items.push_back({{"item", k + 1}, {"pass", report.items[k].pass}, {"detail", report.items[k].detail}});
  }
  j["items"] = std::move(items);
  return j.dump(1);
}

std::string tree_decomposition_to_json(const metrics::Graph& g, const metrics::TreewidthResult& tw) {
  json j;
  j["treewidth"] = tw.width;
  json bags = json::array();
  for (const auto& b : tw.decomposition.bags) {
    json bag = json::array();
    for (metrics::Vertex v : b) bag.push_back(g.name(v));
    bags.push_back(std::move(bag));
  }
  j["bags"] = std::move(bags);
  j["tree_edges"] = tw.decomposition.tree_edges;
  return j.dump(1);
}

}  // namespace posetlab::io
