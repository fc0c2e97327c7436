#include "posetlab/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <unordered_map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

#include "posetlab/error.hpp"
#include "posetlab/families.hpp"

namespace posetlab {

namespace {

constexpr std::size_t kNoFace = static_cast<std::size_t>(-1);

std::size_t slot_of(const std::vector<Element>& rotation, Element u) {
  auto it = std::find(rotation.begin(), rotation.end(), u);
  if (it == rotation.end()) return kNoFace;
  return static_cast<std::size_t>(it - rotation.begin());
}

}  // namespace

CoverGraph::CoverGraph(Poset p) : poset_(std::move(p)) {
  const std::size_t n = poset_.size();
  adjacency_.assign(n, {});
  adjacency_bits_.assign(n, Bits(n));
  for (const auto& [lo, hi] : poset_.cover_pairs()) {
    adjacency_[lo].push_back(hi);
    adjacency_[hi].push_back(lo);
    adjacency_bits_[lo].set(static_cast<std::size_t>(hi));
    adjacency_bits_[hi].set(static_cast<std::size_t>(lo));
    ++edge_count_;
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::vector<ElementPair> CoverGraph::edges() const { return poset_.cover_pairs(); }

CoverGraph cover_graph(const Poset& p) { return CoverGraph(p); }

PlaneEmbedding::PlaneEmbedding(CoverGraph graph, std::vector<std::vector<Element>> rotation)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
  const std::size_t n = graph_.size();
  if (rotation_.size() != n) {
    throw Error(ErrorCode::InvalidEmbedding, "rotation lists " + std::to_string(rotation_.size()) +
                                                 " vertices, graph has " + std::to_string(n));
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Element> real;
    for (Element u : rotation_[v]) {
      if (u == kInfinity) {
        if (e_infinity_) throw Error(ErrorCode::InvalidEmbedding, "e_inf appears more than once");
        e_infinity_ = static_cast<Element>(v);
      } else {
        real.push_back(u);
      }
    }
    std::sort(real.begin(), real.end());
    if (real != graph_.neighbors(static_cast<Element>(v))) {
      throw Error(ErrorCode::InvalidEmbedding,
                  "rotation at '" + graph_.poset().name(static_cast<Element>(v)) + "' does not list its neighbours");
    }
  }
  trace_faces();
}

void PlaneEmbedding::trace_faces() {
  const std::size_t n = graph_.size();
  std::vector<std::unordered_map<Element, std::size_t>> position(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t k = 0; k < rotation_[v].size(); ++k) {
      if (rotation_[v][k] != kInfinity) position[v][rotation_[v][k]] = k;
    }
  }
  // Clockwise successor of slot k at v, skipping e_inf.
  auto next_real = [&](Element v, std::size_t k) {
    const auto& rot = rotation_[v];
    for (std::size_t step = 1; step <= rot.size(); ++step) {
      const std::size_t s = (k + step) % rot.size();
      if (rot[s] != kInfinity) return s;
    }
    return k;
  };

  faces_.clear();
  face_of_dart_.assign(n, {});
  for (std::size_t v = 0; v < n; ++v) face_of_dart_[v].assign(rotation_[v].size(), kNoFace);

  for (std::size_t v = 0; v < n; ++v) {
    if (graph_.neighbors(static_cast<Element>(v)).empty()) {
      faces_.push_back(Face{{}, {static_cast<Element>(v)}});
      continue;
    }
    for (std::size_t k = 0; k < rotation_[v].size(); ++k) {
      if (rotation_[v][k] == kInfinity || face_of_dart_[v][k] != kNoFace) continue;
      const std::size_t id = faces_.size();
      Face face;
      Element head = static_cast<Element>(v);
      std::size_t slot = k;
      while (face_of_dart_[head][slot] == kNoFace) {
        face_of_dart_[head][slot] = id;
        const Element tail = rotation_[head][slot];
        face.darts.push_back(Dart{tail, head});
        face.vertices.push_back(head);
        const Element next = rotation_[head][next_real(head, slot)];
        slot = position[next].at(head);
        head = next;
      }
      faces_.push_back(std::move(face));
    }
  }

  // Components and Euler's formula per component.
  std::vector<int> component(n, -1);
  int count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (component[s] != -1) continue;
    std::vector<Element> stack{static_cast<Element>(s)};
    component[s] = count;
    while (!stack.empty()) {
      const Element v = stack.back();
      stack.pop_back();
      for (Element u : graph_.neighbors(v)) {
        if (component[u] == -1) {
          component[u] = count;
          stack.push_back(u);
        }
      }
    }
    ++count;
  }
  components_ = static_cast<std::size_t>(count);
  std::vector<long> vertices(components_, 0), edges(components_, 0), faces(components_, 0);
  for (std::size_t v = 0; v < n; ++v) {
    ++vertices[component[v]];
    edges[component[v]] += static_cast<long>(graph_.neighbors(static_cast<Element>(v)).size());
  }
  for (const Face& f : faces_) ++faces[component[f.vertices.front()]];
  euler_ok_ = true;
  for (std::size_t c = 0; c < components_; ++c) {
    if (vertices[c] - edges[c] / 2 + faces[c] != 2) euler_ok_ = false;
  }
  if (!euler_ok_) throw Error(ErrorCode::InvalidEmbedding, "rotation system violates Euler's formula");
}

std::size_t PlaneEmbedding::corner_face(Element v, std::size_t slot) const {
  const auto& rot = rotation_[v];
  if (graph_.neighbors(v).empty()) {
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      if (faces_[f].darts.empty() && faces_[f].vertices.front() == v) return f;
    }
  }
  // The corner after e_inf belongs to the face of the preceding real entry.
  std::size_t k = slot;
  for (std::size_t step = 0; step < rot.size() && rot[k] == kInfinity; ++step) {
    k = (k + rot.size() - 1) % rot.size();
  }
  return face_of_dart_[v][k];
}

std::size_t PlaneEmbedding::outer_face_index() const {
  if (!e_infinity_) throw Error(ErrorCode::MissingEInfinity, "embedding has no e_inf");
  return corner_face(*e_infinity_, slot_of(rotation_[*e_infinity_], kInfinity));
}

bool PlaneEmbedding::on_outer_face(Element v) const {
  const Face& f = outer_face();
  return std::find(f.vertices.begin(), f.vertices.end(), v) != f.vertices.end();
}

std::vector<std::size_t> PlaneEmbedding::outer_corners(Element v) const {
  const std::size_t outer = outer_face_index();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < rotation_[v].size(); ++k) {
    if (rotation_[v][k] != kInfinity && face_of_dart_[v][k] == outer) out.push_back(k);
  }
  return out;
}

PlaneEmbedding PlaneEmbedding::with_e_infinity(Element x0, Element after) const {
  auto rotation = rotation_;
  for (auto& rot : rotation) rot.erase(std::remove(rot.begin(), rot.end(), kInfinity), rot.end());
  auto& rot = rotation[x0];
  if (rot.empty() || after == kInfinity) {
    rot.insert(rot.begin(), kInfinity);
  } else {
    auto it = std::find(rot.begin(), rot.end(), after);
    if (it == rot.end()) {
      throw Error(ErrorCode::PreconditionViolated, "'" + poset().name(after) + "' is not a neighbour of '" +
                                                       poset().name(x0) + "'");
    }
    rot.insert(it + 1, kInfinity);
  }
  return PlaneEmbedding(graph_, std::move(rotation));
}

PlaneEmbedding PlaneEmbedding::reflected() const {
  auto rotation = rotation_;
  for (auto& rot : rotation) std::reverse(rot.begin(), rot.end());
  return PlaneEmbedding(graph_, std::move(rotation));
}

PlanarityResult is_planar(const CoverGraph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>,
                                           boost::property<boost::edge_index_t, int>>;
  using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

  const std::size_t n = g.size();
  BoostGraph bg(n);
  for (const auto& [lo, hi] : g.edges()) boost::add_edge(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi), bg);
  auto edge_index = boost::get(boost::edge_index, bg);
  int next_index = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(edge_index, *it, next_index++);

  std::vector<std::vector<BoostEdge>> boost_embedding(n);
  std::vector<BoostEdge> kuratowski;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(boost_embedding.begin(), boost::get(boost::vertex_index, bg)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  PlanarityResult result;
  if (planar) {
    std::vector<std::vector<Element>> rotation(n);
    for (std::size_t v = 0; v < n; ++v) {
      for (const BoostEdge& e : boost_embedding[v]) {
        const auto s = boost::source(e, bg);
        const auto t = boost::target(e, bg);
        rotation[v].push_back(static_cast<Element>(s == v ? t : s));
      }
    }
    result.embedding.emplace(g, std::move(rotation));
    return result;
  }
  std::vector<int> degree(n, 0);
  for (const BoostEdge& e : kuratowski) {
    const auto s = static_cast<Element>(boost::source(e, bg));
    const auto t = static_cast<Element>(boost::target(e, bg));
    result.kuratowski_edges.emplace_back(std::min(s, t), std::max(s, t));
    ++degree[s];
    ++degree[t];
  }
  const auto branch4 = std::count_if(degree.begin(), degree.end(), [](int d) { return d >= 4; });
  result.kuratowski_kind = branch4 >= 5 ? "K5" : "K3,3";
  return result;
}

PlaneEmbedding anchored_embedding(const Poset& p) {
  const auto minima = minimal_elements(p);
  if (minima.size() != 1) {
    throw Error(ErrorCode::EmbeddingConstraintUnsatisfied,
                "e_inf needs a unique minimal element, found " + std::to_string(minima.size()));
  }
  auto result = is_planar(cover_graph(p));
  if (!result.planar()) throw Error(ErrorCode::PreconditionViolated, "cover graph is not planar");
  const Element x0 = minima.front();
  const auto& rot = result.embedding->rotation(x0);
  return result.embedding->with_e_infinity(x0, rot.empty() ? kInfinity : rot.back());
}

std::vector<std::vector<Element>> rotation_from_layout(const CoverGraph& g, std::span<const Point> layout) {
  std::vector<std::vector<Element>> rotation(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto list = g.neighbors(static_cast<Element>(v));
    auto angle = [&](Element u) {
      return std::atan2(layout[u].y - layout[v].y, layout[u].x - layout[v].x);
    };
    // Clockwise means decreasing angle with the y axis up.
    std::stable_sort(list.begin(), list.end(), [&](Element a, Element b) { return angle(a) > angle(b); });
    rotation[v] = std::move(list);
  }
  return rotation;
}

std::vector<Point> canonical_wheel_layout(const Poset& wheel_poset, int n) {
  std::vector<Point> layout(wheel_poset.size());
  for (std::size_t e = 0; e < wheel_poset.size(); ++e) {
    const auto label = families::WheelLabel::parse(wheel_poset.name(static_cast<Element>(e)));
    if (!label) {
      throw Error(ErrorCode::PreconditionViolated, "'" + wheel_poset.name(static_cast<Element>(e)) +
                                                       "' is not a wheel label");
    }
    switch (label->kind) {
      case families::WheelLabel::Kind::Min: layout[e] = {0.0, 0.0}; break;
      case families::WheelLabel::Kind::Max: layout[e] = {0.0, static_cast<double>(n) + 1.0}; break;
      case families::WheelLabel::Kind::R: {
        const int length = families::CyclicInterval{label->i, label->j, n}.length();
        const double radius = n - length;
        const double middle = label->i + (length - 1) / 2.0;
        const double theta = std::numbers::pi / 2 - 2 * std::numbers::pi * (middle - 1) / n;
        layout[e] = {radius * std::cos(theta), radius * std::sin(theta)};
        break;
      }
    }
  }
  return layout;
}

PlaneEmbedding canonical_wheel_embedding(int n, bool attach_max) {
  const Poset p = families::wheel(n, attach_max);
  CoverGraph g(p);
  const auto layout = canonical_wheel_layout(p, n);
  const std::optional<Element> top = p.find("max");

  std::vector<std::vector<Element>> rotation(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto list = g.neighbors(static_cast<Element>(v));
    if (top && static_cast<Element>(v) == *top) {
      // max sits beyond the outer ring; seen from there the singletons run
      // counter-clockwise around the centre.
      auto angle = [&](Element u) { return std::atan2(layout[u].y, layout[u].x); };
      std::stable_sort(list.begin(), list.end(), [&](Element a, Element b) { return angle(a) < angle(b); });
      rotation[v] = std::move(list);
      continue;
    }
    auto position = [&](Element u) {
      if (top && u == *top) return Point{2 * layout[v].x, 2 * layout[v].y};
      return layout[u];
    };
    auto angle = [&](Element u) {
      const Point q = position(u);
      return std::atan2(q.y - layout[v].y, q.x - layout[v].x);
    };
    std::stable_sort(list.begin(), list.end(), [&](Element a, Element b) { return angle(a) > angle(b); });
    rotation[v] = std::move(list);
  }
  const Element bottom = p.index_of("min");
  const Element anchor = p.index_of(families::wheel_name(1, n - 1));
  return PlaneEmbedding(std::move(g), std::move(rotation)).with_e_infinity(bottom, anchor);
}

std::vector<Element> u_e_ordering(const PlaneEmbedding& emb, Element u, Element entering) {
  const auto& rot = emb.rotation(u);
  if (entering == kInfinity) {
    if (emb.e_infinity() != u) {
      throw Error(ErrorCode::EdgeDoesNotEnter, "e_inf is not attached to '" + emb.poset().name(u) + "'");
    }
  } else if (!emb.graph().leaves(entering, u)) {
    throw Error(ErrorCode::EdgeDoesNotEnter, "edge from '" + emb.poset().name(entering) + "' does not enter '" +
                                                 emb.poset().name(u) + "'");
  }
  const std::size_t start = slot_of(rot, entering);
  std::vector<Element> out;
  for (std::size_t step = 1; step < rot.size(); ++step) {
    const Element w = rot[(start + step) % rot.size()];
    if (w != kInfinity && emb.graph().leaves(u, w)) out.push_back(w);
  }
  return out;
}

namespace {

void require_simple_path(const PlaneEmbedding& emb, std::span<const Element> path, bool closed) {
  Bits seen(emb.graph().size());
  for (std::size_t k = 0; k < path.size(); ++k) {
    const Element v = path[k];
    if (v < 0 || static_cast<std::size_t>(v) >= emb.graph().size()) {
      throw Error(ErrorCode::UnknownElement, "index " + std::to_string(v));
    }
    if (seen.test(v)) throw Error(ErrorCode::PreconditionViolated, "path revisits '" + emb.poset().name(v) + "'");
    seen.set(v);
    const bool has_next = k + 1 < path.size() || closed;
    if (has_next) {
      const Element w = path[(k + 1) % path.size()];
      if (!emb.graph().adjacent(v, w)) {
        throw Error(ErrorCode::PreconditionViolated,
                    "'" + emb.poset().name(v) + "' and '" + emb.poset().name(w) + "' are not adjacent");
      }
    }
  }
}

}  // namespace

std::vector<Side> curve_sides(const PlaneEmbedding& emb, std::span<const CurveTurn> turns, const EdgeFilter& keep) {
  const std::size_t n = emb.graph().size();
  std::vector<Side> side(n, Side::On);
  std::vector<int> label(n, -1);  // 0 left, 1 right
  for (const CurveTurn& t : turns) label[t.vertex] = 2;
  std::vector<Element> queue;
  auto seed = [&](Element u, int which) {
    if (label[u] == 2) return;
    if (label[u] == -1) {
      label[u] = which;
      queue.push_back(u);
    } else if (label[u] != which) {
      throw Error(ErrorCode::InvalidEmbedding, "vertex '" + emb.poset().name(u) + "' lies on both sides");
    }
  };
  for (const CurveTurn& t : turns) {
    const auto& rot = emb.rotation(t.vertex);
    const std::size_t m = 2 * rot.size();
    int which = 0;
    for (std::size_t step = 1; step < m; ++step) {
      const std::size_t pos = (t.in + step) % m;
      if (pos == t.out) {
        which = 1;
        continue;
      }
      if (pos % 2 != 0 || rot[pos / 2] == kInfinity) continue;
      if (!keep || keep(t.vertex, rot[pos / 2])) seed(rot[pos / 2], which);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element v = queue[head];
    for (Element u : emb.graph().neighbors(v)) {
      if (!keep || keep(v, u)) seed(u, label[v]);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (label[v] == -1) {
      throw Error(ErrorCode::PreconditionViolated,
                  "'" + emb.poset().name(static_cast<Element>(v)) + "' is not connected to the curve");
    }
    side[v] = label[v] == 0 ? Side::Left : label[v] == 1 ? Side::Right : Side::On;
  }
  return side;
}

std::vector<Side> side_partition(const PlaneEmbedding& emb, std::span<const Element> path) {
  if (!emb.e_infinity()) throw Error(ErrorCode::MissingEInfinity, "side partition needs e_inf");
  const Element x0 = *emb.e_infinity();
  if (path.size() < 2 || path.front() != x0) {
    throw Error(ErrorCode::PathNotAnchored, "path must start at '" + emb.poset().name(x0) + "' and have an edge");
  }
  require_simple_path(emb, path, false);
  const Element end = path.back();
  const auto corners = emb.outer_corners(end);
  if (corners.empty()) {
    throw Error(ErrorCode::PathNotAnchored, "path end '" + emb.poset().name(end) + "' is not on the outer face");
  }
  // Exit corner: chosen by its pair of bounding neighbours, which does not
  // depend on orientation, so reflection swaps the two sides exactly.
  const auto& end_rot = emb.rotation(end);
  auto corner_key = [&](std::size_t k) {
    const Element a = end_rot[k];
    const Element b = end_rot[(k + 1) % end_rot.size()];
    return std::make_pair(std::min(a, b), std::max(a, b));
  };
  const std::size_t exit =
      *std::min_element(corners.begin(), corners.end(), [&](std::size_t a, std::size_t b) {
        return corner_key(a) < corner_key(b);
      });

  std::vector<CurveTurn> turns;
  for (std::size_t k = 0; k < path.size(); ++k) {
    const Element v = path[k];
    const auto& rot = emb.rotation(v);
    const Element prev = k == 0 ? kInfinity : path[k - 1];
    const std::size_t in = 2 * slot_of(rot, prev);
    const std::size_t out = k + 1 < path.size() ? 2 * slot_of(rot, path[k + 1]) : 2 * exit + 1;
    turns.push_back({v, in, out});
  }
  return curve_sides(emb, turns);
}

std::vector<Side> cycle_sides(const PlaneEmbedding& emb, std::span<const Element> cycle) {
  if (cycle.size() < 3) throw Error(ErrorCode::PreconditionViolated, "a cycle needs at least three vertices");
  require_simple_path(emb, cycle, true);
  std::vector<CurveTurn> turns;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const Element v = cycle[k];
    const auto& rot = emb.rotation(v);
    const Element prev = cycle[(k + cycle.size() - 1) % cycle.size()];
    const Element next = cycle[(k + 1) % cycle.size()];
    turns.push_back({v, 2 * slot_of(rot, prev), 2 * slot_of(rot, next)});
  }
  return curve_sides(emb, turns);
}

PlaneEmbedding restrict_embedding(const PlaneEmbedding& emb, std::span<const Element> subset, Element x0,
                                  Element entry, std::vector<int>* to_sub) {
  const Poset& host = emb.poset();
  std::vector<int> index(host.size(), -1);
  for (std::size_t k = 0; k < subset.size(); ++k) index[subset[k]] = static_cast<int>(k);
  if (index[x0] == -1) throw Error(ErrorCode::PreconditionViolated, "e_inf vertex outside the subset");
  if (entry != kInfinity && index[entry] != -1) {
    throw Error(ErrorCode::PreconditionViolated, "e_inf position '" + host.name(entry) + "' lies inside the subset");
  }

  Poset sub = host.induced(subset);
  CoverGraph sub_graph(sub);
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = 0; b < subset.size(); ++b) {
      const bool host_edge = emb.graph().adjacent(subset[a], subset[b]);
      if (host_edge != sub_graph.adjacent(static_cast<Element>(a), static_cast<Element>(b))) {
        throw Error(ErrorCode::PreconditionViolated, "cover graph of the subposet differs from the induced subgraph at '" +
                                                         host.name(subset[a]) + "'-'" + host.name(subset[b]) + "'");
      }
    }
  }

  std::vector<std::vector<Element>> rotation(subset.size());
  bool placed = false;
  for (std::size_t k = 0; k < subset.size(); ++k) {
    const Element v = subset[k];
    for (Element u : emb.rotation(v)) {
      if (v == x0 && u == entry) {
        rotation[k].push_back(kInfinity);
        placed = true;
      } else if (u != kInfinity && index[u] != -1) {
        rotation[k].push_back(index[u]);
      }
    }
  }
  if (!placed) {
    throw Error(ErrorCode::PreconditionViolated, "e_inf position not found at '" + host.name(x0) + "'");
  }
  if (to_sub) *to_sub = index;
  return PlaneEmbedding(std::move(sub_graph), std::move(rotation));
}

}  // namespace posetlab
