#include "posetlab/drawing.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <set>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/chrobak_payne_drawing.hpp>
#include <boost/graph/make_biconnected_planar.hpp>
#include <boost/graph/make_connected.hpp>
#include <boost/graph/make_maximal_planar.hpp>
#include <boost/graph/planar_canonical_ordering.hpp>

#include "posetlab/error.hpp"
#include "posetlab/families.hpp"

namespace posetlab::drawing {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;
using EmbeddingStorage = std::vector<std::vector<BoostEdge>>;

void reindex_edges(BoostGraph& g) {
  int k = 0;
  auto index = boost::get(boost::edge_index, g);
  for (auto [it, end] = boost::edges(g); it != end; ++it) boost::put(index, *it, k++);
}

void embed(BoostGraph& g, EmbeddingStorage& storage) {
  reindex_edges(g);
  storage.assign(boost::num_vertices(g), {});
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = g,
                                           boost::boyer_myrvold_params::embedding = &storage[0])) {
    throw Error(ErrorCode::PreconditionViolated, "cover graph is not planar");
  }
}

std::vector<Point> grid_drawing(const CoverGraph& cg) {
  const std::size_t n = cg.size();
  if (n < 3) {
    std::vector<Point> out;
    for (std::size_t v = 0; v < n; ++v) out.push_back({static_cast<double>(v), 0.0});
    return out;
  }
  BoostGraph g(n);
  for (const auto& [lo, hi] : cg.edges()) boost::add_edge(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi), g);
  reindex_edges(g);
  boost::make_connected(g);
  EmbeddingStorage storage;
  embed(g, storage);
  boost::make_biconnected_planar(g, &storage[0]);
  embed(g, storage);
  boost::make_maximal_planar(g, &storage[0]);
  embed(g, storage);

  auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, g));
  std::vector<std::size_t> ordering;
  boost::planar_canonical_ordering(g, embedding, std::back_inserter(ordering));
  struct Coord {
    std::size_t x;
    std::size_t y;
  };
  std::vector<Coord> coords(n);
  auto drawing = boost::make_iterator_property_map(coords.begin(), boost::get(boost::vertex_index, g));
  boost::chrobak_payne_straight_line_drawing(g, embedding, ordering.begin(), ordering.end(), drawing);
  std::vector<Point> out;
  for (const auto& c : coords) out.push_back({static_cast<double>(c.x), static_cast<double>(c.y)});
  return out;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::set<std::pair<Element, Element>> path_edges(std::span<const Element> path) {
  std::set<std::pair<Element, Element>> out;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    out.emplace(std::min(path[k], path[k + 1]), std::max(path[k], path[k + 1]));
  }
  return out;
}

}  // namespace

std::vector<Point> planar_layout(const PlaneEmbedding& emb) {
  const Poset& p = emb.poset();
  const auto n = static_cast<int>(p.size());
  for (int order = 3; order * order - order + 1 <= n; ++order) {
    if (order * order - order + 1 == n && p == families::wheel(order)) return canonical_wheel_layout(p, order);
  }
  return grid_drawing(emb.graph());
}

std::string to_svg(const PlaneEmbedding& emb, std::span<const Point> layout, std::span<const Element> highlight) {
  const Poset& p = emb.poset();
  if (layout.size() != p.size()) throw Error(ErrorCode::PreconditionViolated, "layout size does not match the poset");
  constexpr double scale = 60.0;
  constexpr double margin = 50.0;
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (std::size_t v = 0; v < layout.size(); ++v) {
    if (v == 0 || layout[v].x < min_x) min_x = layout[v].x;
    if (v == 0 || layout[v].x > max_x) max_x = layout[v].x;
    if (v == 0 || layout[v].y < min_y) min_y = layout[v].y;
    if (v == 0 || layout[v].y > max_y) max_y = layout[v].y;
  }
  auto sx = [&](double x) { return margin + (x - min_x) * scale; };
  auto sy = [&](double y) { return margin + (max_y - y) * scale; };
  const double width = 2 * margin + (max_x - min_x) * scale;
  const double height = 2 * margin + (max_y - min_y) * scale;

  const auto marked = path_edges(highlight);
  std::ostringstream out;
  out << std::fixed << std::setprecision(1);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  for (const auto& [lo, hi] : emb.graph().edges()) {
    const bool on = marked.count({std::min(lo, hi), std::max(lo, hi)}) > 0;
    out << "<line x1=\"" << sx(layout[lo].x) << "\" y1=\"" << sy(layout[lo].y) << "\" x2=\"" << sx(layout[hi].x)
        << "\" y2=\"" << sy(layout[hi].y) << "\" stroke=\"" << (on ? "red" : "black") << "\" stroke-width=\""
        << (on ? 3 : 1) << "\"/>\n";
  }
  if (auto x0 = emb.e_infinity()) {
    // Stub pointing away from the centroid of the drawing.
    double cx = 0, cy = 0;
    for (const auto& q : layout) {
      cx += q.x;
      cy += q.y;
    }
    cx /= static_cast<double>(layout.size());
    cy /= static_cast<double>(layout.size());
    double dx = layout[*x0].x - cx;
    double dy = layout[*x0].y - cy;
    const double len = std::hypot(dx, dy);
    if (len < 1e-9) {
      dx = 0;
      dy = -1;
    } else {
      dx /= len;
      dy /= len;
    }
    out << "<line x1=\"" << sx(layout[*x0].x) << "\" y1=\"" << sy(layout[*x0].y) << "\" x2=\""
        << sx(layout[*x0].x + 0.6 * dx) << "\" y2=\"" << sy(layout[*x0].y + 0.6 * dy)
        << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (std::size_t v = 0; v < p.size(); ++v) {
    out << "<circle cx=\"" << sx(layout[v].x) << "\" cy=\"" << sy(layout[v].y) << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
    out << "<text x=\"" << sx(layout[v].x) + 6 << "\" y=\"" << sy(layout[v].y) - 6 << "\" font-size=\"11\">"
        << escape(p.name(static_cast<Element>(v))) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::vector<int> height_levels(const Poset& p) {
  const auto order = default_extension(p);
  std::vector<int> level(p.size(), 0);
  for (Element v : order) {
    const Bits& down = p.below(v);
    for (auto u = down.find_first(); u != Bits::npos; u = down.find_next(u)) level[v] = std::max(level[v], level[u] + 1);
  }
  return level;
}

std::string to_dot(const Poset& p, std::span<const Element> highlight) {
  const auto level = height_levels(p);
  const auto marked = path_edges(highlight);
  std::ostringstream out;
  out << "digraph cover {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n";
  for (std::size_t v = 0; v < p.size(); ++v) out << "  n" << v << " [label=\"" << p.name(static_cast<Element>(v)) << "\"];\n";
  const int top = level.empty() ? -1 : *std::max_element(level.begin(), level.end());
  for (int l = 0; l <= top; ++l) {
    out << "  { rank=same;";
    for (std::size_t v = 0; v < p.size(); ++v) {
      if (level[v] == l) out << " n" << v << ";";
    }
    out << " }\n";
  }
  for (const auto& [lo, hi] : p.cover_pairs()) {
    out << "  n" << lo << " -> n" << hi;
    if (marked.count({std::min(lo, hi), std::max(lo, hi)})) out << " [color=red, penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace posetlab::drawing
