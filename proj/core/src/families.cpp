#include "posetlab/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <regex>
#include <set>

#include "posetlab/error.hpp"

namespace posetlab::families {

namespace {

void require_order(int value, int minimum, const char* family) {
  if (value < minimum) {
    throw Error(ErrorCode::OrderTooSmall, std::string(family) + " needs order >= " + std::to_string(minimum) +
                                              ", got " + std::to_string(value));
  }
}

std::string indexed(char prefix, int i) { return std::string(1, prefix) + std::to_string(i); }

}  // namespace

std::vector<int> cyclic_interval_members(int i, int j, int n) {
  if (n < 3 || i < 1 || j < 1 || i > n || j > n) {
    throw Error(ErrorCode::IndexOutOfRange, "<" + std::to_string(i) + "," + std::to_string(j) + "> in [" +
                                                std::to_string(n) + "]");
  }
  std::vector<int> out;
  if (i <= j) {
    for (int k = i; k <= j; ++k) out.push_back(k);
  } else {
    for (int k = i; k <= n; ++k) out.push_back(k);
    for (int k = 1; k <= j; ++k) out.push_back(k);
  }
  return out;
}

std::vector<int> CyclicInterval::members() const { return cyclic_interval_members(i, j, modulus); }

int CyclicInterval::length() const { return i <= j ? j - i + 1 : modulus - i + 1 + j; }

std::string wheel_name(int i, int j) { return "r(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::string WheelLabel::str() const {
  switch (kind) {
    case Kind::Min: return "min";
    case Kind::Max: return "max";
    case Kind::R: return wheel_name(i, j);
  }
  return {};
}

std::optional<WheelLabel> WheelLabel::parse(const std::string& text) {
  if (text == "min") return WheelLabel{Kind::Min};
  if (text == "max") return WheelLabel{Kind::Max};
  static const std::regex pattern(R"(r\((\d+),(\d+)\))");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) return std::nullopt;
  return WheelLabel{Kind::R, std::stoi(m[1]), std::stoi(m[2])};
}

Poset standard_example(int d) {
  require_order(d, 2, "standard example");
  std::vector<std::string> names;
  for (int i = 1; i <= d; ++i) names.push_back(indexed('a', i));
  for (int i = 1; i <= d; ++i) names.push_back(indexed('b', i));
  std::vector<ElementPair> relation;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i != j) relation.emplace_back(i, d + j);
    }
  }
  return Poset::from_relation(std::move(names), relation);
}

Poset wheel(int n, bool attach_max) {
  require_order(n, 3, "wheel");
  std::vector<std::string> names{"min"};
  std::vector<Bits> member_sets;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if ((j % n) + 1 == i) continue;  // j + 1 == i (mod N): the full set
      names.push_back(wheel_name(i, j));
      Bits s(static_cast<std::size_t>(n));
      for (int k : cyclic_interval_members(i, j, n)) s.set(static_cast<std::size_t>(k - 1));
      member_sets.push_back(std::move(s));
    }
  }
  const auto count = static_cast<Element>(member_sets.size());
  std::vector<ElementPair> relation;
  for (Element a = 0; a < count; ++a) {
    relation.emplace_back(0, a + 1);
    for (Element b = 0; b < count; ++b) {
      // r_a < r_b iff the interval of b is a proper subset of the interval of a.
      if (a != b && member_sets[b].is_proper_subset_of(member_sets[a])) relation.emplace_back(a + 1, b + 1);
    }
  }
  if (attach_max) {
    names.push_back("max");
    const Element top = count + 1;
    for (Element a = 0; a <= count; ++a) relation.emplace_back(a, top);
  }
  return Poset::from_relation(std::move(names), relation);
}

std::pair<std::vector<std::string>, std::vector<std::string>> wheel_standard_example(int n) {
  require_order(n, 3, "wheel");
  std::vector<std::string> as, bs;
  for (int i = 1; i <= n; ++i) {
    const int next = i % n + 1;
    const int prev = (i + n - 2) % n + 1;
    as.push_back(wheel_name(next, prev));
    bs.push_back(wheel_name(i, i));
  }
  return {as, bs};
}

Poset kelly(int d) {
  require_order(d, 3, "Kelly poset");
  std::vector<std::string> names;
  for (int i = 1; i <= d; ++i) names.push_back(indexed('a', i));
  for (int i = 1; i <= d; ++i) names.push_back(indexed('b', i));
  for (int k = 2; k <= d - 2; ++k) names.push_back(indexed('c', k));
  for (int k = 3; k <= d - 1; ++k) names.push_back(indexed('d', k));

  auto a = [&](int i) { return i - 1; };
  auto b = [&](int i) { return d + i - 1; };
  // The chain ends double as standard-example elements: c1 = a1, c(d-1) = bd,
  // d(d) = ad, d2 = b1.
  auto c = [&](int k) {
    if (k == 1) return a(1);
    if (k == d - 1) return b(d);
    return 2 * d + (k - 2);
  };
  auto dd = [&](int k) {
    if (k == d) return a(d);
    if (k == 2) return b(1);
    return 2 * d + (d - 3) + (k - 3);
  };

  std::vector<ElementPair> covers;
  for (int k = 1; k <= d - 2; ++k) covers.emplace_back(c(k), c(k + 1));
  for (int i = 2; i <= d - 1; ++i) covers.emplace_back(a(i), c(i));
  for (int j = 2; j <= d - 1; ++j) covers.emplace_back(c(j - 1), b(j));
  for (int k = d; k >= 3; --k) covers.emplace_back(dd(k), dd(k - 1));
  for (int i = 2; i <= d - 1; ++i) covers.emplace_back(a(i), dd(i));
  for (int j = 2; j <= d - 1; ++j) covers.emplace_back(dd(j + 1), b(j));
  return Poset::from_relation(std::move(names), covers);
}

Poset interval_order_from(const std::vector<std::pair<double, double>>& intervals,
                          const std::vector<std::string>& names) {
  std::vector<std::string> labels = names;
  if (labels.empty()) {
    for (std::size_t k = 0; k < intervals.size(); ++k) labels.push_back(indexed('i', static_cast<int>(k)));
  }
  std::vector<ElementPair> relation;
  for (std::size_t x = 0; x < intervals.size(); ++x) {
    for (std::size_t y = 0; y < intervals.size(); ++y) {
      if (intervals[x].second < intervals[y].first) {
        relation.emplace_back(static_cast<Element>(x), static_cast<Element>(y));
      }
    }
  }
  return Poset::from_relation(std::move(labels), relation);
}

Poset interval_order(std::uint64_t seed, int n) {
  n = std::max(n, 1);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> start(0.0, 1.0);
  std::exponential_distribution<double> length(4.0);
  std::vector<std::pair<double, double>> intervals;
  for (int k = 0; k < n; ++k) {
    const double l = start(rng);
    intervals.emplace_back(l, l + length(rng));
  }
  return interval_order_from(intervals);
}

Poset canonical_interval_order(int m) {
  std::vector<std::pair<double, double>> intervals;
  std::vector<std::string> names;
  for (int a = 1; a <= m; ++a) {
    for (int b = a + 1; b <= m; ++b) {
      intervals.emplace_back(a, b);
      names.push_back("[" + std::to_string(a) + "," + std::to_string(b) + "]");
    }
  }
  return interval_order_from(intervals, names);
}

Poset chain(int n) {
  std::vector<std::string> names;
  std::vector<ElementPair> relation;
  for (int k = 0; k < n; ++k) {
    names.push_back(indexed('c', k));
    if (k > 0) relation.emplace_back(k - 1, k);
  }
  return Poset::from_relation(std::move(names), relation);
}

Poset antichain(int n) {
  std::vector<std::string> names;
  for (int k = 0; k < n; ++k) names.push_back(indexed('x', k));
  return Poset::from_relation(std::move(names), {});
}

namespace {

// A plane graph kept as its list of faces (each a cyclic vertex sequence).
// Only the bounded faces are stored; the outer face is never subdivided, so
// the outer polygon stays on the exterior.
struct FaceGrower {
  std::vector<std::vector<int>> faces;
  std::set<std::pair<int, int>> edges;
  int vertices = 0;

  void add_edge(int u, int v) { edges.emplace(std::min(u, v), std::max(u, v)); }
  bool has_edge(int u, int v) const { return edges.count({std::min(u, v), std::max(u, v)}) > 0; }

  // Chord between positions p < q of face f.
  void split(std::size_t f, std::size_t p, std::size_t q) {
    const auto face = faces[f];
    std::vector<int> first(face.begin() + static_cast<long>(p), face.begin() + static_cast<long>(q) + 1);
    std::vector<int> second(face.begin() + static_cast<long>(q), face.end());
    second.insert(second.end(), face.begin(), face.begin() + static_cast<long>(p) + 1);
    add_edge(face[p], face[q]);
    faces[f] = std::move(first);
    faces.push_back(std::move(second));
  }

  // New vertex inside face f joined to the face vertices at `positions` (sorted).
  void star(std::size_t f, const std::vector<std::size_t>& positions) {
    const auto face = faces[f];
    const int v = vertices++;
    for (std::size_t p : positions) add_edge(v, face[p]);
    if (positions.size() == 1) {
      // A pendant vertex: the face keeps its shape but now visits v.
      std::vector<int> grown(face.begin(), face.begin() + static_cast<long>(positions[0]) + 1);
      grown.push_back(v);
      grown.insert(grown.end(), face.begin() + static_cast<long>(positions[0]), face.end());
      faces[f] = std::move(grown);
      return;
    }
    std::vector<std::vector<int>> pieces;
    for (std::size_t k = 0; k < positions.size(); ++k) {
      const std::size_t from = positions[k];
      const std::size_t to = positions[(k + 1) % positions.size()];
      std::vector<int> piece{v};
      for (std::size_t s = from;; s = (s + 1) % face.size()) {
        piece.push_back(face[s]);
        if (s == to) break;
      }
      pieces.push_back(std::move(piece));
    }
    faces[f] = std::move(pieces.front());
    for (std::size_t k = 1; k < pieces.size(); ++k) faces.push_back(std::move(pieces[k]));
  }
};

}  // namespace

Poset random_cover_planar_with_unique_min(std::uint64_t seed, int size_budget) {
  const int n = std::max(size_budget, 2);
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  FaceGrower g;
  if (n == 2) {
    g.vertices = 2;
    g.add_edge(0, 1);
  } else {
    // Outerplanar skeleton: a polygon with a few non-crossing chords.
    const int k = uniform(3, std::max(3, std::min(n, 3 + n / 3)));
    g.vertices = k;
    std::vector<int> polygon(static_cast<std::size_t>(k));
    std::iota(polygon.begin(), polygon.end(), 0);
    for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
    g.faces.push_back(polygon);
    for (int tries = uniform(0, k / 2); tries > 0; --tries) {
      const std::size_t f = static_cast<std::size_t>(uniform(0, static_cast<int>(g.faces.size()) - 1));
      const auto& face = g.faces[f];
      if (face.size() < 4) continue;
      std::size_t p = static_cast<std::size_t>(uniform(0, static_cast<int>(face.size()) - 1));
      std::size_t q = static_cast<std::size_t>(uniform(0, static_cast<int>(face.size()) - 1));
      if (p > q) std::swap(p, q);
      if (q - p < 2 || (p == 0 && q == face.size() - 1) || g.has_edge(face[p], face[q])) continue;
      g.split(f, p, q);
    }
    // Face subdivisions until the vertex budget is used.
    while (g.vertices < n) {
      const std::size_t f = static_cast<std::size_t>(uniform(0, static_cast<int>(g.faces.size()) - 1));
      const auto& face = g.faces[f];
      const int choice = uniform(0, 9);
      if (choice < 2 && face.size() >= 4) {
        std::size_t p = static_cast<std::size_t>(uniform(0, static_cast<int>(face.size()) - 1));
        std::size_t q = static_cast<std::size_t>(uniform(0, static_cast<int>(face.size()) - 1));
        if (p > q) std::swap(p, q);
        if (q - p >= 2 && !(p == 0 && q == face.size() - 1) && face[p] != face[q] &&
            !g.has_edge(face[p], face[q])) {
          g.split(f, p, q);
        }
        continue;
      }
      // Distinct face vertices only (a face may revisit a vertex after pendants).
      std::vector<std::size_t> candidates;
      std::set<int> used;
      for (std::size_t s = 0; s < face.size(); ++s) {
        if (used.insert(face[s]).second) candidates.push_back(s);
      }
      std::shuffle(candidates.begin(), candidates.end(), rng);
      const int degree = uniform(1, std::min<int>(3, static_cast<int>(candidates.size())));
      candidates.resize(static_cast<std::size_t>(degree));
      std::sort(candidates.begin(), candidates.end());
      g.star(f, candidates);
    }
  }

  // Orient along random ranks with vertex 0 lowest; every other vertex needs a
  // lower neighbour so that 0 is the only source. Creation order always
  // qualifies: polygon vertex v > 0 has neighbour v - 1 and every later
  // vertex attaches to older ones.
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
  for (const auto& [u, v] : g.edges) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  std::vector<double> rank(static_cast<std::size_t>(n));
  bool accepted = false;
  for (int attempt = 0; attempt < 50 && !accepted; ++attempt) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int v = 0; v < n; ++v) rank[v] = v == 0 ? -1.0 : unit(rng);
    accepted = true;
    for (int v = 1; v < n && accepted; ++v) {
      accepted = std::any_of(adjacency[v].begin(), adjacency[v].end(), [&](int u) { return rank[u] < rank[v]; });
    }
  }
  if (!accepted) {
    for (int v = 0; v < n; ++v) rank[v] = v;
  }

  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) names.push_back(indexed('v', v));
  std::vector<ElementPair> relation;
  for (const auto& [u, v] : g.edges) {
    if (rank[u] < rank[v]) relation.emplace_back(u, v);
    else relation.emplace_back(v, u);
  }
  return Poset::from_relation(std::move(names), relation);
}

}  // namespace posetlab::families
