#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posetlab/poset.hpp"

namespace posetlab {

/// Stands for the one-end edge e_inf inside a rotation list.
inline constexpr Element kInfinity = -1;

/// Cover graph of a poset. Edge {x, y} is oriented x -> y when y covers x:
/// it leaves x and enters y.
class CoverGraph {
 public:
  CoverGraph() = default;
  explicit CoverGraph(Poset p);

  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  const std::vector<Element>& neighbors(Element v) const { return adjacency_[v]; }
  bool adjacent(Element u, Element v) const { return adjacency_bits_[u].test(static_cast<std::size_t>(v)); }
  /// True iff the edge u -> v leaves u (v covers u).
  bool leaves(Element u, Element v) const { return adjacent(u, v) && poset_.less(u, v); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  /// Edges as (lower, upper).
  std::vector<ElementPair> edges() const;

 private:
  Poset poset_;
  std::vector<std::vector<Element>> adjacency_;
  std::vector<Bits> adjacency_bits_;
  std::size_t edge_count_ = 0;
};

CoverGraph cover_graph(const Poset& p);

/// A directed traversal of an edge.
struct Dart {
  Element from;
  Element to;
  friend bool operator==(const Dart&, const Dart&) = default;
};

/// A face of an embedding: its boundary walk, face on the left of each dart.
/// An isolated vertex forms a face with no darts.
struct Face {
  std::vector<Dart> darts;
  std::vector<Element> vertices;
};

enum class Side { Left, Right, On };

/// Cover graph plus a rotation system (clockwise neighbour order at every
/// vertex). At most one vertex carries e_inf, written kInfinity in its
/// rotation; the face holding that corner is the outer face.
class PlaneEmbedding {
 public:
  /// Throws InvalidEmbedding when a rotation is not a permutation of the
  /// neighbours or Euler's formula fails on some component.
  PlaneEmbedding(CoverGraph graph, std::vector<std::vector<Element>> rotation);

  const CoverGraph& graph() const noexcept { return graph_; }
  const Poset& poset() const noexcept { return graph_.poset(); }
  const std::vector<Element>& rotation(Element v) const { return rotation_[v]; }
  const std::vector<std::vector<Element>>& rotation() const noexcept { return rotation_; }

  std::optional<Element> e_infinity() const noexcept { return e_infinity_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  /// Index into faces(); requires e_inf.
  std::size_t outer_face_index() const;
  const Face& outer_face() const { return faces_[outer_face_index()]; }
  bool on_outer_face(Element v) const;

  /// Face index holding the corner that follows rotation entry `slot` at v.
  std::size_t corner_face(Element v, std::size_t slot) const;
  /// Slots at v whose following corner lies on the outer face.
  std::vector<std::size_t> outer_corners(Element v) const;

  /// Places e_inf at x0 in the corner right after neighbour `after`
  /// (clockwise). Any previous e_inf is removed.
  PlaneEmbedding with_e_infinity(Element x0, Element after) const;
  /// Same embedding with every rotation reversed.
  PlaneEmbedding reflected() const;

  /// Euler characteristic check V - E + F = 2 per connected component.
  bool euler_holds() const noexcept { return euler_ok_; }
  std::size_t component_count() const noexcept { return components_; }

 private:
  void trace_faces();

  CoverGraph graph_;
  std::vector<std::vector<Element>> rotation_;
  std::optional<Element> e_infinity_;
  std::vector<Face> faces_;
  // face_of_dart_[v][k]: face on the left of dart (rotation_[v][k] -> v).
  std::vector<std::vector<std::size_t>> face_of_dart_;
  std::size_t components_ = 0;
  bool euler_ok_ = false;
};

/// Either an embedding or the edges of a Kuratowski subdivision.
struct PlanarityResult {
  std::optional<PlaneEmbedding> embedding;
  std::vector<ElementPair> kuratowski_edges;
  /// "K5" or "K3,3" when non-planar.
  std::string kuratowski_kind;
  bool planar() const noexcept { return embedding.has_value(); }
};

PlanarityResult is_planar(const CoverGraph& g);

/// is_planar plus e_inf at the unique minimal element, which therefore lies
/// on the outer face. Throws PreconditionViolated when not cover-planar and
/// EmbeddingConstraintUnsatisfied without a unique minimal element.
PlaneEmbedding anchored_embedding(const Poset& p);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Rotation system read off a straight-line drawing (y axis pointing up).
std::vector<std::vector<Element>> rotation_from_layout(const CoverGraph& g, std::span<const Point> layout);

/// Radial drawing of wheel(N): min at the centre, rings of decreasing
/// interval length outward, max (if present) outside all rings.
std::vector<Point> canonical_wheel_layout(const Poset& wheel_poset, int n);

/// Embedding of the wheel's cover graph from the radial drawing, with e_inf
/// at min in the corner right after the neighbour r(1,N-1). Throws OrderTooSmall.
PlaneEmbedding canonical_wheel_embedding(int n, bool attach_max = false);

/// Leaving edges of u (given by their upper endpoints) in clockwise order
/// starting after the entering edge `entering` (a lower neighbour of u, or
/// kInfinity at the e_inf vertex). Throws EdgeDoesNotEnter.
std::vector<Element> u_e_ordering(const PlaneEmbedding& emb, Element u, Element entering);

/// Left/Right/On for every vertex relative to `path`, which starts at the
/// e_inf vertex and ends on the outer face; the path is closed through the
/// outer face. Throws PathNotAnchored, MissingEInfinity, PreconditionViolated.
std::vector<Side> side_partition(const PlaneEmbedding& emb, std::span<const Element> path);

/// Sides of a closed simple cycle (given without repeating its first vertex).
std::vector<Side> cycle_sides(const PlaneEmbedding& emb, std::span<const Element> cycle);

/// One pass of a closed curve through a vertex. Positions are doubled:
/// 2k is rotation entry k, 2k + 1 the corner after entry k.
struct CurveTurn {
  Element vertex;
  std::size_t in;
  std::size_t out;
};

using EdgeFilter = std::function<bool(Element, Element)>;

/// Sides of an arbitrary closed curve through the turn vertices: entries met
/// clockwise from `in` to `out` are Left, the rest Right, then the labels are
/// flood-filled along edges accepted by `keep` (all edges when empty).
/// Throws InvalidEmbedding when a vertex is reached from both sides and
/// PreconditionViolated when some vertex is not reached.
std::vector<Side> curve_sides(const PlaneEmbedding& emb, std::span<const CurveTurn> turns, const EdgeFilter& keep = {});

/// Restriction of the embedding to an induced subposet whose cover graph
/// is the induced subgraph, with e_inf at `x0` placed where `entry` sits in
/// the host rotation (a host neighbour of x0 outside the subset, or kInfinity).
/// `to_sub` receives host -> sub indices (-1 outside).
PlaneEmbedding restrict_embedding(const PlaneEmbedding& emb, std::span<const Element> subset, Element x0,
                                  Element entry, std::vector<int>* to_sub = nullptr);

}  // namespace posetlab
