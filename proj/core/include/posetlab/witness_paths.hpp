#pragma once

#include <array>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posetlab/embedding.hpp"

namespace posetlab {

using Path = std::vector<Element>;

enum class Direction { Left, Right };

/// True iff consecutive vertices are cover-adjacent and strictly increasing.
bool is_witnessing_path(const Poset& p, std::span<const Element> path);

/// Greedy extremal witnessing path from `source` to `target`: at every step
/// take the first (Left) or last (Right) leaving edge in the (u, e)-ordering
/// whose head is still below `target`. `entering` is the edge the walk
/// arrives on at `source` (a lower neighbour, or kInfinity at the e_inf vertex).
/// Throws PreconditionViolated unless source <= target.
Path extremal_path(const PlaneEmbedding& emb, Element source, Element entering, Element target, Direction dir);

/// W_L(u) and W_R(u), started at the e_inf vertex. Throws MissingEInfinity.
Path leftmost_witnessing_path(const PlaneEmbedding& emb, Element u);
Path rightmost_witnessing_path(const PlaneEmbedding& emb, Element u);
Path witnessing_path(const PlaneEmbedding& emb, Element u, Direction dir);

/// Memoised W_L / W_R for one embedding. Safe for concurrent use.
class WitnessPathCache {
 public:
  explicit WitnessPathCache(const PlaneEmbedding& emb);
  const Path& get(Element u, Direction dir);
  const PlaneEmbedding& embedding() const noexcept { return emb_; }

 private:
  const PlaneEmbedding& emb_;
  std::mutex mutex_;
  std::array<std::vector<std::optional<Path>>, 2> paths_;
};

enum class PathOrder { LeftOf, RightOf, PrefixRelated };

/// Compares two paths that both start at the e_inf vertex at their first
/// differing edge. Throws NotAnchored.
PathOrder compare_paths(const PlaneEmbedding& emb, std::span<const Element> w, std::span<const Element> w2);

enum class PairKind { Comparable, LeftPair, RightPair, Mixed };

PairKind classify_pair(const PlaneEmbedding& emb, Element a, Element b);
PairKind classify_pair(WitnessPathCache& cache, Element a, Element b);

std::string_view to_string(PathOrder o);
std::string_view to_string(PairKind k);
std::string_view to_string(Side s);
std::string_view to_string(Direction d);

/// The (x, y, W, W')-interval: everything inside or on the closed curve
/// W + W' on the side away from e_inf.
struct Interval {
  Element x = 0;
  Element y = 0;
  /// W followed by the inner vertices of W' reversed.
  Path boundary;
  /// Side of the boundary traversal that holds e_inf.
  Side outside = Side::Left;
  /// Ascending.
  std::vector<Element> vertices;
  /// Edges joining two boundary vertices but drawn outside the interval.
  std::vector<ElementPair> outside_chords;

  bool contains(Element v) const;
  bool contains_edge(Element u, Element v) const;
};

/// Throws PathsIntersect when W and W' share an inner vertex and
/// PreconditionViolated unless both are distinct witnessing paths x -> y.
Interval interval_region(const PlaneEmbedding& emb, Element x, Element y, std::span<const Element> w,
                         std::span<const Element> w2);

struct ShadowingResult {
  bool holds = true;
  Element z = -1;
  Direction dir = Direction::Left;
};

/// Checks that W_D(z) passes through x and x[W_D(z)]z stays in the region,
/// for every z in the region and D in {L, R}. The vertex-set form checks
/// vertices only; the interval form also rejects edges drawn outside.
ShadowingResult shadowing_check(WitnessPathCache& cache, std::span<const Element> region, Element x);
ShadowingResult shadowing_check(const PlaneEmbedding& emb, std::span<const Element> region, Element x);
ShadowingResult shadowing_check(WitnessPathCache& cache, const Interval& interval);
ShadowingResult shadowing_check(const PlaneEmbedding& emb, const Interval& interval);

/// The subposet Q induced by an interval, with the inherited embedding.
/// e_inf moves to x, into the corner where the last edge of W_L(x) arrives.
/// All fields except `host` use Q indices.
struct IntervalView {
  Interval host;
  std::vector<int> to_sub;  // host -> Q index, -1 outside
  Element x = 0;
  Element y = 0;
  Path boundary;
  std::vector<ElementPair> outside_chords;
  PlaneEmbedding embedding;

  const Poset& poset() const noexcept { return embedding.poset(); }
  Element host_element(Element q) const { return host.vertices[q]; }
};

IntervalView interval_view(const PlaneEmbedding& emb, const Interval& interval);

/// Sides of a path from x to y that stays inside the interval, closing it
/// through the outside of the interval. Throws PreconditionViolated when the
/// path uses an edge drawn outside.
std::vector<Side> interval_sides(const IntervalView& view, std::span<const Element> path);

struct HatPartition {
  std::vector<Element> a_hat;  // incomparable to y
  std::vector<Element> b_hat;  // above y
  std::vector<Element> e_hat;  // at most y
};

/// Splits Q around y. Ê is taken as the downset of y, which equals
/// {z : x <= z <= y} whenever x is the unique minimum of Q.
HatPartition hat_partition(const Poset& q, Element y);

struct SeparatingPath {
  Direction dir = Direction::Left;
  Element a = 0;
  Element b = 0;
  Element peak = 0;
  /// x..a along W_R(a) (W_L(a) for Right), a..peak, and y..peak along
  /// W_L(b) (W_R(b) for Right), each listed upward.
  std::array<Path, 3> segments;
  /// x..a..peak..y as one path.
  Path vertices() const;
};

/// N_L(a, b) or N_R(a, b) inside an interval view (Q indices). The middle
/// segment is the leftmost witnessing path from a to the peak, entered along
/// the last edge of the first segment.
/// Throws PreconditionViolated unless a || y < b, a < b and y lies on the
/// extremal path to b; NoPeak if nothing on that path is above a.
SeparatingPath separating_path(const IntervalView& view, Element a, Element b, Direction dir);

struct Obs21Result {
  bool holds = false;
  PairKind kind = PairKind::Mixed;
  Side side_in_left = Side::On;   // side of a' relative to N_L(a, b)
  Side side_in_right = Side::On;  // relative to N_R(a, b)
};

/// a' must be Right of both separating paths for a left pair (a, a'), Left for
/// a right pair. Pairs are classified inside Q. Throws PreconditionViolated on
/// comparable or mixed pairs and wrong membership.
Obs21Result obs21_check(const IntervalView& view, Element a, Element a2, Element b);

struct IntervalCertificate {
  Element x = 0;
  Element y = 0;
  Path w;
  Path w2;
  std::vector<Element> a;
  std::vector<Element> b;
};

struct CertificateItem {
  bool pass = false;
  std::string detail;  // first counterexample when failing
};

struct CertificateReport {
  std::array<CertificateItem, 4> items;
  bool pass() const noexcept;
};

/// Checks the four properties: shadowing, standard example of order k inside
/// the interval, a || y < b, and left pairs in index order.
/// Throws MalformedCertificate on structural problems.
CertificateReport verify_lemma_certificate(const PlaneEmbedding& emb, const IntervalCertificate& cert);

}  // namespace posetlab
