#include "posetlab/witness_paths.hpp"

#include <algorithm>

#include "posetlab/error.hpp"

namespace posetlab {

namespace {

std::size_t slot_of(const std::vector<Element>& rotation, Element u) {
  auto it = std::find(rotation.begin(), rotation.end(), u);
  return it == rotation.end() ? rotation.size() : static_cast<std::size_t>(it - rotation.begin());
}

Element anchor_of(const PlaneEmbedding& emb) {
  if (!emb.e_infinity()) throw Error(ErrorCode::MissingEInfinity, "embedding has no e_inf");
  return *emb.e_infinity();
}

void require_index(const Poset& p, Element e) {
  if (e < 0 || static_cast<std::size_t>(e) >= p.size()) {
    throw Error(ErrorCode::UnknownElement, "index " + std::to_string(e));
  }
}

Direction opposite(Direction d) { return d == Direction::Left ? Direction::Right : Direction::Left; }

}  // namespace

bool is_witnessing_path(const Poset& p, std::span<const Element> path) {
  if (path.empty()) return false;
  for (Element e : path) {
    if (e < 0 || static_cast<std::size_t>(e) >= p.size()) return false;
  }
  for (std::size_t k = 1; k < path.size(); ++k) {
    if (!p.covers(path[k - 1], path[k])) return false;
  }
  return true;
}

Path extremal_path(const PlaneEmbedding& emb, Element source, Element entering, Element target, Direction dir) {
  const Poset& p = emb.poset();
  require_index(p, source);
  require_index(p, target);
  if (!p.leq(source, target)) {
    throw Error(ErrorCode::PreconditionViolated,
                "'" + p.name(source) + "' is not below '" + p.name(target) + "'");
  }
  Path path{source};
  Element u = source;
  Element e = entering;
  while (u != target) {
    const auto order = u_e_ordering(emb, u, e);
    std::optional<Element> pick;
    for (Element v : order) {
      if (p.leq(v, target)) {
        pick = v;
        if (dir == Direction::Left) break;
      }
    }
    if (!pick) {
      throw Error(ErrorCode::InvalidEmbedding, "no leaving edge of '" + p.name(u) + "' leads to '" + p.name(target) + "'");
    }
    e = u;
    u = *pick;
    path.push_back(u);
  }
  return path;
}

Path witnessing_path(const PlaneEmbedding& emb, Element u, Direction dir) {
  return extremal_path(emb, anchor_of(emb), kInfinity, u, dir);
}

Path leftmost_witnessing_path(const PlaneEmbedding& emb, Element u) { return witnessing_path(emb, u, Direction::Left); }

Path rightmost_witnessing_path(const PlaneEmbedding& emb, Element u) {
  return witnessing_path(emb, u, Direction::Right);
}

WitnessPathCache::WitnessPathCache(const PlaneEmbedding& emb) : emb_(emb) {
  anchor_of(emb);
  for (auto& v : paths_) v.assign(emb.poset().size(), std::nullopt);
}

const Path& WitnessPathCache::get(Element u, Direction dir) {
  require_index(emb_.poset(), u);
  std::lock_guard lock(mutex_);
  auto& slot = paths_[dir == Direction::Left ? 0 : 1][u];
  if (!slot) slot = witnessing_path(emb_, u, dir);
  return *slot;
}

PathOrder compare_paths(const PlaneEmbedding& emb, std::span<const Element> w, std::span<const Element> w2) {
  const Element x0 = anchor_of(emb);
  if (w.empty() || w2.empty() || w.front() != x0 || w2.front() != x0) {
    throw Error(ErrorCode::NotAnchored, "both paths must start at '" + emb.poset().name(x0) + "'");
  }
  std::size_t i = 1;
  while (i < w.size() && i < w2.size() && w[i] == w2[i]) ++i;
  if (i == w.size() || i == w2.size()) return PathOrder::PrefixRelated;

  const Element u = w[i - 1];
  const Element entering = i >= 2 ? w[i - 2] : kInfinity;
  const auto& rot = emb.rotation(u);
  const std::size_t start = slot_of(rot, entering);
  const std::size_t s1 = slot_of(rot, w[i]);
  const std::size_t s2 = slot_of(rot, w2[i]);
  if (start == rot.size() || s1 == rot.size() || s2 == rot.size()) {
    throw Error(ErrorCode::PreconditionViolated, "paths are not walks in the cover graph at '" + emb.poset().name(u) + "'");
  }
  auto offset = [&](std::size_t s) { return (s + rot.size() - start) % rot.size(); };
  return offset(s1) < offset(s2) ? PathOrder::LeftOf : PathOrder::RightOf;
}

PairKind classify_pair(WitnessPathCache& cache, Element a, Element b) {
  const PlaneEmbedding& emb = cache.embedding();
  if (emb.poset().comparable(a, b)) return PairKind::Comparable;
  const PathOrder left = compare_paths(emb, cache.get(a, Direction::Left), cache.get(b, Direction::Left));
  const PathOrder right = compare_paths(emb, cache.get(a, Direction::Right), cache.get(b, Direction::Right));
  if (left == PathOrder::LeftOf && right == PathOrder::LeftOf) return PairKind::LeftPair;
  if (left == PathOrder::RightOf && right == PathOrder::RightOf) return PairKind::RightPair;
  return PairKind::Mixed;
}

PairKind classify_pair(const PlaneEmbedding& emb, Element a, Element b) {
  WitnessPathCache cache(emb);
  return classify_pair(cache, a, b);
}

std::string_view to_string(PathOrder o) {
  switch (o) {
    case PathOrder::LeftOf: return "left-of";
    case PathOrder::RightOf: return "right-of";
    case PathOrder::PrefixRelated: return "prefix-related";
  }
  return "?";
}

std::string_view to_string(PairKind k) {
  switch (k) {
    case PairKind::Comparable: return "comparable";
    case PairKind::LeftPair: return "left-pair";
    case PairKind::RightPair: return "right-pair";
    case PairKind::Mixed: return "mixed";
  }
  return "?";
}

std::string_view to_string(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::On: return "on";
  }
  return "?";
}

std::string_view to_string(Direction d) { return d == Direction::Left ? "left" : "right"; }

namespace {

// True iff entry w at u sits strictly clockwise between prev and next.
bool in_left_fan(const std::vector<Element>& rot, Element prev, Element next, Element w) {
  const std::size_t m = rot.size();
  const std::size_t in = slot_of(rot, prev);
  const std::size_t out = slot_of(rot, next);
  const std::size_t at = slot_of(rot, w);
  const std::size_t d = (at + m - in) % m;
  return d != 0 && d < (out + m - in) % m;
}

}  // namespace

bool Interval::contains(Element v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

bool Interval::contains_edge(Element u, Element v) const {
  if (!contains(u) || !contains(v)) return false;
  const ElementPair key{std::min(u, v), std::max(u, v)};
  return std::find(outside_chords.begin(), outside_chords.end(), key) == outside_chords.end();
}

Interval interval_region(const PlaneEmbedding& emb, Element x, Element y, std::span<const Element> w,
                         std::span<const Element> w2) {
  const Poset& p = emb.poset();
  const Element x0 = anchor_of(emb);
  require_index(p, x);
  require_index(p, y);
  for (auto path : {w, w2}) {
    if (!is_witnessing_path(p, path) || path.front() != x || path.back() != y) {
      throw Error(ErrorCode::PreconditionViolated,
                  "interval boundary is not a witnessing path from '" + p.name(x) + "' to '" + p.name(y) + "'");
    }
  }
  if (std::equal(w.begin(), w.end(), w2.begin(), w2.end())) {
    throw Error(ErrorCode::PreconditionViolated, "interval boundary paths coincide");
  }
  Bits inner(p.size());
  for (std::size_t k = 1; k + 1 < w.size(); ++k) inner.set(w[k]);
  for (std::size_t k = 1; k + 1 < w2.size(); ++k) {
    if (inner.test(w2[k])) {
      throw Error(ErrorCode::PathsIntersect, "boundary paths meet at '" + p.name(w2[k]) + "'");
    }
  }

  Interval iv;
  iv.x = x;
  iv.y = y;
  iv.boundary.assign(w.begin(), w.end());
  for (std::size_t k = w2.size() - 2; k >= 1; --k) iv.boundary.push_back(w2[k]);
  const Path& cycle = iv.boundary;
  const std::size_t len = cycle.size();
  const auto sides = cycle_sides(emb, cycle);

  std::vector<int> position(p.size(), -1);
  for (std::size_t k = 0; k < len; ++k) position[cycle[k]] = static_cast<int>(k);
  auto prev_of = [&](std::size_t k) { return cycle[(k + len - 1) % len]; };
  auto next_of = [&](std::size_t k) { return cycle[(k + 1) % len]; };

  iv.outside = sides[x0];
  if (iv.outside == Side::On) {
    const auto k = static_cast<std::size_t>(position[x0]);
    iv.outside = in_left_fan(emb.rotation(x0), prev_of(k), next_of(k), kInfinity) ? Side::Left : Side::Right;
  }
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (sides[v] == Side::On || sides[v] != iv.outside) iv.vertices.push_back(static_cast<Element>(v));
  }
  for (std::size_t k = 0; k < len; ++k) {
    const Element u = cycle[k];
    for (Element v : emb.graph().neighbors(u)) {
      if (v < u || position[v] == -1 || v == prev_of(k) || v == next_of(k)) continue;
      const Side side = in_left_fan(emb.rotation(u), prev_of(k), next_of(k), v) ? Side::Left : Side::Right;
      if (side == iv.outside) iv.outside_chords.emplace_back(u, v);
    }
  }
  std::sort(iv.outside_chords.begin(), iv.outside_chords.end());
  return iv;
}

ShadowingResult shadowing_check(WitnessPathCache& cache, std::span<const Element> region, Element x) {
  const std::size_t n = cache.embedding().poset().size();
  Bits inside(n);
  for (Element z : region) inside.set(z);
  for (Element z : region) {
    for (Direction d : {Direction::Left, Direction::Right}) {
      const Path& path = cache.get(z, d);
      auto it = std::find(path.begin(), path.end(), x);
      const bool ok = it != path.end() && std::all_of(it, path.end(), [&](Element v) { return inside.test(v); });
      if (!ok) return {false, z, d};
    }
  }
  return {};
}

ShadowingResult shadowing_check(const PlaneEmbedding& emb, std::span<const Element> region, Element x) {
  WitnessPathCache cache(emb);
  return shadowing_check(cache, region, x);
}

ShadowingResult shadowing_check(WitnessPathCache& cache, const Interval& interval) {
  for (Element z : interval.vertices) {
    for (Direction d : {Direction::Left, Direction::Right}) {
      const Path& path = cache.get(z, d);
      auto it = std::find(path.begin(), path.end(), interval.x);
      bool ok = it != path.end() && interval.contains(*it);
      for (; ok && it + 1 != path.end(); ++it) ok = interval.contains_edge(*it, *(it + 1));
      if (!ok) return {false, z, d};
    }
  }
  return {};
}

ShadowingResult shadowing_check(const PlaneEmbedding& emb, const Interval& interval) {
  WitnessPathCache cache(emb);
  return shadowing_check(cache, interval);
}

IntervalView interval_view(const PlaneEmbedding& emb, const Interval& interval) {
  const Element x0 = anchor_of(emb);
  Element entry = kInfinity;
  if (interval.x != x0) {
    const Path to_x = leftmost_witnessing_path(emb, interval.x);
    entry = to_x[to_x.size() - 2];
  }
  std::vector<int> to_sub;
  PlaneEmbedding sub = restrict_embedding(emb, interval.vertices, interval.x, entry, &to_sub);
  IntervalView view{interval, std::move(to_sub), 0, 0, {}, {}, std::move(sub)};
  view.x = view.to_sub[interval.x];
  view.y = view.to_sub[interval.y];
  for (Element v : interval.boundary) view.boundary.push_back(view.to_sub[v]);
  for (const auto& [u, v] : interval.outside_chords) {
    const Element a = view.to_sub[u];
    const Element b = view.to_sub[v];
    view.outside_chords.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(view.outside_chords.begin(), view.outside_chords.end());
  return view;
}

std::vector<Side> interval_sides(const IntervalView& view, std::span<const Element> path) {
  const PlaneEmbedding& emb = view.embedding;
  const Poset& q = view.poset();
  auto outside = [&](Element u, Element v) {
    return std::binary_search(view.outside_chords.begin(), view.outside_chords.end(),
                              ElementPair{std::min(u, v), std::max(u, v)});
  };
  if (path.size() < 2 || path.front() != view.x || path.back() != view.y) {
    throw Error(ErrorCode::PreconditionViolated, "path must run from x to y inside the interval");
  }
  Bits seen(q.size());
  for (std::size_t k = 0; k < path.size(); ++k) {
    require_index(q, path[k]);
    if (seen.test(path[k])) throw Error(ErrorCode::PreconditionViolated, "path revisits '" + q.name(path[k]) + "'");
    seen.set(path[k]);
    if (k + 1 < path.size()) {
      if (!emb.graph().adjacent(path[k], path[k + 1])) {
        throw Error(ErrorCode::PreconditionViolated,
                    "'" + q.name(path[k]) + "' and '" + q.name(path[k + 1]) + "' are not adjacent");
      }
      if (outside(path[k], path[k + 1])) {
        throw Error(ErrorCode::PreconditionViolated, "path leaves the interval along '" + q.name(path[k]) + "'-'" +
                                                         q.name(path[k + 1]) + "'");
      }
    }
  }

  const std::size_t len = view.boundary.size();
  const auto y_at = static_cast<std::size_t>(std::find(view.boundary.begin(), view.boundary.end(), view.y) -
                                             view.boundary.begin());
  const Element y_prev = view.boundary[(y_at + len - 1) % len];
  const Element y_next = view.boundary[(y_at + 1) % len];

  std::vector<CurveTurn> turns;
  for (std::size_t k = 0; k < path.size(); ++k) {
    const Element v = path[k];
    const auto& rot = emb.rotation(v);
    const std::size_t in = 2 * slot_of(rot, k == 0 ? kInfinity : path[k - 1]);
    std::size_t out = 0;
    if (k + 1 < path.size()) {
      out = 2 * slot_of(rot, path[k + 1]);
    } else {
      // Leave y through a corner on the outside of the boundary.
      out = 2 * slot_of(rot, view.host.outside == Side::Left ? y_prev : y_next) + 1;
    }
    turns.push_back({v, in, out});
  }
  return curve_sides(emb, turns, [&](Element u, Element v) { return !outside(u, v); });
}

HatPartition hat_partition(const Poset& q, Element y) {
  require_index(q, y);
  HatPartition h;
  for (std::size_t z = 0; z < q.size(); ++z) {
    const auto e = static_cast<Element>(z);
    if (q.leq(e, y)) {
      h.e_hat.push_back(e);
    } else if (q.less(y, e)) {
      h.b_hat.push_back(e);
    } else {
      h.a_hat.push_back(e);
    }
  }
  return h;
}

Path SeparatingPath::vertices() const {
  Path out = segments[0];
  out.insert(out.end(), segments[1].begin() + 1, segments[1].end());
  out.insert(out.end(), segments[2].rbegin() + 1, segments[2].rend());
  return out;
}

SeparatingPath separating_path(const IntervalView& view, Element a, Element b, Direction dir) {
  const PlaneEmbedding& q_emb = view.embedding;
  const Poset& q = view.poset();
  const Element y = view.y;
  for (Element e : {a, b}) require_index(q, e);
  if (!q.incomparable(a, y) || !q.less(y, b) || !q.less(a, b)) {
    throw Error(ErrorCode::PreconditionViolated, "separating path needs a || y < b and a < b for a='" + q.name(a) +
                                                     "', b='" + q.name(b) + "'");
  }
  SeparatingPath sp;
  sp.dir = dir;
  sp.a = a;
  sp.b = b;
  sp.segments[0] = witnessing_path(q_emb, a, opposite(dir));
  const Path to_b = witnessing_path(q_emb, b, dir);
  auto y_it = std::find(to_b.begin(), to_b.end(), y);
  if (y_it == to_b.end()) {
    throw Error(ErrorCode::PreconditionViolated, "'" + q.name(y) + "' is not on the " + std::string(to_string(dir)) +
                                                     "most path to '" + q.name(b) + "'");
  }
  auto peak_it = std::find_if(to_b.begin(), to_b.end(), [&](Element v) { return q.less(a, v); });
  if (peak_it == to_b.end()) throw Error(ErrorCode::NoPeak, "nothing on the path to '" + q.name(b) + "' is above a");
  sp.peak = *peak_it;
  const Path& first = sp.segments[0];
  sp.segments[1] = extremal_path(q_emb, a, first[first.size() - 2], sp.peak, Direction::Left);
  sp.segments[2] = Path(y_it, peak_it + 1);
  return sp;
}

Obs21Result obs21_check(const IntervalView& view, Element a, Element a2, Element b) {
  const Poset& q = view.poset();
  const Element y = view.y;
  for (Element e : {a, a2, b}) require_index(q, e);
  if (!q.incomparable(a, y) || !q.incomparable(a2, y) || !q.less(y, b) || !q.less(a, b)) {
    throw Error(ErrorCode::PreconditionViolated, "needs a, a' in A-hat, b in B-hat and a < b");
  }
  Obs21Result r;
  r.kind = classify_pair(view.embedding, a, a2);
  if (r.kind != PairKind::LeftPair && r.kind != PairKind::RightPair) {
    throw Error(ErrorCode::PreconditionViolated, "('" + q.name(a) + "', '" + q.name(a2) + "') is " +
                                                     std::string(to_string(r.kind)));
  }
  const Side expected = r.kind == PairKind::LeftPair ? Side::Right : Side::Left;
  r.side_in_left = interval_sides(view, separating_path(view, a, b, Direction::Left).vertices())[a2];
  r.side_in_right = interval_sides(view, separating_path(view, a, b, Direction::Right).vertices())[a2];
  r.holds = r.side_in_left == expected && r.side_in_right == expected;
  return r;
}

bool CertificateReport::pass() const noexcept {
  return std::all_of(items.begin(), items.end(), [](const CertificateItem& i) { return i.pass; });
}

CertificateReport verify_lemma_certificate(const PlaneEmbedding& emb, const IntervalCertificate& cert) {
  const Poset& p = emb.poset();
  auto in_range = [&](Element e) { return e >= 0 && static_cast<std::size_t>(e) < p.size(); };
  auto malformed = [](const std::string& why) { return Error(ErrorCode::MalformedCertificate, why); };

  if (cert.a.size() != cert.b.size()) throw malformed("a and b lists differ in length");
  if (cert.a.size() < 2) throw malformed("needs k >= 2");
  if (!in_range(cert.x) || !in_range(cert.y)) throw malformed("x or y out of range");
  for (Element e : cert.a) {
    if (!in_range(e)) throw malformed("a element out of range");
  }
  for (Element e : cert.b) {
    if (!in_range(e)) throw malformed("b element out of range");
  }
  Interval region;
  try {
    region = interval_region(emb, cert.x, cert.y, cert.w, cert.w2);
  } catch (const Error& e) {
    throw malformed(std::string("interval: ") + e.what());
  }

  WitnessPathCache cache(emb);
  CertificateReport report;
  const std::size_t k = cert.a.size();

  // (1)
  const auto shadow = shadowing_check(cache, region);
  report.items[0].pass = shadow.holds;
  if (!shadow.holds) {
    report.items[0].detail = "W_" + std::string(shadow.dir == Direction::Left ? "L" : "R") + "(" + p.name(shadow.z) +
                             ") leaves the interval or misses x";
  }

  // (2)
  {
    CertificateItem& item = report.items[1];
    item.pass = true;
    std::vector<Element> all(cert.a);
    all.insert(all.end(), cert.b.begin(), cert.b.end());
    for (Element e : all) {
      if (!region.contains(e)) {
        item = {false, "'" + p.name(e) + "' is outside the interval"};
        break;
      }
    }
    for (std::size_t u = 0; item.pass && u < all.size(); ++u) {
      for (std::size_t v = 0; item.pass && v < all.size(); ++v) {
        if (u == v) continue;
        if (all[u] == all[v]) {
          item = {false, "'" + p.name(all[u]) + "' is listed twice"};
          break;
        }
        const bool expected = u < k && v >= k && v - k != u;
        if (p.less(all[u], all[v]) != expected) {
          item = {false, "'" + p.name(all[u]) + "' < '" + p.name(all[v]) + "' should be " + (expected ? "true" : "false")};
        }
      }
    }
  }

  // (3)
  {
    CertificateItem& item = report.items[2];
    item.pass = true;
    for (std::size_t i = 0; i < k && item.pass; ++i) {
      if (!p.incomparable(cert.a[i], cert.y)) item = {false, "'" + p.name(cert.a[i]) + "' is comparable to y"};
      else if (!p.less(cert.y, cert.b[i])) item = {false, "y is not below '" + p.name(cert.b[i]) + "'"};
    }
  }

  // (4)
  {
    CertificateItem& item = report.items[3];
    item.pass = true;
    for (const auto* list : {&cert.a, &cert.b}) {
      for (std::size_t i = 0; i < k && item.pass; ++i) {
        for (std::size_t j = i + 1; j < k && item.pass; ++j) {
          const PairKind kind = classify_pair(cache, (*list)[i], (*list)[j]);
          if (kind != PairKind::LeftPair) {
            item = {false, "('" + p.name((*list)[i]) + "', '" + p.name((*list)[j]) + "') is " +
                               std::string(to_string(kind))};
          }
        }
      }
    }
  }
  return report;
}

}  // namespace posetlab
