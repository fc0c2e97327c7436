#include "posetlab/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "posetlab/error.hpp"

namespace posetlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotAnUpsetExtension: return "NotAnUpsetExtension";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::EdgeDoesNotEnter: return "EdgeDoesNotEnter";
    case ErrorCode::PathNotAnchored: return "PathNotAnchored";
    case ErrorCode::MissingEInfinity: return "MissingEInfinity";
    case ErrorCode::NotAnchored: return "NotAnchored";
    case ErrorCode::PathsIntersect: return "PathsIntersect";
    case ErrorCode::NoPeak: return "NoPeak";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::MalformedCertificate: return "MalformedCertificate";
    case ErrorCode::EmbeddingConstraintUnsatisfied: return "EmbeddingConstraintUnsatisfied";
    case ErrorCode::InvalidEmbedding: return "InvalidEmbedding";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Poset Poset::from_cover_pairs(std::vector<std::string> elements,
                              const std::vector<std::pair<std::string, std::string>>& covers) {
  std::unordered_map<std::string, Element> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!index.emplace(elements[i], static_cast<Element>(i)).second) {
      throw Error(ErrorCode::DuplicateElement, "element '" + elements[i] + "' listed twice");
    }
  }
  std::vector<ElementPair> relation;
  relation.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) throw Error(ErrorCode::UnknownElement, "'" + lo + "' in cover list");
    if (b == index.end()) throw Error(ErrorCode::UnknownElement, "'" + hi + "' in cover list");
    relation.emplace_back(a->second, b->second);
  }
  return from_relation(std::move(elements), relation);
}

Poset Poset::from_relation(std::vector<std::string> elements, const std::vector<ElementPair>& relation) {
  const std::size_t n = elements.size();
  Poset p;
  p.names_ = std::move(elements);
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.index_.emplace(p.names_[i], static_cast<Element>(i)).second) {
      throw Error(ErrorCode::DuplicateElement, "element '" + p.names_[i] + "' listed twice");
    }
  }

  std::vector<std::vector<Element>> succ(n);
  std::vector<int> indegree(n, 0);
  for (const auto& [a, b] : relation) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
      throw Error(ErrorCode::UnknownElement, "relation references index out of range");
    }
    if (a == b) throw Error(ErrorCode::CycleDetected, "self-loop on '" + p.names_[a] + "'");
    succ[a].push_back(b);
    ++indegree[b];
  }

  // Kahn's algorithm; the closure is then accumulated in reverse topological order.
  std::vector<Element> topo;
  topo.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) topo.push_back(static_cast<Element>(i));
  }
  for (std::size_t head = 0; head < topo.size(); ++head) {
    for (Element w : succ[topo[head]]) {
      if (--indegree[w] == 0) topo.push_back(w);
    }
  }
  if (topo.size() != n) throw Error(ErrorCode::CycleDetected, "cover relation contains a directed cycle");

  p.up_.assign(n, Bits(n));
  p.down_.assign(n, Bits(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    for (Element w : succ[*it]) {
      p.up_[*it] |= p.up_[w];
      p.up_[*it].set(static_cast<std::size_t>(w));
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (auto b = p.up_[a].find_first(); b != Bits::npos; b = p.up_[a].find_next(b)) {
      p.down_[b].set(a);
    }
  }
  return p;
}

std::optional<Element> Poset::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element Poset::index_of(std::string_view name) const {
  auto e = find(name);
  if (!e) throw Error(ErrorCode::UnknownElement, "'" + std::string(name) + "'");
  return *e;
}

bool Poset::covers(Element lower, Element upper) const {
  if (!less(lower, upper)) return false;
  // Some z strictly between?
  return !up_[lower].intersects(down_[upper]);
}

std::vector<ElementPair> Poset::cover_pairs() const {
  std::vector<ElementPair> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (auto b = up_[a].find_first(); b != Bits::npos; b = up_[a].find_next(b)) {
      if (covers(static_cast<Element>(a), static_cast<Element>(b))) {
        out.emplace_back(static_cast<Element>(a), static_cast<Element>(b));
      }
    }
  }
  return out;
}

std::size_t Poset::comparable_pair_count() const {
  std::size_t total = 0;
  for (const auto& row : up_) total += row.count();
  return total;
}

Poset Poset::induced(std::span<const Element> subset) const {
  std::vector<std::string> names;
  names.reserve(subset.size());
  std::vector<int> position(size(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const Element e = subset[i];
    if (e < 0 || static_cast<std::size_t>(e) >= size()) {
      throw Error(ErrorCode::UnknownElement, "index " + std::to_string(e));
    }
    if (position[e] != -1) throw Error(ErrorCode::DuplicateElement, "'" + names_[e] + "' in subset");
    position[e] = static_cast<int>(i);
    names.push_back(names_[e]);
  }
  std::vector<ElementPair> relation;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const Bits& row = up_[subset[i]];
    for (auto b = row.find_first(); b != Bits::npos; b = row.find_next(b)) {
      if (position[b] != -1) relation.emplace_back(static_cast<Element>(i), position[b]);
    }
  }
  return from_relation(std::move(names), relation);
}

std::size_t height(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) return 0;
  // Elements sorted by downset size form a linear extension.
  LinearExtension order = default_extension(p);
  std::vector<std::size_t> longest(n, 1);
  std::size_t best = 1;
  for (Element v : order) {
    const Bits& down = p.below(v);
    for (auto u = down.find_first(); u != Bits::npos; u = down.find_next(u)) {
      longest[v] = std::max(longest[v], longest[u] + 1);
    }
    best = std::max(best, longest[v]);
  }
  return best;
}

std::size_t width(const Poset& p) {
  // Dilworth: width = n - maximum matching in the comparability bipartite graph.
  const std::size_t n = p.size();
  std::vector<int> match_right(n, -1);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) -> bool {
    const Bits& row = p.above(static_cast<Element>(u));
    for (auto v = row.find_first(); v != Bits::npos; v = row.find_next(v)) {
      if (seen[v]) continue;
      seen[v] = 1;
      if (match_right[v] == -1 || augment(static_cast<std::size_t>(match_right[v]))) {
        match_right[v] = static_cast<int>(u);
        return true;
      }
    }
    return false;
  };
  std::size_t matching = 0;
  for (std::size_t u = 0; u < n; ++u) {
    seen.assign(n, 0);
    if (augment(u)) ++matching;
  }
  return n - matching;
}

std::vector<Element> minimal_elements(const Poset& p) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.below(static_cast<Element>(i)).none()) out.push_back(static_cast<Element>(i));
  }
  return out;
}

std::vector<Element> maximal_elements(const Poset& p) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.above(static_cast<Element>(i)).none()) out.push_back(static_cast<Element>(i));
  }
  return out;
}

std::vector<Element> to_elements(const Bits& set) {
  std::vector<Element> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != Bits::npos; i = set.find_next(i)) out.push_back(static_cast<Element>(i));
  return out;
}

std::vector<Element> upset(const Poset& p, Element x) {
  Bits s = p.above(x);
  s.set(static_cast<std::size_t>(x));
  return to_elements(s);
}

Poset induced_subposet(const Poset& p, std::span<const Element> subset) { return p.induced(subset); }

Poset induced_subposet(const Poset& p, const std::vector<std::string>& subset) {
  std::vector<Element> idx;
  idx.reserve(subset.size());
  for (const auto& name : subset) idx.push_back(p.index_of(name));
  return p.induced(idx);
}

std::vector<ElementPair> incomparable_pairs(const Poset& p) {
  std::vector<ElementPair> out;
  const auto n = static_cast<Element>(p.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (a != b && p.incomparable(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<ElementPair> critical_pairs(const Poset& p) {
  std::vector<ElementPair> out;
  for (const auto& [a, b] : incomparable_pairs(p)) {
    if (p.below(a).is_subset_of(p.below(b)) && p.above(b).is_subset_of(p.above(a))) {
      out.emplace_back(a, b);
    }
  }
  return out;
}

bool is_linear_extension(const Poset& p, std::span<const Element> order) {
  const std::size_t n = p.size();
  if (order.size() != n) return false;
  std::vector<int> position(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const Element e = order[i];
    if (e < 0 || static_cast<std::size_t>(e) >= n || position[e] != -1) return false;
    position[e] = static_cast<int>(i);
  }
  for (std::size_t a = 0; a < n; ++a) {
    const Bits& row = p.above(static_cast<Element>(a));
    for (auto b = row.find_first(); b != Bits::npos; b = row.find_next(b)) {
      if (position[a] > position[b]) return false;
    }
  }
  return true;
}

bool verify_realizer(const Poset& p, const Realizer& r) {
  if (r.empty()) return false;
  const std::size_t n = p.size();
  std::vector<std::vector<int>> positions;
  positions.reserve(r.size());
  for (const auto& ext : r) {
    if (!is_linear_extension(p, ext)) return false;
    std::vector<int> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[ext[i]] = static_cast<int>(i);
    positions.push_back(std::move(pos));
  }
  for (const auto& [a, b] : incomparable_pairs(p)) {
    const bool reversed = std::any_of(positions.begin(), positions.end(),
                                      [&](const std::vector<int>& pos) { return pos[b] < pos[a]; });
    if (!reversed) return false;
  }
  return true;
}

LinearExtension default_extension(const Poset& p) {
  LinearExtension order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return p.below(a).count() < p.below(b).count();
  });
  return order;
}

LinearExtension lift_extension(const Poset& p, Element x, std::span<const Element> upset_order) {
  if (x < 0 || static_cast<std::size_t>(x) >= p.size()) {
    throw Error(ErrorCode::UnknownElement, "index " + std::to_string(x));
  }
  Bits in_upset = p.above(x);
  in_upset.set(static_cast<std::size_t>(x));
  if (upset_order.size() != in_upset.count()) {
    throw Error(ErrorCode::NotAnUpsetExtension, "order has " + std::to_string(upset_order.size()) +
                                                    " elements, upset has " +
                                                    std::to_string(in_upset.count()));
  }
  Bits seen(p.size());
  for (std::size_t i = 0; i < upset_order.size(); ++i) {
    const Element e = upset_order[i];
    if (e < 0 || static_cast<std::size_t>(e) >= p.size() || !in_upset.test(e) || seen.test(e)) {
      throw Error(ErrorCode::NotAnUpsetExtension, "order is not a permutation of the upset");
    }
    // Everything below e inside the upset must already be placed.
    if (!(p.below(e) & in_upset).is_subset_of(seen)) {
      throw Error(ErrorCode::NotAnUpsetExtension, "'" + p.name(e) + "' placed before one of its predecessors");
    }
    seen.set(e);
  }

  LinearExtension out;
  out.reserve(p.size());
  for (Element e : default_extension(p)) {
    if (!in_upset.test(e)) out.push_back(e);
  }
  out.insert(out.end(), upset_order.begin(), upset_order.end());
  return out;
}

}  // namespace posetlab
