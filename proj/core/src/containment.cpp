#include "posetlab/containment.hpp"

#include <algorithm>
#include <numeric>

#include "posetlab/error.hpp"
#include "posetlab/families.hpp"

namespace posetlab {

namespace {

// Max clique with a greedy-colouring bound, on bitset adjacency.
class CliqueSearch {
 public:
  CliqueSearch(std::vector<Bits> adjacency, std::size_t cap, Budget& budget)
      : adj_(std::move(adjacency)), cap_(cap), budget_(budget) {}

  std::vector<std::size_t> run() {
    const std::size_t n = adj_.size();
    Bits all(n);
    all.set();
    std::vector<std::size_t> current;
    expand(current, all);
    return best_;
  }

 private:
  void expand(std::vector<std::size_t>& current, Bits candidates) {
    budget_.tick();
    if (best_.size() >= cap_) return;
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    colour_sort(candidates, order, colour);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (current.size() + colour[k] <= best_.size() || best_.size() >= cap_) return;
      const std::size_t v = order[k];
      current.push_back(v);
      Bits next = candidates & adj_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  // Vertices of `candidates` grouped into independent colour classes; colour[k]
  // is the number of classes used up to order[k].
  void colour_sort(const Bits& candidates, std::vector<std::size_t>& order, std::vector<std::size_t>& colour) const {
    Bits uncoloured = candidates;
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      Bits available = uncoloured;
      for (auto v = available.find_first(); v != Bits::npos; v = available.find_next(v)) {
        available &= ~adj_[v];
        available.reset(v);
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
  }

  std::vector<Bits> adj_;
  std::size_t cap_;
  Budget& budget_;
  std::vector<std::size_t> best_;
};

class SubposetSearch {
 public:
  SubposetSearch(const Poset& host, const Poset& pattern, Budget& budget)
      : host_(host), pattern_(pattern), budget_(budget) {
    const std::size_t n = host.size();
    incomparable_.assign(n, Bits(n));
    for (std::size_t h = 0; h < n; ++h) {
      incomparable_[h] = ~(host.above(static_cast<Element>(h)) | host.below(static_cast<Element>(h)));
      incomparable_[h].reset(h);
    }
    plan_order();
    map_.assign(pattern.size(), -1);
    used_ = Bits(n);
  }

  std::optional<SubposetMap> run() {
    if (pattern_.size() > host_.size()) return std::nullopt;
    if (place(0)) return map_;
    return std::nullopt;
  }

 private:
  // Most constrained first: comparability degree, then links to placed elements.
  void plan_order() {
    const std::size_t m = pattern_.size();
    std::vector<std::size_t> degree(m);
    for (std::size_t i = 0; i < m; ++i) {
      const auto e = static_cast<Element>(i);
      degree[i] = pattern_.above(e).count() + pattern_.below(e).count();
    }
    std::vector<bool> taken(m, false);
    for (std::size_t step = 0; step < m; ++step) {
      std::size_t pick = m;
      std::size_t pick_links = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (taken[i]) continue;
        std::size_t links = 0;
        for (std::size_t j : order_) {
          if (pattern_.comparable(static_cast<Element>(i), static_cast<Element>(j))) ++links;
        }
        if (pick == m || links > pick_links || (links == pick_links && degree[i] > degree[pick])) {
          pick = i;
          pick_links = links;
        }
      }
      taken[pick] = true;
      order_.push_back(pick);
    }
  }

  bool place(std::size_t depth) {
    budget_.tick();
    if (depth == order_.size()) return true;
    const auto i = static_cast<Element>(order_[depth]);
    const std::size_t up = pattern_.above(i).count();
    const std::size_t down = pattern_.below(i).count();
    Bits candidates = ~used_;
    for (std::size_t d = 0; d < depth; ++d) {
      const auto j = static_cast<Element>(order_[d]);
      const Element hj = map_[j];
      if (pattern_.less(j, i)) {
        candidates &= host_.above(hj);
      } else if (pattern_.less(i, j)) {
        candidates &= host_.below(hj);
      } else {
        candidates &= incomparable_[hj];
      }
      if (candidates.none()) return false;
    }
    for (auto h = candidates.find_first(); h != Bits::npos; h = candidates.find_next(h)) {
      const auto he = static_cast<Element>(h);
      if (host_.above(he).count() < up || host_.below(he).count() < down) continue;
      map_[i] = he;
      used_.set(h);
      if (place(depth + 1)) return true;
      used_.reset(h);
    }
    map_[i] = -1;
    return false;
  }

  const Poset& host_;
  const Poset& pattern_;
  Budget& budget_;
  std::vector<Bits> incomparable_;
  std::vector<std::size_t> order_;
  SubposetMap map_;
  Bits used_;
};

template <class Make>
FamilyNumber family_number(const Poset& p, int cap, const SearchLimits& limits, int upper, Make make) {
  FamilyNumber out;
  out.se = se(p, cap, limits);
  // Every member of both families contains the standard example of its order.
  const int top = std::min({cap, out.se.order, upper});
  for (int d = top; d >= 3; --d) {
    const Poset pattern = make(d);
    if (pattern.size() > p.size() || height(pattern) > height(p)) continue;
    if (auto map = contains_subposet(p, pattern, limits)) {
      out.value = d;
      out.found_order = d;
      out.witness = std::move(*map);
      return out;
    }
  }
  out.value = out.se.order;
  return out;
}

}  // namespace

StandardExampleWitness se(const Poset& p, int cap, const SearchLimits& limits) {
  if (cap < 2) throw Error(ErrorCode::PreconditionViolated, "se cap must be at least 2");
  const auto pairs = incomparable_pairs(p);
  const std::size_t m = pairs.size();
  std::vector<Bits> adj(m, Bits(m));
  for (std::size_t u = 0; u < m; ++u) {
    const auto [a, b] = pairs[u];
    for (std::size_t v = u + 1; v < m; ++v) {
      const auto [a2, b2] = pairs[v];
      if (p.less(a, b2) && p.less(a2, b)) {
        adj[u].set(v);
        adj[v].set(u);
      }
    }
  }
  Budget budget(limits, "se");
  const auto clique = CliqueSearch(std::move(adj), static_cast<std::size_t>(cap), budget).run();
  StandardExampleWitness w;
  if (clique.size() < 2) return w;
  w.order = static_cast<int>(clique.size());
  for (std::size_t v : clique) w.pairs.push_back(pairs[v]);
  std::sort(w.pairs.begin(), w.pairs.end());
  return w;
}

std::optional<SubposetMap> contains_subposet(const Poset& host, const Poset& pattern, const SearchLimits& limits) {
  Budget budget(limits, "containment");
  return SubposetSearch(host, pattern, budget).run();
}

bool verify_embedding(const Poset& host, const Poset& pattern, const SubposetMap& map) {
  if (map.size() != pattern.size()) return false;
  Bits used(host.size());
  for (Element h : map) {
    if (h < 0 || static_cast<std::size_t>(h) >= host.size() || used.test(h)) return false;
    used.set(h);
  }
  for (std::size_t i = 0; i < map.size(); ++i) {
    for (std::size_t j = 0; j < map.size(); ++j) {
      if (pattern.less(static_cast<Element>(i), static_cast<Element>(j)) != host.less(map[i], map[j])) return false;
    }
  }
  return true;
}

FamilyNumber wheel_number(const Poset& p, int cap, const SearchLimits& limits) {
  if (cap < 3) throw Error(ErrorCode::PreconditionViolated, "wheel cap must be at least 3");
  // wheel(N) has height N and N^2 - N + 1 elements.
  int upper = static_cast<int>(height(p));
  while (upper >= 3 && upper * upper - upper + 1 > static_cast<int>(p.size())) --upper;
  return family_number(p, cap, limits, upper, [](int d) { return families::wheel(d); });
}

FamilyNumber kelly_number(const Poset& p, int cap, const SearchLimits& limits) {
  if (cap < 3) throw Error(ErrorCode::PreconditionViolated, "kelly cap must be at least 3");
  const int upper = (static_cast<int>(p.size()) + 6) / 4;
  return family_number(p, cap, limits, upper, [](int d) { return families::kelly(d); });
}

SubposetMap standard_example_map(const StandardExampleWitness& w) {
  SubposetMap map;
  for (const auto& pr : w.pairs) map.push_back(pr.first);
  for (const auto& pr : w.pairs) map.push_back(pr.second);
  return map;
}

}  // namespace posetlab
