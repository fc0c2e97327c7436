#include "posetlab/graph_metrics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "posetlab/error.hpp"
#include "posetlab/families.hpp"

namespace posetlab::metrics {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

template <class F>
void for_each_bit(Mask m, F f) {
  while (m) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    f(v);
  }
}

std::vector<Mask> to_masks(const Graph& g) {
  if (g.size() > 64) throw Error(ErrorCode::PreconditionViolated, "graph has more than 64 vertices");
  std::vector<Mask> adj(g.size(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  return adj;
}

void eliminate(std::vector<Mask>& adj, Mask& alive, int v) {
  const Mask nb = adj[v] & alive;
  for_each_bit(nb, [&](int u) { adj[u] = (adj[u] | nb) & ~bit(u) & ~bit(v); });
  alive &= ~bit(v);
}

int fill_in(const std::vector<Mask>& adj, Mask alive, int v) {
  const Mask nb = adj[v] & alive;
  int missing = 0;
  for_each_bit(nb, [&](int u) { missing += std::popcount(nb & ~adj[u] & ~bit(u)); });
  return missing / 2;
}

// Minor-min-width lower bound.
int minor_min_width(std::vector<Mask> adj, Mask alive) {
  int lb = 0;
  while (std::popcount(alive) > 1) {
    int v = -1;
    int best = 65;
    for_each_bit(alive, [&](int u) {
      const int d = std::popcount(adj[u] & alive);
      if (d < best) {
        best = d;
        v = u;
      }
    });
    lb = std::max(lb, best);
    const Mask nb = adj[v] & alive;
    if (nb == 0) {
      alive &= ~bit(v);
      continue;
    }
    int w = -1;
    int w_deg = 65;
    for_each_bit(nb, [&](int u) {
      const int d = std::popcount(adj[u] & alive);
      if (d < w_deg) {
        w_deg = d;
        w = u;
      }
    });
    // Contract v into w.
    for_each_bit(nb & ~bit(w), [&](int u) {
      adj[u] = (adj[u] & ~bit(v)) | bit(w);
      adj[w] |= bit(u);
    });
    adj[w] &= ~bit(v);
    alive &= ~bit(v);
  }
  return lb;
}

std::pair<int, std::vector<Vertex>> min_fill_order(std::vector<Mask> adj, Mask alive) {
  std::vector<Vertex> order;
  int width = 0;
  while (alive) {
    int v = -1;
    int best_fill = 0;
    int best_deg = 0;
    for_each_bit(alive, [&](int u) {
      const int f = fill_in(adj, alive, u);
      const int d = std::popcount(adj[u] & alive);
      if (v == -1 || f < best_fill || (f == best_fill && d < best_deg)) {
        v = u;
        best_fill = f;
        best_deg = d;
      }
    });
    width = std::max(width, best_deg);
    order.push_back(v);
    eliminate(adj, alive, v);
  }
  return {width, order};
}

class TreewidthSearch {
 public:
  TreewidthSearch(std::vector<Mask> adj, Budget& budget) : adj_(std::move(adj)), budget_(budget) {}

  std::pair<int, std::vector<Vertex>> run() {
    const Mask all = adj_.empty() ? 0 : (adj_.size() == 64 ? ~Mask{0} : bit(static_cast<int>(adj_.size())) - 1);
    auto [ub, order] = min_fill_order(adj_, all);
    ub_ = ub;
    best_ = order;
    if (minor_min_width(adj_, all) < ub_) {
      std::vector<Vertex> prefix;
      node(adj_, all, 0, prefix);
    }
    return {ub_, best_};
  }

 private:
  void node(const std::vector<Mask>& adj, Mask alive, int g, std::vector<Vertex>& prefix) {
    budget_.tick();
    const int left = std::popcount(alive);
    if (std::max(g, left - 1) < ub_) {
      ub_ = std::max(g, left - 1);
      best_ = prefix;
      for_each_bit(alive, [&](int v) { best_.push_back(v); });
    }
    if (left - 1 <= g) return;
    if (std::max(g, minor_min_width(adj, alive)) >= ub_) return;
    if (auto it = memo_.find(alive); it != memo_.end() && it->second <= g) return;
    memo_[alive] = g;

    // A simplicial vertex can always be eliminated first.
    std::vector<std::pair<int, int>> moves;
    for_each_bit(alive, [&](int v) { moves.emplace_back(fill_in(adj, alive, v), v); });
    std::sort(moves.begin(), moves.end());
    if (moves.front().first == 0) moves.resize(1);

    for (const auto& [fill, v] : moves) {
      const int ng = std::max(g, std::popcount(adj[v] & alive));
      if (ng >= ub_) continue;
      std::vector<Mask> next = adj;
      Mask next_alive = alive;
      eliminate(next, next_alive, v);
      prefix.push_back(v);
      node(next, next_alive, ng, prefix);
      prefix.pop_back();
    }
  }

  std::vector<Mask> adj_;
  Budget& budget_;
  int ub_ = 0;
  std::vector<Vertex> best_;
  std::unordered_map<Mask, int> memo_;
};

std::vector<std::pair<int, int>> grid_edges(int n) {
  std::vector<std::pair<int, int>> out;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c + 1 < n) out.emplace_back(r * n + c, r * n + c + 1);
      if (r + 1 < n) out.emplace_back(r * n + c, (r + 1) * n + c);
    }
  }
  return out;
}

int grid_degree(int n, int k) {
  const int r = k / n;
  const int c = k % n;
  return (r > 0) + (r + 1 < n) + (c > 0) + (c + 1 < n);
}

class GridSubgraphSearch {
 public:
  GridSubgraphSearch(const Graph& g, int n, Budget& budget) : g_(g), n_(n), budget_(budget) {
    map_.assign(static_cast<std::size_t>(n * n), -1);
    used_ = Bits(g.size());
  }

  std::optional<std::vector<Vertex>> run() {
    if (static_cast<std::size_t>(n_ * n_) > g_.size()) return std::nullopt;
    if (place(0)) return map_;
    return std::nullopt;
  }

 private:
  bool place(int k) {
    budget_.tick();
    if (k == n_ * n_) return true;
    const int r = k / n_;
    const int c = k % n_;
    Bits candidates = ~used_;
    if (c > 0) candidates &= g_.neighbors(map_[k - 1]);
    if (r > 0) candidates &= g_.neighbors(map_[k - n_]);
    const auto need = static_cast<std::size_t>(grid_degree(n_, k));
    for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
      const auto vv = static_cast<Vertex>(v);
      if (g_.degree(vv) < need) continue;
      map_[k] = vv;
      used_.set(v);
      if (place(k + 1)) return true;
      used_.reset(v);
    }
    map_[k] = -1;
    return false;
  }

  const Graph& g_;
  int n_;
  Budget& budget_;
  std::vector<Vertex> map_;
  Bits used_;
};

class GridMinorSearch {
 public:
  GridMinorSearch(std::vector<Mask> adj, Mask alive, int n, int max_set, Budget& budget)
      : adj_(std::move(adj)), alive_(alive), n_(n), max_set_(max_set), budget_(budget) {
    sets_.assign(static_cast<std::size_t>(n * n), 0);
  }

  std::optional<std::vector<Mask>> run() {
    if (place(0, 0)) return sets_;
    return std::nullopt;
  }

 private:
  Mask neighbourhood(Mask s) const {
    Mask out = 0;
    for_each_bit(s, [&](int v) { out |= adj_[v]; });
    return out & ~s;
  }

  bool place(int k, Mask used) {
    if (k == n_ * n_) return true;
    const Mask free = alive_ & ~used;
    if (std::popcount(free) < n_ * n_ - k) return false;
    const int r = k / n_;
    const int c = k % n_;
    Mask need_left = 0;
    Mask need_up = 0;
    if (c > 0) need_left = neighbourhood(sets_[k - 1]);
    if (r > 0) need_up = neighbourhood(sets_[k - n_]);
    const Mask seeds = free & (c > 0 ? need_left : (r > 0 ? need_up : ~Mask{0}));
    Mask tried = 0;
    bool found = false;
    for_each_bit(seeds, [&](int s) {
      if (found) return;
      found = extend(k, used, bit(s), free & adj_[s] & ~tried, tried | bit(s), need_left, need_up);
      tried |= bit(s);
    });
    return found;
  }

  // Enumerates each connected set containing the seed once.
  bool extend(int k, Mask used, Mask set, Mask frontier, Mask excluded, Mask need_left, Mask need_up) {
    budget_.tick();
    const int c = k % n_;
    const int r = k / n_;
    const bool ok = (c == 0 || (set & need_left)) && (r == 0 || (set & need_up));
    if (ok) {
      sets_[k] = set;
      if (place(k + 1, used | set)) return true;
      sets_[k] = 0;
    }
    if (std::popcount(set) >= max_set_) return false;
    const Mask free = alive_ & ~used;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const Mask next = (frontier | (adj_[v] & free)) & ~set & ~bit(v) & ~excluded;
      if (extend(k, used, set | bit(v), next, excluded, need_left, need_up)) return true;
      excluded |= bit(v);
    }
    return false;
  }

  std::vector<Mask> adj_;
  Mask alive_;
  int n_;
  int max_set_;
  Budget& budget_;
  std::vector<Mask> sets_;
};

}  // namespace

Graph::Graph(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw Error(ErrorCode::DuplicateElement, "duplicate vertex '" + n + "'");
  }
  adjacency_.assign(names_.size(), Bits(names_.size()));
}

Graph Graph::from_edges(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& edges) {
  Graph g(std::move(names));
  std::unordered_map<std::string, Vertex> index;
  for (std::size_t v = 0; v < g.size(); ++v) index.emplace(g.names_[v], static_cast<Vertex>(v));
  auto lookup = [&](const std::string& n) {
    auto it = index.find(n);
    if (it == index.end()) throw Error(ErrorCode::UnknownElement, "unknown vertex '" + n + "'");
    return it->second;
  };
  for (const auto& [a, b] : edges) g.add_edge(lookup(a), lookup(b));
  return g;
}

Graph Graph::cover_graph_of(const Poset& p) {
  Graph g(p.names());
  for (const auto& [a, b] : p.cover_pairs()) g.add_edge(a, b);
  return g;
}

Graph Graph::grid(int n) {
  if (n < 1) throw Error(ErrorCode::PreconditionViolated, "grid side must be positive");
  std::vector<std::string> names;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) names.push_back("g(" + std::to_string(r) + "," + std::to_string(c) + ")");
  }
  Graph g(std::move(names));
  for (const auto& [u, v] : grid_edges(n)) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  const auto n = static_cast<Vertex>(size());
  if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorCode::UnknownElement, "edge endpoint out of range");
  if (u == v) throw Error(ErrorCode::PreconditionViolated, "self-loop on '" + names_[u] + "'");
  adjacency_[u].set(static_cast<std::size_t>(v));
  adjacency_[v].set(static_cast<std::size_t>(u));
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (auto v = adjacency_[u].find_next(u); v != Bits::npos; v = adjacency_[u].find_next(v)) {
      out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return out;
}

int TreeDecomposition::width() const {
  int w = 0;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

bool validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  const std::size_t m = td.bags.size();
  const std::size_t n = g.size();
  if (m == 0) return n == 0;
  std::vector<Bits> holds(m, Bits(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (Vertex v : td.bags[i]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) return false;
      holds[i].set(static_cast<std::size_t>(v));
    }
  }
  // The bag graph must be a tree.
  if (td.tree_edges.size() != m - 1) return false;
  std::vector<std::vector<std::size_t>> tree(m);
  for (const auto& [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= m || static_cast<std::size_t>(b) >= m || a == b) return false;
    tree[a].push_back(static_cast<std::size_t>(b));
    tree[b].push_back(static_cast<std::size_t>(a));
  }
  auto reach = [&](std::size_t start, auto&& allowed) {
    std::vector<bool> seen(m, false);
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    std::size_t count = 0;
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      ++count;
      for (std::size_t j : tree[i]) {
        if (!seen[j] && allowed(j)) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
    return count;
  };
  if (reach(0, [](std::size_t) { return true; }) != m) return false;

  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> with;
    for (std::size_t i = 0; i < m; ++i) {
      if (holds[i].test(v)) with.push_back(i);
    }
    if (with.empty()) return false;
    if (reach(with.front(), [&](std::size_t j) { return holds[j].test(v); }) != with.size()) return false;
  }
  for (const auto& [u, v] : g.edges()) {
    bool covered = false;
    for (std::size_t i = 0; i < m && !covered; ++i) covered = holds[i].test(u) && holds[i].test(v);
    if (!covered) return false;
  }
  return true;
}

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = g.size();
  if (order.size() != n) throw Error(ErrorCode::PreconditionViolated, "elimination order must list every vertex");
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<std::size_t>(order[i]);
    if (v >= n || position[v] != n) throw Error(ErrorCode::PreconditionViolated, "elimination order is not a permutation");
    position[v] = i;
  }
  std::vector<Bits> adj;
  adj.reserve(n);
  for (std::size_t v = 0; v < n; ++v) adj.push_back(g.neighbors(static_cast<Vertex>(v)));

  TreeDecomposition td;
  std::vector<int> roots;
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<std::size_t>(order[i]);
    Bits later = adj[v];
    for (auto u = later.find_first(); u != Bits::npos; u = later.find_next(u)) {
      if (position[u] < i) later.reset(u);
    }
    std::vector<Vertex> bag{order[i]};
    std::size_t parent = n;
    for (auto u = later.find_first(); u != Bits::npos; u = later.find_next(u)) {
      bag.push_back(static_cast<Vertex>(u));
      parent = std::min(parent, position[u]);
      adj[u] |= later;
      adj[u].reset(u);
    }
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(std::move(bag));
    if (parent == n) {
      roots.push_back(static_cast<int>(i));
    } else {
      td.tree_edges.emplace_back(static_cast<int>(i), static_cast<int>(parent));
    }
  }
  for (std::size_t k = 1; k < roots.size(); ++k) td.tree_edges.emplace_back(roots[k - 1], roots[k]);
  return td;
}

int treewidth_lower_bound(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<Bits> adj;
  for (std::size_t v = 0; v < n; ++v) adj.push_back(g.neighbors(static_cast<Vertex>(v)));
  Bits alive(n);
  alive.set();
  int lb = 0;
  while (alive.count() > 1) {
    std::size_t v = n;
    std::size_t best = n;
    for (auto u = alive.find_first(); u != Bits::npos; u = alive.find_next(u)) {
      const std::size_t d = adj[u].count();
      if (v == n || d < best) {
        v = u;
        best = d;
      }
    }
    lb = std::max(lb, static_cast<int>(best));
    std::size_t w = n;
    std::size_t w_deg = 0;
    for (auto u = adj[v].find_first(); u != Bits::npos; u = adj[v].find_next(u)) {
      if (w == n || adj[u].count() < w_deg) {
        w = u;
        w_deg = adj[u].count();
      }
    }
    if (w != n) {
      for (auto u = adj[v].find_first(); u != Bits::npos; u = adj[v].find_next(u)) {
        adj[u].reset(v);
        if (u != w) {
          adj[u].set(w);
          adj[w].set(u);
        }
      }
    }
    adj[v].reset();
    alive.reset(v);
  }
  return lb;
}

TreewidthResult treewidth_exact(const Graph& g, int cap, const SearchLimits& limits) {
  TreewidthResult out;
  if (g.size() == 0) return out;
  Budget budget(limits, "treewidth");
  auto [width, order] = TreewidthSearch(to_masks(g), budget).run();
  if (width > cap) {
    throw Error(ErrorCode::BudgetExceeded, "treewidth " + std::to_string(width) + " exceeds the cap of " + std::to_string(cap));
  }
  out.width = width;
  out.elimination_order = std::move(order);
  out.decomposition = decomposition_from_order(g, out.elimination_order);
  return out;
}

std::optional<std::vector<Vertex>> grid_subgraph(const Graph& g, int n, const SearchLimits& limits) {
  if (n < 2) throw Error(ErrorCode::PreconditionViolated, "grid side must be at least 2");
  Budget budget(limits, "grid subgraph");
  return GridSubgraphSearch(g, n, budget).run();
}

bool verify_grid_subgraph(const Graph& g, int n, const std::vector<Vertex>& map) {
  if (n < 1 || map.size() != static_cast<std::size_t>(n * n)) return false;
  Bits used(g.size());
  for (Vertex v : map) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.size() || used.test(static_cast<std::size_t>(v))) return false;
    used.set(static_cast<std::size_t>(v));
  }
  for (const auto& [a, b] : grid_edges(n)) {
    if (!g.adjacent(map[a], map[b])) return false;
  }
  return true;
}

std::optional<std::vector<std::vector<Vertex>>> grid_minor(const Graph& g, int n, const SearchLimits& limits) {
  if (n < 2) throw Error(ErrorCode::PreconditionViolated, "grid side must be at least 2");
  if (n > 3 || g.size() > 30) {
    throw Error(ErrorCode::PreconditionViolated, "generic grid minor search is limited to n <= 3 and 30 vertices");
  }
  std::vector<std::vector<Vertex>> out;
  if (auto map = grid_subgraph(g, n, limits)) {
    for (Vertex v : *map) out.push_back({v});
    return out;
  }
  // Vertices of degree at most one never help; work in the 2-core.
  std::vector<Mask> adj = to_masks(g);
  Mask alive = g.size() == 0 ? 0 : bit(static_cast<int>(g.size())) - 1;
  for (bool changed = true; changed;) {
    changed = false;
    for_each_bit(alive, [&](int v) {
      if (std::popcount(adj[v] & alive) <= 1) {
        alive &= ~bit(v);
        changed = true;
      }
    });
  }
  const int cells = n * n;
  const int core = std::popcount(alive);
  if (core < cells) return std::nullopt;
  Budget budget(limits, "grid minor");
  for (int max_set = 2; max_set <= core - cells + 1; ++max_set) {
    if (auto sets = GridMinorSearch(adj, alive, n, max_set, budget).run()) {
      for (Mask s : *sets) {
        std::vector<Vertex> branch;
        for_each_bit(s, [&](int v) { branch.push_back(v); });
        out.push_back(std::move(branch));
      }
      return out;
    }
  }
  return std::nullopt;
}

bool verify_grid_minor(const Graph& g, int n, const std::vector<std::vector<Vertex>>& branch_sets) {
  if (n < 1 || branch_sets.size() != static_cast<std::size_t>(n * n)) return false;
  const std::size_t size = g.size();
  Bits used(size);
  std::vector<Bits> sets;
  for (const auto& b : branch_sets) {
    if (b.empty()) return false;
    Bits s(size);
    for (Vertex v : b) {
      if (v < 0 || static_cast<std::size_t>(v) >= size || used.test(static_cast<std::size_t>(v))) return false;
      used.set(static_cast<std::size_t>(v));
      s.set(static_cast<std::size_t>(v));
    }
    // Connected inside g.
    Bits seen(size);
    std::deque<Vertex> queue{b.front()};
    seen.set(static_cast<std::size_t>(b.front()));
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      const Bits next = g.neighbors(v) & s & ~seen;
      for (auto u = next.find_first(); u != Bits::npos; u = next.find_next(u)) {
        seen.set(u);
        queue.push_back(static_cast<Vertex>(u));
      }
    }
    if (seen != s) return false;
    sets.push_back(std::move(s));
  }
  for (const auto& [a, b] : grid_edges(n)) {
    bool touching = false;
    for (auto v = sets[a].find_first(); v != Bits::npos && !touching; v = sets[a].find_next(v)) {
      touching = g.neighbors(static_cast<Vertex>(v)).intersects(sets[b]);
    }
    if (!touching) return false;
  }
  return true;
}

std::vector<std::string> wheel_grid_certificate(int n) {
  if (n < 2) throw Error(ErrorCode::PreconditionViolated, "grid side must be at least 2");
  std::vector<std::string> out;
  for (int l = 0; l < n; ++l) {
    for (int c = 0; c < n; ++c) out.push_back(families::wheel_name(1 + c, n + 1 + l));
  }
  return out;
}

}  // namespace posetlab::metrics
