#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetlab/budget.hpp"
#include "posetlab/poset.hpp"

namespace posetlab::metrics {

using Vertex = int;

/// Simple undirected graph with named vertices.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<std::string> names);

  /// Throws UnknownElement / DuplicateElement.
  static Graph from_edges(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& edges);
  /// Cover graph of p, orientation dropped.
  static Graph cover_graph_of(const Poset& p);
  /// n x n grid, vertex (row, col) = row * n + col, named "g(row,col)".
  static Graph grid(int n);

  void add_edge(Vertex u, Vertex v);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Vertex v) const { return names_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const Bits& neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].test(static_cast<std::size_t>(v)); }
  std::size_t degree(Vertex v) const { return adjacency_[v].count(); }
  std::vector<std::pair<Vertex, Vertex>> edges() const;

 private:
  std::vector<std::string> names_;
  std::vector<Bits> adjacency_;
};

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<int, int>> tree_edges;
  int width() const;
};

/// Checks the three axioms (vertex cover, edge cover, connected occurrences)
/// and that the bags form a tree.
bool validate_decomposition(const Graph& g, const TreeDecomposition& td);

/// Bags of the elimination ordering `order` (first eliminated first).
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order);

struct TreewidthResult {
  int width = 0;
  std::vector<Vertex> elimination_order;
  TreeDecomposition decomposition;
};

/// Minor-min-width lower bound on the treewidth, any size.
int treewidth_lower_bound(const Graph& g);

/// Exact treewidth by branch and bound over elimination orderings, for at
/// most 64 vertices. Throws BudgetExceeded, also when the width exceeds `cap`.
TreewidthResult treewidth_exact(const Graph& g, int cap = 64, const SearchLimits& limits = {});

/// Row-major map of the n x n grid into g preserving adjacency, or nullopt.
std::optional<std::vector<Vertex>> grid_subgraph(const Graph& g, int n, const SearchLimits& limits = {});
bool verify_grid_subgraph(const Graph& g, int n, const std::vector<Vertex>& map);

/// Row-major branch sets of an n x n grid minor, or nullopt. Limited to
/// n <= 3 and 30 vertices (PreconditionViolated otherwise).
std::optional<std::vector<std::vector<Vertex>>> grid_minor(const Graph& g, int n, const SearchLimits& limits = {});
bool verify_grid_minor(const Graph& g, int n, const std::vector<std::vector<Vertex>>& branch_sets);

/// Grid vertex (row l, col c) goes to r(1 + c, n + 1 + l) in wheel(2n + 1):
/// moving along a row drops the first index of the interval, moving along a
/// column extends its end, and both are covers. Row-major element names.
std::vector<std::string> wheel_grid_certificate(int n);

}  // namespace posetlab::metrics
