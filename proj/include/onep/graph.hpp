#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace onep {

using Edge = std::pair<int, int>;  // normalized: first < second
using EdgeList = std::vector<Edge>;

inline Edge norm_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Simple undirected graph on vertices 0..n-1, adjacency kept as sorted sets.
/// Graphs are immutable after construction; every operation returns a new value.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  int edge_count() const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const;
  EdgeList edges() const;  // sorted lexicographically, u < v
};

/// Builds a graph from unordered endpoint pairs. Duplicate pairs collapse
/// (set semantics); loops and out-of-range endpoints throw.
Graph make_graph(int n, const EdgeList& edge_pairs);

/// Vertex v of g becomes perm[v]; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, const std::vector<int>& perm);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertices;  // vertices[new_id] = old_id, ascending
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep);

Graph complement(const Graph& g);

struct Bipartition {
  std::vector<signed char> side;  // 0 or 1 per vertex
  int size(int s) const;
  std::vector<int> vertices(int s) const;
};

/// Outcome of 2-coloring: exactly one of bipartition / odd_cycle is set.
/// odd_cycle is a simple cycle given as its vertex sequence (no repeat of the
/// first vertex at the end).
struct TwoColoring {
  std::optional<Bipartition> bipartition;
  std::vector<int> odd_cycle;
  bool is_bipartite() const { return bipartition.has_value(); }
};
TwoColoring two_coloring(const Graph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Sorted complement of s within 0..n-1.
std::vector<int> complement_set(int n, const std::vector<int>& s);

}  // namespace onep
