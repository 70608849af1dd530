#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dit {

using Vertex = int;

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1. Neighbor lists are
/// kept sorted; transformations produce new graphs through with_edits().
class Graph {
 public:
  /// Validates and builds; throws InputError on out-of-range vertices,
  /// self-loops and duplicate edges.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  int size() const noexcept { return edge_count_; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  bool has_edge(Vertex a, Vertex b) const;

  /// All edges in ascending (u, v) order.
  std::vector<Edge> edges() const;
  std::vector<Vertex> leaves() const;

  /// Copy with `removed` deleted and then `added` inserted. Removing a
  /// non-edge or adding an existing edge throws InputError.
  Graph with_edits(std::span<const Edge> removed, std::span<const Edge> added) const;
  /// Relabel: vertex v becomes perm[v].
  Graph permuted(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  Graph() = default;
  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

/// Free-function constructor mirroring Graph(n, edges).
Graph build_graph(int n, std::span<const Edge> edges);

/// All-pairs hop counts, row-major.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0) {}
  int order() const noexcept { return n_; }
  int operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  int& at(Vertex u, Vertex v) { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  std::span<const int> row(Vertex u) const {
    return {d_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
  }

 private:
  int n_;
  std::vector<int> d_;
};

/// Hop distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_reach(const Graph& g, Vertex source);
/// Hop distances from `source`; throws GraphClassError if g is disconnected.
std::vector<int> bfs_distances(const Graph& g, Vertex source);
DistanceMatrix distance_matrix(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
/// Tree whose non-leaf vertices induce a path (paths and stars included).
bool is_caterpillar(const Graph& g);

/// The two sides of a tree after deleting one edge.
struct EdgeSplit {
  Edge edge;
  Vertex u = 0;  // endpoint whose side is recorded
  Vertex v = 0;
  std::vector<Vertex> side_u;  // sorted, contains u
  int n_u = 0;
  int n_v = 0;
};

/// Throws GraphClassError when g is not a tree, InputError when {u, v} is not an edge.
EdgeSplit edge_split(const Graph& g, Vertex u, Vertex v);

std::string to_string(const Graph& g);

}  // namespace dit
