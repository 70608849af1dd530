#include "dit/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "dit/error.hpp"

namespace dit {

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 1) throw InputError("graph needs at least one vertex, got n=" + std::to_string(n));
  adjacency_.resize(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw InputError("vertex out of range in edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") for n=" + std::to_string(n));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end());
    auto dup = std::adjacent_find(adj.begin(), adj.end());
    if (dup != adj.end()) {
      throw InputError("duplicate edge (" + std::to_string(std::min(v, *dup)) + "," +
                       std::to_string(std::max(v, *dup)) + ")");
    }
  }
  edge_count_ = static_cast<int>(edges.size());
}

namespace {
std::vector<Edge> to_edges(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (auto [a, b] : pairs) out.emplace_back(a, b);
  return out;
}
}  // namespace

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n, to_edges(edges)) {}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || a >= order() || b < 0 || b >= order()) return false;
  const auto& adj = adjacency_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<Vertex> Graph::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < order(); ++v) {
    if (degree(v) == 1) out.push_back(v);
  }
  return out;
}

Graph Graph::with_edits(std::span<const Edge> removed, std::span<const Edge> added) const {
  std::vector<Edge> kept = edges();
  for (const Edge& e : removed) {
    auto it = std::lower_bound(kept.begin(), kept.end(), e);
    if (it == kept.end() || *it != e) {
      throw InputError("cannot remove non-edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    kept.erase(it);
  }
  kept.insert(kept.end(), added.begin(), added.end());
  return Graph(order(), kept);
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != order()) throw InputError("permutation size mismatch");
  std::vector<Edge> relabeled;
  relabeled.reserve(edge_count_);
  for (const Edge& e : edges()) relabeled.emplace_back(perm[e.u], perm[e.v]);
  return Graph(order(), relabeled);
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

std::vector<int> bfs_reach(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  auto dist = bfs_reach(g, source);
  if (std::find(dist.begin(), dist.end(), -1) != dist.end()) {
    throw GraphClassError("graph is disconnected");
  }
  return dist;
}

DistanceMatrix distance_matrix(const Graph& g) {
  DistanceMatrix dm(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    auto row = bfs_distances(g, u);
    for (Vertex v = 0; v < g.order(); ++v) dm.at(u, v) = row[v];
  }
  return dm;
}

bool is_connected(const Graph& g) {
  auto dist = bfs_reach(g, 0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

bool is_caterpillar(const Graph& g) {
  if (!is_tree(g)) return false;
  // The spine (non-leaves) is a path iff no spine vertex has more than two
  // spine neighbors; connectivity of the spine comes for free in a tree.
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) <= 1) continue;
    int spine_neighbors = 0;
    for (Vertex y : g.neighbors(v)) spine_neighbors += g.degree(y) > 1 ? 1 : 0;
    if (spine_neighbors > 2) return false;
  }
  return true;
}

EdgeSplit edge_split(const Graph& g, Vertex u, Vertex v) {
  if (!is_tree(g)) throw GraphClassError("edge_split requires a tree");
  if (!g.has_edge(u, v)) {
    throw InputError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  }
  EdgeSplit split;
  split.edge = Edge(u, v);
  split.u = u;
  split.v = v;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{u};
  seen[u] = 1;
  seen[v] = 1;  // never cross the deleted edge
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    split.side_u.push_back(x);
    for (Vertex y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  std::sort(split.side_u.begin(), split.side_u.end());
  split.n_u = static_cast<int>(split.side_u.size());
  split.n_v = g.order() - split.n_u;
  return split;
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " {";
  bool first = true;
  for (const Edge& e : g.edges()) {
    os << (first ? "" : ",") << e.u << "-" << e.v;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace dit
