// Independent reference computations for the test suites. Nothing here calls the
// library's enumeration, canonical-labeling, or BFS code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dit/graph.hpp"

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

inline std::vector<std::vector<int>> adjacency(int n, const EdgeList& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

inline EdgeList edges_of(const dit::Graph& g) {
  EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

// All-pairs distances by Floyd-Warshall; unreachable pairs stay at `inf`.
inline std::vector<std::vector<int>> floyd_warshall(int n, const EdgeList& edges) {
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : edges) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Tree decoded from a Prufer sequence over labels 0..n-1 (linear-time decoding).
inline EdgeList prufer_decode(int n, const std::vector<int>& seq) {
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  EdgeList edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : seq) {
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return edges;
}

// AHU string of a tree rooted at `root`.
inline std::string ahu(const std::vector<std::vector<int>>& adj, int root, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[root])
    if (w != parent) kids.push_back(ahu(adj, w, root));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

// Isomorphism-class key of a free tree: minimum AHU string over its center(s).
inline std::string tree_key(int n, const EdgeList& edges) {
  if (n == 1) return "()";
  auto adj = adjacency(n, edges);
  std::vector<int> degree(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w : adj[v])
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::string best;
  for (int c : layer) {
    auto s = ahu(adj, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// AHU code of a rooted tree as a left-aligned bit string ('(' = 1); n <= 31.
inline std::uint64_t ahu_bits(const std::vector<std::vector<int>>& adj, int root, int parent, int& length) {
  std::vector<std::pair<std::uint64_t, int>> kids;
  for (int w : adj[root])
    if (w != parent) {
      int len = 0;
      const auto bits = ahu_bits(adj, w, root, len);
      kids.emplace_back(bits, len);
    }
  std::sort(kids.begin(), kids.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  std::uint64_t code = std::uint64_t{1} << 63;
  length = 1;
  for (const auto& [bits, len] : kids) {
    code |= bits >> length;
    length += len;
  }
  ++length;  // closing ')' is a zero bit
  return code;
}

// Isomorphism-class key of a free tree as an integer: max AHU code over its center(s).
inline std::uint64_t tree_bits(int n, const EdgeList& edges) {
  if (n == 1) return std::uint64_t{1} << 63;
  auto adj = adjacency(n, edges);
  std::vector<int> degree(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w : adj[v])
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::uint64_t best = 0;
  for (int c : layer) {
    int len = 0;
    best = std::max(best, ahu_bits(adj, c, -1, len));
  }
  return best;
}

// Number of free trees of order n via Prufer enumeration and AHU dedup.
inline std::size_t prufer_tree_count(int n) {
  if (n <= 2) return 1;
  std::set<std::uint64_t> keys;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    keys.insert(tree_bits(n, prufer_decode(n, seq)));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return keys.size();
}

// Rooted trees (A000081) and free trees (A000055) by Otter's counting formulas.
inline std::vector<std::uint64_t> rooted_tree_counts(int max_n) {
  std::vector<std::uint64_t> a(max_n + 1, 0);
  if (max_n >= 1) a[1] = 1;
  for (int n = 1; n < max_n; ++n) {
    std::uint64_t s = 0;
    for (int k = 1; k <= n; ++k) {
      std::uint64_t dsum = 0;
      for (int d = 1; d <= k; ++d)
        if (k % d == 0) dsum += static_cast<std::uint64_t>(d) * a[d];
      s += dsum * a[n - k + 1];
    }
    a[n + 1] = s / n;
  }
  return a;
}

inline std::vector<std::uint64_t> free_tree_counts(int max_n) {
  const auto a = rooted_tree_counts(max_n);
  std::vector<std::uint64_t> t(max_n + 1, 0);
  for (int n = 1; n <= max_n; ++n) {
    std::int64_t pairs = 0;
    for (int i = 1; i < n; ++i) pairs += static_cast<std::int64_t>(a[i] * a[n - i]);
    if (n % 2 == 0) pairs -= static_cast<std::int64_t>(a[n / 2]);
    t[n] = a[n] - static_cast<std::uint64_t>(pairs / 2);
  }
  return t;
}

// Caterpillars on n >= 3 vertices: 2^(n-4) + 2^floor((n-4)/2), with small cases fixed.
inline std::uint64_t caterpillar_count(int n) {
  if (n <= 3) return 1;
  return (std::uint64_t{1} << (n - 4)) + (std::uint64_t{1} << ((n - 4) / 2));
}

inline bool connected(int n, const EdgeList& edges) {
  if (n == 0) return true;
  auto adj = adjacency(n, edges);
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

// Key of a labelled graph: lexicographically smallest sorted edge list over all relabelings.
inline EdgeList brute_canonical(int n, const EdgeList& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  bool first = true;
  do {
    EdgeList e;
    for (auto [u, v] : edges) {
      int a = perm[u], b = perm[v];
      e.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(e.begin(), e.end());
    if (first || e < best) {
      best = std::move(e);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const dit::Graph& a, const dit::Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return brute_canonical(a.order(), edges_of(a)) == brute_canonical(b.order(), edges_of(b));
}

// Connected graphs of order n by edge-mask enumeration and brute-force dedup:
// the class key is the smallest relabeled mask over all n! permutations.
inline std::size_t edge_mask_connected_count(int n) {
  EdgeList pairs;
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      index[u][v] = index[v][u] = static_cast<int>(pairs.size());
      pairs.emplace_back(u, v);
    }
  std::vector<std::vector<int>> images;  // pair index -> image pair index, per permutation
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> img(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) img[i] = index[perm[pairs[i].first]][perm[pairs[i].second]];
    images.push_back(std::move(img));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::set<std::uint32_t> seen;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
    EdgeList e;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) e.push_back(pairs[i]);
    if (!connected(n, e)) continue;
    std::uint32_t best = mask;
    for (const auto& img : images) {
      std::uint32_t m = 0;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) m |= std::uint32_t{1} << img[i];
      best = std::min(best, m);
    }
    seen.insert(best);
  }
  return seen.size();
}

// Unlabelled graphs of order 0..max_n by Burnside over S_n acting on vertex pairs,
// then connected counts by inverting the Euler transform.
inline std::vector<std::uint64_t> connected_graph_counts(int max_n) {
  std::vector<double> graphs(max_n + 1, 0.0);
  graphs[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    double total = 0;
    double fact = 0;
    do {
      fact += 1;
      std::set<std::pair<int, int>> visited;
      int cycles = 0;
      for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
          if (visited.count({u, v})) continue;
          ++cycles;
          int a = u, b = v;
          do {
            visited.insert({std::min(a, b), std::max(a, b)});
            a = perm[a];
            b = perm[b];
          } while (!visited.count({std::min(a, b), std::max(a, b)}));
        }
      total += static_cast<double>(std::uint64_t{1} << cycles);
    } while (std::next_permutation(perm.begin(), perm.end()));
    graphs[n] = total / fact;
  }
  // graphs = EulerTransform(connected): n g_n = sum_{k=1..n} b_k g_{n-k}, b_k = sum_{d|k} d c_d.
  std::vector<double> b(max_n + 1, 0.0), c(max_n + 1, 0.0);
  for (int n = 1; n <= max_n; ++n) {
    double s = n * graphs[n];
    for (int k = 1; k < n; ++k) s -= b[k] * graphs[n - k];
    b[n] = s;
    double dsum = 0;
    for (int d = 1; d < n; ++d)
      if (n % d == 0) dsum += d * c[d];
    c[n] = (b[n] - dsum) / n;
  }
  std::vector<std::uint64_t> out(max_n + 1, 0);
  for (int n = 1; n <= max_n; ++n) out[n] = static_cast<std::uint64_t>(c[n] + 0.5);
  return out;
}

}  // namespace oracle
