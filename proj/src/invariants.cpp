#include "dit/invariants.hpp"

#include <algorithm>

#include "dit/error.hpp"

namespace dit {

InvariantProfile invariant_profile(const Graph& g) {
  if (g.order() == 1) throw InputError("normalized invariants are undefined for n=1");
  return invariant_profile(g, distance_matrix(g));
}

InvariantProfile invariant_profile(const Graph& g, const DistanceMatrix& d) {
  const int n = g.order();
  if (n == 1) throw InputError("normalized invariants are undefined for n=1");
  InvariantProfile p;
  p.n = n;
  p.m = g.size();
  p.ecc_of.resize(n);
  p.transmission_of.resize(n);
  p.pi_of.resize(n);
  std::int64_t ecc_sum = 0;
  std::int64_t transmission_sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto row = d.row(v);
    p.ecc_of[v] = *std::max_element(row.begin(), row.end());
    int t = 0;
    for (int x : row) t += x;
    p.transmission_of[v] = t;
    p.pi_of[v] = Rat(t, n - 1);
    ecc_sum += p.ecc_of[v];
    transmission_sum += t;
  }
  p.radius = *std::min_element(p.ecc_of.begin(), p.ecc_of.end());
  p.diameter = *std::max_element(p.ecc_of.begin(), p.ecc_of.end());
  p.avg_ecc = Rat(ecc_sum, n);
  int t_min = *std::min_element(p.transmission_of.begin(), p.transmission_of.end());
  int t_max = *std::max_element(p.transmission_of.begin(), p.transmission_of.end());
  p.proximity = Rat(t_min, n - 1);
  p.remoteness = Rat(t_max, n - 1);
  p.avg_distance = Rat(transmission_sum, static_cast<std::int64_t>(n) * (n - 1));
  for (Vertex v = 0; v < n; ++v) {
    if (p.ecc_of[v] == p.radius) p.centers.push_back(v);
    if (p.transmission_of[v] == t_min) p.centroids.push_back(v);
  }
  return p;
}

std::vector<Vertex> centroid_by_transmission(const Graph& g) {
  auto d = distance_matrix(g);
  std::vector<int> t(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int x : d.row(v)) t[v] += x;
  }
  int best = *std::min_element(t.begin(), t.end());
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (t[v] == best) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> centroid(const Graph& g) {
  if (!is_tree(g)) return centroid_by_transmission(g);
  const int n = g.order();
  // Subtree sizes under an arbitrary root give every n_v(e) in one pass.
  std::vector<int> parent(n, -1);
  std::vector<Vertex> order{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex y : g.neighbors(order[i])) {
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = order[i];
        order.push_back(y);
      }
    }
  }
  std::vector<int> below(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] >= 0) below[parent[*it]] += below[*it];
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    bool ok = true;
    for (Vertex y : g.neighbors(v)) {
      // n_v(vy): v's side of edge vy.
      int side = (parent[y] == v) ? n - below[y] : below[v];
      if (2 * side < n) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> center_set(const Graph& g) {
  std::vector<int> ecc(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto d = bfs_distances(g, v);
    ecc[v] = *std::max_element(d.begin(), d.end());
  }
  int r = *std::min_element(ecc.begin(), ecc.end());
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (ecc[v] == r) out.push_back(v);
  }
  return out;
}

DiametricDecomposition DiametricDecomposition::reversed() const {
  DiametricDecomposition r = *this;
  std::reverse(r.path.begin(), r.path.end());
  std::reverse(r.component_sizes.begin(), r.component_sizes.end());
  const int last = diameter();
  for (int& c : r.component_of) c = last - c;
  return r;
}

int DiametricDecomposition::position(Vertex v) const {
  auto it = std::find(path.begin(), path.end(), v);
  return it == path.end() ? -1 : static_cast<int>(it - path.begin());
}

DiametricDecomposition diametric_decomposition(const Graph& g) {
  if (!is_tree(g)) throw GraphClassError("diametric decomposition requires a tree");
  const int n = g.order();
  auto d = distance_matrix(g);
  int diam = 0;
  Vertex a = 0;
  Vertex b = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u; v < n; ++v) {
      if (d(u, v) > diam) {
        diam = d(u, v);
        a = u;
        b = v;
      }
    }
  }
  DiametricDecomposition dec;
  // Unique tree path a -> b: step to the neighbor one closer to b.
  dec.path.push_back(a);
  for (Vertex x = a; x != b;) {
    for (Vertex y : g.neighbors(x)) {
      if (d(y, b) == d(x, b) - 1) {
        x = y;
        break;
      }
    }
    dec.path.push_back(x);
  }
  dec.component_of.assign(n, -1);
  dec.depth.assign(n, 0);
  dec.component_sizes.assign(dec.path.size(), 0);
  std::vector<Vertex> frontier;
  for (int i = 0; i < static_cast<int>(dec.path.size()); ++i) {
    dec.component_of[dec.path[i]] = i;
    frontier.push_back(dec.path[i]);
  }
  for (std::size_t k = 0; k < frontier.size(); ++k) {
    Vertex x = frontier[k];
    for (Vertex y : g.neighbors(x)) {
      if (dec.component_of[y] < 0) {
        dec.component_of[y] = dec.component_of[x];
        dec.depth[y] = dec.depth[x] + 1;
        ++dec.component_sizes[dec.component_of[x]];
        frontier.push_back(y);
      }
    }
  }
  return dec;
}

}  // namespace dit
