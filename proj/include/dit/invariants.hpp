#pragma once

#include <vector>

#include "dit/graph.hpp"
#include "dit/rational.hpp"

namespace dit {

/// Every distance invariant of one connected graph, computed exactly from a
/// single distance-matrix pass.
struct InvariantProfile {
  int n = 0;
  int m = 0;
  std::vector<int> ecc_of;           // e(v)
  std::vector<int> transmission_of;  // sum of distances from v
  std::vector<Rat> pi_of;            // transmission_of / (n - 1)
  int radius = 0;
  int diameter = 0;
  Rat avg_ecc;
  Rat proximity;
  Rat remoteness;
  Rat avg_distance;
  std::vector<Vertex> centers;    // argmin ecc_of
  std::vector<Vertex> centroids;  // argmin pi_of
};

/// Throws GraphClassError for disconnected graphs and InputError for n == 1,
/// where the normalized quantities are undefined.
InvariantProfile invariant_profile(const Graph& g);
InvariantProfile invariant_profile(const Graph& g, const DistanceMatrix& d);

/// Trees: vertices v with n_v(e) >= n/2 for every incident edge e. Other
/// connected graphs: argmin of the normalized transmission.
std::vector<Vertex> centroid(const Graph& g);
/// argmin of the normalized transmission, for any connected graph.
std::vector<Vertex> centroid_by_transmission(const Graph& g);
std::vector<Vertex> center_set(const Graph& g);

/// A diametric path v_0..v_D of a tree together with the subtrees hanging
/// off each path vertex.
struct DiametricDecomposition {
  std::vector<Vertex> path;        // v_0 .. v_D
  std::vector<int> component_of;   // index i of the G_i containing each vertex (path vertices: own index)
  std::vector<int> component_sizes;  // |V_i| excluding v_i itself
  std::vector<int> depth;          // distance from each vertex to the path

  int diameter() const { return static_cast<int>(path.size()) - 1; }
  /// Same decomposition with the path read from v_D back to v_0.
  DiametricDecomposition reversed() const;
  /// Index of v on the path, or -1.
  int position(Vertex v) const;
};

/// Endpoint pair chosen lexicographically smallest (smaller endpoint first);
/// throws GraphClassError unless g is a tree.
DiametricDecomposition diametric_decomposition(const Graph& g);

}  // namespace dit
