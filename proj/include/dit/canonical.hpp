#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dit/graph.hpp"

namespace dit {

/// Byte string identifying an isomorphism class. Trees and non-trees use
/// different leading tags, so codes of the two kinds never collide.
struct CanonicalCode {
  std::string bytes;

  std::string hex() const;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Largest order accepted for non-tree graphs unless overridden.
inline constexpr int kGeneralCanonicalCap = 10;
/// Hard limit of the bitmask canonicalizer.
inline constexpr int kGeneralCanonicalMax = 16;

/// Level sequence (depths in preorder) of the tree rooted at `root`, children
/// ordered so the sequence is lexicographically maximal. Two rooted trees are
/// isomorphic iff their sequences coincide.
std::vector<int> canonical_level_sequence(const Graph& tree, Vertex root);

/// Trees: level sequence rooted at the center (both centers tried, minimum
/// kept). Other graphs: minimum upper-triangle adjacency string over the
/// labelings admitted by an invariant refinement, for n <= cap.
CanonicalCode canonical_code(const Graph& g, int general_cap = kGeneralCanonicalCap);

/// The graph relabeled into the labeling that produced canonical_code(g).
/// Isomorphic inputs give identical outputs.
Graph canonical_form(const Graph& g, int general_cap = kGeneralCanonicalCap);

}  // namespace dit
