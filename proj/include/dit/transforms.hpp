#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dit/graph.hpp"
#include "dit/invariants.hpp"
#include "dit/rational.hpp"

namespace dit {

struct GraphState {
  Graph graph;
  InvariantProfile profile;
};

GraphState state_of(const Graph& g);

enum class Relation { Equal, AtLeast, AtMost, Less, Greater };
std::string_view relation_symbol(Relation r);

/// One inequality or identity a rule guarantees, evaluated exactly.
struct Claim {
  std::string name;
  Rat lhs;
  Relation relation = Relation::Equal;
  Rat rhs;

  bool holds() const;
};

struct NamedValue {
  std::string name;
  Rat value;
};

struct Verdict {
  std::string name;
  bool holds = true;
};

/// Record of one rule application. `after` is the rule's immediate output;
/// rules that prescribe a second move (T9 then a splice, T10 then a re-hang)
/// put its result in `followup`.
struct TransformTrace {
  std::string rule;
  GraphState before;
  GraphState after;
  std::optional<GraphState> followup;
  std::vector<NamedValue> locals;
  std::vector<Verdict> preconditions;
  std::vector<Claim> claims;
  bool identity = false;
  bool checkpoint = false;

  const GraphState& outcome() const { return followup ? *followup : after; }
  bool holds() const;
  std::vector<const Claim*> violations() const;
  std::optional<Rat> local(std::string_view name) const;
};

// Objectives the three drivers optimize.
Rat lbar_minus_pi(const InvariantProfile& p);
Rat ecc_minus_rho(const InvariantProfile& p);
Rat rho_minus_r(const InvariantProfile& p);

/// T1: move a shortest pendant path behind the end of another one at the
/// branching vertex furthest from the centroid. Covers u != v and the u == v
/// case with at least n/2 vertices outside the two shortest legs.
TransformTrace t1_leaf_merge(const Graph& g);
/// T2: in a 3-leg spider centered at its centroid, move the furthest leaf onto the closest one.
TransformTrace t2_balance(const Graph& g);
/// T3: breadth-first spanning tree rooted at a vertex of minimum transmission.
TransformTrace t3_bfs_reduce(const Graph& g);
/// T4: reattach a leaf to the end of the diametric path, far half bare.
TransformTrace t4_leaf_to_diameter_end(const Graph& g);
/// T5: splice the branch vertices v_j, v_k (j <= D/2 < k) into the spine.
TransformTrace t5_split_branches(const Graph& g);
/// T6: flatten every hanging subtree onto the diametric path.
TransformTrace t6_caterpillarize(const Graph& g);
/// T7: caterpillar with one centroid and a bare far side; diameter grows by one.
TransformTrace t7_extend_single_centroid(const Graph& g);
/// T8: caterpillar with two centroids and a bare far side; a leaf is spliced between them.
TransformTrace t8_extend_two_centroids(const Graph& g);
/// T9: centroid pair of different degrees; the leaves move to the farther-side
/// centroid. The followup splices one leaf between the pair.
TransformTrace t9_rebalance_centroid_leaves(const Graph& g);
/// T10: centroid pair of equal degrees; one leaf of each is spliced between
/// them, then the remaining leaves are re-hung on the spliced vertices.
TransformTrace t10_double_extend_equal(const Graph& g);

/// Pre-processing move of the caterpillar reduction: one off-path leaf left
/// of the centroid steps right and one right of it steps left. Rule id "S".
TransformTrace shift_toward_centroid(const Graph& g);

/// Rule ids T1..T10 (case-insensitive) to the functions above.
TransformTrace apply_rule(std::string_view rule, const Graph& g);

struct DriverRun {
  std::string driver;
  std::vector<TransformTrace> steps;
  Graph terminal;
  std::string terminal_family;  // "path", "spider3", "spider4", "broom", or "other"
  Rat terminal_value;           // objective at `terminal`
  Rat objective_value;          // best value the run certifies, terminal comparisons included

  bool holds() const;
};

/// Leaf merges and balancing until a path, spider3 or spider4 remains, then
/// the closed comparison against spider3(n).
DriverRun drive_max_avgdist_minus_proximity(const Graph& tree);
/// T4 while the far half is bare, else T5, until the path.
DriverRun drive_max_ecc_minus_remoteness(const Graph& tree);
/// T6, then double steps built from S and T7..T10 until D >= n-2, then the
/// terminal adjustments.
DriverRun drive_min_remoteness_minus_radius(const Graph& tree);

DriverRun run_driver(std::string_view name, const Graph& tree);

}  // namespace dit
