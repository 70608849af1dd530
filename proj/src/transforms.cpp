#include "dit/transforms.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>

#include "dit/error.hpp"
#include "dit/families.hpp"

namespace dit {

GraphState state_of(const Graph& g) { return {g, invariant_profile(g)}; }

std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::Equal: return "==";
    case Relation::AtLeast: return ">=";
    case Relation::AtMost: return "<=";
    case Relation::Less: return "<";
    case Relation::Greater: return ">";
  }
  return "?";
}

bool Claim::holds() const {
  switch (relation) {
    case Relation::Equal: return lhs == rhs;
    case Relation::AtLeast: return lhs >= rhs;
    case Relation::AtMost: return lhs <= rhs;
    case Relation::Less: return lhs < rhs;
    case Relation::Greater: return lhs > rhs;
  }
  return false;
}

bool TransformTrace::holds() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.holds(); });
}

std::vector<const Claim*> TransformTrace::violations() const {
  std::vector<const Claim*> out;
  for (const auto& c : claims)
    if (!c.holds()) out.push_back(&c);
  return out;
}

std::optional<Rat> TransformTrace::local(std::string_view name) const {
  for (const auto& l : locals)
    if (l.name == name) return l.value;
  return std::nullopt;
}

Rat lbar_minus_pi(const InvariantProfile& p) { return p.avg_distance - p.proximity; }
Rat ecc_minus_rho(const InvariantProfile& p) { return p.avg_ecc - p.remoteness; }
Rat rho_minus_r(const InvariantProfile& p) { return p.remoteness - Rat(p.radius); }

namespace {

TransformTrace start(std::string rule, const Graph& g) {
  auto s = state_of(g);
  return TransformTrace{std::move(rule), s, s, std::nullopt, {}, {}, {}, false, false};
}

void require(TransformTrace& t, std::string name, bool ok, std::string_view why) {
  if (!ok) throw PreconditionError(t.rule + ": " + std::string(why));
  t.preconditions.push_back({std::move(name), true});
}

void claim(TransformTrace& t, std::string name, Rat lhs, Relation rel, Rat rhs) {
  t.claims.push_back({std::move(name), lhs, rel, rhs});
}

void local(TransformTrace& t, std::string name, Rat value) { t.locals.push_back({std::move(name), value}); }

void finish(TransformTrace& t, const Graph& after) {
  t.after = state_of(after);
  claim(t, "order preserved", after.order(), Relation::Equal, t.before.graph.order());
}

Rat per_pair(std::int64_t a, std::int64_t n) { return Rat(a, n - 1); }

int leaf_count(const Graph& g) { return static_cast<int>(g.leaves().size()); }

std::vector<Vertex> off_path_neighbors(const Graph& g, const DiametricDecomposition& dec, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex x : g.neighbors(v))
    if (dec.position(x) < 0) out.push_back(x);
  return out;
}

/// Smallest-id leaf that is not an end of the diametric path.
std::optional<Vertex> spare_leaf(const Graph& g, const DiametricDecomposition& dec) {
  for (Vertex x : g.leaves())
    if (x != dec.path.front() && x != dec.path.back()) return x;
  return std::nullopt;
}

int max_branch_position(const Graph& g, const DiametricDecomposition& dec) {
  int best = -1;
  for (int i = 0; i <= dec.diameter(); ++i)
    if (g.degree(dec.path[i]) >= 3) best = i;
  return best;
}

bool is_path_graph(const Graph& g) { return is_tree(g) && g.order() >= 2 && leaf_count(g) == 2; }

Rat max_pi_shift(const InvariantProfile& before, const InvariantProfile& after) {
  Rat worst = after.pi_of[0] - before.pi_of[0];
  for (int v = 1; v < before.n; ++v) worst = max(worst, after.pi_of[v] - before.pi_of[v]);
  return worst;
}

}  // namespace

// ---------------------------------------------------------------- T1

TransformTrace t1_leaf_merge(const Graph& g) {
  auto t = start("T1", g);
  require(t, "tree", is_tree(g), "input is not a tree");
  const int n = g.order();
  const auto& before = t.before.profile;
  const auto dm = distance_matrix(g);

  std::vector<Vertex> branching;
  for (Vertex x = 0; x < n; ++x)
    if (g.degree(x) >= 3) branching.push_back(x);
  require(t, "branching vertex exists", !branching.empty(), "no branching vertex");

  auto furthest_branching = [&](Vertex c) {
    Vertex best = branching.front();
    for (Vertex b : branching)
      if (dm(c, b) > dm(c, best)) best = b;
    return best;
  };
  Vertex u = -1;
  Vertex v = -1;
  for (Vertex c : centroid(g)) {
    const Vertex b = furthest_branching(c);
    if (u < 0 || dm(c, b) > dm(u, v)) {
      u = c;
      v = b;
    }
  }
  const bool case_one = u != v;
  const int leaves = leaf_count(g);
  if (!case_one)
    require(t, "at least four leaves", leaves >= 4,
            "centroid is the only branching vertex of a three-leaf tree (t2 applies)");

  Vertex toward_u = -1;
  if (case_one)
    for (Vertex x : g.neighbors(v))
      if (dm(x, u) + 1 == dm(v, u)) toward_u = x;

  struct Leg {
    int length;
    Vertex first;
    Vertex end;
  };
  std::vector<Leg> legs;
  bool pendant = true;
  for (Vertex x : g.neighbors(v)) {
    if (x == toward_u) continue;
    Vertex prev = v;
    Vertex cur = x;
    int length = 1;
    while (g.degree(cur) == 2) {
      const auto nb = g.neighbors(cur);
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++length;
    }
    if (g.degree(cur) != 1) pendant = false;
    legs.push_back({length, x, cur});
  }
  require(t, "subtree at v is pendant paths", pendant && legs.size() >= 2,
          "subtree beyond the furthest branching vertex is not a union of pendant paths");
  std::sort(legs.begin(), legs.end(),
            [](const Leg& a, const Leg& b) { return std::pair(a.length, a.first) < std::pair(b.length, b.first); });
  const Leg moved = legs[0];
  const Leg receiving = legs[1];
  const int d1 = receiving.length;
  const int d2 = moved.length;
  const int rest = n - d1 - d2 - 1;
  require(t, "outside part has at least n/2 vertices", 2 * rest >= n,
          case_one ? "fewer than n/2 vertices outside the two shortest legs"
                   : "four legs of equal length (spider4 is terminal)");

  const Rat bound = Rat(d1 * d2, n - 1) * (Rat(2 * rest, n) - 1);
  local(t, "u", u);
  local(t, "v", v);
  local(t, "case", case_one ? 1 : 2);
  local(t, "d1", d1);
  local(t, "d2", d2);
  local(t, "x2", moved.first);
  local(t, "y1", receiving.end);
  local(t, "outside", rest);
  local(t, "bound", bound);

  const Edge removed[] = {{v, moved.first}};
  const Edge added[] = {{moved.first, receiving.end}};
  finish(t, g.with_edits(removed, added));
  const auto& after = t.after.profile;
  const Rat gain = lbar_minus_pi(after) - lbar_minus_pi(before);
  claim(t, "one leaf fewer", leaf_count(t.after.graph), Relation::Equal, leaves - 1);
  claim(t, "avg distance shift", after.avg_distance, Relation::Equal,
        before.avg_distance + Rat(2LL * d1 * d2 * rest, static_cast<std::int64_t>(n) * (n - 1)));
  claim(t, "pi(u) shift", after.pi_of[u], Relation::Equal, before.pi_of[u] + per_pair(d1 * d2, n));
  claim(t, "gain >= analytic bound", gain, Relation::AtLeast, bound);
  claim(t, "gain >= 0", gain, Relation::AtLeast, 0);
  return t;
}

// ---------------------------------------------------------------- T2

TransformTrace t2_balance(const Graph& g) {
  auto t = start("T2", g);
  require(t, "tree", is_tree(g), "input is not a tree");
  const auto legs = spider_legs(g);
  require(t, "3-leg spider", legs && legs->size() == 3, "not a 3-leg spider");
  const int n = g.order();
  require(t, "every leg below n/2", 2 * legs->front() < n, "a leg has at least n/2 vertices");

  Vertex hub = 0;
  while (g.degree(hub) < 3) ++hub;
  const auto dist = bfs_distances(g, hub);
  Vertex far = -1;
  Vertex near = -1;
  for (Vertex x : g.leaves()) {
    if (far < 0 || dist[x] > dist[far]) far = x;
    if (near < 0 || dist[x] < dist[near]) near = x;
  }
  const int d1 = dist[far];
  const int d2 = dist[near];
  require(t, "legs unbalanced", d1 > d2 + 1, "legs are already balanced");
  const auto cents = centroid(g);
  require(t, "centroid is the hub", cents.size() == 1 && cents.front() == hub,
          "centroid is not the branching vertex");

  const int rest = n - d1 - d2 - 1;
  local(t, "u", hub);
  local(t, "v1", far);
  local(t, "v2", near);
  local(t, "d1", d1);
  local(t, "d2", d2);
  local(t, "outside", rest);

  const Vertex parent = g.neighbors(far).front();
  const Edge removed[] = {{far, parent}};
  const Edge added[] = {{far, near}};
  finish(t, g.with_edits(removed, added));
  const auto& before = t.before.profile;
  const auto& after = t.after.profile;

  auto squares = [](const std::vector<int>& ls) {
    std::int64_t s = 0;
    for (int l : ls) s += static_cast<std::int64_t>(l) * l;
    return s;
  };
  const auto after_legs = spider_legs(t.after.graph);
  claim(t, "still a 3-leg spider", after_legs ? static_cast<int>(after_legs->size()) : 0, Relation::Equal, 3);
  if (after_legs)
    claim(t, "sum of squared legs decreases", squares(*after_legs), Relation::Less, squares(*legs));
  claim(t, "outside part at most n/2", 2 * rest, Relation::AtMost, n);
  claim(t, "pi(u) shift", after.pi_of[hub], Relation::Equal, before.pi_of[hub] - per_pair(d1 - d2 - 1, n));
  claim(t, "avg distance shift", after.avg_distance, Relation::Equal,
        before.avg_distance -
            Rat(2LL * rest * (d1 - d2 - 1), static_cast<std::int64_t>(n) * (n - 1)));
  claim(t, "gain >= 0", lbar_minus_pi(after) - lbar_minus_pi(before), Relation::AtLeast, 0);
  return t;
}

// ---------------------------------------------------------------- T3

TransformTrace t3_bfs_reduce(const Graph& g) {
  auto t = start("T3", g);
  require(t, "connected", is_connected(g), "input is not connected");
  const int n = g.order();
  const auto& before = t.before.profile;
  Vertex root = 0;
  for (Vertex x = 1; x < n; ++x)
    if (before.pi_of[x] < before.pi_of[root]) root = x;
  require(t, "root attains proximity", before.pi_of[root] == before.proximity, "no root of minimum transmission");
  local(t, "u", root);

  std::vector<int> seen(n, 0);
  std::vector<Vertex> queue{root};
  std::vector<Edge> edges;
  seen[root] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : g.neighbors(x))
      if (!seen[y]) {
        seen[y] = 1;
        edges.emplace_back(x, y);
        queue.push_back(y);
      }
  }
  const Graph tree(n, edges);
  finish(t, tree);
  t.identity = tree == g;
  const auto& after = t.after.profile;
  claim(t, "spanning tree", tree.size(), Relation::Equal, n - 1);
  claim(t, "pi(u) preserved", after.pi_of[root], Relation::Equal, before.pi_of[root]);
  claim(t, "proximity does not increase", after.proximity, Relation::AtMost, before.proximity);
  claim(t, "avg distance does not decrease", after.avg_distance, Relation::AtLeast, before.avg_distance);
  claim(t, "gain >= 0", lbar_minus_pi(after) - lbar_minus_pi(before), Relation::AtLeast, 0);
  return t;
}

// ---------------------------------------------------------------- T4

TransformTrace t4_leaf_to_diameter_end(const Graph& g) {
  auto t = start("T4", g);
  require(t, "tree", is_tree(g), "input is not a tree");
  const int n = g.order();
  auto dec = diametric_decomposition(g);
  const auto w = spare_leaf(g, dec);
  require(t, "leaf off the path", w.has_value(), "no leaf off the diametric path");
  const int D = dec.diameter();
  bool flipped = false;
  int j = max_branch_position(g, dec);
  if (2 * j > D) {
    dec = dec.reversed();
    j = max_branch_position(g, dec);
    flipped = true;
  }
  require(t, "far half bare", 2 * j <= D, "branching on both halves of the diametric path (t5 applies)");

  const Vertex vD = dec.path.back();
  const auto dist = bfs_distances(g, vD);
  const int dw = dist[*w];
  local(t, "j", j);
  local(t, "reversed", flipped ? 1 : 0);
  local(t, "w", *w);
  local(t, "d_w", dw);
  const auto& before = t.before.profile;
  local(t, "rho attained at v_D", before.remoteness == before.pi_of[vD] ? 1 : 0);

  const Edge removed[] = {{*w, g.neighbors(*w).front()}};
  const Edge added[] = {{vD, *w}};
  finish(t, g.with_edits(removed, added));
  const auto& after = t.after.profile;
  claim(t, "diameter grows by one", after.diameter, Relation::Equal, D + 1);
  claim(t, "2 d_w >= D + 2", 2 * dw, Relation::AtLeast, D + 2);
  claim(t, "pi'(w) identity", after.pi_of[*w], Relation::Equal, before.pi_of[vD] + per_pair(n - 1 - dw, n));
  claim(t, "ecc lower bound", after.avg_ecc, Relation::AtLeast, before.avg_ecc + Rat(2 * n - D - 1, 2 * n));
  claim(t, "remoteness upper bound", after.remoteness, Relation::AtMost,
        before.remoteness + Rat(2 * n - D - 3, 2 * (n - 1)));
  claim(t, "gain >= 0", ecc_minus_rho(after) - ecc_minus_rho(before), Relation::AtLeast, 0);
  return t;
}

// ---------------------------------------------------------------- T5

TransformTrace t5_split_branches(const Graph& g) {
  auto t = start("T5", g);
  require(t, "tree", is_tree(g), "input is not a tree");
  const int n = g.order();
  const auto base = diametric_decomposition(g);
  const int D = base.diameter();

  auto pick = [&](const DiametricDecomposition& dec) -> std::optional<std::pair<int, int>> {
    int j = -1;
    int k = -1;
    for (int i = 1; i < D; ++i) {
      if (g.degree(dec.path[i]) < 3) continue;
      if (2 * i <= D) j = i;
      else if (k < 0) k = i;
    }
    if (j < 0 || k < 0) return std::nullopt;
    return std::pair(j, k);
  };
  auto dec = base;
  auto jk = pick(dec);
  bool flipped = false;
  if (!jk) {
    dec = base.reversed();
    jk = pick(dec);
    flipped = true;
  }
  require(t, "branch pair straddles the middle", jk.has_value(),
          "no branch vertices v_j, v_k with j <= D/2 < k (t4 applies)");
  const auto [j, k] = *jk;
  const Vertex vj = dec.path[j];
  const Vertex vk = dec.path[k];
  const Vertex wj = off_path_neighbors(g, dec, vj).front();
  const Vertex wk = off_path_neighbors(g, dec, vk).front();

  const auto dm = distance_matrix(g);
  std::vector<int> cls(n, 0);
  std::int64_t x[6] = {0, 0, 0, 0, 0, 0};
  for (Vertex y = 0; y < n; ++y) {
    const int c = dec.component_of[y];
    int part;
    if (y == vj || y == vk || (c > j && c < k)) part = 3;
    else if (c < j) part = 1;
    else if (c > k) part = 5;
    else if (c == j) part = dm(y, wj) < dm(y, vj) ? 2 : 1;
    else part = dm(y, wk) < dm(y, vk) ? 4 : 5;
    cls[y] = part;
    ++x[part];
  }
  const Rat delta1(2 * x[1] + x[2] + x[3] + x[4] + 2 * x[5], n);
  const Rat delta2 = per_pair(-x[2] + x[3] + x[4] + 2 * x[5], n);
  const Rat delta3 = per_pair(-x[1] + x[5], n);
  const Rat delta4 = per_pair(x[1] + x[5], n);
  const Rat delta3_far = per_pair(x[1] - x[5], n);
  const Rat delta2_far = per_pair(2 * x[1] + x[2] + x[3] - x[4], n);
  local(t, "j", j);
  local(t, "k", k);
  local(t, "reversed", flipped ? 1 : 0);
  local(t, "w_j", wj);
  local(t, "w_k", wk);
  for (int i = 1; i <= 5; ++i) local(t, "x" + std::to_string(i), x[i]);
  local(t, "delta1", delta1);
  local(t, "delta2", delta2);
  local(t, "delta3", delta3);
  local(t, "delta4", delta4);

  std::vector<Edge> removed;
  std::vector<Edge> added;
  for (Vertex y : g.neighbors(vj))
    if (y != wj && y != dec.path[j + 1]) {
      removed.emplace_back(y, vj);
      added.emplace_back(y, wj);
    }
  for (Vertex y : g.neighbors(vk))
    if (y != wk && y != dec.path[k - 1]) {
      removed.emplace_back(y, vk);
      added.emplace_back(y, wk);
    }
  finish(t, g.with_edits(removed, added));
  const auto& before = t.before.profile;
  const auto& after = t.after.profile;

  const Rat shift_of[6] = {0, delta2, delta3, delta4, delta3_far, delta2_far};
  int mismatches = 0;
  Rat worst = 0;
  bool first = true;
  for (Vertex y = 0; y < n; ++y) {
    if (after.pi_of[y] - before.pi_of[y] != shift_of[cls[y]]) ++mismatches;
    const Rat gain = (after.avg_ecc - after.pi_of[y]) - (before.avg_ecc - before.pi_of[y]);
    if (first || gain < worst) worst = gain;
    first = false;
  }
  claim(t, "diameter grows by two", after.diameter, Relation::Equal, D + 2);
  claim(t, "ecc shift is delta1", after.avg_ecc, Relation::Equal, before.avg_ecc + delta1);
  claim(t, "delta1 >= delta2", delta1, Relation::AtLeast, delta2);
  claim(t, "delta1 >= delta3", delta1, Relation::AtLeast, delta3);
  claim(t, "delta1 >= delta4", delta1, Relation::AtLeast, delta4);
  claim(t, "pi shifts match the partition", mismatches, Relation::Equal, 0);
  claim(t, "every ecc - pi(v) non-decreasing", worst, Relation::AtLeast, 0);
  claim(t, "gain >= 0", ecc_minus_rho(after) - ecc_minus_rho(before), Relation::AtLeast, 0);
  return t;
}

// ---------------------------------------------------------------- T6

TransformTrace t6_caterpillarize(const Graph& g) {
  auto t = start("T6", g);
  require(t, "tree", is_tree(g), "input is not a tree");
  const int n = g.order();
  const auto dec = diametric_decomposition(g);
  const auto& path = dec.path;
  if (is_caterpillar(g)) {
    t.identity = true;
    finish(t, g);
    return t;
  }

  Graph cur = g;
  int steps = 0;
  for (;;) {
    // Rooted structure of the hanging subtrees relative to the fixed path.
    std::vector<int> comp(n, -1), depth(n, 0);
    std::vector<Vertex> parent(n, -1), queue;
    for (int i = 0; i <= dec.diameter(); ++i) {
      comp[path[i]] = i;
      queue.push_back(path[i]);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (Vertex y : cur.neighbors(x))
        if (comp[y] < 0) {
          comp[y] = comp[x];
          depth[y] = depth[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        }
    }
    Vertex v = -1;
    for (int i = 0; i <= dec.diameter() && v < 0; ++i)
      for (Vertex y = 0; y < n; ++y)
        if (comp[y] == i && depth[y] >= 1 && cur.degree(y) >= 2 && (v < 0 || depth[y] > depth[v])) v = y;
    if (v < 0) break;

    const Vertex u = parent[v];
    std::vector<Edge> removed, added;
    for (Vertex y : cur.neighbors(v))
      if (y != u) {
        removed.emplace_back(y, v);
        added.emplace_back(y, u);
      }
    const auto step_before = invariant_profile(cur);
    cur = cur.with_edits(removed, added);
    const auto step_after = invariant_profile(cur);
    const std::string tag = "step" + std::to_string(steps);
    local(t, tag + ".v", v);
    local(t, tag + ".u", u);
    local(t, tag + ".leaves", static_cast<std::int64_t>(removed.size()));
    claim(t, tag + " remoteness does not increase", step_after.remoteness, Relation::AtMost,
          step_before.remoteness);
    ++steps;
  }
  local(t, "steps", steps);
  finish(t, cur);
  const auto& before = t.before.profile;
  const auto& after = t.after.profile;
  claim(t, "caterpillar", is_caterpillar(cur) ? 1 : 0, Relation::Equal, 1);
  claim(t, "diameter preserved", after.diameter, Relation::Equal, before.diameter);
  claim(t, "radius preserved", after.radius, Relation::Equal, before.radius);
  claim(t, "remoteness does not increase", after.remoteness, Relation::AtMost, before.remoteness);
  return t;
}

// ---------------------------------------------------------------- caterpillar rules

namespace {

/// Every spine vertex at a position in [from, D] has degree <= 2.
bool bare_from(const Graph& g, const DiametricDecomposition& dec, int from) {
  for (int k = std::max(from, 0); k <= dec.diameter(); ++k)
    if (g.degree(dec.path[k]) > 2) return false;
  return true;
}

/// Every spine vertex other than positions a and b has degree <= 2.
bool bare_except(const Graph& g, const DiametricDecomposition& dec, int a, int b) {
  for (int k = 0; k <= dec.diameter(); ++k)
    if (k != a && k != b && g.degree(dec.path[k]) > 2) return false;
  return true;
}

void require_proper_caterpillar(TransformTrace& t, const Graph& g) {
  require(t, "tree", is_tree(g), "input is not a tree");
  require(t, "caterpillar", is_caterpillar(g), "input is not a caterpillar");
  require(t, "not a path", !is_path_graph(g), "input is a path");
}

struct CentroidPair {
  DiametricDecomposition dec;
  int j;  // position of the first centroid; the second sits at j + 1
};

/// Two adjacent centroids on the diametric path, positions ascending.
CentroidPair centroid_pair(TransformTrace& t, const Graph& g, std::string_view single_hint) {
  const auto cents = centroid(g);
  if (cents.size() == 1) {
    if (g.order() % 2 == 1)
      throw PreconditionError(t.rule + ": two centroidal vertices are impossible for odd n");
    throw PreconditionError(t.rule + ": single centroidal vertex (" + std::string(single_hint) + " applies)");
  }
  t.preconditions.push_back({"two centroidal vertices", true});
  auto dec = diametric_decomposition(g);
  int p = dec.position(cents[0]);
  int q = dec.position(cents[1]);
  if (p > q) std::swap(p, q);
  require(t, "centroids adjacent on the path", p >= 0 && q == p + 1, "centroids are not on the diametric path");
  return {std::move(dec), p};
}

Graph splice_between(const Graph& g, Vertex w, Vertex a, Vertex b) {
  const Edge removed[] = {{w, g.neighbors(w).front()}, {a, b}};
  const Edge added[] = {{a, w}, {w, b}};
  return g.with_edits(removed, added);
}

}  // namespace

TransformTrace t7_extend_single_centroid(const Graph& g) {
  auto t = start("T7", g);
  require_proper_caterpillar(t, g);
  const int n = g.order();
  const auto cents = centroid(g);
  require(t, "single centroidal vertex", cents.size() == 1, "two centroidal vertices (t8, t9 or t10 apply)");
  auto dec = diametric_decomposition(g);
  int j = dec.position(cents.front());
  require(t, "centroid on the path", j >= 0, "centroid is off the diametric path");
  bool flipped = false;
  if (!bare_from(g, dec, j + 1)) {
    dec = dec.reversed();
    j = dec.diameter() - j;
    flipped = true;
  }
  require(t, "far side bare", bare_from(g, dec, j + 1), "spine vertices beyond the centroid on both sides carry leaves");
  const int D = dec.diameter();
  const auto& path = dec.path;
  const Vertex vj = path[j];
  const Vertex vD = path.back();
  const auto& before = t.before.profile;
  local(t, "j", j);
  local(t, "reversed", flipped ? 1 : 0);
  local(t, "rho attained at v_D", before.remoteness == before.pi_of[vD] ? 1 : 0);

  Graph out = g;
  if (g.degree(vj) == 2) {
    const Vertex w = *spare_leaf(g, dec);
    local(t, "case", 1);
    local(t, "w", w);
    local(t, "2j <= D", 2 * j <= D ? 1 : 0);
    out = splice_between(g, w, path[j - 1], vj);
  } else {
    const auto hanging = off_path_neighbors(g, dec, vj);
    const Vertex w = hanging.front();
    int left = 0;
    int right = 0;
    for (Vertex y = 0; y < n; ++y) {
      if (dec.component_of[y] < j) ++left;
      if (dec.component_of[y] > j) ++right;
    }
    const int target = (n - 1) / 2;
    std::vector<Vertex> moved;
    for (std::size_t i = 1; i < hanging.size() && right + static_cast<int>(moved.size()) < target; ++i)
      moved.push_back(hanging[i]);
    const int kept = static_cast<int>(hanging.size()) - 1 - static_cast<int>(moved.size());
    local(t, "case", 2);
    local(t, "w", w);
    local(t, "|V_L|", left);
    local(t, "|V_R|", right);
    local(t, "|V'_j|", kept);
    local(t, "|V''_j|", static_cast<std::int64_t>(moved.size()));
    claim(t, "|V_L u V'_j| <= (n-1)/2", 2 * (left + kept), Relation::AtMost, n - 1);
    claim(t, "|V_R u V''_j| <= (n-1)/2", 2 * (right + static_cast<int>(moved.size())), Relation::AtMost, n - 1);
    std::vector<Edge> removed{{vj, path[j + 1]}};
    std::vector<Edge> added{{w, path[j + 1]}};
    for (Vertex y : moved) {
      removed.emplace_back(y, vj);
      added.emplace_back(y, w);
    }
    out = g.with_edits(removed, added);
  }
  finish(t, out);
  const auto& after = t.after.profile;
  claim(t, "caterpillar", is_caterpillar(out) ? 1 : 0, Relation::Equal, 1);
  claim(t, "diameter grows by one", after.diameter, Relation::Equal, D + 1);
  claim(t, "remoteness grows by at most 1/2", after.remoteness, Relation::AtMost, before.remoteness + Rat(1, 2));
  if (t.local("case") == Rat(1))
    claim(t, "pi(v_D) bound", after.pi_of[vD], Relation::AtMost, before.pi_of[vD] + Rat(n - 2, 2 * (n - 1)));
  else
    claim(t, "every pi(v) grows by at most 1/2", max_pi_shift(before, after), Relation::AtMost, Rat(1, 2));
  return t;
}

TransformTrace t8_extend_two_centroids(const Graph& g) {
  auto t = start("T8", g);
  require_proper_caterpillar(t, g);
  const int n = g.order();
  auto [dec, j] = centroid_pair(t, g, "t7");
  bool flipped = false;
  if (!bare_from(g, dec, j + 1)) {
    dec = dec.reversed();
    j = dec.diameter() - j - 1;
    flipped = true;
  }
  require(t, "far side bare", bare_from(g, dec, j + 1),
          "the second centroid or the spine beyond it carries leaves (t9 or t10 apply)");
  const auto w = spare_leaf(g, dec);
  require(t, "leaf off the path", w.has_value(), "no leaf off the diametric path");
  const int D = dec.diameter();
  const Vertex vD = dec.path.back();
  const auto& before = t.before.profile;
  local(t, "j", j);
  local(t, "reversed", flipped ? 1 : 0);
  local(t, "w", *w);
  local(t, "rho attained at v_D", before.remoteness == before.pi_of[vD] ? 1 : 0);

  finish(t, splice_between(g, *w, dec.path[j], dec.path[j + 1]));
  const auto& after = t.after.profile;
  local(t, "rho still attained at v_D", after.remoteness == after.pi_of[vD] ? 1 : 0);
  claim(t, "caterpillar", is_caterpillar(t.after.graph) ? 1 : 0, Relation::Equal, 1);
  claim(t, "diameter grows by one", after.diameter, Relation::Equal, D + 1);
  claim(t, "remoteness grows by at most 1/2", after.remoteness, Relation::AtMost, before.remoteness + Rat(1, 2));
  claim(t, "pi(v_D) bound", after.pi_of[vD], Relation::AtMost, before.pi_of[vD] + Rat(n - 2, 2 * (n - 1)));
  return t;
}

TransformTrace t9_rebalance_centroid_leaves(const Graph& g) {
  auto t = start("T9", g);
  require_proper_caterpillar(t, g);
  auto [dec, j] = centroid_pair(t, g, "t7");
  const int D = dec.diameter();
  require(t, "centroid degrees differ", g.degree(dec.path[j]) != g.degree(dec.path[j + 1]),
          "centroid degrees are equal (t10 applies)");
  require(t, "rest of spine bare", bare_except(g, dec, j, j + 1), "spine vertices other than the centroids carry leaves");
  bool flipped = false;
  if (j > D - (j + 1)) {
    dec = dec.reversed();
    j = D - j - 1;
    flipped = true;
  }
  const int d1 = j;
  const int d2 = D - (j + 1);
  local(t, "j", j);
  local(t, "reversed", flipped ? 1 : 0);
  local(t, "d1", d1);
  local(t, "d2", d2);
  claim(t, "d1 < d2", d1, Relation::Less, d2);

  const Vertex vj = dec.path[j];
  const Vertex vj1 = dec.path[j + 1];
  std::vector<Edge> removed, added;
  for (Vertex y : off_path_neighbors(g, dec, vj)) {
    removed.emplace_back(y, vj);
    added.emplace_back(y, vj1);
  }
  local(t, "moved leaves", static_cast<std::int64_t>(removed.size()));
  finish(t, g.with_edits(removed, added));
  const auto& before = t.before.profile;
  const auto& after = t.after.profile;
  claim(t, "caterpillar", is_caterpillar(t.after.graph) ? 1 : 0, Relation::Equal, 1);
  claim(t, "diameter preserved", after.diameter, Relation::Equal, D);
  claim(t, "remoteness does not increase", after.remoteness, Relation::AtMost, before.remoteness);

  // Second half: the diameter extension that applies to the rebalanced tree.
  std::optional<Graph> next;
  int via = 0;
  for (auto [rule, fn] : {std::pair{8, &t8_extend_two_centroids}, std::pair{7, &t7_extend_single_centroid}}) {
    try {
      next = fn(t.after.graph).after.graph;
      via = rule;
      break;
    } catch (const PreconditionError&) {
    }
  }
  if (!next) {
    DiametricDecomposition same = dec;
    next = splice_between(t.after.graph, *spare_leaf(t.after.graph, same), vj, vj1);
  }
  local(t, "followup rule", via);
  t.followup = state_of(*next);
  const auto& last = t.followup->profile;
  claim(t, "followup diameter grows by one", last.diameter, Relation::Equal, D + 1);
  claim(t, "followup remoteness grows by at most 1/2", last.remoteness, Relation::AtMost,
        before.remoteness + Rat(1, 2));
  return t;
}

TransformTrace t10_double_extend_equal(const Graph& g) {
  auto t = start("T10", g);
  require_proper_caterpillar(t, g);
  const auto [dec, j] = centroid_pair(t, g, "t7");
  const int D = dec.diameter();
  const Vertex vj = dec.path[j];
  const Vertex vj1 = dec.path[j + 1];
  require(t, "centroid degrees equal", g.degree(vj) == g.degree(vj1), "centroid degrees differ (t9 applies)");
  require(t, "rest of spine bare", bare_except(g, dec, j, j + 1), "spine vertices other than the centroids carry leaves");
  const auto left = off_path_neighbors(g, dec, vj);
  const auto right = off_path_neighbors(g, dec, vj1);
  require(t, "both centroids carry leaves", !left.empty() && !right.empty(), "a centroid carries no pendant leaf");
  const Vertex w1 = left.front();
  const Vertex w2 = right.front();
  local(t, "j", j);
  local(t, "d1", j);
  local(t, "d2", D - j - 1);
  local(t, "w1", w1);
  local(t, "w2", w2);
  claim(t, "d1 == d2", j, Relation::Equal, D - j - 1);

  const Edge removed[] = {{vj, vj1}};
  const Edge added[] = {{w1, w2}};
  finish(t, g.with_edits(removed, added));
  const auto& before = t.before.profile;
  const auto& mid = t.after.profile;
  claim(t, "diameter grows by two", mid.diameter, Relation::Equal, D + 2);
  claim(t, "radius grows by one", mid.radius, Relation::Equal, before.radius + 1);
  claim(t, "remoteness grows by at most 1", mid.remoteness, Relation::AtMost, before.remoteness + 1);
  claim(t, "rho - r does not increase", rho_minus_r(mid), Relation::AtMost, rho_minus_r(before));

  std::vector<Edge> off, on;
  for (std::size_t i = 1; i < left.size(); ++i) {
    off.emplace_back(left[i], vj);
    on.emplace_back(left[i], w1);
  }
  for (std::size_t i = 1; i < right.size(); ++i) {
    off.emplace_back(right[i], vj1);
    on.emplace_back(right[i], w2);
  }
  local(t, "re-hung leaves", static_cast<std::int64_t>(off.size()));
  if (!off.empty()) {
    t.followup = state_of(t.after.graph.with_edits(off, on));
    const auto& last = t.followup->profile;
    claim(t, "re-hang keeps the radius", last.radius, Relation::Equal, mid.radius);
    claim(t, "re-hang keeps the remoteness", last.remoteness, Relation::Equal, mid.remoteness);
  }
  return t;
}

TransformTrace shift_toward_centroid(const Graph& g) {
  auto t = start("S", g);
  require(t, "tree", is_tree(g), "input is not a tree");
  require(t, "caterpillar", is_caterpillar(g), "input is not a caterpillar");
  const auto dec = diametric_decomposition(g);
  const int D = dec.diameter();
  std::vector<int> positions;
  for (Vertex c : centroid(g)) {
    positions.push_back(dec.position(c));
    require(t, "centroid on the path", positions.back() >= 0, "centroid is off the diametric path");
  }
  std::sort(positions.begin(), positions.end());
  // Either centroid may serve as v_j; the first one with leaves on both sides is used.
  int j = -1;
  int k = -1;
  int l = -1;
  for (int p : positions) {
    int left = -1;
    for (int i = 1; i < p; ++i)
      if (!off_path_neighbors(g, dec, dec.path[i]).empty()) left = i;
    int right = -1;
    for (int i = D - 1; i > p; --i)
      if (!off_path_neighbors(g, dec, dec.path[i]).empty()) right = i;
    if (left > 0 && right > 0) {
      j = p;
      k = left;
      l = right;
      break;
    }
  }
  require(t, "leaves on both sides", j >= 0, "off-path leaves lie on at most one side of each centroid");
  local(t, "j", j);
  const Vertex a = off_path_neighbors(g, dec, dec.path[k]).front();
  const Vertex b = off_path_neighbors(g, dec, dec.path[l]).front();
  local(t, "k", k);
  local(t, "l", l);
  const Edge removed[] = {{a, dec.path[k]}, {b, dec.path[l]}};
  const Edge added[] = {{a, dec.path[k + 1]}, {b, dec.path[l - 1]}};
  finish(t, g.with_edits(removed, added));
  const auto& before = t.before.profile;
  const auto& after = t.after.profile;
  claim(t, "diameter preserved", after.diameter, Relation::Equal, D);
  claim(t, "radius preserved", after.radius, Relation::Equal, before.radius);
  claim(t, "remoteness does not increase", after.remoteness, Relation::AtMost, before.remoteness);
  return t;
}

TransformTrace apply_rule(std::string_view rule, const Graph& g) {
  std::string id(rule);
  for (auto& c : id) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (id == "T1") return t1_leaf_merge(g);
  if (id == "T2") return t2_balance(g);
  if (id == "T3") return t3_bfs_reduce(g);
  if (id == "T4") return t4_leaf_to_diameter_end(g);
  if (id == "T5") return t5_split_branches(g);
  if (id == "T6") return t6_caterpillarize(g);
  if (id == "T7") return t7_extend_single_centroid(g);
  if (id == "T8") return t8_extend_two_centroids(g);
  if (id == "T9") return t9_rebalance_centroid_leaves(g);
  if (id == "T10") return t10_double_extend_equal(g);
  throw InputError("unknown rule '" + std::string(rule) + "' (expected T1..T10)");
}

}  // namespace dit
