#include "dit/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

#include "dit/canonical.hpp"
#include "dit/error.hpp"
#include "dit/invariants.hpp"

namespace dit {

GraphClass parse_graph_class(std::string_view name) {
  if (name == "tree") return GraphClass::Tree;
  if (name == "caterpillar") return GraphClass::Caterpillar;
  if (name == "connected") return GraphClass::Connected;
  throw InputError("unknown graph class '" + std::string(name) + "' (tree|caterpillar|connected)");
}

std::string_view to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Tree: return "tree";
    case GraphClass::Caterpillar: return "caterpillar";
    case GraphClass::Connected: return "connected";
  }
  return "?";
}

int class_cap(GraphClass c, bool allow_large) {
  if (c == GraphClass::Connected) return allow_large ? kConnectedLargeCap : kConnectedCap;
  return kTreeCap;
}

namespace {

void check_order(GraphClass c, int n, bool allow_large) {
  int cap = class_cap(c, allow_large);
  if (n < 1 || n > cap) {
    throw InputError("n=" + std::to_string(n) + " outside 1.." + std::to_string(cap) + " for class " +
                     std::string(to_string(c)));
  }
}

std::vector<Graph> sorted_by_code(std::map<CanonicalCode, Graph> classes) {
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [code, g] : classes) out.push_back(std::move(g));
  return out;
}

}  // namespace

void for_each_rooted_level_sequence(int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> level(n);
  for (int i = 0; i < n; ++i) level[i] = i;
  for (;;) {
    visit(level);
    // Successor: last position deeper than 1, copy the block starting at its
    // nearest earlier parent-level vertex.
    int p = n - 1;
    while (p > 0 && level[p] <= 1) --p;
    if (p <= 0) return;
    int q = p - 1;
    while (level[q] != level[p] - 1) --q;
    for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
}

Graph tree_from_level_sequence(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  std::vector<Edge> edges;
  std::vector<Vertex> last_at_level(n + 1, -1);
  for (int i = 0; i < n; ++i) {
    if (i > 0) edges.emplace_back(last_at_level.at(levels[i] - 1), i);
    last_at_level[levels[i]] = i;
  }
  return Graph(n, edges);
}

std::vector<Graph> free_trees(int n) {
  check_order(GraphClass::Tree, n, false);
  std::map<CanonicalCode, Graph> classes;
  for_each_rooted_level_sequence(n, [&](const std::vector<int>& levels) {
    Graph t = tree_from_level_sequence(levels);
    auto cents = centroid(t);
    if (std::find(cents.begin(), cents.end(), 0) == cents.end()) return;
    if (cents.size() == 2) {
      Vertex other = cents[0] == 0 ? cents[1] : cents[0];
      if (canonical_level_sequence(t, other) > levels) return;
    }
    Graph rep = canonical_form(t);
    classes.emplace(canonical_code(rep), std::move(rep));
  });
  return sorted_by_code(std::move(classes));
}

std::vector<Graph> caterpillars(int n) {
  check_order(GraphClass::Caterpillar, n, false);
  std::vector<Graph> out;
  for (Graph& t : free_trees(n)) {
    if (is_caterpillar(t)) out.push_back(std::move(t));
  }
  return out;
}

namespace {

// Every connected graph on n >= 2 vertices has a vertex whose removal keeps it
// connected, so attaching a new vertex to every nonempty subset of every
// connected (n-1)-graph reaches each class at least once.
std::vector<Graph> extend_connected(const std::vector<Graph>& smaller, int jobs) {
  const int base = smaller.front().order();
  const std::uint32_t subsets = (std::uint32_t{1} << base) - 1;
  const std::size_t total = smaller.size() * subsets;
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(total)));
  std::vector<std::map<CanonicalCode, Graph>> partial(jobs);
  auto work = [&](int worker) {
    auto& classes = partial[worker];
    for (std::size_t idx = worker; idx < total; idx += jobs) {
      const Graph& g = smaller[idx / subsets];
      const std::uint32_t mask = static_cast<std::uint32_t>(idx % subsets) + 1;
      std::vector<Edge> edges = g.edges();
      for (int v = 0; v < base; ++v) {
        if (mask >> v & 1U) edges.emplace_back(v, base);
      }
      Graph h(base + 1, edges);
      CanonicalCode code = canonical_code(h, kGeneralCanonicalMax);
      if (!classes.contains(code)) classes.emplace(std::move(code), canonical_form(h, kGeneralCanonicalMax));
    }
  };
  std::vector<std::thread> threads;
  for (int w = 1; w < jobs; ++w) threads.emplace_back(work, w);
  work(0);
  for (auto& t : threads) t.join();
  std::map<CanonicalCode, Graph> merged;
  for (auto& part : partial) merged.merge(part);
  return sorted_by_code(std::move(merged));
}

}  // namespace

std::vector<Graph> connected_graphs(int n, const EnumerationOptions& options) {
  check_order(GraphClass::Connected, n, options.allow_large);
  static std::mutex cache_mutex;
  static std::map<int, std::vector<Graph>> cache;
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Graph> result;
  if (n == 1) {
    result.push_back(Graph(1, std::span<const Edge>{}));
  } else {
    EnumerationOptions smaller = options;
    smaller.allow_large = true;
    result = extend_connected(connected_graphs(n - 1, smaller), options.jobs);
  }
  std::lock_guard lock(cache_mutex);
  cache.emplace(n, result);
  return result;
}

std::vector<Graph> enumerate_class(GraphClass c, int n, const EnumerationOptions& options) {
  switch (c) {
    case GraphClass::Tree: return free_trees(n);
    case GraphClass::Caterpillar: return caterpillars(n);
    case GraphClass::Connected: return connected_graphs(n, options);
  }
  return {};
}

}  // namespace dit
