#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "dit/graph.hpp"

namespace dit {

enum class GraphClass { Tree, Caterpillar, Connected };

GraphClass parse_graph_class(std::string_view name);
std::string_view to_string(GraphClass c);

inline constexpr int kTreeCap = 16;
inline constexpr int kConnectedCap = 7;
inline constexpr int kConnectedLargeCap = 8;

struct EnumerationOptions {
  int jobs = 1;
  bool allow_large = false;  // lifts the connected cap from 7 to 8
};

int class_cap(GraphClass c, bool allow_large = false);

/// Rooted level sequences in generation order, starting from the path and
/// ending with the star (each rooted tree exactly once).
void for_each_rooted_level_sequence(int n, const std::function<void(const std::vector<int>&)>& visit);

/// Tree with vertex i at depth levels[i], parent = nearest earlier vertex one level up.
Graph tree_from_level_sequence(const std::vector<int>& levels);

/// One canonical representative per isomorphism class, ascending canonical code.
std::vector<Graph> free_trees(int n);
std::vector<Graph> caterpillars(int n);
std::vector<Graph> connected_graphs(int n, const EnumerationOptions& options = {});
std::vector<Graph> enumerate_class(GraphClass c, int n, const EnumerationOptions& options = {});

}  // namespace dit
