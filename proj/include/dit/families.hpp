#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dit/graph.hpp"
#include "dit/invariants.hpp"
#include "dit/rational.hpp"

namespace dit {

Graph make_path(int n);
Graph make_cycle(int n);
/// Center 0 and pendant paths of the given lengths, numbered leg after leg.
Graph make_spider(std::span<const int> legs);
/// Three legs whose lengths are the balanced partition of n-1, longest first.
Graph make_spider3(int n);
/// Four legs of length k; n = 4k + 1.
Graph make_spider4(int k);
/// P_{n-1} on 0..n-2 with leaf n-1 on its center (smaller center for odd n).
Graph make_broom(int n);
/// C_n plus chords (0,2) and (1,3).
Graph make_crossed_cycle(int n);
/// Uniform labeled tree from a seeded random Pruefer sequence.
Graph make_random_tree(int n, std::uint64_t seed);

/// Balanced split of `total` into `parts` lengths, longest first.
std::vector<int> balanced_partition(int total, int parts);

/// Leg lengths (descending) if g is a tree with exactly one vertex of degree
/// >= 3 and every other vertex of degree <= 2; nullopt otherwise.
std::optional<std::vector<int>> spider_legs(const Graph& g);

struct FamilyInfo {
  std::string_view id;
  int min_n;
};
std::span<const FamilyInfo> family_catalog();
/// Family by name: path, cycle, spider3, spider4 (n = 4k+1), broom, crossed_cycle.
Graph make_family(std::string_view id, int n);

enum class Parity { Any, Odd, Even, OneModFour };
bool parity_admits(Parity p, int n);

/// A closed-form value of some invariant as an exact function of n.
struct ClosedForm {
  std::string_view id;
  std::string_view family;  // family whose profile it describes; empty for pure bounds
  Parity parity;
  int min_n;
  Rat (*formula)(std::int64_t n);
  Rat (*measured)(const InvariantProfile& p);  // nullptr for pure bounds
};

std::span<const ClosedForm> closed_form_registry();
const ClosedForm& find_closed_form(std::string_view id);
/// Throws InputError when n lies outside the entry's domain or parity.
Rat closed_form(std::string_view id, int n);

}  // namespace dit
