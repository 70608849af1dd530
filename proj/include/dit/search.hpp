#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dit/canonical.hpp"
#include "dit/enumerate.hpp"
#include "dit/expr.hpp"
#include "dit/graph.hpp"
#include "dit/rational.hpp"

namespace dit {

enum class Direction { Maximize, Minimize };
std::string_view to_string(Direction d);

struct Witness {
  CanonicalCode code;
  Graph graph;  // canonical form
};

struct ExtremalResult {
  int n = 0;
  Rat extremal_value;
  std::vector<Witness> witnesses;  // ascending code
  std::size_t class_size = 0;
  std::size_t tie_count = 0;

  bool has_witness(const CanonicalCode& code) const;
};

/// Exhaustive extremum of `objective` over the class. Workers split the
/// enumerated graphs by index; the merged result does not depend on the
/// worker count. Throws InputError above the class cap or below n = 2.
ExtremalResult search_extremal(GraphClass cls, int n, const ExprPtr& objective, Direction direction,
                               const EnumerationOptions& options = {});

struct ConjectureSpec {
  std::string_view id;
  GraphClass graph_class;
  std::string_view objective;
  Direction direction;
  std::string_view family_odd;
  std::string_view family_even;
  std::string_view bound_odd;  // empty when the entry carries no bound
  std::string_view bound_even;
  int min_n;
  std::string_view summary;

  std::string_view family_for(int n) const { return n % 2 == 1 ? family_odd : family_even; }
  std::string_view bound_for(int n) const { return n % 2 == 1 ? bound_odd : bound_even; }
};

std::span<const ConjectureSpec> conjecture_catalog();
/// Throws InputError for unknown ids.
const ConjectureSpec& find_conjecture(std::string_view id);

struct ConjectureRow {
  int n = 0;
  Rat extremal_value;
  std::optional<Rat> bound_value;
  Rat family_value;
  std::string family;
  bool family_is_extremal = false;
  bool bound_respected = true;  // vacuously true without a bound
  bool bound_tight = false;
  std::size_t class_size = 0;
  std::vector<Witness> witnesses;
};

struct ConjectureReport {
  std::string id;
  std::vector<ConjectureRow> rows;

  /// familyIsExtremal and boundRespected on every row.
  bool all_hold() const;
};

/// One row per n in [min_n, max_n]. Reports only; never asserts.
ConjectureReport verify_conjecture(const ConjectureSpec& spec, int min_n, int max_n,
                                   const EnumerationOptions& options = {});

}  // namespace dit
