#include "dit/search.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <thread>

#include "dit/error.hpp"
#include "dit/families.hpp"
#include "dit/invariants.hpp"

namespace dit {

std::string_view to_string(Direction d) { return d == Direction::Maximize ? "max" : "min"; }

bool ExtremalResult::has_witness(const CanonicalCode& code) const {
  return std::ranges::binary_search(witnesses, code, {}, &Witness::code);
}

namespace {

struct Partial {
  std::optional<Rat> best;
  std::vector<std::size_t> hits;
  std::exception_ptr error;
};

bool better(const Rat& a, const Rat& b, Direction d) { return d == Direction::Maximize ? a > b : a < b; }

void scan(const std::vector<Graph>& graphs, const ExprPtr& objective, Direction direction, std::size_t start,
          std::size_t stride, Partial& out) {
  try {
    for (std::size_t i = start; i < graphs.size(); i += stride) {
      const Rat value = eval_expr(objective, invariant_profile(graphs[i]));
      if (!out.best || better(value, *out.best, direction)) {
        out.best = value;
        out.hits.clear();
      }
      if (value == *out.best) out.hits.push_back(i);
    }
  } catch (...) {
    out.error = std::current_exception();
  }
}

}  // namespace

ExtremalResult search_extremal(GraphClass cls, int n, const ExprPtr& objective, Direction direction,
                               const EnumerationOptions& options) {
  if (n < 2) throw InputError("search needs n >= 2 (distance invariants are undefined for n = 1)");
  const int cap = class_cap(cls, options.allow_large);
  if (n > cap)
    throw InputError("n=" + std::to_string(n) + " exceeds the " + std::string(to_string(cls)) + " cap of " +
                     std::to_string(cap));
  const auto graphs = enumerate_class(cls, n, options);
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, options.jobs));

  std::vector<Partial> parts(jobs);
  if (jobs == 1) {
    scan(graphs, objective, direction, 0, 1, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t)
      pool.emplace_back(scan, std::cref(graphs), std::cref(objective), direction, t, jobs, std::ref(parts[t]));
    for (auto& th : pool) th.join();
  }
  for (const auto& p : parts)
    if (p.error) std::rethrow_exception(p.error);

  ExtremalResult result;
  result.n = n;
  result.class_size = graphs.size();
  std::optional<Rat> best;
  for (const auto& p : parts)
    if (p.best && (!best || better(*p.best, *best, direction))) best = p.best;
  if (!best) throw InputError("empty class");
  result.extremal_value = *best;
  for (const auto& p : parts) {
    if (!p.best || *p.best != *best) continue;
    for (std::size_t i : p.hits) result.witnesses.push_back({canonical_code(graphs[i]), canonical_form(graphs[i])});
  }
  std::sort(result.witnesses.begin(), result.witnesses.end(),
            [](const Witness& a, const Witness& b) { return a.code < b.code; });
  result.tie_count = result.witnesses.size();
  return result;
}

std::span<const ConjectureSpec> conjecture_catalog() {
  static constexpr std::array<ConjectureSpec, 6> kCatalog{{
      {"con1-trees", GraphClass::Tree, "avg_distance - proximity", Direction::Maximize, "spider3", "spider3", "", "",
       4, "trees: avg_distance - proximity is maximum for the balanced 3-leg spider"},
      {"con1-graphs", GraphClass::Connected, "avg_distance - proximity", Direction::Maximize, "spider3", "spider3",
       "", "", 4, "connected graphs: avg_distance - proximity is maximum for the balanced 3-leg spider"},
      {"con2-trees", GraphClass::Tree, "avg_ecc - remoteness", Direction::Maximize, "path", "path",
       "(3*n+1)/4 * (n-1)/n - n/2", "(n-1)/4 - 1/(4*n-4)", 3,
       "trees: avg_ecc - remoteness is maximum for the path"},
      {"con2-graphs", GraphClass::Connected, "avg_ecc - remoteness", Direction::Maximize, "cycle", "cycle",
       "(3*n+1)/4 * (n-1)/n - n/2", "(n-1)/4 - 1/(4*n-4)", 3,
       "connected graphs: avg_ecc - remoteness is at most the bound, attained by the cycle"},
      {"con3-trees", GraphClass::Tree, "remoteness - radius", Direction::Minimize, "path", "broom", "(3-n)/4",
       "n*n/(4*n-4) - n/2", 3, "trees: remoteness - radius is minimum for the path (odd n) or the broom (even n)"},
      {"con3-graphs", GraphClass::Connected, "remoteness - radius", Direction::Minimize, "crossed_cycle", "cycle",
       "(3-n)/4", "n*n/(4*n-4) - n/2", 4,
       "connected graphs: remoteness - radius is at least the bound, attained by the crossed cycle (odd n) or the "
       "cycle (even n)"},
  }};
  return kCatalog;
}

const ConjectureSpec& find_conjecture(std::string_view id) {
  for (const auto& c : conjecture_catalog())
    if (c.id == id) return c;
  std::string known;
  for (const auto& c : conjecture_catalog()) known += (known.empty() ? "" : ", ") + std::string(c.id);
  throw InputError("unknown conjecture '" + std::string(id) + "' (known: " + known + ")");
}

bool ConjectureReport::all_hold() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ConjectureRow& r) { return r.family_is_extremal && r.bound_respected; });
}

ConjectureReport verify_conjecture(const ConjectureSpec& spec, int min_n, int max_n,
                                   const EnumerationOptions& options) {
  if (min_n < spec.min_n)
    throw InputError(std::string(spec.id) + " starts at n=" + std::to_string(spec.min_n) + ", got --min-n " +
                     std::to_string(min_n));
  if (max_n < min_n) throw InputError("--max-n is below --min-n");
  const int cap = class_cap(spec.graph_class, options.allow_large);
  if (max_n > cap)
    throw InputError("n=" + std::to_string(max_n) + " exceeds the " + std::string(to_string(spec.graph_class)) +
                     " cap of " + std::to_string(cap));

  const auto objective = parse_expr(spec.objective);
  ConjectureReport report{std::string(spec.id), {}};
  for (int n = min_n; n <= max_n; ++n) {
    auto found = search_extremal(spec.graph_class, n, objective, spec.direction, options);
    ConjectureRow row;
    row.n = n;
    row.extremal_value = found.extremal_value;
    row.class_size = found.class_size;
    row.family = std::string(spec.family_for(n));
    const Graph family = make_family(row.family, n);
    row.family_value = eval_expr(objective, invariant_profile(family));
    row.family_is_extremal = found.has_witness(canonical_code(family));
    if (!spec.bound_for(n).empty()) {
      const Rat bound = eval_expr(parse_expr(spec.bound_for(n)), bindings_of_order(n));
      row.bound_value = bound;
      row.bound_respected =
          spec.direction == Direction::Maximize ? found.extremal_value <= bound : found.extremal_value >= bound;
      row.bound_tight = found.extremal_value == bound;
    }
    row.witnesses = std::move(found.witnesses);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace dit
