#include "dit/families.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "dit/error.hpp"

namespace dit {
namespace {

void require(bool ok, std::string_view family, int n, std::string_view need) {
  if (!ok) {
    throw InputError(std::string(family) + " needs " + std::string(need) + ", got n=" + std::to_string(n));
  }
}

}  // namespace

Graph make_path(int n) {
  require(n >= 1, "path", n, "n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle", n, "n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph make_spider(std::span<const int> legs) {
  int n = 1;
  for (int len : legs) {
    if (len < 1) throw InputError("spider legs must have length >= 1");
    n += len;
  }
  std::vector<Edge> edges;
  int next = 1;
  for (int len : legs) {
    Vertex prev = 0;
    for (int i = 0; i < len; ++i, ++next) {
      edges.emplace_back(prev, next);
      prev = next;
    }
  }
  return Graph(n, edges);
}

std::vector<int> balanced_partition(int total, int parts) {
  std::vector<int> out(parts, total / parts);
  for (int i = 0; i < total % parts; ++i) ++out[i];
  return out;
}

Graph make_spider3(int n) {
  require(n >= 4, "spider3", n, "n >= 4");
  return make_spider(balanced_partition(n - 1, 3));
}

Graph make_spider4(int k) {
  if (k < 1) throw InputError("spider4 needs k >= 1, got k=" + std::to_string(k));
  std::array<int, 4> legs{k, k, k, k};
  return make_spider(legs);
}

Graph make_broom(int n) {
  require(n >= 4, "broom", n, "n >= 4");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n - 1; ++i) edges.emplace_back(i, i + 1);
  int center = (n - 2) / 2;  // P_{n-1}: unique center (n-2)/2 for even n, smaller one for odd n
  edges.emplace_back(center, n - 1);
  return Graph(n, edges);
}

Graph make_crossed_cycle(int n) {
  require(n >= 5, "crossed_cycle", n, "n >= 5");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  edges.emplace_back(0, 2);
  edges.emplace_back(1, 3);
  return Graph(n, edges);
}

Graph make_random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "random tree", n, "n >= 1");
  if (n <= 2) return make_path(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& c : code) c = pick(rng);
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::vector<Edge> edges;
  for (int c : code) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, c);
        --degree[leaf];
        --degree[c];
        break;
      }
    }
  }
  std::vector<int> last;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) last.push_back(v);
  }
  edges.emplace_back(last.at(0), last.at(1));
  return Graph(n, edges);
}

std::optional<std::vector<int>> spider_legs(const Graph& g) {
  if (!is_tree(g)) return std::nullopt;
  Vertex hub = -1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= 3) {
      if (hub >= 0) return std::nullopt;
      hub = v;
    }
  }
  if (hub < 0) return std::nullopt;
  std::vector<int> legs;
  for (Vertex first :g.neighbors(hub)) {
    int len = 1;
    for (Vertex prev = hub, x = first; g.degree(x) == 2; ++len) {
      Vertex nxt = g.neighbors(x)[0] == prev ? g.neighbors(x)[1] : g.neighbors(x)[0];
      prev = x;
      x = nxt;
    }
    legs.push_back(len);
  }
  std::sort(legs.rbegin(), legs.rend());
  return legs;
}

std::span<const FamilyInfo> family_catalog() {
  static constexpr std::array<FamilyInfo, 6> kFamilies{{
      {"path", 1},
      {"cycle", 3},
      {"spider3", 4},
      {"spider4", 5},
      {"broom", 4},
      {"crossed_cycle", 5},
  }};
  return kFamilies;
}

Graph make_family(std::string_view id, int n) {
  if (id == "path") return make_path(n);
  if (id == "cycle") return make_cycle(n);
  if (id == "spider3") return make_spider3(n);
  if (id == "spider4") {
    require(n >= 5 && n % 4 == 1, "spider4", n, "n = 4k+1 with k >= 1");
    return make_spider4((n - 1) / 4);
  }
  if (id == "broom") return make_broom(n);
  if (id == "crossed_cycle") return make_crossed_cycle(n);
  throw InputError("unknown family '" + std::string(id) + "'");
}

bool parity_admits(Parity p, int n) {
  switch (p) {
    case Parity::Any: return true;
    case Parity::Odd: return n % 2 == 1;
    case Parity::Even: return n % 2 == 0;
    case Parity::OneModFour: return n % 4 == 1;
  }
  return false;
}

namespace {

Rat q(std::int64_t a, std::int64_t b) { return Rat(a, b); }

constexpr std::array<ClosedForm, 10> kClosedForms{{
    {"lbar_path", "path", Parity::Any, 2,
     [](std::int64_t n) { return q(n + 1, 3); },
     [](const InvariantProfile& p) { return p.avg_distance; }},
    {"pi_path_odd", "path", Parity::Odd, 3,
     [](std::int64_t n) { return q(n + 1, 4); },
     [](const InvariantProfile& p) { return p.proximity; }},
    {"pi_path_even", "path", Parity::Even, 2,
     [](std::int64_t n) { return q(n * n, 4 * (n - 1)); },
     [](const InvariantProfile& p) { return p.proximity; }},
    {"lbar_spider4", "spider4", Parity::OneModFour, 5,
     [](std::int64_t n) { return q(3 * n * n + 10 * n + 3, 16 * n); },
     [](const InvariantProfile& p) { return p.avg_distance; }},
    {"pi_spider4", "spider4", Parity::OneModFour, 5,
     [](std::int64_t n) { return q(n + 3, 8); },
     [](const InvariantProfile& p) { return p.proximity; }},
    {"ecc_minus_rho_path", "path", Parity::Any, 2,
     [](std::int64_t n) { return n % 2 == 0 ? q(n - 2, 4) : q(n, 4) - q(2 * n + 1, 4 * n); },
     [](const InvariantProfile& p) { return p.avg_ecc - p.remoteness; }},
    {"rho_minus_r_path_odd", "path", Parity::Odd, 3,
     [](std::int64_t) { return q(1, 2); },
     [](const InvariantProfile& p) { return p.remoteness - Rat(p.radius); }},
    {"rho_minus_r_broom_even", "broom", Parity::Even, 4,
     [](std::int64_t n) { return q(n, 2 * (n - 1)); },
     [](const InvariantProfile& p) { return p.remoteness - Rat(p.radius); }},
    {"con2_bound", "", Parity::Any, 3,
     [](std::int64_t n) {
       return n % 2 == 1 ? q(3 * n + 1, 4) * q(n - 1, n) - q(n, 2) : q(n - 1, 4) - q(1, 4 * n - 4);
     },
     nullptr},
    {"con3_bound", "", Parity::Any, 3,
     [](std::int64_t n) { return n % 2 == 1 ? q(3 - n, 4) : q(n * n, 4 * n - 4) - q(n, 2); },
     nullptr},
}};

}  // namespace

std::span<const ClosedForm> closed_form_registry() { return kClosedForms; }

const ClosedForm& find_closed_form(std::string_view id) {
  for (const ClosedForm& cf : kClosedForms) {
    if (cf.id == id) return cf;
  }
  throw InputError("unknown closed form '" + std::string(id) + "'");
}

Rat closed_form(std::string_view id, int n) {
  const ClosedForm& cf = find_closed_form(id);
  if (n < cf.min_n || !parity_admits(cf.parity, n)) {
    throw InputError("closed form '" + std::string(id) + "' is not defined for n=" + std::to_string(n));
  }
  return cf.formula(n);
}

}  // namespace dit
