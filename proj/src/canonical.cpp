#include "dit/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>

#include "dit/error.hpp"

namespace dit {
namespace {

// ---------------------------------------------------------------- trees

struct RootedEncoding {
  std::vector<int> levels;
  std::vector<Vertex> preorder;
};

RootedEncoding encode_subtree(const Graph& t, Vertex v, Vertex parent) {
  std::vector<RootedEncoding> kids;
  for (Vertex c : t.neighbors(v)) {
    if (c != parent) kids.push_back(encode_subtree(t, c, v));
  }
  std::sort(kids.begin(), kids.end(),
            [](const RootedEncoding& a, const RootedEncoding& b) { return a.levels > b.levels; });
  RootedEncoding out;
  out.levels.push_back(0);
  out.preorder.push_back(v);
  for (auto& k : kids) {
    for (int l : k.levels) out.levels.push_back(l + 1);
    out.preorder.insert(out.preorder.end(), k.preorder.begin(), k.preorder.end());
  }
  return out;
}

std::vector<Vertex> tree_centers(const Graph& t) {
  std::vector<int> ecc(t.order(), 0);
  for (Vertex v = 0; v < t.order(); ++v) {
    auto d = bfs_distances(t, v);
    ecc[v] = *std::max_element(d.begin(), d.end());
  }
  int r = *std::min_element(ecc.begin(), ecc.end());
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (ecc[v] == r) out.push_back(v);
  }
  return out;
}

RootedEncoding tree_encoding(const Graph& t) {
  std::optional<RootedEncoding> best;
  for (Vertex c : tree_centers(t)) {
    RootedEncoding e = encode_subtree(t, c, -1);
    if (!best || e.levels < best->levels) best = std::move(e);
  }
  return *best;
}

// --------------------------------------------------------- general graphs

using Mask = std::uint32_t;

struct GeneralCanonizer {
  int n = 0;
  std::array<Mask, kGeneralCanonicalMax> adj{};
  bool have_best = false;
  std::uint64_t best_lo = 0;  // bits for pairs 0..63
  std::uint64_t best_hi = 0;  // bits for pairs 64..119
  std::array<int, kGeneralCanonicalMax> best_pos{};

  // Re-rank colors by (color, sorted neighbor colors) until stable. The
  // result is compact: ranks 0..cells-1 in the order of the input colors.
  void refine(std::array<int, kGeneralCanonicalMax>& color) const {
    int cells = -1;
    for (;;) {
      std::array<std::array<int, kGeneralCanonicalMax + 1>, kGeneralCanonicalMax> sig{};
      for (int v = 0; v < n; ++v) {
        auto& s = sig[v];
        s.fill(-1);
        s[0] = color[v];
        if (cells >= 0) {  // first pass only compacts
          int k = 1;
          for (int u = 0; u < n; ++u) {
            if (adj[v] >> u & 1U) s[k++] = color[u];
          }
          std::sort(s.begin() + 1, s.begin() + k);
        }
      }
      std::array<int, kGeneralCanonicalMax> order{};
      std::iota(order.begin(), order.begin() + n, 0);
      std::sort(order.begin(), order.begin() + n, [&](int a, int b) { return sig[a] < sig[b]; });
      int rank = 0;
      std::array<int, kGeneralCanonicalMax> next{};
      for (int i = 0; i < n; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
        next[order[i]] = rank;
      }
      color = next;
      int new_cells = rank + 1;
      if (new_cells == cells || new_cells == n) break;
      cells = new_cells;
    }
  }

  void leaf(const std::array<int, kGeneralCanonicalMax>& pos) {
    std::array<int, kGeneralCanonicalMax> at{};
    for (int v = 0; v < n; ++v) at[pos[v]] = v;
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    int bit = 0;
    // Column order (0,1),(0,2),(1,2),(0,3),... ; earlier pairs are more significant.
    const int total = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++bit) {
        if (!(adj[at[i]] >> at[j] & 1U)) continue;
        int shift = total - 1 - bit;
        if (shift >= 64) {
          hi |= std::uint64_t{1} << (shift - 64);
        } else {
          lo |= std::uint64_t{1} << shift;
        }
      }
    }
    if (!have_best || hi < best_hi || (hi == best_hi && lo < best_lo)) {
      have_best = true;
      best_hi = hi;
      best_lo = lo;
      best_pos = pos;
    }
  }

  void search(std::array<int, kGeneralCanonicalMax> color) {
    refine(color);
    // Target cell: the lowest color class with more than one member.
    std::array<int, kGeneralCanonicalMax> count{};
    for (int v = 0; v < n; ++v) ++count[color[v]];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (count[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(color);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      std::array<int, kGeneralCanonicalMax> next{};
      for (int u = 0; u < n; ++u) next[u] = 2 * color[u] + ((color[u] == target && u != v) ? 1 : 0);
      search(next);
    }
  }
};

GeneralCanonizer canonize_general(const Graph& g, int cap) {
  if (g.order() > cap || g.order() > kGeneralCanonicalMax) {
    throw InputError("canonical form of a non-tree graph supports n <= " +
                     std::to_string(std::min(cap, kGeneralCanonicalMax)) + ", got n=" +
                     std::to_string(g.order()));
  }
  GeneralCanonizer c;
  c.n = g.order();
  for (Vertex v = 0; v < c.n; ++v) {
    for (Vertex u : g.neighbors(v)) c.adj[v] |= Mask{1} << u;
  }
  std::array<int, kGeneralCanonicalMax> color{};
  for (Vertex v = 0; v < c.n; ++v) color[v] = g.degree(v);
  c.search(color);
  return c;
}

}  // namespace

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

std::vector<int> canonical_level_sequence(const Graph& tree, Vertex root) {
  return encode_subtree(tree, root, -1).levels;
}

CanonicalCode canonical_code(const Graph& g, int general_cap) {
  CanonicalCode code;
  if (is_tree(g)) {
    code.bytes.push_back('T');
    code.bytes.push_back(static_cast<char>(g.order()));
    for (int l : tree_encoding(g).levels) code.bytes.push_back(static_cast<char>(l));
    return code;
  }
  GeneralCanonizer c = canonize_general(g, general_cap);
  code.bytes.push_back('G');
  code.bytes.push_back(static_cast<char>(g.order()));
  for (int shift = 56; shift >= 0; shift -= 8) code.bytes.push_back(static_cast<char>(c.best_hi >> shift & 0xFF));
  for (int shift = 56; shift >= 0; shift -= 8) code.bytes.push_back(static_cast<char>(c.best_lo >> shift & 0xFF));
  return code;
}

Graph canonical_form(const Graph& g, int general_cap) {
  std::vector<Vertex> perm(g.order());
  if (is_tree(g)) {
    auto enc = tree_encoding(g);
    for (int i = 0; i < g.order(); ++i) perm[enc.preorder[i]] = i;
  } else {
    GeneralCanonizer c = canonize_general(g, general_cap);
    for (int v = 0; v < g.order(); ++v) perm[v] = c.best_pos[v];
  }
  return g.permuted(perm);
}

}  // namespace dit
