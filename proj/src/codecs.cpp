#include "dit/codecs.hpp"

#include <charconv>
#include <map>
#include <optional>

#include "dit/error.hpp"

namespace dit {

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    throw InputError("graph6 encoding supports n <= 62, got n=" + std::to_string(n));
  std::string out(1, static_cast<char>(n + 63));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

Graph decode_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw InputError("graph6: empty input");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw InputError("graph6: byte " + std::to_string(c) + " at offset " + std::to_string(i) +
                       " is outside 63..126");
  }
  if (text[0] == 126) throw InputError("graph6: multi-byte headers (n > 62) are not supported");
  const int n = text[0] - 63;
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t groups = (pairs + 5) / 6;
  if (text.size() - 1 < groups)
    throw InputError("graph6: truncated bit field (" + std::to_string(text.size() - 1) + " of " +
                     std::to_string(groups) + " bytes for n=" + std::to_string(n) + ")");
  if (text.size() - 1 > groups)
    throw InputError("graph6: " + std::to_string(text.size() - 1 - groups) + " trailing bytes for n=" +
                     std::to_string(n));

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = text[1 + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  if (bit % 6 != 0 && ((text.back() - 63) & ((1 << (6 - bit % 6)) - 1)) != 0)
    throw InputError("graph6: nonzero padding bits");
  return Graph(n, edges);
}

std::vector<Graph> decode_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  int line_no = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    auto line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty()) continue;
    try {
      out.push_back(decode_graph6(line));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

/// Whitespace-separated non-negative integers; nullopt on anything else.
std::optional<std::vector<long long>> integers(std::string_view s) {
  std::vector<long long> out;
  while (!(s = trim(s)).empty()) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || v < 0) return std::nullopt;
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    if (!s.empty() && s.front() != ' ' && s.front() != '\t') return std::nullopt;
    out.push_back(v);
  }
  return out;
}

}  // namespace

Graph read_edgelist(std::string_view text) {
  std::optional<int> n;
  std::vector<Edge> edges;
  std::map<Edge, int> first_line;
  int line_no = 0;
  auto fail = [&](const std::string& why) { throw InputError("line " + std::to_string(line_no) + ": " + why); };
  while (!text.empty()) {
    const auto end = text.find('\n');
    const auto line = trim(text.substr(0, end));
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto values = integers(line);
    if (!n) {
      if (!values || values->size() != 1) fail("expected the vertex count n");
      if (values->front() < 1 || values->front() > 1'000'000) fail("vertex count must be positive");
      n = static_cast<int>(values->front());
      continue;
    }
    if (!values || values->size() != 2) fail("expected two vertex ids \"u v\"");
    const long long u = (*values)[0];
    const long long v = (*values)[1];
    for (long long x : {u, v})
      if (x >= *n) fail("vertex " + std::to_string(x) + " out of range for n=" + std::to_string(*n));
    if (u == v) fail("self-loop at vertex " + std::to_string(u));
    const Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (const auto [it, fresh] = first_line.emplace(e, line_no); !fresh)
      fail("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " (first on line " +
           std::to_string(it->second) + ")");
    edges.push_back(e);
  }
  if (!n) throw InputError("edge list is empty: expected the vertex count n");
  return Graph(*n, edges);
}

std::string write_edgelist(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace dit
