#ifndef CPK_FAMILIES_HPP
#define CPK_FAMILIES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cpk/error.hpp"
#include "cpk/graph.hpp"

namespace cpk {

// ---------------------------------------------------------------------------
// graph6

/// graph6 encoding without header or trailing newline.
inline std::string emit_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0, bits = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

/**
 * Parses one graph6 line. An optional ">>graph6<<" header and trailing
 * whitespace are accepted; anything else malformed raises parse_error whose
 * offset is the byte index of the problem.
 */
inline Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) pos = header.size();
  auto byte = [&](std::size_t at) -> int {
    if (at >= line.size()) throw parse_error("graph6: truncated input", at);
    int c = static_cast<unsigned char>(line[at]);
    if (c < 63 || c > 126) throw parse_error("graph6: byte outside 63..126", at);
    return c - 63;
  };
  long long n = 0;
  if (byte(pos) < 63) {
    n = byte(pos++);
  } else if (byte(pos + 1) < 63) {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte(pos + i);
    if (n <= 62) throw parse_error("graph6: non-minimal size header", pos);
    pos += 4;
  } else {
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | byte(pos + i);
    if (n <= 258047) throw parse_error("graph6: non-minimal size header", pos);
    if (n > 1'000'000) throw parse_error("graph6: graph too large", pos);
    pos += 8;
  }
  const long long pairs = n * (n - 1) / 2;
  const std::size_t payload = static_cast<std::size_t>((pairs + 5) / 6);
  if (line.size() < pos + payload) throw parse_error("graph6: truncated bit payload", line.size());
  if (line.size() > pos + payload) throw parse_error("graph6: trailing bytes after payload", pos + payload);
  std::vector<Edge> edges;
  long long bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit) {
      std::size_t at = pos + static_cast<std::size_t>(bit / 6);
      if ((byte(at) >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  if (payload > 0 && pairs % 6 != 0) {
    std::size_t last = pos + payload - 1;
    int pad = static_cast<int>(6 - pairs % 6);
    if (byte(last) & ((1 << pad) - 1)) throw parse_error("graph6: nonzero padding bits", last);
  }
  return Graph(static_cast<int>(n), edges);
}

/// One graph per non-blank line.
inline std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (!line.empty()) out.push_back(parse_graph6(line));
    start = end + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form and exhaustive enumeration

namespace detail {

// Upper-triangle adjacency bits in graph6 order, first pair most significant.
inline std::uint64_t adjacency_code(const Graph& g, const std::vector<Vertex>& at_position) {
  const int n = g.order();
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      code = (code << 1) | (g.adjacent(at_position[static_cast<std::size_t>(i)], at_position[static_cast<std::size_t>(j)]) ? 1u : 0u);
  return code;
}

}  // namespace detail

struct CanonicalForm {
  std::uint64_t code = 0;
  std::vector<Vertex> at_position;  // at_position[i] = original vertex placed at i
};

/**
 * Minimum adjacency code over all vertex orders that list vertices by
 * non-increasing degree. The degree classes are an isomorphism invariant,
 * so equal codes mean isomorphic graphs. Limited to n <= 11 (55 bits).
 */
inline CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw size_limit_exceeded("canonical_form", n, 11);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && g.degree(order[j]) == g.degree(order[i])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  CanonicalForm best{detail::adjacency_code(g, order), order};
  auto rec = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      auto code = detail::adjacency_code(g, order);
      if (code < best.code) best = {code, order};
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
    std::sort(first, last);
    do self(self, b + 1);
    while (std::next_permutation(first, last));
  };
  rec(rec, 0);
  return best;
}

/// The graph relabeled into its canonical vertex order.
inline Graph canonical_graph(const Graph& g) {
  auto form = canonical_form(g);
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < form.at_position.size(); ++i) perm[static_cast<std::size_t>(form.at_position[i])] = static_cast<Vertex>(i);
  return g.relabeled(perm);
}

/**
 * All graphs on n vertices up to isomorphism (connected or not), obtained by
 * adding a vertex with every possible neighborhood to each graph on n-1
 * vertices and keeping one representative per canonical code.
 */
inline std::vector<Graph> enumerate_all(int n) {
  if (n < 1 || n > 8) throw invalid_input("enumerate_all: n must be in 1..8");
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::set<std::pair<std::size_t, std::uint64_t>> seen;
    std::vector<std::pair<std::pair<std::size_t, std::uint64_t>, Graph>> next;
    for (const auto& base : level) {
      auto base_edges = base.edges();
      for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
        auto edges = base_edges;
        for (Vertex v = 0; v < m - 1; ++v)
          if (mask & (1u << v)) edges.emplace_back(v, m - 1);
        Graph g(m, edges);
        auto form = canonical_form(g);
        std::pair key{g.size(), form.code};
        if (seen.insert(key).second) next.emplace_back(key, canonical_graph(g));
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [key, g] : next) level.push_back(std::move(g));
  }
  return level;
}

/// Connected graphs on n <= 7 vertices up to isomorphism, ordered by (edges, canonical code).
inline std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > 7) throw invalid_input("enumerate_connected: n must be in 1..7");
  auto all = enumerate_all(n);
  std::vector<Graph> out;
  for (auto& g : all)
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

// ---------------------------------------------------------------------------
// Named families and figure fixtures

enum class Family {
  subdivided_claw,
  cycle,
  path,
  clique,
  ladder_k4,
  fig_example_a,
  fig_example_b,
  fig_example_c,
  fig_biconvex,
  random_gnp,
  exhaustive,
};

/**
 * `size` is k for subdivided_claw and ladder_k4, the cycle length for
 * cycle, and the vertex count for path, clique, random_gnp and exhaustive.
 * Figure fixtures ignore it.
 */
struct FamilySpec {
  Family family = Family::path;
  int size = 1;
  double probability = 0.5;
  std::uint64_t seed = 0;
  bool connected = false;  // random_gnp only: join components after sampling
};

struct FamilyName {
  Family family;
  std::string_view name;
};

inline constexpr std::array<FamilyName, 11> kFamilyNames{{
    {Family::subdivided_claw, "subdivided_claw"},
    {Family::cycle, "cycle"},
    {Family::path, "path"},
    {Family::clique, "clique"},
    {Family::ladder_k4, "ladder_k4"},
    {Family::fig_example_a, "fig_example_a"},
    {Family::fig_example_b, "fig_example_b"},
    {Family::fig_example_c, "fig_example_c"},
    {Family::fig_biconvex, "fig_biconvex"},
    {Family::random_gnp, "random_gnp"},
    {Family::exhaustive, "exhaustive"},
}};

inline std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& f : kFamilyNames)
    if (f.name == name) return f.family;
  return std::nullopt;
}

inline std::string_view family_name(Family f) {
  for (const auto& e : kFamilyNames)
    if (e.family == f) return e.name;
  return "unknown";
}

namespace fixtures {

// Vertex v_i of a figure is index i-1.
inline constexpr std::array<Edge, 6> kExampleA{{{3, 4}, {4, 0}, {0, 5}, {5, 1}, {1, 4}, {4, 2}}};
inline constexpr std::array<Edge, 8> kExampleB{{{2, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 3}, {2, 4}}};
inline constexpr std::array<Edge, 7> kExampleC{{{3, 4}, {4, 0}, {0, 5}, {5, 1}, {1, 4}, {4, 2}, {2, 3}}};
inline constexpr std::array<Edge, 7> kBiconvex{{{0, 5}, {5, 2}, {2, 6}, {6, 1}, {1, 4}, {1, 5}, {6, 3}}};

// Matrices printed under the example graphs, rows v_1..v_6.
inline const std::array<std::string, 6> kExampleAAdjacency{
    "000011", "000011", "000010", "000010", "111100", "110000"};
inline const std::array<std::string, 6> kExampleBAugmented{
    "111000", "111000", "111110", "001111", "001111", "000111"};
inline const std::array<std::string, 6> kExampleCPartial{
    "000011", "000011", "000110", "001110", "111100", "110000"};

}  // namespace fixtures

namespace detail {

inline void require_param(bool ok, const std::string& what) {
  if (!ok) throw invalid_input("family parameters: " + what);
}

inline Graph subdivided_claw(int k) {
  require_param(k >= 1, "subdivided_claw needs k >= 1");
  std::vector<Edge> edges;
  for (int leg = 0; leg < 3; ++leg) {
    Vertex prev = 0;
    for (int step = 1; step <= k; ++step) {
      Vertex cur = 1 + leg * k + (step - 1);
      edges.emplace_back(prev, cur);
      prev = cur;
    }
  }
  return Graph(3 * k + 1, edges);
}

inline Graph cycle(int len) {
  require_param(len >= 3, "cycle needs length >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
  return Graph(len, edges);
}

inline Graph path_graph(int n) {
  require_param(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

inline Graph clique(int n) {
  require_param(n >= 1, "clique needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

// Ladder with k rungs whose last two rungs span a K4. Column c holds
// v_{c+1} and v_{2k-c}; labels follow the folded numbering of the drawing.
inline Graph ladder_k4(int k) {
  require_param(k >= 2, "ladder_k4 needs k >= 2");
  auto v = [](int label) { return static_cast<Vertex>(label - 1); };
  std::vector<Edge> edges;
  for (int c = 0; c < k; ++c) edges.emplace_back(v(c + 1), v(2 * k - c));
  for (int c = 0; c + 1 < k; ++c) {
    edges.emplace_back(v(c + 1), v(2 * k - c - 1));
    edges.emplace_back(v(2 * k - c), v(c + 2));
  }
  edges.emplace_back(v(k - 1), v(k));
  edges.emplace_back(v(k + 1), v(k + 2));
  return Graph(2 * k, edges);
}

inline Graph random_gnp(int n, double p, std::uint64_t seed, bool connected) {
  require_param(n >= 1, "random_gnp needs n >= 1");
  require_param(p >= 0.0 && p <= 1.0, "random_gnp needs 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  Graph g(n, edges);
  if (!connected || is_connected(g)) return g;
  // Chain the components through their smallest vertices.
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> reps;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    reps.push_back(s);
    auto d = bfs_distances(g, s);
    for (Vertex x = 0; x < n; ++x)
      if (d.reachable(x)) comp[static_cast<std::size_t>(x)] = static_cast<int>(reps.size());
  }
  for (std::size_t i = 0; i + 1 < reps.size(); ++i) edges.emplace_back(reps[i], reps[i + 1]);
  return Graph(n, edges);
}

}  // namespace detail

/// The exact labeled graph of a named family.
inline Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::subdivided_claw: return detail::subdivided_claw(spec.size);
    case Family::cycle: return detail::cycle(spec.size);
    case Family::path: return detail::path_graph(spec.size);
    case Family::clique: return detail::clique(spec.size);
    case Family::ladder_k4: return detail::ladder_k4(spec.size);
    case Family::fig_example_a: return Graph(6, fixtures::kExampleA);
    case Family::fig_example_b: return Graph(6, fixtures::kExampleB);
    case Family::fig_example_c: return Graph(6, fixtures::kExampleC);
    case Family::fig_biconvex: return Graph(7, fixtures::kBiconvex);
    case Family::random_gnp: return detail::random_gnp(spec.size, spec.probability, spec.seed, spec.connected);
    case Family::exhaustive: break;
  }
  throw invalid_input("generate: the exhaustive family is a corpus; use generate_corpus");
}

/// Like generate, but `exhaustive` expands to every connected graph on `size` vertices.
inline std::vector<Graph> generate_corpus(const FamilySpec& spec) {
  if (spec.family == Family::exhaustive) return enumerate_connected(spec.size);
  return {generate(spec)};
}

}  // namespace cpk

#endif  // CPK_FAMILIES_HPP
