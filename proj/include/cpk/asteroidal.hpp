#ifndef CPK_ASTEROIDAL_HPP
#define CPK_ASTEROIDAL_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cpk/error.hpp"
#include "cpk/graph.hpp"

namespace cpk {

using Triple = std::array<Vertex, 3>;

/**
 * Certificate that {a, b, c} (sorted) is a k-asteroidal triple: each path
 * joins two of the vertices without touching N^k[] of the third.
 */
struct KatWitness {
  int k = 1;
  Triple triple{};
  Path ab;  // avoids N^k[c]
  Path ac;  // avoids N^k[b]
  Path bc;  // avoids N^k[a]
};

namespace detail {

inline Triple sorted_triple(Triple t) {
  std::sort(t.begin(), t.end());
  return t;
}

inline void check_triple(const Graph& g, const Triple& t) {
  for (Vertex v : t) g.check_vertex(v);
  if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) throw invalid_input("k-AT: triple vertices must be distinct");
}

inline void check_k(int k) {
  if (k < 1) throw invalid_input("k-AT: k must be at least 1");
}

// Component index of every vertex of G - blocked; -1 for blocked vertices.
inline std::vector<int> components_avoiding(const Graph& g, const std::vector<bool>& blocked) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (blocked[static_cast<std::size_t>(s)] || comp[static_cast<std::size_t>(s)] != -1) continue;
    std::vector<Vertex> stack{s};
    comp[static_cast<std::size_t>(s)] = next;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x))
        if (!blocked[static_cast<std::size_t>(y)] && comp[static_cast<std::size_t>(y)] == -1) {
          comp[static_cast<std::size_t>(y)] = next;
          stack.push_back(y);
        }
    }
    ++next;
  }
  return comp;
}

}  // namespace detail

/// Re-checks every path of a witness: valid, right endpoints, disjoint from N^k[third].
inline bool verify_kat(const Graph& g, const KatWitness& w) {
  if (w.k < 1) return false;
  const auto [a, b, c] = w.triple;
  for (Vertex v : w.triple)
    if (!g.contains(v)) return false;
  if (a == b || a == c || b == c) return false;
  auto check = [&](const Path& p, Vertex x, Vertex y, Vertex third) {
    if (!is_path(g, p) || p.front() != x || p.back() != y) return false;
    auto ball = neighborhood_mask(g, std::vector<Vertex>{third}, w.k);
    return std::none_of(p.vertices.begin(), p.vertices.end(),
                        [&](Vertex v) { return ball[static_cast<std::size_t>(v)]; });
  };
  return check(w.ab, a, b, c) && check(w.ac, a, c, b) && check(w.bc, b, c, a);
}

/**
 * Witness that `triple` is a k-AT, or nullopt. Each pair is joined by a BFS
 * shortest path in G - N^k[third].
 */
inline std::optional<KatWitness> is_k_at(const Graph& g, Triple triple, int k) {
  detail::check_k(k);
  detail::check_triple(g, triple);
  const Triple t = detail::sorted_triple(triple);
  auto join = [&](Vertex x, Vertex y, Vertex third) {
    auto ball = neighborhood_mask(g, std::vector<Vertex>{third}, k);
    return shortest_path(g, x, y, &ball);
  };
  auto bc = join(t[1], t[2], t[0]);
  if (!bc) return std::nullopt;
  auto ac = join(t[0], t[2], t[1]);
  if (!ac) return std::nullopt;
  auto ab = join(t[0], t[1], t[2]);
  if (!ab) return std::nullopt;
  return KatWitness{k, t, std::move(*ab), std::move(*ac), std::move(*bc)};
}

/**
 * First k-AT in lexicographic order of sorted triples, or nullopt when the
 * graph is k-AT-free. Components of G - N^k[z] are computed once per z, so
 * each triple is an O(1) test.
 */
inline std::optional<KatWitness> find_k_at(const Graph& g, int k) {
  detail::check_k(k);
  const int n = g.order();
  std::vector<std::vector<int>> comp;
  comp.reserve(static_cast<std::size_t>(n));
  for (Vertex z = 0; z < n; ++z)
    comp.push_back(detail::components_avoiding(g, neighborhood_mask(g, std::vector<Vertex>{z}, k)));
  auto joined = [&](Vertex x, Vertex y, Vertex z) {
    const auto& c = comp[static_cast<std::size_t>(z)];
    return c[static_cast<std::size_t>(x)] != -1 && c[static_cast<std::size_t>(x)] == c[static_cast<std::size_t>(y)];
  };
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (joined(a, b, c) && joined(a, c, b) && joined(b, c, a)) return is_k_at(g, {a, b, c}, k);
  return std::nullopt;
}

/**
 * Smallest k >= 1 such that the graph has no k-AT. Every (k+1)-AT is a
 * k-AT, so a linear scan is exact; the previous level's triple is retried
 * first at each new level.
 */
inline int min_k_at_free(const Graph& g) {
  require_connected(g);
  std::optional<Triple> hint;
  for (int k = 1; k <= std::max(1, g.order()); ++k) {
    if (hint && is_k_at(g, *hint, k)) continue;
    auto w = find_k_at(g, k);
    if (!w) return k;
    hint = w->triple;
  }
  throw std::logic_error("min_k_at_free: k-AT survived k = n");
}

}  // namespace cpk

#endif  // CPK_ASTEROIDAL_HPP
