#ifndef CPK_GRAPH_HPP
#define CPK_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cpk/error.hpp"

namespace cpk {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

/**
 * Finite simple undirected graph on the dense vertex range [0, n).
 *
 * Adjacency is kept twice: sorted neighbor lists for iteration and a
 * bit matrix for O(1) adjacency queries. Instances are immutable once
 * built; `with_edge` and `relabeled` return new graphs.
 */
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(checked(n)), adj_(static_cast<std::size_t>(n)), matrix_(cells(n), false) {}

  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
    finish();
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }
  bool empty() const noexcept { return n_ == 0; }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  void check_vertex(Vertex v) const {
    if (!contains(v))
      throw invalid_input("vertex " + std::to_string(v) + " out of range [0, " +
                          std::to_string(n_) + ")");
  }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  bool adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                   static_cast<std::size_t>(v)];
  }

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  Graph with_edge(Vertex u, Vertex v) const {
    Graph g = *this;
    g.add_edge(u, v);
    g.finish();
    return g;
  }

  /// Graph whose vertex perm[v] corresponds to vertex v of this graph.
  Graph relabeled(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw invalid_input("relabeled: permutation size mismatch");
    std::vector<Edge> es;
    es.reserve(m_);
    for (auto [u, v] : edges()) es.emplace_back(perm[u], perm[v]);
    return Graph(n_, es);
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  static int checked(int n) {
    if (n < 0) throw invalid_input("Graph: negative vertex count");
    return n;
  }
  static std::size_t cells(int n) { return n > 0 ? static_cast<std::size_t>(n) * static_cast<std::size_t>(n) : 0; }

  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw invalid_input("self loop at vertex " + std::to_string(u));
    auto cell = [this](Vertex a, Vertex b) {
      return matrix_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
    };
    if (cell(u, v)) return;
    cell(u, v) = true;
    cell(v, u) = true;
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
    ++m_;
  }

  void finish() {
    for (auto& row : adj_) std::sort(row.begin(), row.end());
  }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<bool> matrix_;
};

/// Ordered vertex sequence; a single vertex is a path of length 0.
struct Path {
  std::vector<Vertex> vertices;

  Path() = default;
  explicit Path(std::vector<Vertex> vs) : vertices(std::move(vs)) {}
  Path(std::initializer_list<Vertex> vs) : vertices(vs) {}

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  std::size_t count() const noexcept { return vertices.size(); }
  bool empty() const noexcept { return vertices.empty(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  Path reversed() const { return Path(std::vector<Vertex>(vertices.rbegin(), vertices.rend())); }

  friend auto operator<=>(const Path&, const Path&) = default;
};

/// True iff `p` is nonempty, in range, repeat-free and follows edges of `g`.
inline bool is_path(const Graph& g, const Path& p) {
  if (p.empty()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Vertex v = p.vertices[i];
    if (!g.contains(v) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
    if (i > 0 && !g.adjacent(p.vertices[i - 1], v)) return false;
  }
  return true;
}

inline void require_path(const Graph& g, const Path& p) {
  if (!is_path(g, p)) throw invalid_input("sequence is not a path of the graph");
}

/// Distances from a source set. Unreachable vertices carry no value.
class DistanceMap {
 public:
  DistanceMap() = default;
  explicit DistanceMap(std::vector<int> raw) : d_(std::move(raw)) {}

  std::size_t size() const noexcept { return d_.size(); }
  bool reachable(Vertex v) const { return d_[static_cast<std::size_t>(v)] != kUnreachable; }

  std::optional<int> operator[](Vertex v) const {
    if (!reachable(v)) return std::nullopt;
    return d_[static_cast<std::size_t>(v)];
  }

  int at(Vertex v) const {
    if (!reachable(v)) throw invalid_input("vertex " + std::to_string(v) + " is unreachable");
    return d_[static_cast<std::size_t>(v)];
  }

  bool all_reachable() const {
    return std::none_of(d_.begin(), d_.end(), [](int d) { return d == kUnreachable; });
  }

  /// Largest finite distance; nullopt when some vertex is unreachable.
  std::optional<int> max() const {
    if (!all_reachable()) return std::nullopt;
    return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
  }

 private:
  static constexpr int kUnreachable = -1;
  std::vector<int> d_;
};

namespace detail {

inline void check_sources(const Graph& g, std::span<const Vertex> sources) {
  for (Vertex s : sources) g.check_vertex(s);
}

// Multi-source BFS writing -1 for unreachable; `blocked` vertices are never entered.
inline std::vector<int> bfs_raw(const Graph& g, std::span<const Vertex> sources,
                                const std::vector<bool>* blocked = nullptr) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex s : sources) {
    if (blocked && (*blocked)[static_cast<std::size_t>(s)]) continue;
    if (dist[static_cast<std::size_t>(s)] != 0) {
      dist[static_cast<std::size_t>(s)] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (dist[static_cast<std::size_t>(y)] != -1) continue;
      if (blocked && (*blocked)[static_cast<std::size_t>(y)]) continue;
      dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

}  // namespace detail

inline DistanceMap bfs_distances(const Graph& g, std::span<const Vertex> sources) {
  if (sources.empty()) throw invalid_input("bfs_distances: empty source set");
  detail::check_sources(g, sources);
  return DistanceMap(detail::bfs_raw(g, sources));
}

inline DistanceMap bfs_distances(const Graph& g, Vertex source) {
  return bfs_distances(g, std::span<const Vertex>(&source, 1));
}

/// Distances between every pair; row u holds d(u, .).
inline std::vector<DistanceMap> all_pairs_distances(const Graph& g) {
  std::vector<DistanceMap> rows;
  rows.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex u = 0; u < g.order(); ++u) rows.push_back(bfs_distances(g, u));
  return rows;
}

/// N^k[S]: vertices at distance at most k from S.
inline VertexSet neighborhood_k(const Graph& g, std::span<const Vertex> s, int k) {
  if (k < 0) throw invalid_input("neighborhood_k: negative radius");
  detail::check_sources(g, s);
  auto dist = detail::bfs_raw(g, s);
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (dist[static_cast<std::size_t>(v)] != -1 && dist[static_cast<std::size_t>(v)] <= k) out.push_back(v);
  return out;
}

inline VertexSet neighborhood_k(const Graph& g, Vertex v, int k) {
  return neighborhood_k(g, std::span<const Vertex>(&v, 1), k);
}

/// Membership mask of N^k[S].
inline std::vector<bool> neighborhood_mask(const Graph& g, std::span<const Vertex> s, int k) {
  std::vector<bool> mask(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : neighborhood_k(g, s, k)) mask[static_cast<std::size_t>(v)] = true;
  return mask;
}

inline bool is_connected(const Graph& g) {
  if (g.empty()) throw invalid_input("is_connected: empty graph");
  return DistanceMap(detail::bfs_raw(g, std::vector<Vertex>{0})).all_reachable();
}

inline void require_connected(const Graph& g) {
  if (!is_connected(g)) throw invalid_input("graph is not connected");
}

/**
 * Shortest path from `from` to `to` avoiding `blocked` vertices (neither
 * endpoint may be blocked). Neighbor lists are sorted, so the BFS parent of
 * every vertex is its smallest-index discoverer and the result is
 * deterministic.
 */
inline std::optional<Path> shortest_path(const Graph& g, Vertex from, Vertex to,
                                         const std::vector<bool>* blocked = nullptr) {
  g.check_vertex(from);
  g.check_vertex(to);
  if (blocked && ((*blocked)[static_cast<std::size_t>(from)] || (*blocked)[static_cast<std::size_t>(to)]))
    return std::nullopt;
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::deque<Vertex> queue{from};
  seen[static_cast<std::size_t>(from)] = true;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (Vertex y : g.neighbors(x)) {
      if (seen[static_cast<std::size_t>(y)]) continue;
      if (blocked && (*blocked)[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = true;
      parent[static_cast<std::size_t>(y)] = x;
      queue.push_back(y);
    }
  }
  if (!seen[static_cast<std::size_t>(to)]) return std::nullopt;
  std::vector<Vertex> seq;
  for (Vertex x = to; x != -1; x = parent[static_cast<std::size_t>(x)]) seq.push_back(x);
  std::reverse(seq.begin(), seq.end());
  return Path(std::move(seq));
}

/// A path of `g` with no edge between non-consecutive entries.
inline bool is_induced_path(const Graph& g, const Path& p) {
  if (!is_path(g, p)) return false;
  const auto& vs = p.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 2; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

/// True iff `cycle` (closing edge implied) is a chordless cycle of `g`.
inline bool is_induced_cycle(const Graph& g, std::span<const Vertex> cycle) {
  const std::size_t len = cycle.size();
  if (len < 3) return false;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : cycle) {
    if (!g.contains(v) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

namespace detail {

// Grows induced paths whose first vertex is the smallest vertex of the cycle.
inline bool extend_induced(const Graph& g, std::vector<Vertex>& path, std::vector<bool>& on_path,
                           std::size_t min_len) {
  const Vertex start = path.front();
  const Vertex last = path.back();
  for (Vertex x : g.neighbors(last)) {
    if (x <= start || on_path[static_cast<std::size_t>(x)]) continue;
    bool chord = false;
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
      if (g.adjacent(x, path[i])) {
        chord = true;
        break;
      }
    if (chord) continue;
    if (path.size() >= 2 && g.adjacent(x, start)) {
      if (path.size() + 1 >= min_len) {
        path.push_back(x);
        return true;
      }
      continue;  // closing too early leaves a chord on any extension
    }
    path.push_back(x);
    on_path[static_cast<std::size_t>(x)] = true;
    if (extend_induced(g, path, on_path, min_len)) return true;
    on_path[static_cast<std::size_t>(x)] = false;
    path.pop_back();
  }
  return false;
}

}  // namespace detail

/**
 * Some chordless cycle with at least `min_len` vertices, or nullopt.
 * DFS over induced paths rooted at each vertex, rejecting any extension that
 * creates a chord. Exponential in the worst case; intended for small graphs.
 */
inline std::optional<std::vector<Vertex>> find_long_induced_cycle(const Graph& g, int min_len) {
  if (min_len < 3) throw invalid_input("find_long_induced_cycle: min_len must be at least 3");
  std::vector<bool> on_path(static_cast<std::size_t>(g.order()), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<Vertex> path{s};
    on_path[static_cast<std::size_t>(s)] = true;
    bool found = detail::extend_induced(g, path, on_path, static_cast<std::size_t>(min_len));
    std::fill(on_path.begin(), on_path.end(), false);
    if (found) {
      if (!is_induced_cycle(g, path)) throw std::logic_error("find_long_induced_cycle: produced a chorded cycle");
      return path;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Edge-list text format: "n m" on the first line, then m lines "u v".

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      auto first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] != '#') return true;
    }
    return false;
  };
  auto two_ints = [&](long long& a, long long& b) {
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra)) throw parse_error("edge list: expected two integers", line_no);
  };
  if (!next_line()) throw parse_error("edge list: missing header", line_no);
  long long n = 0, m = 0;
  two_ints(n, m);
  if (n < 0 || m < 0) throw parse_error("edge list: negative header value", line_no);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) throw parse_error("edge list: fewer edges than declared", line_no);
    long long u = 0, v = 0;
    two_ints(u, v);
    if (u < 0 || v < 0 || u >= n || v >= n) throw parse_error("edge list: vertex out of range", line_no);
    if (u == v) throw parse_error("edge list: self loop", line_no);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_line()) throw parse_error("edge list: more edges than declared", line_no);
  Graph g(static_cast<int>(n), edges);
  if (g.size() != edges.size()) throw parse_error("edge list: duplicate edge", line_no);
  return g;
}

inline std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace cpk

#endif  // CPK_GRAPH_HPP
