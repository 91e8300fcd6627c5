#ifndef CPK_STAR_C1P_HPP
#define CPK_STAR_C1P_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cpk/c1p.hpp"
#include "cpk/error.hpp"
#include "cpk/graph.hpp"

namespace cpk {

/**
 * A vertex ordering plus diagonal choice. `rank[v]` is v's position in the
 * ordering (ranks are 0..n-1); v in `diagonal` means the closed
 * neighborhood N[v] is the one required to be consecutive, otherwise N(v).
 */
struct OrderingWitness {
  std::vector<int> rank;
  VertexSet diagonal;

  friend bool operator==(const OrderingWitness&, const OrderingWitness&) = default;
};

struct OrderedNeighborhoodBounds {
  int min_rank = 0;
  int max_rank = 0;

  friend bool operator==(const OrderedNeighborhoodBounds&, const OrderedNeighborhoodBounds&) = default;
};

struct StarC1pOptions {
  int max_vertices = 20;
};

/// Adjacency matrix of `g` (row/column v is vertex v) with 1s on the diagonal at `diagonal`.
inline BinaryMatrix partially_augmented_matrix(const Graph& g, std::span<const Vertex> diagonal) {
  const int n = g.order();
  if (n < 1) throw invalid_input("partially_augmented_matrix: empty graph");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  auto cell = [&](Vertex r, Vertex c) -> std::uint8_t& {
    return bits[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)];
  };
  for (auto [u, v] : g.edges()) cell(u, v) = cell(v, u) = 1;
  for (Vertex v : diagonal) {
    g.check_vertex(v);
    cell(v, v) = 1;
  }
  return BinaryMatrix(n, n, std::move(bits));
}

inline BinaryMatrix adjacency_matrix(const Graph& g) { return partially_augmented_matrix(g, {}); }

inline BinaryMatrix augmented_matrix(const Graph& g) {
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  return partially_augmented_matrix(g, all);
}

/// rank[] -> vertices listed by increasing rank.
inline std::vector<Vertex> order_from_ranks(std::span<const int> rank) {
  std::vector<Vertex> order(rank.size(), -1);
  for (std::size_t v = 0; v < rank.size(); ++v) order[static_cast<std::size_t>(rank[v])] = static_cast<Vertex>(v);
  return order;
}

inline std::vector<int> ranks_from_order(std::span<const Vertex> order) {
  std::vector<int> rank(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  return rank;
}

namespace detail {

inline void require_bijection(const Graph& g, std::span<const int> rank) {
  if (static_cast<int>(rank.size()) != g.order()) throw invalid_input("ordering witness: rank count differs from n");
  std::vector<bool> used(rank.size(), false);
  for (int r : rank) {
    if (r < 0 || r >= g.order() || used[static_cast<std::size_t>(r)])
      throw invalid_input("ordering witness: ranks are not a bijection onto 0..n-1");
    used[static_cast<std::size_t>(r)] = true;
  }
}

// True iff the ranks of `vs` form a contiguous integer range (vacuous when empty).
inline bool ranks_contiguous(std::span<const int> rank, std::span<const Vertex> vs, std::optional<Vertex> extra) {
  int lo = -1, hi = -1, count = 0;
  auto take = [&](Vertex v) {
    int r = rank[static_cast<std::size_t>(v)];
    if (count == 0) lo = hi = r;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
    ++count;
  };
  for (Vertex v : vs) take(v);
  if (extra) take(*extra);
  return count == 0 || hi - lo + 1 == count;
}

}  // namespace detail

/// True iff every vertex's chosen neighborhood (N[v] for v in D, else N(v)) occupies consecutive ranks.
inline bool verify_witness(const Graph& g, const OrderingWitness& w) {
  detail::require_bijection(g, w.rank);
  std::vector<bool> in_d(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : w.diagonal) {
    g.check_vertex(v);
    in_d[static_cast<std::size_t>(v)] = true;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    std::optional<Vertex> self;
    if (in_d[static_cast<std::size_t>(v)]) self = v;
    if (!detail::ranks_contiguous(w.rank, g.neighbors(v), self)) return false;
  }
  return true;
}

/**
 * Canonical witness for a fixed order: D holds exactly the vertices whose
 * open neighborhood is not consecutive. Returns nullopt when some vertex
 * has neither neighborhood consecutive.
 */
inline std::optional<OrderingWitness> witness_for_order(const Graph& g, std::vector<int> rank) {
  detail::require_bijection(g, rank);
  OrderingWitness w{std::move(rank), {}};
  for (Vertex v = 0; v < g.order(); ++v) {
    if (detail::ranks_contiguous(w.rank, g.neighbors(v), std::nullopt)) continue;
    if (!detail::ranks_contiguous(w.rank, g.neighbors(v), v)) return std::nullopt;
    w.diagonal.push_back(v);
  }
  return w;
}

namespace detail {

class StarSearch {
 public:
  explicit StarSearch(const Graph& g) : g_(g) {}

  std::optional<std::vector<Vertex>> run() {
    PQTree tree(g_.order());
    return branch(0, tree);
  }

 private:
  std::optional<std::vector<Vertex>> branch(Vertex v, const PQTree& tree) {
    const int n = g_.order();
    if (v == n) return tree.frontier();
    std::vector<Vertex> open(g_.neighbors(v).begin(), g_.neighbors(v).end());
    std::vector<Vertex> closed = open;
    closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
    bool open_vacuous = open.size() <= 1 || static_cast<int>(open.size()) == n;
    bool closed_vacuous = closed.size() <= 1 || static_cast<int>(closed.size()) == n;

    // Open neighborhood first; the closed branch is skipped when it cannot differ.
    for (const auto* set : {&open, &closed}) {
      bool vacuous = set == &open ? open_vacuous : closed_vacuous;
      if (set == &closed && open_vacuous && closed_vacuous) break;
      if (vacuous) {
        if (auto hit = branch(v + 1, tree)) return hit;
        continue;
      }
      PQTree next = tree;
      if (!next.reduce(*set)) continue;
      if (auto hit = branch(v + 1, next)) return hit;
    }
    return std::nullopt;
  }

  const Graph& g_;
};

}  // namespace detail

/**
 * A *-C1P witness, or nullopt when none exists. Complete backtracking over
 * the diagonal bits in vertex order, sharing one PQ-tree per branch prefix.
 *
 * Normalization: the order is the frontier of the first successful branch
 * (open neighborhoods tried first), reversed if that puts vertex 0 past the
 * middle, and D is the minimal diagonal for that order.
 */
inline std::optional<OrderingWitness> find_star_c1p(const Graph& g, const StarC1pOptions& opts = {}) {
  if (g.order() > opts.max_vertices) throw size_limit_exceeded("find_star_c1p", g.order(), opts.max_vertices);
  if (g.empty()) return OrderingWitness{};
  auto order = detail::StarSearch(g).run();
  if (!order) return std::nullopt;
  auto rank = ranks_from_order(*order);
  const int n = g.order();
  if (2 * rank[0] > n)
    for (auto& r : rank) r = n - 1 - r;
  auto w = witness_for_order(g, std::move(rank));
  if (!w || !verify_witness(g, *w)) throw std::logic_error("find_star_c1p: PQ frontier is not a valid witness");
  return w;
}

/// Smallest and largest rank over the open neighborhood N(v).
inline OrderedNeighborhoodBounds neighborhood_bounds(const Graph& g, const OrderingWitness& w, Vertex v) {
  g.check_vertex(v);
  detail::require_bijection(g, w.rank);
  auto nb = g.neighbors(v);
  if (nb.empty()) throw invalid_input("neighborhood_bounds: isolated vertex " + std::to_string(v));
  OrderedNeighborhoodBounds b{w.rank[static_cast<std::size_t>(nb.front())], w.rank[static_cast<std::size_t>(nb.front())]};
  for (Vertex x : nb) {
    b.min_rank = std::min(b.min_rank, w.rank[static_cast<std::size_t>(x)]);
    b.max_rank = std::max(b.max_rank, w.rank[static_cast<std::size_t>(x)]);
  }
  return b;
}

namespace detail {

inline bool monotonic(const std::vector<int>& seq) {
  if (seq.size() < 2) return true;
  bool up = seq[1] > seq[0];
  for (std::size_t i = 1; i < seq.size(); ++i)
    if ((seq[i] > seq[i - 1]) != up) return false;
  return true;
}

// Every vertex whose rank lies between rank(a) and rank(b) belongs to `mask`.
inline bool interval_inside(const std::vector<Vertex>& by_rank, std::span<const int> rank, Vertex a, Vertex b,
                            const std::vector<bool>& mask) {
  int lo = std::min(rank[static_cast<std::size_t>(a)], rank[static_cast<std::size_t>(b)]);
  int hi = std::max(rank[static_cast<std::size_t>(a)], rank[static_cast<std::size_t>(b)]);
  for (int r = lo; r <= hi; ++r)
    if (!mask[static_cast<std::size_t>(by_rank[static_cast<std::size_t>(r)])]) return false;
  return true;
}

}  // namespace detail

/**
 * Checks the ordering conclusions for an induced path z_0..z_l under a
 * witness: the even-step sequences from each end are monotonic in rank, the
 * rank intervals [z_0, z_{2*floor(l/2)}] and [z_{l-2*floor(l/2)}, z_l] lie
 * inside N[V(P)], and for even l so does [z_0, z_l].
 */
inline bool check_order_lemma(const Graph& g, const OrderingWitness& w, const Path& p) {
  if (!is_induced_path(g, p)) throw invalid_input("check_order_lemma: path is not induced");
  detail::require_bijection(g, w.rank);
  const auto& z = p.vertices;
  const std::size_t len = p.length();
  std::vector<int> from_u, from_v;
  for (std::size_t i = 0; i <= len; i += 2) from_u.push_back(w.rank[static_cast<std::size_t>(z[i])]);
  for (std::size_t i = 0; i <= len; i += 2) from_v.push_back(w.rank[static_cast<std::size_t>(z[len - i])]);
  if (!detail::monotonic(from_u) || !detail::monotonic(from_v)) return false;

  auto mask = neighborhood_mask(g, z, 1);
  auto by_rank = order_from_ranks(w.rank);
  const std::size_t half = 2 * (len / 2);
  if (!detail::interval_inside(by_rank, w.rank, z[0], z[half], mask)) return false;
  if (!detail::interval_inside(by_rank, w.rank, z[len - half], z[len], mask)) return false;
  if (len % 2 == 0 && !detail::interval_inside(by_rank, w.rank, z[0], z[len], mask)) return false;
  return true;
}

/**
 * For an odd-length induced path P_uv and x outside N[P_uv], checks the
 * three rank relations between x and the neighborhoods of u and v, for both
 * readings (u, v) and (v, u) of the path.
 */
inline bool check_path_neighborhood_lemma(const Graph& g, const OrderingWitness& w, const Path& p, Vertex x) {
  if (!is_induced_path(g, p) || p.length() % 2 != 1)
    throw invalid_input("check_path_neighborhood_lemma: need an induced path of odd length");
  g.check_vertex(x);
  auto mask = neighborhood_mask(g, p.vertices, 1);
  if (mask[static_cast<std::size_t>(x)]) throw invalid_input("check_path_neighborhood_lemma: x lies in N[P]");
  const int rx = w.rank[static_cast<std::size_t>(x)];
  auto holds = [&](Vertex u, Vertex v) {
    const int ru = w.rank[static_cast<std::size_t>(u)], rv = w.rank[static_cast<std::size_t>(v)];
    auto bu = neighborhood_bounds(g, w, u);
    auto bv = neighborhood_bounds(g, w, v);
    if (rv <= ru && ru <= rx && !(bu.max_rank <= rx && bv.max_rank <= rx)) return false;
    if (rx <= ru && ru <= rv && !(rx <= bu.min_rank && rx <= bv.min_rank)) return false;
    if (ru <= rx && rx <= rv && !(bv.max_rank <= rx && rx <= bu.min_rank)) return false;
    return true;
  };
  return holds(p.front(), p.back()) && holds(p.back(), p.front());
}

/// All induced paths (each once, first vertex < last vertex, plus single vertices).
inline std::vector<Path> induced_paths(const Graph& g) {
  std::vector<Path> out;
  std::vector<Vertex> cur;
  std::vector<bool> on(static_cast<std::size_t>(g.order()), false);
  auto grow = [&](auto&& self) -> void {
    if (cur.size() == 1 || cur.front() < cur.back()) out.emplace_back(cur);
    for (Vertex x : g.neighbors(cur.back())) {
      if (on[static_cast<std::size_t>(x)]) continue;
      bool chord = false;
      for (std::size_t i = 0; i + 1 < cur.size(); ++i)
        if (g.adjacent(x, cur[i])) {
          chord = true;
          break;
        }
      if (chord) continue;
      cur.push_back(x);
      on[static_cast<std::size_t>(x)] = true;
      self(self);
      on[static_cast<std::size_t>(x)] = false;
      cur.pop_back();
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    cur.assign(1, s);
    on[static_cast<std::size_t>(s)] = true;
    grow(grow);
    on[static_cast<std::size_t>(s)] = false;
  }
  return out;
}

}  // namespace cpk

#endif  // CPK_STAR_C1P_HPP
