#ifndef CPK_CENTRAL_PATH_HPP
#define CPK_CENTRAL_PATH_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cpk/asteroidal.hpp"
#include "cpk/error.hpp"
#include "cpk/graph.hpp"
#include "cpk/path_ecc.hpp"

namespace cpk {

/// Intermediate values of one improvement step on a path P = u..v.
struct ImprovementState {
  Path p;
  int covered = 0;                // |N^k[P]|
  Vertex w = -1;                  // uncovered vertex being targeted
  Vertex a = -1;                  // vertex of P nearest to w
  Path p_wa;                      // shortest w -> a, meets P only at a
  std::optional<Vertex> u_prime;  // d(u, u') = k, u' outside N^k[(P - u) + P_wa]
  std::optional<Vertex> v_prime;
};

enum class StepKind { improved, shortened, certificate, stuck };

inline const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::improved: return "improved";
    case StepKind::shortened: return "shortened";
    case StepKind::certificate: return "certificate";
    case StepKind::stuck: return "stuck";
  }
  return "unknown";
}

struct StepOutcome {
  StepKind kind = StepKind::stuck;
  Path path;                          // improved / shortened
  std::optional<KatWitness> witness;  // certificate
  ImprovementState state;
  std::string construction;  // which construction produced the outcome
};

namespace detail {

inline int count_within(const std::vector<int>& dist, int k) {
  return static_cast<int>(std::count_if(dist.begin(), dist.end(), [k](int d) { return d != -1 && d <= k; }));
}

inline int coverage(const Graph& g, std::span<const Vertex> vs, int k) {
  return count_within(bfs_raw(g, vs), k);
}

// Cuts every loop out of a walk; the result visits a subset of the walk's vertices.
inline std::vector<Vertex> shortcut(const std::vector<Vertex>& walk, int n) {
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> out;
  for (Vertex x : walk) {
    int at = pos[static_cast<std::size_t>(x)];
    if (at != -1) {
      for (std::size_t i = static_cast<std::size_t>(at) + 1; i < out.size(); ++i) pos[static_cast<std::size_t>(out[i])] = -1;
      out.resize(static_cast<std::size_t>(at) + 1);
      continue;
    }
    pos[static_cast<std::size_t>(x)] = static_cast<int>(out.size());
    out.push_back(x);
  }
  return out;
}

inline void append_tail(std::vector<Vertex>& walk, std::span<const Vertex> seq) {
  for (Vertex x : seq)
    if (walk.empty() || walk.back() != x) walk.push_back(x);
}

inline std::vector<Vertex> reversed(std::span<const Vertex> seq) { return {seq.rbegin(), seq.rend()}; }

// Sub-sequence of `seq` from index i to j inclusive, in either direction.
inline std::vector<Vertex> slice(std::span<const Vertex> seq, std::size_t i, std::size_t j) {
  std::vector<Vertex> out;
  if (i <= j)
    for (std::size_t t = i; t <= j; ++t) out.push_back(seq[t]);
  else
    for (std::size_t t = i + 1; t-- > j;) out.push_back(seq[t]);
  return out;
}

inline std::size_t index_of(std::span<const Vertex> seq, Vertex x) {
  return static_cast<std::size_t>(std::find(seq.begin(), seq.end(), x) - seq.begin());
}

/**
 * Accepts a candidate walk as an improving path: after loop removal it must
 * be a path containing every vertex of P and covering strictly more
 * vertices within distance k.
 */
inline std::optional<Path> accept_improving(const Graph& g, int k, const Path& p, int covered,
                                            const std::vector<Vertex>& walk) {
  for (std::size_t i = 1; i < walk.size(); ++i)
    if (!g.adjacent(walk[i - 1], walk[i])) return std::nullopt;
  Path cand(shortcut(walk, g.order()));
  if (!is_path(g, cand)) return std::nullopt;
  std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
  for (Vertex x : cand.vertices) in[static_cast<std::size_t>(x)] = true;
  for (Vertex x : p.vertices)
    if (!in[static_cast<std::size_t>(x)]) return std::nullopt;
  if (coverage(g, cand.vertices, k) <= covered) return std::nullopt;
  return cand;
}

// Vertex of `seq` nearest to the BFS source of `dist`; ties go to the earliest entry.
inline std::size_t nearest_on(std::span<const Vertex> seq, const DistanceMap& dist) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (dist.at(seq[i]) < dist.at(seq[best])) best = i;
  return best;
}

/**
 * Reroute through u': when u' lies in N^k[P_wa], join w to u by following
 * P_wa to the vertex y nearest u', then a shortest y -> u' path until it
 * meets a shortest u' -> u path, then that path down to u; prepend to P.
 * `p` is oriented so that u is its front.
 */
inline std::optional<Path> reroute_via_wa(const Graph& g, int k, const Path& p, int covered, const Path& p_wa,
                                          Vertex u_prime) {
  const Vertex u = p.front();
  auto from_up = bfs_distances(g, u_prime);
  std::size_t iy = nearest_on(p_wa.vertices, from_up);
  const Vertex y = p_wa.vertices[iy];
  auto p_yu = shortest_path(g, y, u_prime);
  auto p_uu = shortest_path(g, u_prime, u);
  if (!p_yu || !p_uu) return std::nullopt;
  // y' = vertex of P_yu' on P_u'u closest to u along P_u'u.
  std::size_t iyp_uu = p_uu->vertices.size();
  for (std::size_t t = p_uu->vertices.size(); t-- > 0;)
    if (std::find(p_yu->vertices.begin(), p_yu->vertices.end(), p_uu->vertices[t]) != p_yu->vertices.end()) {
      iyp_uu = t;
      break;
    }
  if (iyp_uu == p_uu->vertices.size()) return std::nullopt;
  const Vertex y_prime = p_uu->vertices[iyp_uu];
  std::vector<Vertex> walk = slice(p_wa.vertices, 0, iy);
  append_tail(walk, slice(p_yu->vertices, 0, index_of(p_yu->vertices, y_prime)));
  append_tail(walk, slice(p_uu->vertices, iyp_uu, p_uu->vertices.size() - 1));
  append_tail(walk, p.vertices);
  return accept_improving(g, k, p, covered, walk);
}

/**
 * Reroute through v': when u' lies within k of the shortest v' -> v path,
 * splice v to u through x (nearest to u' on P_v'v) and x' (where a shortest
 * x -> u' path meets P_u'u), giving P' = P_bv + P_vu + P_ua + P_aw with b
 * the successor of a on P. `p` is oriented u (front) to v (back).
 */
inline std::optional<Path> reroute_via_v_prime(const Graph& g, int k, const Path& p, int covered, const Path& p_wa,
                                               Vertex a, const Path& p_uu, const Path& p_vv, Vertex u_prime) {
  const auto& pv = p.vertices;
  auto from_up = bfs_distances(g, u_prime);
  // p_vv runs v' -> v.
  std::size_t ix = nearest_on(p_vv.vertices, from_up);
  const Vertex x = p_vv.vertices[ix];
  auto p_xu = shortest_path(g, x, u_prime);
  if (!p_xu) return std::nullopt;
  // x' = vertex of P_xu' on P_u'u closest to x along P_xu'.
  std::size_t ixp = p_xu->vertices.size();
  for (std::size_t t = 0; t < p_xu->vertices.size(); ++t)
    if (std::find(p_uu.vertices.begin(), p_uu.vertices.end(), p_xu->vertices[t]) != p_uu.vertices.end()) {
      ixp = t;
      break;
    }
  if (ixp == p_xu->vertices.size()) return std::nullopt;
  const Vertex x_prime = p_xu->vertices[ixp];
  const std::size_t ia = index_of(pv, a);
  if (ia + 1 >= pv.size()) return std::nullopt;

  std::vector<Vertex> walk = slice(pv, ia + 1, pv.size() - 1);                               // b .. v
  append_tail(walk, slice(p_vv.vertices, p_vv.vertices.size() - 1, ix));                     // v .. x
  append_tail(walk, slice(p_xu->vertices, 0, ixp));                                          // x .. x'
  append_tail(walk, slice(p_uu.vertices, index_of(p_uu.vertices, x_prime), p_uu.vertices.size() - 1));  // x' .. u
  append_tail(walk, slice(pv, 0, ia));                                                       // u .. a
  append_tail(walk, slice(p_wa.vertices, p_wa.vertices.size() - 1, 0));                      // a .. w
  return accept_improving(g, k, p, covered, walk);
}

// N^k[P] minus N^k[P - end], for `end` the front of `p`.
inline std::vector<Vertex> private_ball(const std::vector<int>& from_end, const Path& p, const Graph& g, int k) {
  std::vector<Vertex> rest(p.vertices.begin() + 1, p.vertices.end());
  auto d_rest = bfs_raw(g, rest);
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.order(); ++x) {
    int du = from_end[static_cast<std::size_t>(x)];
    int dr = d_rest[static_cast<std::size_t>(x)];
    if (du != -1 && du <= k && (dr == -1 || dr > k)) out.push_back(x);
  }
  return out;
}

struct EndAnalysis {
  std::optional<Path> shortened;
  std::optional<Path> improved;
  std::optional<Vertex> prime;
};

/**
 * Analysis of the front end u of `p`: if no vertex is covered by u
 * alone, P - u covers the same set; otherwise look for u' away from
 * N^k[(P - u) + P_wa], and if every candidate lies near P_wa, try the
 * reroute through P_wa.
 */
inline EndAnalysis analyse_end(const Graph& g, int k, const Path& p, int covered, const Path& p_wa) {
  EndAnalysis out;
  auto from_u = bfs_raw(g, std::vector<Vertex>{p.front()});
  auto candidates = private_ball(from_u, p, g, k);
  if (candidates.empty()) {
    out.shortened = Path(std::vector<Vertex>(p.vertices.begin() + 1, p.vertices.end()));
    return out;
  }
  auto d_wa = bfs_raw(g, p_wa.vertices);
  for (Vertex x : candidates)
    if (d_wa[static_cast<std::size_t>(x)] > k) {
      out.prime = x;
      return out;
    }
  for (Vertex x : candidates)
    if (auto q = reroute_via_wa(g, k, p, covered, p_wa, x)) {
      out.improved = std::move(q);
      return out;
    }
  return out;
}

}  // namespace detail

/**
 * One step of the improvement argument for a path with ecc(P) > k:
 * extend P at an extremity nearest the chosen uncovered vertex w, drop a
 * redundant extremity, reroute through u' or v', or emit {u', v', w} as a
 * verified k-AT. `stuck` means none of these applied.
 */
inline StepOutcome improve_once(const Graph& g, int k, const Path& p) {
  if (k < 1) throw invalid_input("improve_once: k must be at least 1");
  require_path(g, p);
  auto d_p = detail::bfs_raw(g, p.vertices);
  if (std::find(d_p.begin(), d_p.end(), -1) != d_p.end()) throw invalid_input("improve_once: graph is not connected");
  if (*std::max_element(d_p.begin(), d_p.end()) <= k) throw invalid_input("improve_once: path already has eccentricity <= k");

  StepOutcome out;
  ImprovementState& st = out.state;
  st.p = p;
  st.covered = detail::count_within(d_p, k);
  st.w = static_cast<Vertex>(std::max_element(d_p.begin(), d_p.end()) - d_p.begin());
  auto from_w = bfs_distances(g, st.w);
  st.a = p.vertices.front();
  for (Vertex x : p.vertices)
    if (from_w.at(x) < from_w.at(st.a) || (from_w.at(x) == from_w.at(st.a) && x < st.a)) st.a = x;
  st.p_wa = *shortest_path(g, st.w, st.a);

  auto finish = [&](StepKind kind, Path path, std::string how) {
    out.kind = kind;
    out.path = std::move(path);
    out.construction = std::move(how);
    return out;
  };

  const Vertex u = p.front(), v = p.back();
  if (st.a == u) {
    std::vector<Vertex> seq = st.p_wa.vertices;
    seq.insert(seq.end(), p.vertices.begin() + 1, p.vertices.end());
    return finish(StepKind::improved, Path(std::move(seq)), "extend_front");
  }
  if (st.a == v) {
    std::vector<Vertex> seq = p.vertices;
    seq.insert(seq.end(), st.p_wa.vertices.rbegin() + 1, st.p_wa.vertices.rend());
    return finish(StepKind::improved, Path(std::move(seq)), "extend_back");
  }

  const Path rev = p.reversed();
  auto front = detail::analyse_end(g, k, p, st.covered, st.p_wa);
  if (front.shortened) return finish(StepKind::shortened, std::move(*front.shortened), "drop_front");
  auto back = detail::analyse_end(g, k, rev, st.covered, st.p_wa);
  if (back.shortened) return finish(StepKind::shortened, back.shortened->reversed(), "drop_back");
  if (front.improved) return finish(StepKind::improved, std::move(*front.improved), "reroute_front_via_wa");
  if (back.improved) return finish(StepKind::improved, std::move(*back.improved), "reroute_back_via_wa");
  if (!front.prime || !back.prime) return finish(StepKind::stuck, Path{}, "no_prime");
  st.u_prime = front.prime;
  st.v_prime = back.prime;

  auto p_uu = shortest_path(g, *st.u_prime, u);
  auto p_vv = shortest_path(g, *st.v_prime, v);

  // P_u'v' = P_u'u + P + P_vv'.
  {
    std::vector<Vertex> walk = p_uu->vertices;
    detail::append_tail(walk, p.vertices);
    detail::append_tail(walk, detail::reversed(p_vv->vertices));
    if (auto q = detail::accept_improving(g, k, p, st.covered, walk))
      return finish(StepKind::improved, std::move(*q), "join_primes");
  }

  auto near = [&](Vertex target, std::vector<Vertex> set) {
    return detail::bfs_raw(g, set)[static_cast<std::size_t>(target)] <= k;
  };
  const auto ia = detail::index_of(p.vertices, st.a);
  {
    // u' near P_wv' = P_wa + P_va + P_v'v.
    std::vector<Vertex> set = st.p_wa.vertices;
    set.insert(set.end(), p.vertices.begin() + static_cast<std::ptrdiff_t>(ia), p.vertices.end());
    set.insert(set.end(), p_vv->vertices.begin(), p_vv->vertices.end());
    if (near(*st.u_prime, set))
      if (auto q = detail::reroute_via_v_prime(g, k, p, st.covered, st.p_wa, st.a, *p_uu, *p_vv, *st.u_prime))
        return finish(StepKind::improved, std::move(*q), "reroute_via_v_prime");
  }
  {
    // v' near P_wu' = P_wa + P_ua + P_u'u; mirror image of the case above.
    std::vector<Vertex> set = st.p_wa.vertices;
    set.insert(set.end(), p.vertices.begin(), p.vertices.begin() + static_cast<std::ptrdiff_t>(ia) + 1);
    set.insert(set.end(), p_uu->vertices.begin(), p_uu->vertices.end());
    if (near(*st.v_prime, set))
      if (auto q = detail::reroute_via_v_prime(g, k, rev, st.covered, st.p_wa, st.a, *p_vv, *p_uu, *st.v_prime))
        return finish(StepKind::improved, std::move(*q), "reroute_via_u_prime");
  }

  if (auto cert = is_k_at(g, {*st.u_prime, *st.v_prime, st.w}, k)) {
    out.witness = std::move(cert);
    return finish(StepKind::certificate, Path{}, "prime_triple");
  }
  return finish(StepKind::stuck, Path{}, "triple_not_asteroidal");
}

/// Shortest path between the ends of a BFS double sweep from vertex 0.
inline Path greedy_seed_path(const Graph& g) {
  require_connected(g);
  auto farthest = [&](Vertex s) {
    auto d = bfs_distances(g, s);
    Vertex best = s;
    for (Vertex x = 0; x < g.order(); ++x)
      if (d.at(x) > d.at(best)) best = x;
    return best;
  };
  Vertex a = farthest(0);
  Vertex b = farthest(a);
  return *shortest_path(g, a, b);
}

// ---------------------------------------------------------------------------

struct TraceRecord {
  int iteration = 0;
  std::string step;          // improved, shortened, certificate, stuck, fallback_improved, ...
  std::string construction;  // detail of the step
  int covered = 0;           // |N^k[P]| before the step
  int path_vertices = 0;     // |V(P)| before the step
  std::optional<Vertex> w;
};

enum class DichotomySource {
  proof_steps,      // produced by the improvement loop alone
  fallback_search,  // loop needed at least one exhaustive improving-path search
  triple_scan,      // k-AT found by scanning all triples
  exhaustive_path,  // path found by exhaustive path search
};

inline const char* to_string(DichotomySource s) {
  switch (s) {
    case DichotomySource::proof_steps: return "proof_steps";
    case DichotomySource::fallback_search: return "fallback_search";
    case DichotomySource::triple_scan: return "triple_scan";
    case DichotomySource::exhaustive_path: return "exhaustive_path";
  }
  return "unknown";
}

/// Exactly one of `path` (ecc <= k) and `witness` (a k-AT) is set.
struct Dichotomy {
  std::optional<Path> path;
  std::optional<KatWitness> witness;
  DichotomySource source = DichotomySource::proof_steps;
  std::optional<Path> loop_path;  // path reached by the loop, even when a k-AT is reported
  std::vector<TraceRecord> trace;
};

struct CentralPathOptions {
  int exhaustive_limit = 12;  // largest n for the exhaustive fallbacks
};

namespace detail {

/**
 * Any simple path containing V(P) and covering more of the graph within
 * distance k, found by exhaustive enumeration.
 */
inline std::optional<Path> search_improving(const Graph& g, int k, const Path& p, int covered) {
  const int n = g.order();
  std::vector<bool> needed(static_cast<std::size_t>(n), false);
  for (Vertex x : p.vertices) needed[static_cast<std::size_t>(x)] = true;
  const int need = static_cast<int>(p.count());
  std::vector<DistanceMap> apsp = all_pairs_distances(g);
  std::vector<std::vector<int>> layers(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<Vertex> cur;
  std::vector<bool> on(static_cast<std::size_t>(n), false);
  std::optional<Path> found;
  auto grow = [&](auto&& self, std::size_t depth, int have) -> void {
    if (have == need && count_within(layers[depth], k) > covered) {
      found = Path(cur);
      return;
    }
    for (Vertex x : g.neighbors(cur.back())) {
      if (on[static_cast<std::size_t>(x)]) continue;
      auto& next = layers[depth + 1];
      for (Vertex y = 0; y < n; ++y)
        next[static_cast<std::size_t>(y)] = std::min(layers[depth][static_cast<std::size_t>(y)], apsp[static_cast<std::size_t>(x)].at(y));
      cur.push_back(x);
      on[static_cast<std::size_t>(x)] = true;
      self(self, depth + 1, have + (needed[static_cast<std::size_t>(x)] ? 1 : 0));
      on[static_cast<std::size_t>(x)] = false;
      cur.pop_back();
      if (found) return;
    }
  };
  for (Vertex s = 0; s < n && !found; ++s) {
    cur.assign(1, s);
    on[static_cast<std::size_t>(s)] = true;
    for (Vertex y = 0; y < n; ++y) layers[1][static_cast<std::size_t>(y)] = apsp[static_cast<std::size_t>(s)].at(y);
    grow(grow, 1, needed[static_cast<std::size_t>(s)] ? 1 : 0);
    on[static_cast<std::size_t>(s)] = false;
  }
  return found;
}

}  // namespace detail

/**
 * Either a path with eccentricity at most k or a k-asteroidal triple.
 *
 * The improvement loop starts from `greedy_seed_path` and applies
 * `improve_once` until the path dominates within distance k or a verified
 * triple appears. When a step is stuck (the loop's path need not be a
 * global maximizer of |N^k[P]|), an exhaustive search for any improving
 * superset path takes over; if none exists the answer comes from the
 * exhaustive oracles.
 *
 * The reported side is a certificate of k-AT-freeness: a k-AT is reported
 * whenever the graph has one, even if the loop also reached a k-dominating
 * path (kept in `loop_path`). Hence `path` is set iff the graph is k-AT-free.
 */
inline Dichotomy find_k_dominating_path_or_witness(const Graph& g, int k, const CentralPathOptions& opts = {}) {
  if (k < 1) throw invalid_input("find_k_dominating_path_or_witness: k must be at least 1");
  require_connected(g);
  Dichotomy res;
  Path p = greedy_seed_path(g);
  bool used_fallback = false;
  std::optional<KatWitness> cert;
  for (int iter = 0;; ++iter) {
    auto d_p = detail::bfs_raw(g, p.vertices);
    const int covered = detail::count_within(d_p, k);
    if (covered == g.order()) {
      res.loop_path = p;
      break;
    }
    TraceRecord rec{iter, "", "", covered, static_cast<int>(p.count()), std::nullopt};
    auto step = improve_once(g, k, p);
    rec.step = to_string(step.kind);
    rec.construction = step.construction;
    rec.w = step.state.w;
    if (step.kind == StepKind::improved || step.kind == StepKind::shortened) {
      const int next_cov = detail::coverage(g, step.path.vertices, k);
      bool progress = next_cov > covered || (next_cov == covered && step.path.count() < p.count());
      if (!progress || !is_path(g, step.path)) throw std::logic_error("improvement loop: step made no progress");
      res.trace.push_back(std::move(rec));
      p = std::move(step.path);
      continue;
    }
    res.trace.push_back(rec);
    if (step.kind == StepKind::certificate) {
      cert = std::move(step.witness);
      break;
    }
    if (g.order() > opts.exhaustive_limit) break;
    auto better = detail::search_improving(g, k, p, covered);
    if (!better) break;
    used_fallback = true;
    res.trace.push_back(TraceRecord{iter, "fallback_improved", "exhaustive_superset", covered, static_cast<int>(p.count()), std::nullopt});
    p = std::move(*better);
  }

  if (cert) {
    if (!verify_kat(g, *cert)) throw std::logic_error("improvement loop: certificate does not verify");
    res.witness = std::move(cert);
    res.source = used_fallback ? DichotomySource::fallback_search : DichotomySource::proof_steps;
    return res;
  }
  if (auto at = find_k_at(g, k)) {
    res.witness = std::move(at);
    res.source = DichotomySource::triple_scan;
    return res;
  }
  if (res.loop_path) {
    res.path = res.loop_path;
    res.source = used_fallback ? DichotomySource::fallback_search : DichotomySource::proof_steps;
  } else {
    res.path = has_path_with_ecc_at_most(g, k, PeOptions{opts.exhaustive_limit});
    if (!res.path) throw std::logic_error("k-AT-free graph without a k-dominating path");
    res.source = DichotomySource::exhaustive_path;
  }
  if (path_eccentricity(g, *res.path) > k) throw std::logic_error("dichotomy: path eccentricity exceeds k");
  return res;
}

}  // namespace cpk

#endif  // CPK_CENTRAL_PATH_HPP
