#ifndef CPK_PATH_ECC_HPP
#define CPK_PATH_ECC_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "cpk/error.hpp"
#include "cpk/graph.hpp"

namespace cpk {

/// ecc(P) = max over v of d(v, P).
inline int path_eccentricity(const Graph& g, const Path& p) {
  require_path(g, p);
  auto ecc = bfs_distances(g, p.vertices).max();
  if (!ecc) throw invalid_input("path_eccentricity: graph is not connected");
  return *ecc;
}

struct PeResult {
  int value = 0;
  Path witness;
};

struct PeOptions {
  int max_vertices = 12;
};

namespace detail {

/**
 * Depth-first enumeration of simple paths in lexicographic order (start
 * vertex ascending, then neighbors ascending; a prefix precedes its
 * extensions). Each path is scored once, in the orientation whose first
 * vertex is not larger than its last. Distances to the current path are
 * kept per depth, so scoring an extension costs O(n).
 */
class PathSearch {
 public:
  PathSearch(const Graph& g, int stop_at) : g_(g), stop_at_(stop_at), n_(g.order()) {
    apsp_.reserve(static_cast<std::size_t>(n_));
    for (Vertex u = 0; u < n_; ++u) {
      auto row = bfs_distances(g, u);
      std::vector<int> r(static_cast<std::size_t>(n_));
      for (Vertex v = 0; v < n_; ++v) r[static_cast<std::size_t>(v)] = row.at(v);
      apsp_.push_back(std::move(r));
    }
    on_path_.assign(static_cast<std::size_t>(n_), false);
    layers_.assign(static_cast<std::size_t>(n_) + 1, std::vector<int>(static_cast<std::size_t>(n_)));
  }

  /// Best (ecc, path), stopping early once ecc <= stop_at.
  std::optional<PeResult> run() {
    for (Vertex s = 0; s < n_ && !done_; ++s) {
      path_.assign(1, s);
      on_path_[static_cast<std::size_t>(s)] = true;
      layers_[1] = apsp_[static_cast<std::size_t>(s)];
      visit(1);
      on_path_[static_cast<std::size_t>(s)] = false;
    }
    return best_;
  }

 private:
  void visit(std::size_t depth) {
    const auto& dist = layers_[depth];
    if (path_.front() <= path_.back()) {
      int ecc = *std::max_element(dist.begin(), dist.end());
      if (!best_ || ecc < best_->value) {
        best_ = PeResult{ecc, Path(path_)};
        if (ecc <= stop_at_) {
          done_ = true;
          return;
        }
      }
    }
    for (Vertex x : g_.neighbors(path_.back())) {
      if (on_path_[static_cast<std::size_t>(x)]) continue;
      auto& next = layers_[depth + 1];
      const auto& dx = apsp_[static_cast<std::size_t>(x)];
      for (std::size_t v = 0; v < next.size(); ++v) next[v] = std::min(dist[v], dx[v]);
      path_.push_back(x);
      on_path_[static_cast<std::size_t>(x)] = true;
      visit(depth + 1);
      on_path_[static_cast<std::size_t>(x)] = false;
      path_.pop_back();
      if (done_) return;
    }
  }

  const Graph& g_;
  int stop_at_;
  int n_;
  std::vector<std::vector<int>> apsp_;
  std::vector<std::vector<int>> layers_;
  std::vector<Vertex> path_;
  std::vector<bool> on_path_;
  std::optional<PeResult> best_;
  bool done_ = false;
};

inline void check_pe_input(const Graph& g, const PeOptions& opts) {
  if (g.order() > opts.max_vertices) throw size_limit_exceeded("pe_exact", g.order(), opts.max_vertices);
  require_connected(g);
}

}  // namespace detail

/**
 * Exact path eccentricity by exhaustive simple-path enumeration. The
 * witness is the lexicographically smallest vertex sequence among the
 * minimum-eccentricity paths.
 */
inline PeResult pe_exact(const Graph& g, const PeOptions& opts = {}) {
  detail::check_pe_input(g, opts);
  return *detail::PathSearch(g, 0).run();
}

/// Some path with eccentricity at most k (the first one in enumeration order), if any.
inline std::optional<Path> has_path_with_ecc_at_most(const Graph& g, int k, const PeOptions& opts = {}) {
  if (k < 0) throw invalid_input("has_path_with_ecc_at_most: negative k");
  detail::check_pe_input(g, opts);
  auto best = detail::PathSearch(g, k).run();
  if (best && best->value <= k) return best->witness;
  return std::nullopt;
}

}  // namespace cpk

#endif  // CPK_PATH_ECC_HPP
