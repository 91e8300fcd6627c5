#include <gtest/gtest.h>

#include <random>

#include "cpk/central_path.hpp"
#include "cpk/families.hpp"
#include "oracles.hpp"

using namespace cpk;

namespace {

std::vector<bool> ball(const Graph& g, const std::vector<Vertex>& s, int k) { return neighborhood_mask(g, s, k); }

int coverage(const Graph& g, const Path& p, int k) {
  auto b = ball(g, p.vertices, k);
  return static_cast<int>(std::count(b.begin(), b.end(), true));
}

bool contains_all(const Path& big, const Path& small) {
  for (Vertex x : small.vertices)
    if (std::find(big.vertices.begin(), big.vertices.end(), x) == big.vertices.end()) return false;
  return true;
}

// Asserts the documented post-conditions of one improvement step.
void check_step(const Graph& g, int k, const Path& p, const StepOutcome& out) {
  const auto& st = out.state;
  auto covered = ball(g, p.vertices, k);
  ASSERT_EQ(st.p, p);
  EXPECT_EQ(st.covered, coverage(g, p, k));
  EXPECT_FALSE(covered[st.w]);
  EXPECT_TRUE(std::find(p.vertices.begin(), p.vertices.end(), st.a) != p.vertices.end());
  EXPECT_EQ(st.p_wa.front(), st.w);
  EXPECT_EQ(st.p_wa.back(), st.a);
  for (Vertex x : st.p_wa.vertices)
    if (x != st.a) { EXPECT_TRUE(std::find(p.vertices.begin(), p.vertices.end(), x) == p.vertices.end()); }
  auto prime_ok = [&](std::optional<Vertex> prime, Vertex end, std::vector<Vertex> rest) {
    if (!prime) return;
    EXPECT_EQ(bfs_distances(g, end).at(*prime), k);
    rest.insert(rest.end(), st.p_wa.vertices.begin(), st.p_wa.vertices.end());
    EXPECT_FALSE(ball(g, rest, k)[*prime]);
  };
  prime_ok(st.u_prime, p.front(), std::vector<Vertex>(p.vertices.begin() + 1, p.vertices.end()));
  prime_ok(st.v_prime, p.back(), std::vector<Vertex>(p.vertices.begin(), p.vertices.end() - 1));
  switch (out.kind) {
    case StepKind::improved:
      EXPECT_TRUE(is_path(g, out.path));
      EXPECT_TRUE(contains_all(out.path, p));
      EXPECT_GT(coverage(g, out.path, k), st.covered);
      break;
    case StepKind::shortened: {
      EXPECT_TRUE(is_path(g, out.path));
      EXPECT_EQ(out.path.count() + 1, p.count());
      Path front_cut(std::vector<Vertex>(p.vertices.begin() + 1, p.vertices.end()));
      Path back_cut(std::vector<Vertex>(p.vertices.begin(), p.vertices.end() - 1));
      EXPECT_TRUE(out.path == front_cut || out.path == back_cut);
      EXPECT_EQ(coverage(g, out.path, k), st.covered);
      break;
    }
    case StepKind::certificate:
      ASSERT_TRUE(out.witness);
      EXPECT_TRUE(verify_kat(g, *out.witness));
      EXPECT_EQ(out.witness->k, k);
      EXPECT_TRUE(std::find(out.witness->triple.begin(), out.witness->triple.end(), st.w) != out.witness->triple.end());
      break;
    case StepKind::stuck:
      break;
  }
}

}  // namespace

TEST(GreedySeed, Examples) {
  EXPECT_EQ(greedy_seed_path(Graph(1)), (Path{0}));
  Path p5 = greedy_seed_path(generate({Family::path, 5}));
  EXPECT_EQ(p5.count(), 5u);
  Path c6 = greedy_seed_path(generate({Family::cycle, 6}));
  EXPECT_EQ(c6.length(), 3u);
  EXPECT_TRUE(is_path(generate({Family::cycle, 6}), c6));
  EXPECT_THROW(greedy_seed_path(Graph(2)), invalid_input);
}

TEST(GreedySeed, IsDiametralSweep) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_connected(2 + trial % 9, 0.2, rng);
    auto d = oracle::floyd(g);
    Path p = greedy_seed_path(g);
    EXPECT_TRUE(is_path(g, p));
    EXPECT_EQ(static_cast<int>(p.length()), d[p.front()][p.back()]);
    // The back end is farthest from the front end.
    for (Vertex v = 0; v < g.order(); ++v) EXPECT_LE(d[p.front()][v], d[p.front()][p.back()]);
  }
}

TEST(ImproveOnce, ExtendsFromOnlyVertex) {
  // Center of the 2-subdivided claw with k = 1: every leaf tip is at
  // distance 2 and the nearest path vertex is the center itself.
  Graph g = generate({Family::subdivided_claw, 2});
  auto out = improve_once(g, 1, Path{0});
  check_step(g, 1, Path{0}, out);
  EXPECT_EQ(out.kind, StepKind::improved);
  EXPECT_EQ(out.state.w, 2);
  EXPECT_EQ(out.path, (Path{2, 1, 0}));
}

TEST(ImproveOnce, LegReachesCertificate) {
  Graph g = generate({Family::subdivided_claw, 2});
  Path p{0, 1, 2};
  std::optional<KatWitness> cert;
  for (int step = 0; step < 20 && !cert; ++step) {
    auto out = improve_once(g, 1, p);
    check_step(g, 1, p, out);
    ASSERT_NE(out.kind, StepKind::stuck) << out.construction;
    if (out.kind == StepKind::certificate)
      cert = out.witness;
    else
      p = out.path;
  }
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->triple, (Triple{2, 4, 6}));
}

TEST(ImproveOnce, DropsDominatedExtremity) {
  // Path 1-0-2 around a hub; vertex 1 adds nothing to N[P], and the
  // uncovered vertex 4 hangs off the interior vertex 0.
  Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  auto out = improve_once(g, 1, Path{1, 0, 2});
  check_step(g, 1, Path{1, 0, 2}, out);
  EXPECT_EQ(out.kind, StepKind::shortened);
  EXPECT_EQ(out.path, (Path{0, 2}));
}

TEST(ImproveOnce, Errors) {
  Graph g = generate({Family::cycle, 5});
  EXPECT_THROW(improve_once(g, 1, Path{0, 1, 2}), invalid_input);  // already 1-dominating
  EXPECT_THROW(improve_once(g, 0, Path{0}), invalid_input);
  EXPECT_THROW(improve_once(g, 1, Path{0, 2}), invalid_input);
}

TEST(ImproveOnce, PostconditionsOnRandomPaths) {
  std::mt19937 rng(37);
  int steps = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_connected(4 + trial % 8, 0.15, rng);
    int k = 1 + trial % 2;
    std::vector<std::vector<Vertex>> paths;
    oracle::each_path(g, [&](const std::vector<Vertex>& p) {
      if (paths.size() < 400) paths.push_back(p);
    });
    for (int i = 0; i < 5; ++i) {
      Path p(paths[rng() % paths.size()]);
      if (path_eccentricity(g, p) <= k) continue;
      check_step(g, k, p, improve_once(g, k, p));
      ++steps;
    }
  }
  EXPECT_GT(steps, 200);
}

TEST(Dichotomy, Examples) {
  auto c5 = find_k_dominating_path_or_witness(generate({Family::cycle, 5}), 1);
  ASSERT_TRUE(c5.path);
  EXPECT_FALSE(c5.witness);

  Graph claw2 = generate({Family::subdivided_claw, 2});
  auto at = find_k_dominating_path_or_witness(claw2, 1);
  ASSERT_TRUE(at.witness);
  EXPECT_FALSE(at.path);
  EXPECT_EQ(at.witness->triple, (Triple{2, 4, 6}));
  EXPECT_TRUE(is_k_at(claw2, at.witness->triple, 1));

  auto path = find_k_dominating_path_or_witness(claw2, 2);
  ASSERT_TRUE(path.path);
  EXPECT_LE(path_eccentricity(claw2, *path.path), 2);
}

TEST(Dichotomy, Errors) {
  EXPECT_THROW(find_k_dominating_path_or_witness(Graph(2), 1), invalid_input);
  EXPECT_THROW(find_k_dominating_path_or_witness(Graph(1), 0), invalid_input);
}

TEST(Dichotomy, TightOnSubdividedClaws) {
  for (int k = 1; k <= 4; ++k) {
    Graph g = generate({Family::subdivided_claw, k});
    auto d = find_k_dominating_path_or_witness(g, k);
    ASSERT_TRUE(d.path) << "k=" << k;
    EXPECT_EQ(path_eccentricity(g, *d.path), k);
    if (k > 1) { EXPECT_TRUE(find_k_dominating_path_or_witness(g, k - 1).witness); }
  }
}

TEST(Dichotomy, BothSidesExistReportsWitness) {
  // The biconvex fixture has an asteroidal triple and a 1-dominating path.
  Graph g = generate({Family::fig_biconvex});
  auto d = find_k_dominating_path_or_witness(g, 1);
  ASSERT_TRUE(d.witness);
  EXPECT_TRUE(verify_kat(g, *d.witness));
  ASSERT_TRUE(d.loop_path);
  EXPECT_LE(path_eccentricity(g, *d.loop_path), 1);
}

TEST(Dichotomy, TraceIsMonotone) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_connected(5 + trial % 6, 0.12, rng);
    for (int k = 1; k <= 2; ++k) {
      auto d = find_k_dominating_path_or_witness(g, k);
      for (std::size_t i = 1; i < d.trace.size(); ++i) {
        const auto& a = d.trace[i - 1];
        const auto& b = d.trace[i];
        bool up = b.covered > a.covered || (b.covered == a.covered && b.path_vertices < a.path_vertices);
        if (a.step == "improved" || a.step == "shortened" || a.step == "fallback_improved") { EXPECT_TRUE(up); }
      }
    }
  }
}

TEST(Dichotomy, AgreesWithGroundTruthSmallGraphs) {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_connected(n)) {
      const int min_k = oracle::min_k_at_free(g);
      const int pe = oracle::path_eccentricity(g);
      for (int k = 1; k <= 3; ++k) {
        auto d = find_k_dominating_path_or_witness(g, k);
        ASSERT_NE(d.path.has_value(), d.witness.has_value());
        EXPECT_EQ(d.path.has_value(), k >= min_k) << emit_graph6(g) << " k=" << k;
        if (d.path) {
          EXPECT_LE(path_eccentricity(g, *d.path), k);
          EXPECT_LE(pe, k);
        } else {
          EXPECT_TRUE(verify_kat(g, *d.witness));
          EXPECT_TRUE(oracle::is_kat(g, d.witness->triple[0], d.witness->triple[1], d.witness->triple[2], k));
        }
      }
    }
}

TEST(Dichotomy, RandomLargerGraphs) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_connected(9 + trial % 4, 0.1, rng);
    for (int k = 1; k <= 3; ++k) {
      auto d = find_k_dominating_path_or_witness(g, k);
      bool kat = oracle::has_kat(g, k);
      EXPECT_EQ(d.witness.has_value(), kat);
      if (d.path) { EXPECT_LE(path_eccentricity(g, *d.path), k); }
      if (d.witness) { EXPECT_TRUE(verify_kat(g, *d.witness)); }
    }
  }
}
