#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "cpk/c1p.hpp"
#include "cpk/families.hpp"
#include "cpk/star_c1p.hpp"
#include "oracles.hpp"

using namespace cpk;

namespace {

std::vector<int> identity(int n) {
  std::vector<int> r(static_cast<std::size_t>(n));
  std::iota(r.begin(), r.end(), 0);
  return r;
}

}  // namespace

TEST(Matrices, FixturesMatchGraphs) {
  EXPECT_EQ(adjacency_matrix(generate({Family::fig_example_a})), BinaryMatrix::from_rows(fixtures::kExampleAAdjacency));
  EXPECT_EQ(augmented_matrix(generate({Family::fig_example_b})), BinaryMatrix::from_rows(fixtures::kExampleBAugmented));
  std::vector<Vertex> d{3};
  EXPECT_EQ(partially_augmented_matrix(generate({Family::fig_example_c}), d),
            BinaryMatrix::from_rows(fixtures::kExampleCPartial));
}

TEST(VerifyWitness, Examples) {
  Graph c = generate({Family::fig_example_c});
  EXPECT_TRUE(verify_witness(c, OrderingWitness{identity(6), {3}}));
  EXPECT_FALSE(verify_witness(c, OrderingWitness{identity(6), {}}));
  Graph k2(2, {{0, 1}});
  EXPECT_TRUE(verify_witness(k2, OrderingWitness{identity(2), {}}));
  EXPECT_THROW(verify_witness(k2, OrderingWitness{{0, 0}, {}}), invalid_input);
  EXPECT_THROW(verify_witness(k2, OrderingWitness{{0}, {}}), invalid_input);
}

TEST(VerifyWitness, LadderGolden) {
  for (int k = 2; k <= 8; ++k) {
    Graph g = generate({Family::ladder_k4, k});
    EXPECT_EQ(g.order(), 2 * k);
    auto w = witness_for_order(g, identity(2 * k));
    ASSERT_TRUE(w) << "k=" << k;
    EXPECT_EQ(w->diagonal, (VertexSet{k - 1, k}));  // {v_k, v_{k+1}}
    EXPECT_TRUE(verify_witness(g, *w));
  }
}

TEST(FindStarC1p, Examples) {
  EXPECT_FALSE(find_star_c1p(generate({Family::cycle, 5})));
  auto c = find_star_c1p(generate({Family::fig_example_c}));
  ASSERT_TRUE(c);
  EXPECT_TRUE(verify_witness(generate({Family::fig_example_c}), *c));
  EXPECT_TRUE(find_star_c1p(Graph(1)));
  for (int n = 2; n <= 7; ++n) EXPECT_TRUE(find_star_c1p(generate({Family::clique, n})));
  EXPECT_TRUE(find_star_c1p(Graph(0)));
  EXPECT_TRUE(find_star_c1p(generate({Family::fig_biconvex})));
  EXPECT_THROW(find_star_c1p(generate({Family::path, 21})), size_limit_exceeded);
  EXPECT_TRUE(find_star_c1p(generate({Family::path, 20})));
}

TEST(FindStarC1p, NormalizedWitness) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_connected(2 + trial % 7, 0.4, rng);
    auto w = find_star_c1p(g);
    if (!w) continue;
    EXPECT_LE(2 * w->rank[0], g.order());
    EXPECT_EQ(*w, *witness_for_order(g, w->rank));  // minimal diagonal
    EXPECT_EQ(*w, *find_star_c1p(g));              // deterministic
  }
}

TEST(FindStarC1p, AgreesWithDefinition) {
  std::mt19937 rng(18);
  int positives = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + trial % 7;
    Graph g = oracle::random_connected(n, 0.2 + 0.1 * (trial % 5), rng);
    auto w = find_star_c1p(g);
    ASSERT_EQ(w.has_value(), oracle::has_star_c1p(g)) << emit_graph6(g);
    if (w) {
      ++positives;
      EXPECT_TRUE(verify_witness(g, *w));
    }
  }
  EXPECT_GT(positives, 50);
}

TEST(FindStarC1p, DisconnectedGraphs) {
  Graph g(7, {{0, 1}, {1, 2}, {4, 5}});
  auto w = find_star_c1p(g);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_witness(g, *w));
  Graph two_c5(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}});
  EXPECT_FALSE(find_star_c1p(two_c5));
}

TEST(FindStarC1p, SubsumesPlainAndAugmentedC1p) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 400; ++trial) {
    Graph g = oracle::random_connected(2 + trial % 7, 0.35, rng);
    bool plain = has_c1p(adjacency_matrix(g)).has_value();
    bool augmented = has_c1p(augmented_matrix(g)).has_value();
    if (plain || augmented) { EXPECT_TRUE(find_star_c1p(g)) << emit_graph6(g); }
  }
}

TEST(Ranks, OrderConversions) {
  std::vector<Vertex> order{2, 0, 1};
  auto rank = ranks_from_order(order);
  EXPECT_EQ(rank, (std::vector<int>{1, 2, 0}));
  EXPECT_EQ(order_from_ranks(rank), order);
}

TEST(NeighborhoodBounds, Examples) {
  Graph k2(2, {{0, 1}});
  auto b = neighborhood_bounds(k2, OrderingWitness{identity(2), {}}, 0);
  EXPECT_EQ(b.min_rank, 1);
  EXPECT_EQ(b.max_rank, 1);
  Graph c = generate({Family::fig_example_c});
  auto b5 = neighborhood_bounds(c, OrderingWitness{identity(6), {3}}, 4);
  EXPECT_EQ(b5.min_rank, 0);
  EXPECT_EQ(b5.max_rank, 3);
  Graph star(4, {{3, 0}, {3, 1}, {3, 2}});
  auto bs = neighborhood_bounds(star, OrderingWitness{identity(4), {}}, 3);
  EXPECT_EQ(bs.min_rank, 0);
  EXPECT_EQ(bs.max_rank, 2);
  EXPECT_THROW(neighborhood_bounds(Graph(2), OrderingWitness{identity(2), {}}, 0), invalid_input);
}

TEST(OrderLemma, Examples) {
  Graph c = generate({Family::fig_example_c});
  OrderingWitness w{identity(6), {3}};
  EXPECT_TRUE(check_order_lemma(c, w, Path{2}));
  auto paths = induced_paths(c);
  EXPECT_FALSE(paths.empty());
  for (const auto& p : paths) EXPECT_TRUE(check_order_lemma(c, w, p)) << p.vertices.size();
  EXPECT_THROW(check_order_lemma(c, w, Path{0, 5, 1, 4}), invalid_input);  // chord 0-4
}

TEST(OrderLemma, ThreeVertexPaths) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_connected(3 + trial % 6, 0.35, rng);
    auto w = find_star_c1p(g);
    if (!w) continue;
    auto by_rank = order_from_ranks(w->rank);
    for (const auto& p : induced_paths(g)) {
      if (p.count() != 3) continue;
      EXPECT_TRUE(check_order_lemma(g, *w, p));
      auto near = neighborhood_mask(g, p.vertices, 1);
      int lo = std::min(w->rank[p.front()], w->rank[p.back()]);
      int hi = std::max(w->rank[p.front()], w->rank[p.back()]);
      for (int r = lo; r <= hi; ++r) EXPECT_TRUE(near[by_rank[r]]);
    }
  }
}

TEST(OrderLemma, DetectsViolation) {
  // P5 with z0, z2, z4 at ranks 0, 2, 1: not monotone.
  Graph p5 = generate({Family::path, 5});
  OrderingWitness w{{0, 3, 2, 4, 1}, {}};
  EXPECT_FALSE(check_order_lemma(p5, w, Path{0, 1, 2, 3, 4}));
}

TEST(PathNeighborhoodLemma, HoldsOnWitnessedGraphs) {
  std::mt19937 rng(29);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_connected(4 + trial % 5, 0.25, rng);
    auto w = find_star_c1p(g);
    if (!w) continue;
    for (const auto& p : induced_paths(g)) {
      if (p.length() % 2 != 1) continue;
      auto near = neighborhood_mask(g, p.vertices, 1);
      for (Vertex x = 0; x < g.order(); ++x)
        if (!near[x]) {
          EXPECT_TRUE(check_path_neighborhood_lemma(g, *w, p, x)) << emit_graph6(g);
          ++checked;
        }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(PathNeighborhoodLemma, Errors) {
  Graph g = generate({Family::path, 5});
  OrderingWitness w{identity(5), {}};
  EXPECT_THROW(check_path_neighborhood_lemma(g, w, Path{0, 1, 2}, 4), invalid_input);  // even length
  EXPECT_THROW(check_path_neighborhood_lemma(g, w, Path{0, 1}, 2), invalid_input);     // x in N[P]
  EXPECT_TRUE(check_path_neighborhood_lemma(g, w, Path{0, 1}, 3));
  EXPECT_FALSE(check_path_neighborhood_lemma(g, OrderingWitness{{0, 1, 4, 2, 3}, {}}, Path{0, 1}, 3));
}

TEST(InducedPaths, CountsOnCycle) {
  // C5: 5 singletons, and for each length 1..3 five paths.
  auto paths = induced_paths(generate({Family::cycle, 5}));
  EXPECT_EQ(paths.size(), 20u);
  for (const auto& p : paths) EXPECT_TRUE(is_induced_path(generate({Family::cycle, 5}), p));
}
