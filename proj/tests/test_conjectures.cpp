#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "tightpath/conjectures.hpp"
#include "tightpath/error.hpp"
#include "tightpath/paths.hpp"
#include "tightpath/rng.hpp"
#include "tightpath/tournament.hpp"

using namespace tightpath;

namespace {

// Edge sets as sets of tuples, for explicit isomorphism checks.
std::set<std::vector<int>> edge_set(const Tournament& t) {
  const RDigraph g = t.to_rdigraph();
  return {g.edges().begin(), g.edges().end()};
}

bool isomorphic(const Tournament& a, const Tournament& b) {
  const auto ea = edge_set(a), eb = edge_set(b);
  std::vector<int> perm(static_cast<std::size_t>(a.n()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (bool rev : {false, true}) {
      std::set<std::vector<int>> mapped;
      for (auto e : ea) {
        for (int& v : e) v = perm[v];
        if (rev) std::reverse(e.begin(), e.end());
        mapped.insert(e);
      }
      if (mapped == eb) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::uint64_t brute_count(const RDigraph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.n()));
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t count = 0;
  do count += is_tight_path(g, order);
  while (std::next_permutation(order.begin(), order.end()));
  return count;
}

}  // namespace

TEST(Check34, ExhaustiveSmall) {
  const SearchReport r3 = check_34(3, SearchMode::Exhaustive, 0, 0);
  EXPECT_EQ(r3.raw_instances, 15u);
  EXPECT_FALSE(r3.counterexample.has_value());
  EXPECT_GE(*r3.min_spanning_paths, 1u);

  const SearchReport r4 = check_34(4, SearchMode::Exhaustive, 0, 0);
  EXPECT_EQ(r4.raw_instances, 50625u);
  EXPECT_FALSE(r4.counterexample.has_value());
  EXPECT_LT(r4.canonical_instances, r4.raw_instances);
  EXPECT_EQ(r4.checked, r4.canonical_instances);
  EXPECT_GE(*r4.min_spanning_paths, 1u);

  EXPECT_THROW(check_34(5, SearchMode::Exhaustive, 0, 0), Error);
}

TEST(Check34, AcyclicExhaustiveAndRandom) {
  const SearchReport ex = check_34_acyclic(4, SearchMode::Exhaustive, 0, 0);
  EXPECT_FALSE(ex.counterexample.has_value());
  EXPECT_GT(ex.checked, 0u);
  EXPECT_EQ(ex.checked + ex.filtered_out, ex.canonical_instances);

  const SearchReport rnd = check_34_acyclic(6, SearchMode::Random, 17, 200);
  EXPECT_FALSE(rnd.counterexample.has_value());
  EXPECT_EQ(rnd.checked, 200u);
}

TEST(Check34, RandomIsDeterministic) {
  const SearchReport a = check_34(6, SearchMode::Random, 5, 500);
  const SearchReport b = check_34(6, SearchMode::Random, 5, 500);
  EXPECT_FALSE(a.counterexample.has_value());
  EXPECT_EQ(a.checked, 500u);
  EXPECT_EQ(a.min_spanning_paths, b.min_spanning_paths);
  EXPECT_THROW(check_34(11, SearchMode::Random, 0, 1), Error);
}

TEST(Check34, FirstNotMaxIsClosedWalkFreeWithSpanningPath) {
  for (int n = 3; n <= 9; ++n) {
    const Tournament t = construct_first_not_max(n, 3);
    EXPECT_FALSE(has_closed_walk(t.to_rdigraph()));
    EXPECT_EQ(longest_tight_path(t).size(), n);
  }
}

TEST(CanonicalForm, SoundOnRandomPairs) {
  Rng rng(1000);
  int equal_pairs = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Tournament a = random_rk_tournament(4, 3, 4, rng);
    Tournament b = random_rk_tournament(4, 3, 4, rng);
    if (trial % 2 == 0) {
      std::vector<int> perm{0, 1, 2, 3};
      rng.shuffle(perm);
      b = relabel(a, perm);
      if (rng.below(2)) b = reverse_all(b);
    }
    const bool same = canonical_form(a) == canonical_form(b);
    ASSERT_EQ(same, isomorphic(a, b)) << trial;
    equal_pairs += same;
  }
  EXPECT_GE(equal_pairs, 500);
}

TEST(CountSpanningPaths, KnownValues) {
  for (int n = 3; n <= 9; ++n) {
    EXPECT_EQ(count_spanning_paths(construct_middle_not_max(n).to_rdigraph()), std::uint64_t{1} << (n - 1));
  }
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(count_spanning_paths(RDigraph::complete(n, 3)), factorial_u64(n));
  EXPECT_EQ(count_spanning_paths(construct_max_second(5, 3).to_rdigraph()), 0u);
  EXPECT_THROW(count_spanning_paths(RDigraph::complete(13, 3)), Error);
}

TEST(CountSpanningPaths, AgreesWithSolverAndBruteForce) {
  Rng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = 2 + trial % 3;
    const int n = r + static_cast<int>(rng.below(4));
    const int k = 1 + static_cast<int>(rng.below(factorial_u64(r)));
    const RDigraph g = random_rk_tournament(n, r, k, rng).to_rdigraph();
    const std::uint64_t c = count_spanning_paths(g);
    EXPECT_EQ(c, brute_count(g));
    EXPECT_EQ(c > 0, longest_tight_path(g).size() == n);
    EXPECT_EQ(c > 0, has_spanning_path_bruteforce(g));
  }
}

TEST(PairwiseIntersecting, RandomTriangleFree) {
  Rng rng(50);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 6;
    const RDigraph g = random_triangle_free_34(n, rng).to_rdigraph();
    const IntersectionReport rep = check_pairwise_intersecting(g);
    EXPECT_TRUE(rep.intersecting) << trial;
    EXPECT_GE(rep.maximum_paths, 1u);
    EXPECT_EQ(rep.max_size, longest_tight_path(g).size());
  }
}

TEST(PairwiseIntersecting, RejectsTriangles) {
  const RDigraph g = RDigraph::complete(4, 3);
  EXPECT_THROW(check_pairwise_intersecting(g), Error);
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Tournament t = random_rk_tournament(5, 3, 4, rng);
    bool triangle = false;
    const RDigraph h = t.to_rdigraph();
    for (const auto& e : h.edges()) {
      triangle |= t.has_edge(std::vector<int>{e[1], e[2], e[0]}) && t.has_edge(std::vector<int>{e[2], e[0], e[1]});
    }
    if (!triangle) continue;
    try {
      check_pairwise_intersecting(h);
      ADD_FAILURE() << "triangle not rejected";
    } catch (const Error& err) {
      EXPECT_NE(std::string(err.what()).find("cycle on {"), std::string::npos);
    }
  }
}

TEST(PairwiseIntersecting, RepairLengthensAnyDisjointPair) {
  Rng rng(99);
  int repaired = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const RDigraph g = random_triangle_free_34(8, rng).to_rdigraph();
    for (int t = 2; t <= 4; ++t) {
      // Two disjoint paths of size t, found by search on each half-split.
      std::vector<int> order(8);
      std::iota(order.begin(), order.end(), 0);
      rng.shuffle(order);
      std::vector<int> left(order.begin(), order.begin() + 4), right(order.begin() + 4, order.end());
      auto find = [&](const std::vector<int>& pool) -> std::vector<int> {
        std::vector<int> pick(pool);
        std::sort(pick.begin(), pick.end());
        do {
          std::vector<int> seq(pick.begin(), pick.begin() + t);
          if (is_tight_path(g, seq)) return seq;
        } while (std::next_permutation(pick.begin(), pick.end()));
        return {};
      };
      const auto a = find(left), b = find(right);
      if (a.empty() || b.empty()) continue;
      const auto q = repair_disjoint_paths(g, a, b);
      EXPECT_TRUE(is_tight_path(g, q));
      EXPECT_GT(q.size(), static_cast<std::size_t>(t));
      ++repaired;
    }
  }
  EXPECT_GT(repaired, 50);
}

TEST(PairwiseIntersecting, SquareVertexCountForcesPath) {
  Rng rng(4);
  for (int s = 1; s <= 3; ++s) {
    for (int trial = 0; trial < 10; ++trial) {
      const RDigraph g = random_triangle_free_34(s * s, rng).to_rdigraph();
      EXPECT_GE(longest_tight_path(g).size(), s);
    }
  }
  // Every 4-vertex triangle-free (3,4)-tournament has an edge.
  EXPECT_GE(random_triangle_free_34(4, rng).to_rdigraph().edge_count(), 1u);
}

TEST(WalkColoring, Binary33Subgraph) {
  const RDigraph g = construct_binary_33(2).to_rdigraph();
  const int s = longest_tight_path(g).size();
  const BoundedWalkSubgraph h = extract_bounded_walk_subgraph(g, s);
  const WalkColoring c = walk_length_coloring(h.subgraph);
  EXPECT_FALSE(c.monochromatic_triangle.has_value());
  EXPECT_LE(c.distinct_colours, c.longest_walk * c.longest_walk);
  EXPECT_EQ(c.longest_walk, std::max<std::int64_t>(2, longest_walk(h.subgraph).max_walk_size));
  // Direct triangle scan.
  const int n = h.subgraph.n();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int w = v + 1; w < n; ++w)
        EXPECT_FALSE(c.colour.at({u, v}) == c.colour.at({v, w}) && c.colour.at({u, v}) == c.colour.at({u, w}));
}

TEST(WalkColoring, SmallAndInvalid) {
  const RDigraph tri(3, 3, {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}});
  const WalkColoring c = walk_length_coloring(tri);
  EXPECT_EQ(c.colour.size(), 3u);
  const bool mono = c.colour.at({0, 1}) == c.colour.at({1, 2}) && c.colour.at({0, 1}) == c.colour.at({0, 2});
  EXPECT_EQ(mono, c.monochromatic_triangle.has_value());
  EXPECT_FALSE(mono);
  const RDigraph cyc(3, 3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  EXPECT_THROW(walk_length_coloring(cyc), Error);
  EXPECT_THROW(walk_length_coloring(RDigraph::complete(4, 3)), Error);
}
