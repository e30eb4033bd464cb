#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "tightpath/error.hpp"
#include "tightpath/paths.hpp"
#include "tightpath/rational.hpp"
#include "tightpath/rdigraph.hpp"
#include "tightpath/rng.hpp"
#include "tightpath/tournament.hpp"

using namespace tightpath;

namespace {

RDigraph random_rdigraph(int n, int r, double p, Rng& rng) {
  std::vector<Tuple> edges;
  Tuple e(static_cast<std::size_t>(r));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == r) {
      if (static_cast<double>(rng.below(1000)) < p * 1000) edges.push_back(e);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      e[pos] = v;
      self(self, pos + 1);
      used[v] = false;
    }
  };
  rec(rec, 0);
  return RDigraph(n, r, std::move(edges));
}

int oracle_longest(const RDigraph& g) {
  return oracle::longest_tight_path(g.n(), g.r(), [&](const std::vector<int>& e) { return g.has_edge(e); });
}

// Copies of C^(r)_r counted from scratch: cyclic arrangements up to rotation.
std::uint64_t count_r_cycles(const RDigraph& g) {
  const int n = g.n(), r = g.r();
  std::set<std::set<std::vector<int>>> copies;
  std::vector<int> seq(static_cast<std::size_t>(r));
  std::function<void(int, std::uint64_t)> rec = [&](int pos, std::uint64_t used) {
    if (pos == r) {
      std::set<std::vector<int>> edges;
      for (int i = 0; i < r; ++i) {
        std::vector<int> e;
        for (int j = 0; j < r; ++j) e.push_back(seq[(i + j) % r]);
        if (!g.has_edge(e)) return;
        edges.insert(e);
      }
      copies.insert(edges);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u) continue;
      seq[pos] = v;
      rec(pos + 1, used | (std::uint64_t{1} << v));
    }
  };
  rec(0, 0);
  return copies.size();
}

}  // namespace

TEST(LongestPath, MatchesEnumerationOracle) {
  Rng rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const int r = 2 + static_cast<int>(rng.below(3));
    const int n = static_cast<int>(rng.below(r == 4 ? 7 : 8)) + 1;
    const double p = 0.2 + 0.15 * static_cast<double>(rng.below(5));
    const RDigraph g = random_rdigraph(n, r, p, rng);
    const PathResult res = longest_tight_path(g);
    ASSERT_TRUE(res.optimal);
    EXPECT_TRUE(is_tight_path(g, res.path));
    EXPECT_EQ(res.size(), oracle_longest(g)) << "n=" << n << " r=" << r;
  }
}

TEST(LongestPath, TournamentsAgreeWithOracleUpToEight) {
  Rng rng(8);
  for (int k = 1; k <= 6; ++k) {
    for (int n = 3; n <= 8; ++n) {
      const Tournament t = random_rk_tournament(n, 3, k, rng);
      const RDigraph g = t.to_rdigraph();
      const PathResult a = longest_tight_path(t);
      const PathResult b = longest_tight_path(g);
      EXPECT_EQ(a.size(), b.size());
      EXPECT_EQ(a.size(), oracle_longest(g));
      EXPECT_TRUE(is_tight_path(g, a.path));
    }
  }
}

TEST(LongestPath, Examples) {
  EXPECT_EQ(longest_tight_path(RDigraph::complete(6, 3)).size(), 6);
  EXPECT_EQ(longest_tight_path(construct_max_second(8, 3)).size(), 3);
  const Tournament ps = construct_from_pattern_set(
      10, 3, {Permutation(std::vector<int>{1, 3, 2}), Permutation(std::vector<int>{2, 3, 1})});
  // Both patterns put the maximum in the middle, so no two edges chain.
  EXPECT_EQ(oracle_longest(ps.to_rdigraph()), 3);
  EXPECT_EQ(longest_tight_path(ps).size(), 3);
  EXPECT_EQ(longest_tight_path(RDigraph(2, 3, {})).size(), 2);
  EXPECT_EQ(longest_tight_path(RDigraph(5, 3, {})).size(), 2);
  EXPECT_EQ(longest_tight_path(RDigraph(0, 3, {})).size(), 0);
}

TEST(LongestPath, PrefixAndBudget) {
  const RDigraph g = construct_max_second(6, 3).to_rdigraph();
  PathSearchOptions opts;
  opts.prefix = {0, 5};
  const PathResult p = longest_tight_path(g, opts);
  EXPECT_EQ(p.size(), 3);
  EXPECT_EQ(p.path[0], 0);
  EXPECT_EQ(p.path[1], 5);
  opts.prefix = {5, 0, 1};  // max is first, not second
  EXPECT_THROW(longest_tight_path(g, opts), Error);

  Rng rng(4);
  const Tournament t = random_rk_tournament(14, 3, 3, rng);
  PathSearchOptions tight;
  tight.state_cap = 5;
  const PathResult partial = longest_tight_path(t, tight);
  if (!partial.optimal) {
    EXPECT_FALSE(partial.note.empty());
  }
  EXPECT_TRUE(is_tight_path(t.to_rdigraph(), partial.path));
  EXPECT_LE(partial.size(), longest_tight_path(t).size());
}

TEST(LongestPath, HeuristicNeverBeatsExact) {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const Tournament t = random_rk_tournament(10, 3, 3, rng);
    PathSearchOptions opts;
    opts.mode = PathSearchMode::Heuristic;
    opts.time_budget = std::chrono::milliseconds(20);
    opts.seed = static_cast<std::uint64_t>(trial);
    const PathResult h = longest_tight_path(t, opts);
    const PathResult e = longest_tight_path(t);
    EXPECT_TRUE(is_tight_path(t.to_rdigraph(), h.path));
    EXPECT_LE(h.size(), e.size());
  }
}

TEST(LongestPath, Binary33SixteenVertices) {
  const PathResult p = longest_tight_path(construct_binary_33(4));
  ASSERT_TRUE(p.optimal);
  EXPECT_LE(p.size(), 2 * 4 + 4);
}

TEST(MinDegree, SingleEdgeAndIsolatedVertex) {
  Hypergraph h{3, 3, {{0, 1, 2}}};
  MinDegreeSubgraph s = min_degree_subgraph(h, Rational(1));
  EXPECT_EQ(s.vertices, (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(s.peel_order.empty());

  Hypergraph g{4, 3, {{1, 2, 3}}};
  s = min_degree_subgraph(g, Rational(3, 4));
  ASSERT_FALSE(s.peel_order.empty());
  EXPECT_EQ(s.peel_order.front(), 0);
  EXPECT_EQ(s.vertices, (std::vector<int>{1, 2, 3}));
  EXPECT_THROW(min_degree_subgraph(g, Rational(2)), Error);
}

TEST(MinDegree, RandomThreeGraphs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const int n = 6 + static_cast<int>(rng.below(8));
    Hypergraph h{n, 3, {}};
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          if (rng.below(3) == 0) h.edges.push_back({a, b, c});
    if (h.edges.empty()) continue;
    const Rational d(3 * static_cast<long long>(h.edges.size()), n);
    const MinDegreeSubgraph s = min_degree_subgraph(h, d);
    std::set<int> alive(s.vertices.begin(), s.vertices.end());
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::size_t inside = 0;
    for (const auto& e : h.edges) {
      if (std::all_of(e.begin(), e.end(), [&](int v) { return alive.count(v); })) {
        ++inside;
        for (int v : e) ++degree[v];
      }
    }
    EXPECT_EQ(inside, s.edge_ids.size());
    for (int v : s.vertices) EXPECT_GT(Rational(degree[v]), d / 3) << seed;
  }
}

TEST(PathFromCycles, CompleteAndSingleCycle) {
  const RDigraph k6 = RDigraph::complete(6, 3);
  const CyclePathResult res = path_from_cycles(k6);
  EXPECT_EQ(res.cycles, 40u);
  EXPECT_EQ(res.cycles, count_r_cycles(k6));
  EXPECT_EQ(res.tuples, 30u);
  EXPECT_GE(res.path.size(), 4u);
  EXPECT_TRUE(is_tight_path(k6, res.path));

  const RDigraph one(3, 3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  EXPECT_EQ(path_from_cycles(one).path.size(), 3u);
  EXPECT_THROW(path_from_cycles(construct_first_not_max(5, 3).to_rdigraph()), Error);
}

TEST(PathFromCycles, GuaranteeOnDenseInstances) {
  Rng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const int r = trial % 3 == 0 ? 4 : 3;
    const int n = r == 4 ? 6 + static_cast<int>(rng.below(2)) : 5 + static_cast<int>(rng.below(4));
    const RDigraph g = random_rdigraph(n, r, 0.8, rng);
    if (count_r_cycles(g) == 0) continue;
    const CyclePathResult res = path_from_cycles(g);
    EXPECT_EQ(res.cycles, count_r_cycles(g));
    EXPECT_TRUE(is_tight_path(g, res.path));
    EXPECT_GE(Rational(static_cast<long long>(res.path.size())), res.guarantee);
    EXPECT_GT(Rational(res.h0_min_degree), res.guarantee - (r - 1) - Rational(1, 1000000));
  }
}

TEST(PathFromCycles, LinearThresholdInstance) {
  Rng rng(5);
  const int n = 12, r = 3;
  const RDigraph g = random_rk_tournament(n, r, 5, rng).to_rdigraph();
  const CyclePathResult res = path_from_cycles(g);
  EXPECT_EQ(res.cycles, binomial_u64(12, 3));  // each triple omits one ordering, leaving one cyclic class whole
  EXPECT_GE(Rational(static_cast<long long>(res.path.size())), Rational(n - r + 1, 6) + (r - 1));
}

TEST(Span35, RandomTournamentsAndOrders) {
  for (int n = 1; n <= 12; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng(seed * 100 + static_cast<std::uint64_t>(n));
      const RDigraph g = random_rk_tournament(n, 3, 5, rng).to_rdigraph();
      std::vector<int> order(static_cast<std::size_t>(n));
      std::iota(order.begin(), order.end(), 0);
      rng.shuffle(order);
      for (const auto& o : {std::vector<int>{}, order}) {
        const InsertionResult res = spanning_path_35(g, o);
        EXPECT_EQ(static_cast<int>(res.path.size()), n);
        EXPECT_TRUE(is_tight_path(g, res.path));
        EXPECT_EQ(res.insertions, std::max(0, n - 3));
      }
    }
  }
  EXPECT_THROW(spanning_path_35(construct_first_not_max(5, 3).to_rdigraph()), Error);
  EXPECT_THROW(spanning_path_35(RDigraph::complete(4, 3), {0, 1, 2}), Error);
}

TEST(SpanFlexible, HighDensityTournaments) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng rng(seed);
    const RDigraph g = random_rk_tournament(9, 4, 23, rng).to_rdigraph();
    const FlexibleResult res = spanning_path_flexible(g);
    ASSERT_TRUE(res.success) << res.report;
    EXPECT_EQ(res.path.size(), 9u);
    EXPECT_TRUE(is_tight_path(g, res.path));
    EXPECT_GE(res.steps, 1);
  }
  for (int n = 3; n <= 7; ++n) {
    const FlexibleResult res = spanning_path_flexible(RDigraph::complete(n, 3));
    EXPECT_TRUE(res.success);
  }
  EXPECT_TRUE(spanning_path_flexible(RDigraph::complete(8, 4)).success);
  Rng rng(1);
  EXPECT_THROW(spanning_path_flexible(random_rk_tournament(7, 4, 22, rng).to_rdigraph()), Error);
  EXPECT_THROW(spanning_path_flexible(random_rk_tournament(6, 3, 5, rng).to_rdigraph()), Error);
  EXPECT_THROW(spanning_path_flexible(random_rk_tournament(7, 2, 1, rng).to_rdigraph()), Error);
  EXPECT_TRUE(spanning_path_flexible(random_rk_tournament(7, 2, 2, rng).to_rdigraph()).success);
}

TEST(ExtractBoundedWalk, MaxSecondAndEmpty) {
  const RDigraph g = construct_max_second(8, 3).to_rdigraph();
  const BoundedWalkSubgraph b = extract_bounded_walk_subgraph(g, 3);
  const WalkReport w = longest_walk(b.subgraph);
  EXPECT_TRUE(w.finite);
  EXPECT_LE(w.max_walk_size, 3);
  EXPECT_THROW(extract_bounded_walk_subgraph(g, 2), Error);

  const BoundedWalkSubgraph e = extract_bounded_walk_subgraph(RDigraph(5, 3, {}), 2);
  EXPECT_EQ(e.vertices, (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(e.good_sets, 0u);
}

TEST(ExtractBoundedWalk, Random34TournamentsAreClosedWalkFree) {
  Rng rng(34);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 5 + trial % 5;
    const RDigraph g = random_rk_tournament(n, 3, 4, rng).to_rdigraph();
    const int s = longest_tight_path(g).size();
    const BoundedWalkSubgraph b = extract_bounded_walk_subgraph(g, s);
    EXPECT_FALSE(has_closed_walk(b.subgraph));
    EXPECT_LE(b.longest_walk, std::max(2, s));
    EXPECT_FALSE(b.vertices.empty());
  }
}
