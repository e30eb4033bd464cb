#include "tightpath/conjectures.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <set>

#include "successor_table.hpp"
#include "tightpath/digraph.hpp"
#include "tightpath/error.hpp"
#include "tightpath/paths.hpp"
#include "tightpath/rng.hpp"

namespace tightpath {

namespace {

using detail::mask_of;

// The fifteen 4-subsets of the six orderings of a triple.
std::vector<int> four_of_six() {
  std::vector<int> out;
  for (int m = 0; m < 64; ++m)
    if (std::popcount(static_cast<unsigned>(m)) == 4) out.push_back(m);
  return out;
}

struct EdgeList {
  std::vector<std::vector<int>> edges;
};

EdgeList edges_of(const Tournament& g) {
  EdgeList out;
  std::vector<Permutation> orderings;
  for (int p = 0; p < g.pattern_count(); ++p) orderings.push_back(Permutation::unrank(g.r(), static_cast<std::uint64_t>(p)));
  for (std::uint64_t s = 0; s < g.subset_count(); ++s) {
    const auto set = g.subset(s);
    for (int p = 0; p < g.pattern_count(); ++p) {
      if (!g.test(s, p)) continue;
      std::vector<int> e(static_cast<std::size_t>(g.r()));
      for (int i = 0; i < g.r(); ++i) e[static_cast<std::size_t>(i)] = set[static_cast<std::size_t>(orderings[p][i] - 1)];
      out.edges.push_back(std::move(e));
    }
  }
  return out;
}

// Masks of the image of `edges` under perm (and reversal), one word run per subset.
std::vector<std::uint64_t> encode(const Tournament& shape, const EdgeList& edges, const std::vector<int>& perm,
                                  bool reverse) {
  const std::uint64_t words = (static_cast<std::uint64_t>(shape.pattern_count()) + 63) / 64;
  std::vector<std::uint64_t> out(shape.subset_count() * words, 0);
  std::vector<int> e(static_cast<std::size_t>(shape.r())), sorted;
  for (const auto& src : edges.edges) {
    for (std::size_t i = 0; i < src.size(); ++i) e[i] = perm[static_cast<std::size_t>(src[i])];
    if (reverse) std::reverse(e.begin(), e.end());
    sorted = e;
    std::sort(sorted.begin(), sorted.end());
    const std::uint64_t p = pattern_rank(e);
    out[shape.subset_index(sorted) * words + p / 64] |= std::uint64_t{1} << (p % 64);
  }
  return out;
}

Tournament transform(const Tournament& g, const std::vector<int>& perm, bool reverse) {
  Tournament out(g.n(), g.r());
  std::vector<int> e(static_cast<std::size_t>(g.r())), sorted;
  for (const auto& src : edges_of(g).edges) {
    for (std::size_t i = 0; i < src.size(); ++i) e[i] = perm[static_cast<std::size_t>(src[i])];
    if (reverse) std::reverse(e.begin(), e.end());
    sorted = e;
    std::sort(sorted.begin(), sorted.end());
    out.set(out.subset_index(sorted), static_cast<int>(pattern_rank(e)));
  }
  return out;
}

bool has_tight_3_cycle(const Tournament& g, std::vector<int>* where) {
  // Ranks: 123=0 132=1 213=2 231=3 312=4 321=5.
  for (std::uint64_t s = 0; s < g.subset_count(); ++s) {
    const bool forward = g.test(s, 0) && g.test(s, 3) && g.test(s, 4);
    const bool backward = g.test(s, 5) && g.test(s, 2) && g.test(s, 1);
    if (forward || backward) {
      if (where) *where = g.subset(s);
      return true;
    }
  }
  return false;
}

// Kahn's algorithm on the shift digraph of (r-1)-tuples.
bool closed_walk_free(const detail::SuccessorTable& table) {
  const std::uint64_t m = table.modulus();
  std::vector<int> indeg(m, 0);
  for (std::uint64_t c = 0; c < m; ++c)
    for (std::uint64_t cand = table.next(c); cand; cand &= cand - 1) ++indeg[table.shift(c, std::countr_zero(cand))];
  std::vector<std::uint64_t> queue;
  for (std::uint64_t c = 0; c < m; ++c)
    if (!indeg[c]) queue.push_back(c);
  std::uint64_t done = 0;
  while (done < queue.size()) {
    const std::uint64_t c = queue[done++];
    for (std::uint64_t cand = table.next(c); cand; cand &= cand - 1) {
      const std::uint64_t d = table.shift(c, std::countr_zero(cand));
      if (--indeg[d] == 0) queue.push_back(d);
    }
  }
  return done == m;
}

// A Markov chain on closed-walk-free (3,4)-tournaments: start from a random
// relabelling of the first-not-max construction (or its reversal) and apply
// random triple reorientations that keep every walk finite.
Tournament random_closed_walk_free_34(int n, Rng& rng, std::uint64_t& rejected) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  Tournament t = transform(construct_first_not_max(n, 3), perm, rng.below(2) == 1);
  if (n < 3) return t;
  const auto choices = four_of_six();
  const std::uint64_t steps = 4 * t.subset_count();
  for (std::uint64_t i = 0; i < steps; ++i) {
    const std::uint64_t s = rng.below(t.subset_count());
    int old = 0;
    for (int p = 0; p < 6; ++p) old |= static_cast<int>(t.test(s, p)) << p;
    const int pick = choices[rng.below(choices.size())];
    for (int p = 0; p < 6; ++p) t.set(s, p, (pick >> p) & 1);
    if (!closed_walk_free(detail::table_of(t))) {
      for (int p = 0; p < 6; ++p) t.set(s, p, (old >> p) & 1);
      ++rejected;
    }
  }
  return t;
}

struct Checker {
  SearchReport& report;

  void check(const Tournament& t) {
    ++report.checked;
    const int n = t.n();
    const PathResult p = longest_tight_path(t);
    if (!p.optimal) fail(ErrorKind::Resource, "path solver did not finish: " + p.note);
    if (n <= 12) {
      const std::uint64_t c = count_spanning_paths(t.to_rdigraph());
      if (!report.min_spanning_paths || c < *report.min_spanning_paths) report.min_spanning_paths = c;
    }
    if (p.size() < n && !report.counterexample) {
      // Independent confirmation before reporting.
      if (!has_spanning_path_bruteforce(t.to_rdigraph())) report.counterexample = t;
    }
  }
};

void require_n(int n, SearchMode mode) {
  if (n < 0) fail(ErrorKind::InvalidInput, "n must be non-negative");
  if (mode == SearchMode::Exhaustive && n > 4) {
    fail(ErrorKind::Unsupported,
         "exhaustive search is limited to n <= 4: at n = 5 there are 15^10 raw (3,4)-tournaments, far beyond "
         "desk scale even after canonical reduction; the n <= 7 verification is external");
  }
  if (mode == SearchMode::Random && n > 10) fail(ErrorKind::Unsupported, "random mode supports n <= 10");
}

SearchReport run_34(int n, SearchMode mode, std::uint64_t seed, std::uint64_t samples, bool acyclic) {
  require_n(n, mode);
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.n = n;
  report.mode = mode;
  report.acyclic_only = acyclic;
  report.seed = seed;
  report.samples = samples;
  Checker checker{report};

  if (mode == SearchMode::Exhaustive) {
    const auto choices = four_of_six();
    Tournament shape(n, 3);
    const std::uint64_t subsets = shape.subset_count();
    std::vector<std::size_t> digit(subsets, 0);
    std::set<std::vector<std::uint64_t>> seen;
    for (;;) {
      Tournament t(n, 3);
      for (std::uint64_t s = 0; s < subsets; ++s)
        for (int p = 0; p < 6; ++p)
          if ((choices[digit[s]] >> p) & 1) t.set(s, p);
      ++report.raw_instances;
      if (seen.insert(canonical_form(t)).second) {
        if (acyclic && has_closed_walk(t.to_rdigraph())) {
          ++report.filtered_out;
        } else {
          checker.check(t);
        }
      }
      std::uint64_t i = 0;
      while (i < subsets && ++digit[i] == choices.size()) digit[i++] = 0;
      if (i == subsets) break;
    }
    report.canonical_instances = seen.size();
  } else {
    Rng rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
      Tournament t = acyclic ? Tournament(n, 3) : random_rk_tournament(n, 3, 4, rng);
      ++report.raw_instances;
      if (acyclic) t = random_closed_walk_free_34(n, rng, report.filtered_out);
      checker.check(t);
    }
  }
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

SearchReport check_34(int n, SearchMode mode, std::uint64_t seed, std::uint64_t samples) {
  return run_34(n, mode, seed, samples, false);
}

SearchReport check_34_acyclic(int n, SearchMode mode, std::uint64_t seed, std::uint64_t samples) {
  return run_34(n, mode, seed, samples, true);
}

std::vector<std::uint64_t> canonical_form(const Tournament& g) {
  if (g.n() > 8) fail(ErrorKind::Unsupported, "canonical forms support n <= 8");
  const EdgeList edges = edges_of(g);
  std::vector<int> perm(static_cast<std::size_t>(g.n()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> best;
  bool first = true;
  do {
    for (bool rev : {false, true}) {
      auto code = encode(g, edges, perm, rev);
      if (first || code < best) {
        best = std::move(code);
        first = false;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Tournament relabel(const Tournament& g, const std::vector<int>& perm) { return transform(g, perm, false); }

Tournament reverse_all(const Tournament& g) {
  std::vector<int> id(static_cast<std::size_t>(g.n()));
  std::iota(id.begin(), id.end(), 0);
  return transform(g, id, true);
}

std::uint64_t count_spanning_paths(const RDigraph& g) {
  const int n = g.n(), q = g.r() - 1;
  if (n > 12) fail(ErrorKind::Unsupported, "count_spanning_paths supports n <= 12");
  if (n <= q) return factorial_u64(static_cast<std::uint64_t>(n));
  const detail::SuccessorTable table = detail::table_of(g);
  const std::uint64_t states = (std::uint64_t{1} << n) * table.modulus();
  if (states > (std::uint64_t{1} << 26)) fail(ErrorKind::Resource, "spanning-path DP table too large");
  std::vector<std::uint64_t> dp(states, 0);
  const std::uint64_t mod = table.modulus();
  std::vector<int> cur;
  auto seed = [&](auto&& self, std::uint64_t mask) -> void {
    if (static_cast<int>(cur.size()) == q) {
      dp[mask * mod + table.code(cur)] = 1;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1u) continue;
      cur.push_back(v);
      self(self, mask | (std::uint64_t{1} << v));
      cur.pop_back();
    }
  };
  seed(seed, 0);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    for (std::uint64_t code = 0; code < mod; ++code) {
      const std::uint64_t val = dp[mask * mod + code];
      if (!val) continue;
      for (std::uint64_t cand = table.next(code) & ~mask; cand; cand &= cand - 1) {
        const int w = std::countr_zero(cand);
        dp[(mask | (std::uint64_t{1} << w)) * mod + table.shift(code, w)] += val;
      }
    }
  }
  std::uint64_t total = 0;
  for (std::uint64_t code = 0; code < mod; ++code) total += dp[full * mod + code];
  return total;
}

bool has_spanning_path_bruteforce(const RDigraph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.n()));
  std::iota(order.begin(), order.end(), 0);
  do {
    if (is_tight_path(g, order)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

std::vector<int> repair_disjoint_paths(const RDigraph& g, const std::vector<int>& a, const std::vector<int>& b) {
  const int t = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != t || t < 2) fail(ErrorKind::InvalidInput, "repair needs two paths of equal size >= 2");
  auto A = [&](int j) { return a[static_cast<std::size_t>(j - 1)]; };
  auto B = [&](int j) { return b[static_cast<std::size_t>(j - 1)]; };
  // Out edge chosen to maximise j, then j' in {j, j+1}.
  for (int j = t - 1; j >= 1; --j) {
    for (int jp : {j + 1, j}) {
      if (g.has_edge(std::vector<int>{A(j), A(j + 1), B(jp)})) {
        std::vector<int> q(a.begin(), a.begin() + j + 1);
        q.insert(q.end(), b.begin() + (jp - 1), b.end());
        return q;
      }
      if (g.has_edge(std::vector<int>{B(j), B(j + 1), A(jp)})) {
        std::vector<int> q(b.begin(), b.begin() + j + 1);
        q.insert(q.end(), a.begin() + (jp - 1), a.end());
        return q;
      }
    }
  }
  std::vector<int> q;
  for (int j = t; j >= 1; --j) {
    q.push_back(A(j));
    q.push_back(B(j));
  }
  return q;
}

IntersectionReport check_pairwise_intersecting(const RDigraph& g) {
  if (g.r() != 3) fail(ErrorKind::InvalidInput, "check_pairwise_intersecting needs r = 3");
  const int n = g.n();
  if (n > 9) fail(ErrorKind::Unsupported, "maximum-path enumeration supports n <= 9");
  IntersectionReport out;
  if (n >= 3) {
    if (is_rk_tournament(g).k != 4) fail(ErrorKind::Precondition, "input is not a (3,4)-tournament");
    std::vector<int> where;
    if (has_tight_3_cycle(Tournament::from_rdigraph(g), &where)) {
      fail(ErrorKind::Precondition, "tight 3-cycle on {" + std::to_string(where[0]) + "," +
                                        std::to_string(where[1]) + "," + std::to_string(where[2]) + "}");
    }
  }
  const int s = longest_tight_path(g).size();
  out.max_size = s;
  const detail::SuccessorTable table = detail::table_of(g);
  std::map<std::uint64_t, std::vector<int>> by_mask;
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::uint64_t mask) -> void {
    if (static_cast<int>(cur.size()) == s) {
      ++out.maximum_paths;
      by_mask.emplace(mask, cur);
      return;
    }
    std::uint64_t cand;
    if (static_cast<int>(cur.size()) < 2) {
      cand = ((n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1)) & ~mask;
    } else {
      cand = table.next(table.code(std::span<const int>(cur).last(2))) & ~mask;
    }
    for (; cand; cand &= cand - 1) {
      const int w = std::countr_zero(cand);
      cur.push_back(w);
      self(self, mask | (std::uint64_t{1} << w));
      cur.pop_back();
    }
  };
  rec(rec, 0);
  out.distinct_vertex_sets = by_mask.size();
  for (auto i = by_mask.begin(); i != by_mask.end() && out.intersecting; ++i) {
    for (auto j = std::next(i); j != by_mask.end(); ++j) {
      if ((i->first & j->first) == 0) {
        out.intersecting = false;
        out.first = i->second;
        out.second = j->second;
        out.repaired = repair_disjoint_paths(g, out.first, out.second);
        break;
      }
    }
  }
  return out;
}

WalkColoring walk_length_coloring(const RDigraph& g) {
  if (g.r() != 3) fail(ErrorKind::InvalidInput, "walk_length_coloring needs r = 3");
  const int n = g.n();
  if (n > 12) fail(ErrorKind::Unsupported, "walk_length_coloring supports n <= 12");
  if (n >= 3 && is_rk_tournament(g).k != 3) fail(ErrorKind::InvalidInput, "input is not a (3,3)-tournament");
  if (has_closed_walk(g)) fail(ErrorKind::Precondition, "G has a closed walk, so walk lengths are unbounded");
  // ends[u][v]: most vertices in a walk ending u, v.
  std::vector<std::vector<int>> ends(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  auto f = [&](auto&& self, int u, int v) -> int {
    int& memo = ends[u][v];
    if (memo) return memo;
    int best = 2;
    for (int w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      if (g.index().contains(std::vector<int>{w, u, v})) best = std::max(best, self(self, w, u) + 1);
    }
    return memo = best;
  };
  WalkColoring out;
  std::set<std::pair<int, int>> palette;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const std::pair<int, int> c{f(f, u, v), f(f, v, u)};
      out.colour[{u, v}] = c;
      palette.insert(c);
      out.longest_walk = std::max<std::int64_t>(out.longest_walk, std::max(c.first, c.second));
    }
  out.distinct_colours = static_cast<int>(palette.size());
  for (int u = 0; u < n && !out.monochromatic_triangle; ++u)
    for (int v = u + 1; v < n && !out.monochromatic_triangle; ++v)
      for (int w = v + 1; w < n; ++w) {
        const auto& c = out.colour[{u, v}];
        if (c == out.colour[{v, w}] && c == out.colour[{u, w}]) {
          out.monochromatic_triangle = std::vector<int>{u, v, w};
          break;
        }
      }
  return out;
}

}  // namespace tightpath
