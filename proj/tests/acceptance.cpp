// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria, so ctest goes red if any line does.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tightpath/conjectures.hpp"
#include "tightpath/paths.hpp"
#include "tightpath/psg.hpp"
#include "tightpath/rng.hpp"
#include "tightpath/table.hpp"
#include "tightpath/thresholds.hpp"
#include "tightpath/tournament.hpp"

using namespace tightpath;

namespace {

int failed = 0;

void criterion(int id, const char* title, double limit_s, const std::function<bool(std::ostringstream&)>& body) {
  std::ostringstream detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (s > limit_s) {
    ok = false;
    detail << " over the " << limit_s << " s limit";
  }
  failed += !ok;
  std::printf("%s %2d %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", id, title, s, detail.str().empty() ? "" : ": ",
              detail.str().c_str());
  std::fflush(stdout);
}

// Everything below about PSG_r adjacency goes through the oracle's definition.
std::vector<std::vector<int>> oracle_psg(int r) {
  const auto perms = oracle::all_permutations(r);
  std::vector<std::vector<int>> out(perms.size());
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b)
      if (oracle::psg_arc(perms[a], perms[b])) out[a].push_back(static_cast<int>(b));
  return out;
}

// Kahn's algorithm on the subgraph avoiding `removed`.
bool oracle_acyclic_without(const std::vector<std::vector<int>>& adj, const std::vector<int>& removed) {
  const std::size_t m = adj.size();
  std::vector<bool> gone(m, false);
  for (int v : removed) gone[static_cast<std::size_t>(v)] = true;
  std::vector<int> indeg(m, 0);
  for (std::size_t u = 0; u < m; ++u)
    if (!gone[u])
      for (int v : adj[u])
        if (!gone[static_cast<std::size_t>(v)]) ++indeg[static_cast<std::size_t>(v)];
  std::vector<int> queue;
  std::size_t alive = 0;
  for (std::size_t v = 0; v < m; ++v) {
    if (gone[v]) continue;
    ++alive;
    if (indeg[v] == 0) queue.push_back(static_cast<int>(v));
  }
  std::size_t seen = 0;
  while (!queue.empty()) {
    const int u = queue.back();
    queue.pop_back();
    ++seen;
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (!gone[static_cast<std::size_t>(v)] && --indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    }
  }
  return seen == alive;
}

// Pairwise disjoint, and each consecutive pair (cyclically) an arc of `adj`.
bool oracle_disjoint_cycles(const std::vector<std::vector<int>>& adj, const std::vector<std::vector<int>>& cycles) {
  std::set<int> used;
  for (const auto& c : cycles) {
    if (c.empty()) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!used.insert(c[i]).second) return false;
      const auto& out = adj[static_cast<std::size_t>(c[i])];
      if (std::find(out.begin(), out.end(), c[(i + 1) % c.size()]) == out.end()) return false;
    }
  }
  return true;
}

std::vector<int> ids(const PatternShiftGraph& psg, const std::vector<Permutation>& ps) {
  std::vector<int> out;
  for (const auto& p : ps) out.push_back(psg.vertex(p));
  return out;
}

int brute_longest(const RDigraph& g) {
  return oracle::longest_tight_path(g.n(), g.r(), [&](const std::vector<int>& e) { return g.has_edge(e); });
}

std::uint64_t brute_spanning_count(const RDigraph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.n()));
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t count = 0;
  do count += is_tight_path(g, order);
  while (std::next_permutation(order.begin(), order.end()));
  return count;
}

}  // namespace

int main() {
  criterion(1, "PSG_3 reproduces the figure", 1, [](std::ostringstream& d) {
    const auto psg = build_psg(3);
    const auto adj = oracle_psg(3);
    std::set<std::pair<int, int>> want;
    for (std::size_t u = 0; u < adj.size(); ++u)
      for (int v : adj[u]) want.emplace(static_cast<int>(u), v);
    const std::set<std::pair<int, int>> got(psg.graph().arcs().begin(), psg.graph().arcs().end());
    std::set<std::string> out123, loops;
    for (int v : psg.graph().out(psg.vertex(Permutation::parse("123")))) out123.insert(psg.permutation(v).to_string());
    for (int v = 0; v < 6; ++v)
      if (psg.graph().has_arc(v, v)) loops.insert(psg.permutation(v).to_string());
    d << psg.graph().arc_count() << " arcs";
    return got == want && got.size() == 18 && loops == std::set<std::string>{"123", "321"} &&
           out123 == std::set<std::string>{"123", "132", "231"};
  });

  criterion(2, "PSG_r regular with max-element travel, r = 2..6", 30, [](std::ostringstream& d) {
    for (int r = 2; r <= 6; ++r) {
      const auto psg = build_psg(r);
      const Digraph& g = psg.graph();
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (static_cast<int>(g.out(v).size()) != r || static_cast<int>(g.in(v).size()) != r) {
          d << "degree fails at r = " << r;
          return false;
        }
      }
      for (auto [u, v] : g.arcs()) {
        const int i = psg.permutation(u).position_of(r), j = psg.permutation(v).position_of(r);
        if (!(j == i - 1 || j == r || i == 1)) {
          d << "travel fails on " << psg.permutation(u).to_string() << "->" << psg.permutation(v).to_string();
          return false;
        }
      }
      if (r <= 5 && std::set<std::pair<int, int>>(g.arcs().begin(), g.arcs().end()).size() != g.arc_count()) return false;
      d << (r == 2 ? "" : ", ") << g.vertex_count() << "/" << g.arc_count();
    }
    return true;
  });

  criterion(3, "theta values on PSG_3 and PSG_4, tau(PSG_4) = 10 certified", 300, [](std::ostringstream& d) {
    const auto psg3 = build_psg(3);
    const auto adj3 = oracle_psg(3);
    oracle::Matrix m3(6, std::vector<bool>(6, false));
    for (int u = 0; u < 6; ++u)
      for (int v : adj3[u]) m3[u][v] = true;
    for (int t = 1; t <= 7; ++t) {
      const int want = t == 1 ? 0 : 2;
      const auto res = theta_exact(psg3.graph(), t);
      if (res.value != want || oracle::theta_by_subsets(m3, t) != want || !verify_certificate(psg3.graph(), res.certificate)) {
        d << "theta_" << t << "(PSG_3) = " << res.value;
        return false;
      }
    }
    const auto psg4 = build_psg(4);
    const auto res = theta_exact(psg4.graph(), std::nullopt);
    const auto& cert = res.certificate;
    const auto adj4 = oracle_psg(4);
    const auto family = cert.family ? *cert.family : bundled_cycle_family(4);
    d << "a(PSG_4) = " << res.value << ", |transversal| = " << cert.transversal.size() << ", |family| = " << family.size();
    return res.value == 14 && cert.transversal.size() == 10 && family.size() == 10 &&
           verify_certificate(psg4.graph(), cert).ok && oracle_acyclic_without(adj4, cert.transversal) &&
           oracle_disjoint_cycles(adj4, family.cycles) && oracle_disjoint_cycles(adj4, bundled_cycle_family(4).cycles);
  });

  criterion(4, "PSG_5 36-cycle family and S' certify tau = 36, a = 84", 10, [](std::ostringstream& d) {
    const auto psg = build_psg(5);
    const auto adj = oracle_psg(5);
    const auto family = bundled_cycle_family(5);
    const auto cert = psg5_certificate();
    std::map<std::size_t, int> lengths;
    std::set<int> covered;
    for (const auto& c : family.cycles) {
      ++lengths[c.size()];
      covered.insert(c.begin(), c.end());
    }
    const bool lengths_ok = lengths == std::map<std::size_t, int>{{1, 2}, {2, 6}, {3, 8}, {4, 18}, {5, 2}};
    const bool sprime_ok = cert.transversal.size() == 36 && oracle_acyclic_without(adj, cert.transversal);
    d << family.size() << " cycles covering " << covered.size() << ", |S'| = " << cert.transversal.size();
    return family.size() == 36 && covered.size() == 120 && lengths_ok && oracle_disjoint_cycles(adj, family.cycles) &&
           sprime_ok && verify_certificate(psg.graph(), cert).ok && 120 - cert.transversal.size() == 84;
  });

  criterion(5, "threshold table for r = 4, 5 with cross-checks", 600, [](std::ostringstream& d) {
    const std::map<int, std::vector<std::string>> want{{4, {"13", "15", "[15,19]", "[15,23]"}},
                                                       {5, {"49", "73", "85", "[85,97]", "[85,113]"}}};
    std::map<std::string, std::string> computed;
    for (const auto& [r, cells] : want) {
      const ThresholdTable t = table_thresholds(r);
      std::vector<std::string> got;
      for (const auto& row : t.rows) got.push_back(row.threshold);
      for (const auto& c : t.checks) computed[c.name] = c.computed;
      if (got != cells || !t.ok() || !t.compared) {
        d << "r = " << r << " differs or a cross-check failed";
        return false;
      }
    }
    d << "theta_3(PSG_4) = " << computed["exact theta_3(PSG_4)"] << ", tau_2(PSG_5) = "
      << computed["size of mod-2 transversal of PSG_5"] << ", tau_4(PSG_5) = " << computed["size of mod-4 transversal of PSG_5"];
    return computed["exact theta_3(PSG_4)"] == "12" && computed["size of mod-2 transversal of PSG_5"] == "72" &&
           computed["shift-cycle lower bound on tau_2(PSG_5)"] == "72" &&
           computed["size of mod-4 transversal of PSG_5"] == "48" &&
           computed["shift-cycle lower bound on tau_4(PSG_5)"] == "48";
  });

  criterion(6, "chorded shift cycles number phi(r), r = 2..6, with valid splits", 60, [](std::ostringstream& d) {
    for (int r = 2; r <= 6; ++r) {
      const auto psg = build_psg(r);
      const auto adj = oracle_psg(r);
      int chorded = 0;
      for (const auto& cycle : shift_cycles(r)) {
        // Independent chord scan over all vertex pairs of the cycle.
        const auto vs = ids(psg, cycle.vertices);
        bool has_chord = false;
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) {
            if (j == (i + 1) % r) continue;
            const auto& out = adj[static_cast<std::size_t>(vs[i])];
            has_chord |= std::find(out.begin(), out.end(), vs[j]) != out.end();
          }
        const auto chords = chords_of(psg, cycle);
        if (has_chord != !chords.empty()) return false;
        if (!has_chord) continue;
        ++chorded;
        for (const auto& chord : chords) {
          const auto [a, b] = split_cycle(psg, cycle, chord);
          std::vector<int> all = ids(psg, a);
          const auto ib = ids(psg, b);
          all.insert(all.end(), ib.begin(), ib.end());
          std::sort(all.begin(), all.end());
          std::vector<int> sorted_vs = vs;
          std::sort(sorted_vs.begin(), sorted_vs.end());
          if (!oracle_disjoint_cycles(adj, {ids(psg, a), ib}) || all != sorted_vs) {
            d << "invalid split at r = " << r;
            return false;
          }
        }
      }
      if (chorded != totient(r)) {
        d << "r = " << r << ": " << chorded << " chorded, phi = " << totient(r);
        return false;
      }
      d << (r == 2 ? "" : ", ") << chorded;
    }
    return true;
  });

  criterion(7, "cluster transversal at (r,t) = (8,2) leaves PSG_8 acyclic", 120, [](std::ostringstream& d) {
    const auto psg = build_psg(8);
    const auto s = construct_cycle_transversal_clusters(8, 2);
    std::vector<bool> alive(static_cast<std::size_t>(psg.vertex_count()), true);
    for (int v : s) alive[static_cast<std::size_t>(v)] = false;
    bool trivial = true;
    for (const auto& comp : strongly_connected_components(psg.graph(), alive)) {
      if (comp.size() > 1 || psg.graph().has_arc(comp[0], comp[0])) trivial = false;
    }
    const Rational bound = Rational(40320) * (Rational(1, 8) + Rational(1, 16) + Rational(48, 56));
    d << "|S| = " << s.size() << " <= " << to_string(bound);
    return psg.vertex_count() == 40320 && trivial && Rational(static_cast<long long>(s.size())) <= bound &&
           bound == cluster_transversal_bound(8, 2);
  });

  criterion(8, "construction property suite", 300, [](std::ostringstream& d) {
    for (int n = 3; n <= 10; ++n) {
      const RDigraph g = construct_max_second(n, 3).to_rdigraph();
      if (is_rk_tournament(g).k != 2 || longest_tight_path(g).size() != 3 || (n <= 7 && brute_longest(g) != 3)) {
        d << "(a) fails at n = " << n;
        return false;
      }
    }
    for (int n = 3; n <= 9; ++n) {
      const RDigraph g = construct_first_not_max(n, 3).to_rdigraph();
      if (is_rk_tournament(g).k != 4 || has_closed_walk(g)) {
        d << "(b) fails at n = " << n;
        return false;
      }
    }
    for (int n = 3; n <= 9; ++n) {
      const RDigraph g = construct_middle_not_max(n).to_rdigraph();
      const std::uint64_t want = std::uint64_t{1} << (n - 1);
      if (count_spanning_paths(g) != want || brute_spanning_count(g) != want) {
        d << "(c) fails at n = " << n;
        return false;
      }
    }
    for (int t = 2; t <= 4; ++t) {
      const RDigraph g = construct_binary_33(t).to_rdigraph();
      const PathResult p = longest_tight_path(g);
      if (is_rk_tournament(g).k != 3 || !p.optimal || p.size() > 2 * t + 4) {
        d << "(d) fails at t = " << t;
        return false;
      }
      d << "binary33(" << t << ") longest " << p.size() << ", ";
    }
    const RDigraph h = construct_interval_density(12, 3, 3);
    const PathResult p = longest_tight_path(h);
    d << "interval density longest " << p.size();
    return p.optimal && p.size() <= 6;
  });

  criterion(9, "constructive algorithms: insertion, flexible paths, cycles to path", 600, [](std::ostringstream& d) {
    Rng rng(2024);
    for (int n = 3; n <= 12; ++n) {
      for (int trial = 0; trial < 100; ++trial) {
        const RDigraph g = random_rk_tournament(n, 3, 5, rng).to_rdigraph();
        const InsertionResult res = spanning_path_35(g);
        if (static_cast<int>(res.path.size()) != n || !is_tight_path(g, res.path) || res.insertions != n - 3) {
          d << "insertion fails at n = " << n << " trial " << trial;
          return false;
        }
      }
    }
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 4 + trial % 6;
      const RDigraph g = random_rk_tournament(n, 4, 23, rng).to_rdigraph();
      const FlexibleResult res = spanning_path_flexible(g);
      if (!res.success || static_cast<int>(res.path.size()) != n || !is_tight_path(g, res.path)) {
        d << "flexible path fails at trial " << trial << ": " << res.report;
        return false;
      }
    }
    for (int trial = 0; trial < 100; ++trial) {
      const int r = 3 + trial % 2;
      const int n = r + 2 + static_cast<int>(rng.below(5));
      const int total = static_cast<int>(factorial_u64(r));
      const int k = total - static_cast<int>(rng.below(static_cast<std::uint64_t>(total / 4)));
      const RDigraph g = random_rk_tournament(n, r, k, rng).to_rdigraph();
      const CyclePathResult res = path_from_cycles(g);
      if (!is_tight_path(g, res.path) || Rational(static_cast<long long>(res.path.size())) < res.guarantee) {
        d << "cycles-to-path bound fails at trial " << trial;
        return false;
      }
    }
    d << "1000 + 20 + 100 instances";
    return true;
  });

  criterion(10, "conjecture slice: (3,4) spanning paths and intersecting maximum paths", 600, [](std::ostringstream& d) {
    const SearchReport ex = check_34(4, SearchMode::Exhaustive, 0, 0);
    const SearchReport r6 = check_34(6, SearchMode::Random, 6, 100000);
    const SearchReport r7 = check_34(7, SearchMode::Random, 7, 10000);
    Rng rng(10);
    int intersecting = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 3 + trial % 6;
      intersecting += check_pairwise_intersecting(random_triangle_free_34(n, rng).to_rdigraph()).intersecting;
    }
    d << "n=4 raw " << ex.raw_instances << " (" << ex.canonical_instances << " classes), n=6 " << r6.checked
      << ", n=7 " << r7.checked << " samples, " << intersecting << "/50 intersecting";
    return ex.raw_instances == 50625 && !ex.counterexample && r6.checked == 100000 && !r6.counterexample &&
           r7.checked == 10000 && !r7.counterexample && intersecting == 50;
  });

  std::printf("%d of 10 criteria failed\n", failed);
  return failed;
}
