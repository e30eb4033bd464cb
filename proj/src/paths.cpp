#include "tightpath/paths.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "tightpath/digraph.hpp"
#include "tightpath/error.hpp"
#include "tightpath/rng.hpp"
#include "successor_table.hpp"

namespace tightpath {

namespace {

using detail::SuccessorTable;
using detail::mask_of;
using detail::table_of;
using detail::ipow;
using Clock = std::chrono::steady_clock;

// Every start sequence: the prefix, completed to r-1 vertices in all ways when shorter.
std::vector<std::vector<int>> start_sequences(int n, int q, const std::vector<int>& prefix) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur = prefix;
  std::uint64_t used = mask_of(prefix);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) >= q || static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u) continue;
      used |= std::uint64_t{1} << v;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      used &= ~(std::uint64_t{1} << v);
    }
  };
  rec(rec);
  return out;
}

class ExactSearch {
 public:
  ExactSearch(const SuccessorTable& t, const PathSearchOptions& opts)
      : t_(t), opts_(opts), start_time_(Clock::now()) {}

  PathResult run() {
    PathResult out;
    const int n = t_.n();
    if (n > 32) fail(ErrorKind::Unsupported, "exact path search supports at most 32 vertices; use heuristic mode");
    const auto starts = start_sequences(n, t_.q(), opts_.prefix);
    int best_size = -1;
    std::vector<int> best_start;
    for (const auto& s : starts) {
      if (stop_) break;
      stack_ = s;
      note_stack();
      const int size = static_cast<int>(s.size()) + extend(mask_of(s), t_.code(tail(s)));
      if (stop_) break;
      if (size > best_size) {
        best_size = size;
        best_start = s;
      }
    }
    out.states = states_;
    if (spanning_) {
      out.path = best_stack_;
      out.optimal = true;
      return out;
    }
    if (aborted_) {
      out.path = best_stack_;
      out.optimal = false;
      out.note = note_;
      return out;
    }
    // Rebuild the optimum from the memo.
    std::vector<int> path = best_start;
    std::uint64_t mask = mask_of(path);
    std::uint64_t code = t_.code(tail(path));
    int remaining = best_size - static_cast<int>(path.size());
    while (remaining > 0) {
      std::uint64_t cand = t_.next(code) & ~mask;
      bool moved = false;
      for (; cand; cand &= cand - 1) {
        const int w = std::countr_zero(cand);
        const std::uint64_t m2 = mask | (std::uint64_t{1} << w);
        const std::uint64_t c2 = t_.shift(code, w);
        if (1 + extend(m2, c2) == remaining) {
          path.push_back(w);
          mask = m2;
          code = c2;
          --remaining;
          moved = true;
          break;
        }
      }
      if (!moved) throw std::logic_error("longest path reconstruction failed");
    }
    out.path = std::move(path);
    out.optimal = true;
    return out;
  }

 private:
  std::span<const int> tail(const std::vector<int>& s) const {
    const std::size_t q = static_cast<std::size_t>(t_.q());
    return std::span<const int>(s).last(std::min(q, s.size()));
  }

  void note_stack() {
    if (stack_.size() > best_stack_.size()) best_stack_ = stack_;
  }

  // Most vertices that can still be appended from this state.
  int extend(std::uint64_t mask, std::uint64_t code) {
    if (stop_) return 0;
    std::uint64_t cand = t_.next(code) & ~mask;
    if (!cand) return 0;
    const std::uint64_t key = mask * t_.modulus() + code;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++states_ > opts_.state_cap) {
      abort("state cap of " + std::to_string(opts_.state_cap) + " reached");
      return 0;
    }
    if ((states_ & 1023) == 0 && opts_.time_budget.count() > 0 &&
        Clock::now() - start_time_ > opts_.time_budget) {
      abort("time budget of " + std::to_string(opts_.time_budget.count()) + " ms reached");
      return 0;
    }
    int best = 0;
    for (; cand; cand &= cand - 1) {
      const int w = std::countr_zero(cand);
      stack_.push_back(w);
      note_stack();
      if (static_cast<int>(stack_.size()) == t_.n()) {
        spanning_ = true;
        stop_ = true;
        return 0;
      }
      const int v = 1 + extend(mask | (std::uint64_t{1} << w), t_.shift(code, w));
      stack_.pop_back();
      if (stop_) return 0;
      best = std::max(best, v);
    }
    memo_.emplace(key, static_cast<std::int8_t>(best));
    return best;
  }

  void abort(std::string why) {
    aborted_ = true;
    stop_ = true;
    note_ = std::move(why);
  }

  const SuccessorTable& t_;
  const PathSearchOptions& opts_;
  Clock::time_point start_time_;
  std::unordered_map<std::uint64_t, std::int8_t> memo_;
  std::vector<int> stack_;
  std::vector<int> best_stack_;
  std::uint64_t states_ = 0;
  bool stop_ = false;
  bool aborted_ = false;
  bool spanning_ = false;
  std::string note_;
};

PathResult heuristic_search(const SuccessorTable& t, const PathSearchOptions& opts) {
  const int n = t.n();
  Rng rng(opts.seed);
  const auto start_time = Clock::now();
  const auto budget = opts.time_budget.count() > 0 ? opts.time_budget : std::chrono::milliseconds(200);
  auto starts = start_sequences(n, t.q(), opts.prefix);
  PathResult out;
  if (starts.empty()) return out;
  out.path = starts.front();
  std::vector<int> cand_list;
  while (Clock::now() - start_time < budget && out.size() < n) {
    std::vector<int> path = starts[rng.below(starts.size())];
    std::uint64_t mask = mask_of(path);
    std::uint64_t code = t.code(std::span<const int>(path).last(std::min<std::size_t>(path.size(), t.q())));
    for (;;) {
      ++out.states;
      std::uint64_t cand = t.next(code) & ~mask;
      if (!cand) break;
      // Prefer the candidate leaving the most onward options; ties broken at random.
      cand_list.clear();
      int best_deg = -1;
      for (; cand; cand &= cand - 1) {
        const int w = std::countr_zero(cand);
        const int deg = std::popcount(t.next(t.shift(code, w)) & ~(mask | (std::uint64_t{1} << w)));
        if (deg > best_deg) {
          best_deg = deg;
          cand_list.assign(1, w);
        } else if (deg == best_deg) {
          cand_list.push_back(w);
        }
      }
      const int w = rng.below(4) == 0 ? cand_list[rng.below(cand_list.size())] : cand_list.front();
      path.push_back(w);
      mask |= std::uint64_t{1} << w;
      code = t.shift(code, w);
    }
    if (path.size() > out.path.size()) out.path = path;
  }
  out.optimal = out.size() == n;
  if (!out.optimal) out.note = "heuristic mode: maximality not certified";
  return out;
}

PathResult search(const SuccessorTable& t, int r, const PathSearchOptions& opts, const RDigraph* g) {
  const int n = t.n();
  // Validate the prefix.
  if (!opts.prefix.empty()) {
    const std::uint64_t m = mask_of(opts.prefix);
    bool ok = static_cast<int>(std::popcount(m)) == static_cast<int>(opts.prefix.size());
    for (int v : opts.prefix) ok = ok && v >= 0 && v < n;
    if (ok && g) ok = is_tight_path(*g, opts.prefix);
    if (!ok) fail(ErrorKind::InvalidInput, "search prefix is not a tight path");
  }
  (void)r;
  if (opts.mode == PathSearchMode::Heuristic) return heuristic_search(t, opts);
  return ExactSearch(t, opts).run();
}

std::uint64_t falling(std::uint64_t n, int k) {
  if (k < 0) return 0;
  return falling_factorial_u64(n, static_cast<std::uint64_t>(k));
}

// All ordered k-tuples of distinct entries from `pool`, in lexicographic order.
std::vector<std::vector<int>> ordered_tuples(const std::vector<int>& pool, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(pool.size(), false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      cur.push_back(pool[i]);
      self(self);
      cur.pop_back();
      used[i] = false;
    }
  };
  rec(rec);
  return out;
}

}  // namespace

PathResult longest_tight_path(const RDigraph& g, const PathSearchOptions& opts) {
  return search(table_of(g), g.r(), opts, &g);
}

PathResult longest_tight_path(const Tournament& g, const PathSearchOptions& opts) {
  if (!opts.prefix.empty()) return longest_tight_path(g.to_rdigraph(), opts);
  return search(table_of(g), g.r(), opts, nullptr);
}

MinDegreeSubgraph min_degree_subgraph(const Hypergraph& h, const Rational& d) {
  if (h.n <= 0) fail(ErrorKind::Precondition, "hypergraph has no vertices");
  if (d < 0) fail(ErrorKind::InvalidInput, "degree target must be non-negative");
  if (Rational(static_cast<long long>(h.r) * static_cast<long long>(h.edges.size())) < d * h.n) {
    fail(ErrorKind::Precondition, "average degree is below the target d");
  }
  const bool strict = h.r >= 2 && d > 0;
  const Rational bound = h.r > 0 ? d / h.r : d;
  std::vector<int> degree(static_cast<std::size_t>(h.n), 0);
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(h.n));
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    for (int v : h.edges[e]) {
      if (v < 0 || v >= h.n) fail(ErrorKind::InvalidInput, "hyperedge vertex out of range");
      ++degree[v];
      incident[v].push_back(static_cast<int>(e));
    }
  }
  std::vector<bool> alive(static_cast<std::size_t>(h.n), true), edge_alive(h.edges.size(), true);
  MinDegreeSubgraph out;
  int remaining = h.n;
  while (remaining > 0) {
    int low = -1;
    for (int v = 0; v < h.n; ++v)
      if (alive[v] && (low < 0 || degree[v] < degree[low])) low = v;
    const Rational dl(degree[low]);
    if (strict ? dl > bound : dl >= bound) {
      out.min_degree = degree[low];
      break;
    }
    alive[low] = false;
    --remaining;
    out.peel_order.push_back(low);
    for (int e : incident[low]) {
      if (!edge_alive[e]) continue;
      edge_alive[e] = false;
      for (int u : h.edges[e]) --degree[u];
    }
  }
  if (remaining == 0) throw std::logic_error("min-degree peeling emptied the hypergraph");
  for (int v = 0; v < h.n; ++v)
    if (alive[v]) out.vertices.push_back(v);
  for (std::size_t e = 0; e < h.edges.size(); ++e)
    if (edge_alive[e]) out.edge_ids.push_back(static_cast<int>(e));
  return out;
}

CyclePathResult path_from_cycles(const RDigraph& g) {
  const int n = g.n(), r = g.r(), q = r - 1;
  if (r < 2) fail(ErrorKind::Unsupported, "path_from_cycles needs r >= 2");
  const EdgeIndex& idx = g.index();
  // (r-1)-tuples of distinct vertices, indexed in lexicographic order.
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  const auto tuples = ordered_tuples(all, q);
  const std::uint64_t codes = ipow(static_cast<std::uint64_t>(n), q);
  std::vector<int> id_of(codes, -1);
  auto code = [&](std::span<const int> t) {
    std::uint64_t c = 0;
    for (int v : t) c = c * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v);
    return c;
  };
  for (std::size_t i = 0; i < tuples.size(); ++i) id_of[code(tuples[i])] = static_cast<int>(i);

  // Copies of C^(r)_r, each as a cyclic sequence starting at its minimum.
  std::vector<std::vector<int>> cycles;
  Hypergraph h{static_cast<int>(tuples.size()), r, {}};
  std::vector<int> seq(static_cast<std::size_t>(r)), window(static_cast<std::size_t>(r));
  std::vector<int> comb(static_cast<std::size_t>(r));
  auto rec = [&](auto&& self, int pos, int from) -> void {
    if (pos == r) {
      std::vector<int> rest(comb.begin() + 1, comb.end());
      do {
        seq[0] = comb[0];
        std::copy(rest.begin(), rest.end(), seq.begin() + 1);
        bool all_edges = true;
        for (int i = 0; i < r && all_edges; ++i) {
          for (int j = 0; j < r; ++j) window[j] = seq[(i + j) % r];
          all_edges = idx.contains(window);
        }
        if (!all_edges) continue;
        std::vector<int> psi;
        for (int i = 0; i < r; ++i) {
          for (int j = 0; j < q; ++j) window[j] = seq[(i + j) % r];
          psi.push_back(id_of[code(std::span<const int>(window).first(static_cast<std::size_t>(q)))]);
        }
        std::sort(psi.begin(), psi.end());
        h.edges.push_back(std::move(psi));
        cycles.push_back(seq);
      } while (std::next_permutation(rest.begin(), rest.end()));
      return;
    }
    for (int v = from; v < n; ++v) {
      comb[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
  if (cycles.empty()) fail(ErrorKind::Precondition, "G contains no tight r-cycle");

  CyclePathResult out;
  out.cycles = cycles.size();
  out.tuples = tuples.size();
  out.guarantee = Rational(static_cast<long long>(out.cycles), static_cast<long long>(out.tuples)) + q;
  const Rational d(static_cast<long long>(r) * static_cast<long long>(out.cycles), static_cast<long long>(out.tuples));
  const MinDegreeSubgraph h0 = min_degree_subgraph(h, d);
  out.h0_min_degree = h0.min_degree;

  // next[sigma] = vertices v such that sigma followed by v lies on a cycle of H_0.
  std::vector<std::vector<int>> next(tuples.size());
  for (int e : h0.edge_ids) {
    const auto& c = cycles[static_cast<std::size_t>(e)];
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < q; ++j) window[j] = c[(i + j) % r];
      next[id_of[code(std::span<const int>(window).first(static_cast<std::size_t>(q)))]].push_back(c[(i + q) % r]);
    }
  }
  for (auto& list : next) std::sort(list.begin(), list.end());

  for (int start : h0.vertices) {
    std::vector<int> path = tuples[static_cast<std::size_t>(start)];
    std::uint64_t used = mask_of(path);
    int sigma = start;
    for (;;) {
      int chosen = -1;
      for (int v : next[sigma]) {
        if (!((used >> v) & 1u)) {
          chosen = v;
          break;
        }
      }
      if (chosen < 0) break;
      path.push_back(chosen);
      used |= std::uint64_t{1} << chosen;
      sigma = id_of[code(std::span<const int>(path).last(static_cast<std::size_t>(q)))];
    }
    if (path.size() > out.path.size()) out.path = std::move(path);
  }
  if (!is_tight_path(g, out.path) ||
      Rational(static_cast<long long>(out.path.size())) < out.guarantee) {
    throw std::logic_error("path_from_cycles produced a path below its guarantee");
  }
  return out;
}

InsertionResult spanning_path_35(const RDigraph& g, const std::vector<int>& order) {
  if (g.r() != 3) fail(ErrorKind::InvalidInput, "spanning_path_35 needs r = 3");
  const int n = g.n();
  if (n >= 3) {
    const RkCheck check = is_rk_tournament(g);
    if (check.k != 5) fail(ErrorKind::InvalidInput, "input is not a (3,5)-tournament");
  }
  std::vector<int> seq = order;
  if (seq.empty()) {
    seq.resize(static_cast<std::size_t>(n));
    std::iota(seq.begin(), seq.end(), 0);
  }
  {
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(static_cast<std::size_t>(n));
    std::iota(expect.begin(), expect.end(), 0);
    if (sorted != expect) fail(ErrorKind::InvalidInput, "insertion order must be a permutation of the vertices");
  }
  InsertionResult out;
  if (n < 3) {
    out.path = seq;
    return out;
  }
  std::vector<int> first(seq.begin(), seq.begin() + 3);
  std::sort(first.begin(), first.end());
  while (!g.has_edge(first)) std::next_permutation(first.begin(), first.end());
  std::vector<int>& path = out.path;
  path = first;
  std::vector<int> e(3);
  for (int idx = 3; idx < n; ++idx) {
    const int u = seq[static_cast<std::size_t>(idx)];
    std::size_t at = path.size();
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      e = {u, path[i], path[i + 1]};
      if (g.has_edge(e)) {
        at = i;
        break;
      }
    }
    path.insert(path.begin() + static_cast<std::ptrdiff_t>(at), u);
    ++out.insertions;
    std::string why;
    if (!is_tight_path(g, path, &why)) throw std::logic_error("insertion broke the tight path: " + why);
  }
  return out;
}

FlexibleResult spanning_path_flexible(const RDigraph& g) {
  const int n = g.n(), r = g.r(), q = r - 1;
  if (r < 2) fail(ErrorKind::Unsupported, "spanning_path_flexible needs r >= 2");
  if (n < r) fail(ErrorKind::Precondition, "spanning_path_flexible needs n >= r");
  if (n > 64) fail(ErrorKind::Unsupported, "spanning_path_flexible supports at most 64 vertices");
  const RkCheck check = is_rk_tournament(g);
  if (!check.k) fail(ErrorKind::InvalidInput, "input is not an (r,k)-tournament");
  const std::uint64_t rf = factorial_u64(static_cast<std::uint64_t>(r));
  const std::uint64_t c = 4 * static_cast<std::uint64_t>(q);
  if (c * static_cast<std::uint64_t>(*check.k) <= (c - 1) * rf) {
    fail(ErrorKind::Precondition, "k = " + std::to_string(*check.k) + " does not exceed (1 - 1/(4(r-1))) r!");
  }
  const EdgeIndex& idx = g.index();
  FlexibleResult out;

  // Does appending x to path keep it a tight path?
  auto extends = [&](const std::vector<int>& path, const std::vector<int>& x) {
    std::vector<int> joined = path;
    joined.insert(joined.end(), x.begin(), x.end());
    for (std::size_t end = std::max<std::size_t>(path.size() + 1, static_cast<std::size_t>(r)); end <= joined.size();
         ++end) {
      if (!idx.contains(std::span<const int>(joined).subspan(end - static_cast<std::size_t>(r), static_cast<std::size_t>(r)))) {
        return false;
      }
    }
    return true;
  };

  // Size-1 flexible path: the vertex starting edges with the most (r-1)-tuples.
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  int best_v = -1;
  std::uint64_t best_count = 0;
  for (int v = 0; v < n; ++v) {
    std::vector<int> others;
    for (int u : all)
      if (u != v) others.push_back(u);
    std::uint64_t count = 0;
    for (const auto& x : ordered_tuples(others, q)) count += extends({v}, x);
    if (best_v < 0 || count > best_count) {
      best_v = v;
      best_count = count;
    }
  }
  if (2 * best_count <= falling(static_cast<std::uint64_t>(n - 1), q)) {
    out.report = "no vertex begins edges with more than half of the (r-1)-tuples";
    return out;
  }
  std::vector<int>& path = out.path;
  path = {best_v};

  for (;;) {
    std::vector<int> rest;
    const std::uint64_t used = mask_of(path);
    for (int v : all)
      if (!((used >> v) & 1u)) rest.push_back(v);
    const int np = static_cast<int>(rest.size());
    if (np == 0) break;
    const auto candidates = ordered_tuples(rest, std::min(q, np));
    if (np <= q) {
      auto it = std::find_if(candidates.begin(), candidates.end(), [&](const auto& x) { return extends(path, x); });
      if (it == candidates.end()) {
        out.report = "no ordering of the last " + std::to_string(np) + " vertices extends the path";
        return out;
      }
      path.insert(path.end(), it->begin(), it->end());
      ++out.steps;
      break;
    }
    const int t = std::min(np, 2 * q);
    const RDigraph sub = induced_subgraph(g, rest);
    std::vector<int> local_of(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < np; ++i) local_of[rest[i]] = i;
    const SuccessorTable table = table_of(sub);
    const std::uint64_t half_of = falling(static_cast<std::uint64_t>(np - q), t - q);
    // Paths of size t in G' beginning with x.
    auto count_paths = [&](const std::vector<int>& x) {
      std::vector<int> local;
      for (int v : x) local.push_back(local_of[v]);
      std::uint64_t count = 0;
      auto rec = [&](auto&& self, std::uint64_t mask, std::uint64_t code, int size) -> void {
        if (size == t) {
          ++count;
          return;
        }
        for (std::uint64_t cand = table.next(code) & ~mask; cand; cand &= cand - 1) {
          const int w = std::countr_zero(cand);
          self(self, mask | (std::uint64_t{1} << w), table.shift(code, w), size + 1);
        }
      };
      rec(rec, mask_of(local), table.code(local), q);
      return count;
    };
    const std::vector<int>* chosen = nullptr;
    for (const auto& x : candidates) {
      if (!extends(path, x)) continue;
      if (2 * count_paths(x) > half_of) {
        chosen = &x;
        break;
      }
    }
    if (!chosen) {
      out.report = "A and B are disjoint with " + std::to_string(np) + " vertices left";
      return out;
    }
    ++out.steps;
    if (np >= 2 * q) {
      path.insert(path.end(), chosen->begin(), chosen->end());
      continue;
    }
    // Few vertices left: finish with a spanning path of G' starting with x.
    PathSearchOptions opts;
    for (int v : *chosen) opts.prefix.push_back(local_of[v]);
    const PathResult tail = longest_tight_path(sub, opts);
    if (tail.size() != np) {
      out.report = "the chosen tuple does not begin a spanning path of the remainder";
      return out;
    }
    for (int v : tail.path) path.push_back(rest[static_cast<std::size_t>(v)]);
    break;
  }
  out.success = static_cast<int>(path.size()) == n && is_tight_path(g, path);
  if (!out.success) out.report = "assembled sequence is not a spanning tight path";
  return out;
}

BoundedWalkSubgraph extract_bounded_walk_subgraph(const RDigraph& g, int s) {
  const int n = g.n(), r = g.r(), q = r - 1;
  if (r < 2) fail(ErrorKind::Unsupported, "extract_bounded_walk_subgraph needs r >= 2");
  BoundedWalkSubgraph out;
  std::set<std::vector<int>> good;
  if (n >= r) {
    const RDigraph rev = reversed(g);
    const SuccessorTable table = table_of(rev);
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    for (const auto& sigma : ordered_tuples(all, q)) {
      PathSearchOptions opts;
      opts.prefix.assign(sigma.rbegin(), sigma.rend());
      const PathResult p = search(table, r, opts, &rev);
      if (!p.optimal) fail(ErrorKind::Resource, "maximum path computation exceeded its budget: " + p.note);
      if (p.size() > s) {
        fail(ErrorKind::Precondition, "G has a tight path on " + std::to_string(p.size()) + " > s = " +
                                          std::to_string(s) + " vertices");
      }
      const std::uint64_t on_path = mask_of(p.path);
      const std::uint64_t in_sigma = mask_of(sigma);
      for (int w = 0; w < n; ++w) {
        if (!((on_path >> w) & 1u) || ((in_sigma >> w) & 1u)) continue;
        std::vector<int> set = sigma;
        set.push_back(w);
        std::sort(set.begin(), set.end());
        good.insert(std::move(set));
      }
    }
  }
  out.good_sets = good.size();
  for (int v = 0; v < n; ++v) {
    bool clean = true;
    if (static_cast<int>(out.vertices.size()) >= q) {
      for (const auto& sub : ordered_tuples(out.vertices, q)) {
        if (!std::is_sorted(sub.begin(), sub.end())) continue;
        std::vector<int> set = sub;
        set.push_back(v);
        std::sort(set.begin(), set.end());
        if (good.count(set)) {
          clean = false;
          break;
        }
      }
    }
    if (clean) out.vertices.push_back(v);
  }
  out.subgraph = induced_subgraph(g, out.vertices);
  const WalkReport walk = longest_walk(out.subgraph);
  if (!walk.finite || walk.max_walk_size > std::max(q, s)) {
    throw std::logic_error("extracted subgraph has a walk longer than max(r-1, s)");
  }
  out.longest_walk = walk.max_walk_size;
  return out;
}

}  // namespace tightpath
