#include "tightpath/thresholds.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"
#include "tightpath/bundled_data.hpp"
#include "tightpath/error.hpp"
#include "tightpath/rng.hpp"

namespace tightpath {

namespace {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    f(v);
  }
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

// Branch and bound on vertex bitmasks. A node keeps `alive` (not yet removed)
// and `kept` (vertices the branch has promised not to remove).
class ThetaSolver {
 public:
  ThetaSolver(const Digraph& d, std::optional<int> t, std::uint64_t budget)
      : n_(d.vertex_count()), t_(t ? std::optional<int>(std::min(*t, d.vertex_count() + 1)) : std::nullopt),
        budget_(budget), out_(n_, 0), in_(n_, 0) {
    for (auto [u, v] : d.arcs()) {
      out_[u] |= bit(v);
      in_[v] |= bit(u);
    }
    all_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
  }

  void solve() {
    best_alive_ = greedy_upper_bound();
    best_ = std::popcount(all_ & ~best_alive_);
    search(all_, 0);
  }

  int removed_count() const { return best_; }
  Mask best_alive() const { return best_alive_; }
  std::uint64_t nodes() const { return nodes_; }

  std::vector<std::vector<int>> root_cycle_packing() {
    std::vector<std::vector<int>> cycles;
    Mask avail = all_;
    while (auto c = shortest_cycle(avail)) {
      for (int v : *c) avail &= ~bit(v);
      cycles.push_back(std::move(*c));
    }
    return cycles;
  }

 private:
  bool has_cycle(Mask alive) const { return core(alive) != 0; }

  // Peels vertices without an in- or out-neighbour; what is left lies on or
  // between cycles.
  Mask core(Mask alive) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for_each_bit(alive, [&](int v) {
        if ((out_[v] & alive) == 0 || (in_[v] & alive) == 0) {
          alive &= ~bit(v);
          changed = true;
        }
      });
    }
    return alive;
  }

  // Whether v lies on a cycle of D[within], v in within.
  bool on_cycle(int v, Mask within) const {
    if (out_[v] & bit(v)) return true;
    Mask seen = bit(v);
    Mask frontier = bit(v);
    while (frontier) {
      Mask next = 0;
      for_each_bit(frontier, [&](int u) { next |= out_[u]; });
      if (next & bit(v)) return true;
      next &= within & ~seen;
      seen |= next;
      frontier = next;
    }
    return false;
  }

  std::optional<std::vector<int>> shortest_cycle(Mask alive) const {
    alive = core(alive);
    std::optional<std::vector<int>> best;
    std::size_t best_len = static_cast<std::size_t>(n_) + 1;
    std::vector<int> parent(static_cast<std::size_t>(n_), -1);
    for (int s = 0; s < n_ && best_len > 1; ++s) {
      if (!(alive & bit(s))) continue;
      if (out_[s] & bit(s)) return std::vector<int>{s};
      Mask seen = bit(s);
      Mask frontier = bit(s);
      std::size_t depth = 1;
      int closing = -1;
      while (frontier && depth < best_len && closing < 0) {
        for_each_bit(frontier, [&](int u) {
          if (closing < 0 && (out_[u] & bit(s))) closing = u;
        });
        if (closing >= 0) break;
        Mask next = 0;
        for_each_bit(frontier, [&](int u) {
          Mask fresh = out_[u] & alive & ~seen & ~next;
          for_each_bit(fresh, [&](int w) { parent[w] = u; });
          next |= fresh;
        });
        seen |= next;
        frontier = next;
        ++depth;
      }
      if (closing < 0 || depth >= best_len) continue;
      std::vector<int> cycle;
      for (int v = closing; v != s; v = parent[v]) cycle.push_back(v);
      cycle.push_back(s);
      std::reverse(cycle.begin(), cycle.end());
      best_len = cycle.size();
      best = std::move(cycle);
    }
    return best;
  }

  // Minimum number of non-kept vertices on a path of exactly t vertices in
  // the acyclic D[alive]; nullopt when no such path exists.
  std::optional<std::vector<int>> cheapest_path(Mask alive, Mask kept, int t) const {
    std::vector<int> order;
    {
      Mask rest = alive;
      while (rest) {
        Mask sources = 0;
        for_each_bit(rest, [&](int v) {
          if ((in_[v] & rest) == 0) sources |= bit(v);
        });
        for_each_bit(sources, [&](int v) { order.push_back(v); });
        rest &= ~sources;
        if (!sources) break;
      }
    }
    constexpr int kInf = 1 << 29;
    const std::size_t width = static_cast<std::size_t>(t) + 1;
    std::vector<int> cost(static_cast<std::size_t>(n_) * width, kInf);
    std::vector<int> from(static_cast<std::size_t>(n_) * width, -1);
    auto at = [&](int v, int len) -> std::size_t { return static_cast<std::size_t>(v) * width + len; };
    int best_cost = kInf, best_end = -1;
    for (int v : order) {
      const int own = (kept & bit(v)) ? 0 : 1;
      cost[at(v, 1)] = own;
      for (int len = 2; len <= t; ++len) {
        for_each_bit(in_[v] & alive, [&](int u) {
          const int c = cost[at(u, len - 1)];
          if (c + own < cost[at(v, len)]) {
            cost[at(v, len)] = c + own;
            from[at(v, len)] = u;
          }
        });
      }
      if (cost[at(v, t)] < best_cost) {
        best_cost = cost[at(v, t)];
        best_end = v;
      }
    }
    if (best_end < 0) return std::nullopt;
    std::vector<int> path;
    for (int v = best_end, len = t; len >= 1; v = from[at(v, len)], --len) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
  }

  bool has_t_path(Mask alive) const {
    if (!t_) return false;
    return cheapest_path(alive, alive, *t_).has_value();
  }

  std::optional<std::vector<int>> obstruction(Mask alive, Mask kept) const {
    if (auto c = shortest_cycle(alive)) return c;
    if (t_) return cheapest_path(alive, kept, *t_);
    return std::nullopt;
  }

  int packing_bound(Mask alive, Mask kept) const {
    int lb = 0;
    Mask avail = alive;
    while (auto c = shortest_cycle(avail)) {
      ++lb;
      for (int v : *c) avail &= ~(bit(v) & ~kept);
    }
    if (t_) {
      while (auto p = cheapest_path(avail, kept, *t_)) {
        Mask fresh = 0;
        for (int v : *p) fresh |= bit(v) & ~kept;
        if (!fresh) break;
        ++lb;
        avail &= ~fresh;
      }
    }
    return lb;
  }

  Mask greedy_upper_bound() const {
    Mask alive = all_;
    while (auto o = obstruction(alive, 0)) {
      int pick = o->front();
      int best_degree = -1;
      for (int v : *o) {
        const int degree = std::popcount(out_[v] & alive) + std::popcount(in_[v] & alive);
        if (degree > best_degree) {
          best_degree = degree;
          pick = v;
        }
      }
      alive &= ~bit(pick);
    }
    // Put back removed vertices that turn out to be unnecessary.
    for_each_bit(all_ & ~alive, [&](int v) {
      const Mask trial = alive | bit(v);
      if (!has_cycle(trial) && !has_t_path(trial)) alive = trial;
    });
    return alive;
  }

  void search(Mask alive, Mask kept) {
    if (++nodes_ > budget_) {
      fail(ErrorKind::Resource, "exact threshold search exceeded its node budget of " + std::to_string(budget_) +
                                    "; use certificate mode (thresh certify) instead");
    }
    int removed = std::popcount(all_ & ~alive);
    // Forced removals: loops and vertices closing a cycle with kept vertices.
    for (bool changed = true; changed;) {
      changed = false;
      if (has_cycle(kept)) return;
      for_each_bit(alive & ~kept, [&](int v) {
        if (on_cycle(v, kept | bit(v))) {
          alive &= ~bit(v);
          ++removed;
          changed = true;
        }
      });
      if (removed >= best_) return;
    }
    if (t_ && has_t_path(kept)) return;

    const auto o = obstruction(alive, kept);
    if (!o) {
      best_ = removed;
      best_alive_ = alive;
      return;
    }
    if (removed + packing_bound(alive, kept) >= best_) return;

    std::vector<int> choices;
    for (int v : *o) {
      if (!(kept & bit(v))) choices.push_back(v);
    }
    std::stable_sort(choices.begin(), choices.end(), [&](int a, int b) {
      const int da = std::popcount(out_[a] & alive) + std::popcount(in_[a] & alive);
      const int db = std::popcount(out_[b] & alive) + std::popcount(in_[b] & alive);
      return da > db;
    });
    Mask promised = kept;
    for (int v : choices) {
      search(alive & ~bit(v), promised);
      promised |= bit(v);
    }
  }

  int n_;
  std::optional<int> t_;
  std::uint64_t budget_;
  std::vector<Mask> out_;
  std::vector<Mask> in_;
  Mask all_ = 0;
  int best_ = 0;
  Mask best_alive_ = 0;
  std::uint64_t nodes_ = 0;
};

void check_materialisable(int r) {
  if (r < 1 || r > PatternShiftGraph::kMaxOrder) {
    fail(ErrorKind::Unsupported, "order r=" + std::to_string(r) + " is outside 1.." +
                                     std::to_string(PatternShiftGraph::kMaxOrder));
  }
}

// Iterate all permutations of [r] in lexicographic (rank) order.
template <typename F>
void for_each_permutation(int r, F&& f) {
  std::vector<int> p(static_cast<std::size_t>(r));
  std::iota(p.begin(), p.end(), 1);
  std::uint64_t rank = 0;
  do {
    f(std::span<const int>(p), rank++);
  } while (std::next_permutation(p.begin(), p.end()));
}

bool bump_at(std::span<const int> u, int position) {
  const std::size_t i = static_cast<std::size_t>(position - 1);
  return u[i] > u[i - 1] && u[i] > u[i + 1];
}

CycleFamily parse_family(std::string_view text, int r) {
  const auto doc = nlohmann::json::parse(text);
  if (doc.at("r").get<int>() != r) fail(ErrorKind::InvalidInput, "bundled family has the wrong order");
  CycleFamily family;
  for (const auto& cycle : doc.at("cycles")) {
    std::vector<int> ids;
    for (const auto& name : cycle) {
      const Permutation p = Permutation::parse(name.get<std::string>());
      if (p.size() != r) fail(ErrorKind::InvalidInput, "bundled family vertex of the wrong order");
      ids.push_back(static_cast<int>(p.rank()));
    }
    family.cycles.push_back(std::move(ids));
  }
  return family;
}

}  // namespace

VerifyResult verify_cycle_family(const Digraph& d, const CycleFamily& family) {
  std::vector<int> owner(static_cast<std::size_t>(d.vertex_count()), -1);
  for (std::size_t c = 0; c < family.cycles.size(); ++c) {
    const auto& cycle = family.cycles[c];
    if (cycle.empty()) return {false, "family cycle " + std::to_string(c) + " is empty"};
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int v = cycle[k];
      if (v < 0 || v >= d.vertex_count()) {
        return {false, "family cycle " + std::to_string(c) + " has out-of-range vertex " + std::to_string(v)};
      }
      if (owner[v] >= 0) {
        return {false, "vertex " + std::to_string(v) + " appears in family cycles " + std::to_string(owner[v]) +
                           " and " + std::to_string(c)};
      }
      owner[v] = static_cast<int>(c);
      const int w = cycle[(k + 1) % cycle.size()];
      if (w < 0 || w >= d.vertex_count() || !d.has_arc(v, w)) {
        return {false, "family cycle " + std::to_string(c) + " uses missing arc " + std::to_string(v) + "->" +
                           std::to_string(w)};
      }
    }
  }
  return {};
}

VerifyResult verify_certificate(const Digraph& d, const ThresholdCertificate& cert) {
  const int m = d.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(m), 0);  // 1 avoid, 2 transversal
  auto place = [&](const std::vector<int>& set, int tag, const char* name) -> VerifyResult {
    for (int v : set) {
      if (v < 0 || v >= m) return {false, std::string(name) + " contains out-of-range vertex " + std::to_string(v)};
      if (side[v] != 0) {
        return {false, "vertex " + std::to_string(v) + " listed twice across avoid set and transversal"};
      }
      side[v] = tag;
    }
    return {};
  };
  if (auto r = place(cert.avoid_set, 1, "avoid set"); !r) return r;
  if (auto r = place(cert.transversal, 2, "transversal"); !r) return r;
  for (int v = 0; v < m; ++v) {
    if (side[v] == 0) return {false, "vertex " + std::to_string(v) + " is in neither the avoid set nor the transversal"};
  }

  std::vector<bool> alive(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) alive[v] = side[v] == 1;
  const WalkReport walk = longest_walk(d, alive);
  if (cert.kind == CertificateKind::WalkAvoidance) {
    if (!cert.t || *cert.t < 1) return {false, "walk-avoidance certificate needs t >= 1"};
    if (!walk.finite) return {false, "avoid set induces a cycle through " + join(walk.witness)};
    if (walk.max_walk_size >= *cert.t) {
      return {false, "avoid set induces a walk of size " + std::to_string(walk.max_walk_size) + " >= t: " +
                         join(walk.witness)};
    }
  } else {
    if (cert.t) return {false, "cycle-transversal certificate must not carry t"};
    if (!walk.finite) return {false, "avoid set induces a cycle through " + join(walk.witness)};
  }

  if (cert.family) {
    if (auto r = verify_cycle_family(d, *cert.family); !r) return r;
    for (std::size_t c = 0; c < cert.family->cycles.size(); ++c) {
      const auto& cycle = cert.family->cycles[c];
      if (std::none_of(cycle.begin(), cycle.end(), [&](int v) { return side[v] == 2; })) {
        return {false, "family cycle " + std::to_string(c) + " misses the transversal"};
      }
    }
    if (cert.family->size() > cert.transversal.size()) {
      return {false, "family is larger than the transversal"};
    }
  }
  return {};
}

ThetaResult theta_exact(const Digraph& d, std::optional<int> t, const ThetaOptions& options) {
  const int m = d.vertex_count();
  if (t && *t < 1) fail(ErrorKind::InvalidInput, "walk size t must be at least 1");
  const int limit = std::min(options.vertex_limit, 64);
  if (m > limit) {
    fail(ErrorKind::Resource, "digraph has " + std::to_string(m) + " vertices, above the exact-solver limit of " +
                                  std::to_string(limit) + "; use certificate mode (thresh certify) instead");
  }
  ThetaSolver solver(d, t, options.node_budget);
  solver.solve();

  ThetaResult result;
  result.value = m - solver.removed_count();
  result.nodes = solver.nodes();
  auto& cert = result.certificate;
  cert.kind = t ? CertificateKind::WalkAvoidance : CertificateKind::CycleTransversal;
  cert.t = t;
  for (int v = 0; v < m; ++v) {
    ((solver.best_alive() >> v) & 1 ? cert.avoid_set : cert.transversal).push_back(v);
  }
  if (!t) cert.family = CycleFamily{solver.root_cycle_packing()};
  return result;
}

std::vector<int> construct_transversal_mod_t(int r, int t) {
  check_materialisable(r);
  if (t < 1 || t > r) fail(ErrorKind::Precondition, "construct_transversal_mod_t needs 1 <= t <= r");
  std::vector<int> out;
  for_each_permutation(r, [&](std::span<const int> p, std::uint64_t rank) {
    const int i = static_cast<int>(std::find(p.begin(), p.end(), 1) - p.begin());
    if (i == r - 1 || i % t == 0) out.push_back(static_cast<int>(rank));
  });
  return out;
}

std::pair<Rational, Rational> tau_formula_divisible(int r, int t) {
  if (r < 1 || t < 1) fail(ErrorKind::Precondition, "tau formula needs r, t >= 1");
  if ((r - 1) % t != 0) {
    fail(ErrorKind::Precondition, "t=" + std::to_string(t) + " does not divide r-1=" + std::to_string(r - 1));
  }
  const Rational total(factorial(r));
  const Rational tau = (Rational(1, r) + Rational(1, t) - Rational(1, t * r)) * total;
  return {tau, total - tau};
}

BigInt tau_lower_bound_shift_cycles(int r, int t) {
  if (r < 1 || t < 1) fail(ErrorKind::Precondition, "bound needs r, t >= 1");
  return BigInt((r + t - 1) / t) * factorial(r - 1);
}

std::vector<int> construct_bump_transversal(int r) {
  if (r != 4 && r != 5) fail(ErrorKind::Unsupported, "bump transversal is defined for r = 4 and r = 5");
  std::vector<int> out;
  for_each_permutation(r, [&](std::span<const int> u, std::uint64_t rank) {
    const bool monotone = std::is_sorted(u.begin(), u.end()) || std::is_sorted(u.rbegin(), u.rend());
    bool in = monotone || bump_at(u, 2);
    if (r == 5 && in && !monotone && bump_at(u, 4) && u[2] == 1) in = false;
    if (in) out.push_back(static_cast<int>(rank));
  });
  return out;
}

namespace {

enum class ClusterPart { None, S0, S1, S2 };

ClusterPart cluster_part(std::span<const int> u, int t) {
  const int r = static_cast<int>(u.size());
  int pos_r = 0, pos_r1 = 0;  // 1-based
  for (int k = 0; k < r; ++k) {
    if (u[k] == r) pos_r = k + 1;
    if (u[k] == r - 1) pos_r1 = k + 1;
  }
  auto in_a = [&](int p) { return p <= t + 1 || p >= r - 2 * t; };
  auto special = [&](int p) { return p == 1 || p == r - t || p == r; };
  if (in_a(pos_r) && in_a(pos_r1) && (special(pos_r) || special(pos_r1))) return ClusterPart::S0;
  auto cluster = [&](int j) { return pattern_rank(u.subspan(static_cast<std::size_t>(j), static_cast<std::size_t>(t))); };
  // Clusters of r and r-1 are both defined whenever S1/S2 can apply outside S0.
  if (pos_r1 > r - t) return ClusterPart::None;
  if (pos_r == r - t && cluster(pos_r1) >= cluster(pos_r)) return ClusterPart::S1;
  if (pos_r == 1 && cluster(pos_r) >= cluster(pos_r1)) return ClusterPart::S2;
  return ClusterPart::None;
}

void check_cluster_args(int r, int t) {
  if (t < 0 || r < std::max(3 * t + 2, 3)) {
    fail(ErrorKind::Precondition, "cluster transversal needs r >= max(3t+2, 3); got r=" + std::to_string(r) +
                                      ", t=" + std::to_string(t));
  }
}

}  // namespace

bool cluster_transversal_contains(std::span<const int> u, int t) {
  check_cluster_args(static_cast<int>(u.size()), t);
  return cluster_part(u, t) != ClusterPart::None;
}

std::vector<int> construct_cycle_transversal_clusters(int r, int t) {
  check_cluster_args(r, t);
  check_materialisable(r);
  std::vector<int> out;
  for_each_permutation(r, [&](std::span<const int> u, std::uint64_t rank) {
    if (cluster_part(u, t) != ClusterPart::None) out.push_back(static_cast<int>(rank));
  });
  return out;
}

ClusterTransversalCount count_cycle_transversal_clusters(int r, int t) {
  check_cluster_args(r, t);
  if (r > 12) fail(ErrorKind::Resource, "counting cluster transversals streams r! permutations; r <= 12 supported");
  ClusterTransversalCount count;
  for_each_permutation(r, [&](std::span<const int> u, std::uint64_t) {
    switch (cluster_part(u, t)) {
      case ClusterPart::S0: ++count.s0; break;
      case ClusterPart::S1: ++count.s1; break;
      case ClusterPart::S2: ++count.s2; break;
      case ClusterPart::None: break;
    }
  });
  return count;
}

Rational cluster_transversal_bound(int r, int t) {
  check_cluster_args(r, t);
  return Rational(factorial(r)) *
         (Rational(1, r) + Rational(1) / (Rational(r) * Rational(factorial(t))) +
          Rational(6 * (3 * t + 2), r * (r - 1)));
}

CycleFamily disjoint_cycle_family(int r) {
  check_materialisable(r);
  if (r < 2) fail(ErrorKind::Precondition, "disjoint_cycle_family needs r >= 2");
  const PatternShiftGraph psg(r);
  std::map<int, std::pair<ShiftCycle, Chord>> chorded;  // keyed by least vertex of the class
  for (auto& entry : chorded_shift_cycles(r)) {
    int least = psg.vertex(entry.first.vertices.front());
    for (const auto& p : entry.first.vertices) least = std::min(least, psg.vertex(p));
    chorded.emplace(least, std::move(entry));
  }
  CycleFamily family;
  auto ids = [&](const PermutationCycle& c) {
    std::vector<int> out;
    for (const auto& p : c) out.push_back(psg.vertex(p));
    return out;
  };
  for (const auto& c : shift_cycles(r)) {
    const auto it = chorded.find(psg.vertex(c.vertices.front()));
    if (it == chorded.end()) {
      family.cycles.push_back(ids(c.vertices));
      continue;
    }
    const auto [first, second] = split_cycle(psg, it->second.first, it->second.second);
    family.cycles.push_back(ids(first));
    family.cycles.push_back(ids(second));
  }
  return family;
}

std::optional<CycleFamily> try_bundled_cycle_family(int r) {
  if (r == 4) return parse_family(data::psg4_family, 4);
  if (r == 5) return parse_family(data::psg5_family, 5);
  return std::nullopt;
}

CycleFamily bundled_cycle_family(int r) {
  if (auto f = try_bundled_cycle_family(r)) return *f;
  fail(ErrorKind::Unsupported, "no bundled cycle family for r=" + std::to_string(r) + " (available: 4, 5)");
}

namespace {

// Shortest cycle of D[free] by BFS from each free vertex, visiting sources in
// the order given. Loops count as length 1.
std::optional<std::vector<int>> shortest_free_cycle(const Digraph& d, const std::vector<char>& free,
                                                    const std::vector<int>& sources) {
  const int m = d.vertex_count();
  std::optional<std::vector<int>> best;
  std::vector<int> parent(static_cast<std::size_t>(m), -1);
  std::vector<int> stamp(static_cast<std::size_t>(m), -1);
  std::vector<int> frontier, next;
  for (int s : sources) {
    if (!free[s]) continue;
    if (best && best->size() == 1) break;
    if (d.has_arc(s, s)) return std::vector<int>{s};
    frontier.assign(1, s);
    stamp[s] = s;
    int closing = -1;
    std::size_t depth = 1;
    while (!frontier.empty() && closing < 0 && (!best || depth < best->size())) {
      next.clear();
      for (int u : frontier) {
        for (int w : d.out(u)) {
          if (w == s) {
            closing = u;
            break;
          }
          if (!free[w] || stamp[w] == s) continue;
          stamp[w] = s;
          parent[w] = u;
          next.push_back(w);
        }
        if (closing >= 0) break;
      }
      if (closing >= 0) break;
      frontier.swap(next);
      ++depth;
    }
    if (closing < 0) continue;
    std::vector<int> cycle;
    for (int v = closing; v != s; v = parent[v]) cycle.push_back(v);
    cycle.push_back(s);
    std::reverse(cycle.begin(), cycle.end());
    if (!best || cycle.size() < best->size()) best = std::move(cycle);
  }
  return best;
}

void pack_greedily(const Digraph& d, std::vector<char>& free, std::vector<int> sources,
                   std::vector<std::vector<int>>& cycles) {
  while (auto c = shortest_free_cycle(d, free, sources)) {
    for (int v : *c) free[v] = 0;
    cycles.push_back(std::move(*c));
  }
}

}  // namespace

CycleFamily search_disjoint_cycle_family(const Digraph& d, const FamilySearchOptions& options) {
  const int m = d.vertex_count();
  Rng rng(options.seed);
  std::vector<std::vector<int>> current;
  std::vector<char> free(static_cast<std::size_t>(m), 1);
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  if (options.initial) {
    if (auto ok = verify_cycle_family(d, *options.initial); !ok) {
      fail(ErrorKind::InvalidInput, "initial family is invalid: " + ok.diagnostic);
    }
    current = options.initial->cycles;
    for (const auto& c : current)
      for (int v : c) free[v] = 0;
  }
  pack_greedily(d, free, order, current);
  std::vector<std::vector<int>> best = current;

  std::vector<int> owner(static_cast<std::size_t>(m), -1);
  for (std::uint64_t iter = 0; iter < options.budget && !current.empty(); ++iter) {
    std::fill(owner.begin(), owner.end(), -1);
    for (std::size_t c = 0; c < current.size(); ++c)
      for (int v : current[c]) owner[v] = static_cast<int>(c);

    // Destroy a seed cycle and a few cycles adjacent to it.
    const std::size_t seed_cycle = rng.below(current.size());
    std::set<int> doomed{static_cast<int>(seed_cycle)};
    const std::size_t extra = 1 + rng.below(3);
    std::vector<int> frontier(current[seed_cycle].begin(), current[seed_cycle].end());
    for (std::size_t k = 0; k < 4 * extra && doomed.size() < extra + 1 && !frontier.empty(); ++k) {
      const int v = frontier[rng.below(frontier.size())];
      const auto out = d.out(v);
      const auto in = d.in(v);
      if (out.empty() && in.empty()) continue;
      const bool forward = rng.below(2) == 0 && !out.empty();
      const auto& nbrs = forward || in.empty() ? out : in;
      const int w = nbrs[rng.below(nbrs.size())];
      if (owner[w] >= 0 && doomed.insert(owner[w]).second) {
        frontier.insert(frontier.end(), current[owner[w]].begin(), current[owner[w]].end());
      }
    }
    std::vector<std::vector<int>> next;
    std::vector<char> next_free = free;
    for (std::size_t c = 0; c < current.size(); ++c) {
      if (doomed.count(static_cast<int>(c))) {
        for (int v : current[c]) next_free[v] = 1;
      } else {
        next.push_back(current[c]);
      }
    }
    std::vector<int> sources;
    for (int v = 0; v < m; ++v)
      if (next_free[v]) sources.push_back(v);
    rng.shuffle(sources);
    pack_greedily(d, next_free, sources, next);
    if (next.size() >= current.size()) {
      current = std::move(next);
      free = std::move(next_free);
      if (current.size() > best.size()) best = current;
    }
  }
  std::sort(best.begin(), best.end());
  return CycleFamily{best};
}

GrowingThreshold growing_threshold(int r) {
  check_materialisable(r);
  GrowingThreshold g;
  const BigInt total = factorial(r);
  if (r <= 4) {
    const PatternShiftGraph psg(r);
    const auto result = theta_exact(psg.graph(), std::nullopt);
    g.value = BigInt(1 + result.value);
    g.lower = g.upper = *g.value;
    g.basis = "exact a(PSG_" + std::to_string(r) + ") = " + std::to_string(result.value);
    return g;
  }
  if (r == 5) {
    const PatternShiftGraph psg(5);
    const auto cert = psg5_certificate();
    if (auto ok = verify_certificate(psg.graph(), cert); ok && cert.family->size() == cert.transversal.size()) {
      const BigInt a = total - BigInt(cert.transversal.size());
      g.value = a + 1;
      g.lower = g.upper = *g.value;
      g.basis = "matching transversal and disjoint cycle family of size " + std::to_string(cert.transversal.size());
      return g;
    }
  }
  // tau >= (r-1)! + phi(r) from split shift cycles; tau <= the smallest
  // available transversal.
  const BigInt tau_lower = factorial(r - 1) + totient(r);
  BigInt tau_upper = 2 * factorial(r - 1);  // walk-size-r transversal from the mod-t construction
  for (int t = 0; 3 * t + 2 <= r; ++t) {
    tau_upper = std::min(tau_upper, BigInt(count_cycle_transversal_clusters(r, t).total()));
  }
  g.lower = total - tau_upper + 1;
  g.upper = total - tau_lower + 1;
  g.basis = "interval from transversal constructions and split shift cycles";
  return g;
}

ThresholdCertificate psg5_certificate() {
  ThresholdCertificate cert;
  cert.kind = CertificateKind::CycleTransversal;
  cert.transversal = construct_bump_transversal(5);
  std::vector<bool> in(120, false);
  for (int v : cert.transversal) in[v] = true;
  for (int v = 0; v < 120; ++v)
    if (!in[v]) cert.avoid_set.push_back(v);
  cert.family = bundled_cycle_family(5);
  return cert;
}

}  // namespace tightpath
