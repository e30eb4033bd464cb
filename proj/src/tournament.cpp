#include "tightpath/tournament.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "tightpath/error.hpp"
#include "tightpath/psg.hpp"

namespace tightpath {

namespace {

std::uint64_t choose(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  return binomial_u64(a, b);
}

// Ranks of the patterns in one shift class, e.g. {123, 231, 312}.
std::vector<int> class_pattern_ranks(const ShiftCycle& c) {
  std::vector<int> out;
  for (const auto& p : c.vertices) out.push_back(static_cast<int>(p.rank()));
  return out;
}

Tournament from_pattern_ranks(int n, int r, const std::vector<int>& ranks) {
  Tournament g(n, r);
  for (std::uint64_t s = 0; s < g.subset_count(); ++s)
    for (int p : ranks) g.set(s, p);
  return g;
}

template <typename Pred>
std::vector<int> ranks_where(int r, Pred&& pred) {
  std::vector<int> out;
  std::vector<int> p(static_cast<std::size_t>(r));
  std::iota(p.begin(), p.end(), 1);
  int rank = 0;
  do {
    if (pred(std::span<const int>(p))) out.push_back(rank);
    ++rank;
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

Tournament::Tournament(int n, int r) : n_(n), r_(r) {
  if (n < 0) fail(ErrorKind::InvalidInput, "negative vertex count");
  if (r < 1 || r > kMaxOrder) {
    fail(ErrorKind::Unsupported, "tournament masks support 1 <= r <= " + std::to_string(kMaxOrder));
  }
  patterns_ = static_cast<int>(factorial_u64(static_cast<std::uint64_t>(r)));
  words_ = (static_cast<std::uint64_t>(patterns_) + 63) / 64;
  subsets_ = choose(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r));
  if (subsets_ > (std::uint64_t{1} << 28) / words_) {
    fail(ErrorKind::Resource, "tournament on " + std::to_string(n) + " vertices with r=" + std::to_string(r) +
                                  " is too large to materialise");
  }
  masks_.assign(subsets_ * words_, 0);
}

std::vector<int> Tournament::subset(std::uint64_t index) const {
  std::vector<int> s(static_cast<std::size_t>(r_));
  for (int i = r_ - 1; i >= 0; --i) {
    std::uint64_t v = static_cast<std::uint64_t>(i);
    while (choose(v + 1, static_cast<std::uint64_t>(i + 1)) <= index) ++v;
    s[static_cast<std::size_t>(i)] = static_cast<int>(v);
    index -= choose(v, static_cast<std::uint64_t>(i + 1));
  }
  return s;
}

std::uint64_t Tournament::subset_index(std::span<const int> sorted) const {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    index += choose(static_cast<std::uint64_t>(sorted[i]), i + 1);
  }
  return index;
}

void Tournament::set(std::uint64_t subset, int pattern, bool on) {
  auto& word = masks_[subset * words_ + static_cast<std::uint64_t>(pattern) / 64];
  const std::uint64_t b = std::uint64_t{1} << (pattern % 64);
  word = on ? (word | b) : (word & ~b);
}

int Tournament::popcount(std::uint64_t subset) const {
  int count = 0;
  for (std::uint64_t w = 0; w < words_; ++w) count += std::popcount(masks_[subset * words_ + w]);
  return count;
}

bool Tournament::has_edge(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != r_) return false;
  std::vector<int> sorted(tuple.begin(), tuple.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.front() < 0 || sorted.back() >= n_) return false;
  return test(subset_index(sorted), static_cast<int>(pattern_rank(tuple)));
}

std::optional<int> Tournament::k() const {
  if (subsets_ == 0) return 0;
  const int first = popcount(0);
  for (std::uint64_t s = 1; s < subsets_; ++s) {
    if (popcount(s) != first) return std::nullopt;
  }
  return first;
}

RDigraph Tournament::to_rdigraph() const {
  std::vector<Permutation> orderings;
  for (int p = 0; p < patterns_; ++p) orderings.push_back(Permutation::unrank(r_, static_cast<std::uint64_t>(p)));
  std::vector<Tuple> edges;
  for (std::uint64_t s = 0; s < subsets_; ++s) {
    const auto set = subset(s);
    for (int p = 0; p < patterns_; ++p) {
      if (!test(s, p)) continue;
      Tuple e(static_cast<std::size_t>(r_));
      for (int i = 0; i < r_; ++i) e[static_cast<std::size_t>(i)] = set[static_cast<std::size_t>(orderings[p][i] - 1)];
      edges.push_back(std::move(e));
    }
  }
  return RDigraph(n_, r_, std::move(edges));
}

Tournament Tournament::from_rdigraph(const RDigraph& g) {
  Tournament t(g.n(), g.r());
  for (const Tuple& e : g.edges()) {
    std::vector<int> sorted = e;
    std::sort(sorted.begin(), sorted.end());
    t.set(t.subset_index(sorted), static_cast<int>(pattern_rank(e)));
  }
  return t;
}

RkCheck is_rk_tournament(const RDigraph& g) {
  RkCheck out;
  const Tournament t = Tournament::from_rdigraph(g);
  if (t.subset_count() == 0) {
    out.k = 0;
    return out;
  }
  out.expected = t.popcount(0);
  for (std::uint64_t s = 1; s < t.subset_count(); ++s) {
    const int c = t.popcount(s);
    if (c != out.expected) {
      out.counterexample = t.subset(s);
      out.found = c;
      return out;
    }
  }
  out.k = out.expected;
  return out;
}

Tournament construct_from_pattern_set(int n, int r, const std::vector<Permutation>& patterns) {
  std::set<int> ranks;
  for (const auto& p : patterns) {
    if (p.size() != r) fail(ErrorKind::InvalidInput, "pattern " + p.to_string() + " is not a permutation of [r]");
    ranks.insert(static_cast<int>(p.rank()));
  }
  return from_pattern_ranks(n, r, std::vector<int>(ranks.begin(), ranks.end()));
}

Tournament construct_max_second(int n, int r) {
  if (r < 3) fail(ErrorKind::Unsupported, "max-second construction needs r >= 3");
  return from_pattern_ranks(n, r, ranks_where(r, [](std::span<const int> p) { return p[1] > p[0] && p[1] > p[2]; }));
}

Tournament construct_first_not_max(int n, int r) {
  if (r < 2) fail(ErrorKind::Unsupported, "first-not-max construction needs r >= 2");
  return from_pattern_ranks(n, r, ranks_where(r, [r](std::span<const int> p) { return p[0] != r; }));
}

Tournament construct_middle_not_max(int n) {
  if (n < 3) fail(ErrorKind::Precondition, "middle-not-max construction needs n >= 3");
  return from_pattern_ranks(n, 3, ranks_where(3, [](std::span<const int> p) { return p[1] != 3; }));
}

RDigraph construct_interval_density(int n, int r, int t) {
  if (t < 1 || n < 1 || n % t != 0) {
    fail(ErrorKind::InvalidInput, "interval construction needs t | n (n=" + std::to_string(n) +
                                      ", t=" + std::to_string(t) + ")");
  }
  if (r < 1 || r > n) fail(ErrorKind::InvalidInput, "interval construction needs 1 <= r <= n");
  const int width = n / t;
  std::vector<Tuple> edges;
  Tuple e(static_cast<std::size_t>(r));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == r) {
      const int first = e[0] / width;
      for (int j = 1; j < r; ++j) {
        if (e[static_cast<std::size_t>(j)] / width > first) {
          edges.push_back(e);
          return;
        }
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      e[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1);
      used[v] = false;
    }
  };
  rec(rec, 0);
  return RDigraph(n, r, std::move(edges));
}

bool binary33_has_edge(int /*t*/, std::uint32_t u, std::uint32_t v, std::uint32_t w) {
  if (u == v || v == w || u == w) return false;
  const std::uint32_t spread = (u ^ v) | (u ^ w);
  const int alpha_bit = 31 - std::countl_zero(spread);  // leading coordinate where not all agree
  auto at = [](std::uint32_t x, int b) { return static_cast<int>((x >> b) & 1u); };
  // The agreeing pair at alpha; its leading difference is beta.
  std::uint32_t diff;
  if (at(u, alpha_bit) == at(v, alpha_bit)) {
    diff = u ^ v;
  } else if (at(u, alpha_bit) == at(w, alpha_bit)) {
    diff = u ^ w;
  } else {
    diff = v ^ w;
  }
  const int beta_bit = 31 - std::countl_zero(diff);
  const int top = at(u, alpha_bit) << 2 | at(v, alpha_bit) << 1 | at(w, alpha_bit);
  const int b0 = at(u, beta_bit), b1 = at(v, beta_bit), b2 = at(w, beta_bit);
  switch (top) {
    case 0b010: return true;                    // P1
    case 0b001: return b0 == 0 && b1 == 1;      // P2
    case 0b011: return b1 == 1 && b2 == 0;      // P3
    case 0b110: return true;                    // P4
    default: return false;
  }
}

Tournament construct_binary_33(int t) {
  if (t < 1 || t > 14) fail(ErrorKind::InvalidInput, "binary (3,3) construction needs 1 <= t <= 14");
  if (t > kBinary33MaterialiseLimit) {
    fail(ErrorKind::Resource, "materialising 2^" + std::to_string(t) + " vertices exceeds the limit t <= " +
                                  std::to_string(kBinary33MaterialiseLimit) + "; use the edge predicate instead");
  }
  const int n = 1 << t;
  Tournament g(n, 3);
  for (std::uint64_t s = 0; s < g.subset_count(); ++s) {
    const auto set = g.subset(s);
    for (int p = 0; p < 6; ++p) {
      const Permutation pi = Permutation::unrank(3, static_cast<std::uint64_t>(p));
      const auto x = [&](int i) { return static_cast<std::uint32_t>(set[static_cast<std::size_t>(pi[i] - 1)]); };
      if (binary33_has_edge(t, x(0), x(1), x(2))) g.set(s, p);
    }
  }
  return g;
}

CycleSharpness construct_cycle_sharpness(int n, int r) {
  if (r != 3 && r != 4) fail(ErrorKind::Unsupported, "cycle sharpness construction supports r in {3, 4}");
  if (n < r) fail(ErrorKind::Precondition, "cycle sharpness construction needs n >= r");
  const PatternShiftGraph psg(r);
  const auto classes = shift_cycles(r);
  const int c = static_cast<int>(classes.size());
  std::vector<int> class_of(static_cast<std::size_t>(psg.vertex_count()));
  for (int i = 0; i < c; ++i)
    for (const auto& p : classes[i].vertices) class_of[psg.vertex(p)] = i;
  // Underlying simple graph of the contracted digraph F.
  std::vector<std::set<int>> adj(static_cast<std::size_t>(c));
  for (auto [u, v] : psg.graph().arcs()) {
    const int a = class_of[u], b = class_of[v];
    if (a == b) continue;
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<int> order(static_cast<std::size_t>(c));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return adj[a].size() < adj[b].size(); });
  CycleSharpness out;
  std::vector<bool> blocked(static_cast<std::size_t>(c), false);
  for (int x : order) {
    if (blocked[x]) continue;
    out.independent_classes.push_back(x);
    blocked[x] = true;
    for (int y : adj[x]) blocked[y] = true;
  }
  std::sort(out.independent_classes.begin(), out.independent_classes.end());
  const int parts = std::min<int>(static_cast<int>(out.independent_classes.size()), n);
  out.part_of_vertex.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out.part_of_vertex[v] = static_cast<int>(static_cast<long long>(v) * parts / n);

  Tournament g(n, r);
  std::vector<std::vector<int>> ranks;
  for (int x : out.independent_classes) ranks.push_back(class_pattern_ranks(classes[x]));
  for (std::uint64_t s = 0; s < g.subset_count(); ++s) {
    const int part = out.part_of_vertex[g.subset(s).front()];
    for (int p : ranks[part]) g.set(s, p);
  }
  out.tournament = std::move(g);
  return out;
}

Tournament random_rk_tournament(int n, int r, int k, Rng& rng) {
  Tournament g(n, r);
  const int total = g.pattern_count();
  if (k < 0 || k > total) fail(ErrorKind::InvalidInput, "k must lie in 0..r!");
  std::vector<int> deck(static_cast<std::size_t>(total));
  for (std::uint64_t s = 0; s < g.subset_count(); ++s) {
    std::iota(deck.begin(), deck.end(), 0);
    for (int i = 0; i < k; ++i) {
      const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(total - i)));
      std::swap(deck[i], deck[j]);
      g.set(s, deck[i]);
    }
  }
  return g;
}

Tournament random_triangle_free_34(int n, Rng& rng) {
  Tournament g(n, 3);
  // Ranks: 123=0 132=1 213=2 231=3 312=4 321=5. Cyclic classes {123,231,312}, {321,213,132}.
  static constexpr int kForward[3] = {0, 3, 4};
  static constexpr int kBackward[3] = {5, 2, 1};
  for (std::uint64_t s = 0; s < g.subset_count(); ++s) {
    const int drop_f = static_cast<int>(rng.below(3));
    const int drop_b = static_cast<int>(rng.below(3));
    for (int i = 0; i < 3; ++i) {
      if (i != drop_f) g.set(s, kForward[i]);
      if (i != drop_b) g.set(s, kBackward[i]);
    }
  }
  return g;
}

}  // namespace tightpath
