#include "tightpath/psg.hpp"

#include <algorithm>
#include <numeric>

#include "tightpath/error.hpp"

namespace tightpath {

namespace {

void check_order(int r) {
  if (r < 1 || r > PatternShiftGraph::kMaxOrder) {
    fail(ErrorKind::Unsupported, "PSG order must be in 1.." + std::to_string(PatternShiftGraph::kMaxOrder));
  }
}

}  // namespace

void psg_out_neighbor_ranks(std::span<const int> a, std::vector<std::uint64_t>& out) {
  const int r = static_cast<int>(a.size());
  out.clear();
  // The (r-1)-suffix pattern sigma fixes every successor up to the value x
  // in the last slot: b_i = sigma_i + [sigma_i >= x], b_r = x.
  int sigma[32];
  for (int i = 1; i < r; ++i) {
    int rank = 1;
    for (int j = 1; j < r; ++j) {
      if (a[static_cast<std::size_t>(j)] < a[static_cast<std::size_t>(i)]) ++rank;
    }
    sigma[i - 1] = rank;
  }
  int b[32];
  for (int x = 1; x <= r; ++x) {
    for (int i = 0; i + 1 < r; ++i) b[i] = sigma[i] + (sigma[i] >= x ? 1 : 0);
    b[r - 1] = x;
    out.push_back(pattern_rank(std::span<const int>(b, static_cast<std::size_t>(r))));
  }
}

std::vector<Permutation> psg_out_neighbors(const Permutation& a) {
  std::vector<std::uint64_t> ranks;
  psg_out_neighbor_ranks(a.values(), ranks);
  std::vector<Permutation> out;
  for (auto rk : ranks) out.push_back(Permutation::unrank(a.size(), rk));
  return out;
}

PatternShiftGraph::PatternShiftGraph(int r) : r_(r) {
  check_order(r);
  const auto count = permutation_count(r);
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(count) * static_cast<std::size_t>(r));
  std::vector<int> p(static_cast<std::size_t>(r));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::uint64_t> nbrs;
  int u = 0;
  // next_permutation walks lexicographic order, so u is the rank of p.
  do {
    psg_out_neighbor_ranks(p, nbrs);
    for (auto v : nbrs) arcs.emplace_back(u, static_cast<int>(v));
    ++u;
  } while (std::next_permutation(p.begin(), p.end()));
  graph_ = Digraph(static_cast<int>(count), std::move(arcs));
}

int PatternShiftGraph::vertex(const Permutation& p) const {
  if (p.size() != r_) fail(ErrorKind::InvalidInput, "permutation " + p.to_string() + " has wrong order");
  return static_cast<int>(p.rank());
}

bool PatternShiftGraph::has_arc(const Permutation& u, const Permutation& v) const {
  if (u.size() != r_ || v.size() != r_) return false;
  return graph_.has_arc(vertex(u), vertex(v));
}

PatternShiftGraph build_psg(int r) { return PatternShiftGraph(r); }

std::vector<ShiftCycle> shift_cycles(int r) {
  check_order(r);
  const auto count = permutation_count(r);
  std::vector<bool> seen(static_cast<std::size_t>(count), false);
  std::vector<ShiftCycle> out;
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    if (seen[static_cast<std::size_t>(rank)]) continue;
    ShiftCycle c;
    Permutation p = Permutation::unrank(r, rank);
    for (int i = 0; i < r; ++i) {
      seen[static_cast<std::size_t>(p.rank())] = true;
      c.vertices.push_back(p);
      p = p.forward_shift();
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::pair<Permutation, Permutation> second_chord(const PatternShiftGraph& psg, const Permutation& u,
                                                 const Permutation& v) {
  if (!psg.has_arc(u, v)) {
    fail(ErrorKind::InvalidInput, u.to_string() + " -> " + v.to_string() + " is not an arc of PSG");
  }
  return {v.backward_shift(), u.forward_shift()};
}

std::vector<Chord> chords_of(const PatternShiftGraph& psg, const ShiftCycle& cycle) {
  const int r = static_cast<int>(cycle.vertices.size());
  std::vector<Chord> out;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (j == (i + 1) % r) continue;
      const auto& u = cycle.vertices[static_cast<std::size_t>(i)];
      const auto& v = cycle.vertices[static_cast<std::size_t>(j)];
      if (psg.has_arc(u, v)) out.push_back(Chord{i, j, {u, v}});
    }
  }
  return out;
}

std::pair<PermutationCycle, PermutationCycle> split_cycle(const PatternShiftGraph& psg, const ShiftCycle& cycle,
                                                          const Chord& chord) {
  const int r = static_cast<int>(cycle.vertices.size());
  const int i = chord.from_index;
  const int j = chord.to_index;
  if (r < 2 || i < 0 || i >= r || j < 0 || j >= r) fail(ErrorKind::InvalidInput, "chord index out of range");
  if (j == (i + 1) % r) fail(ErrorKind::InvalidInput, "consecutive cycle arc is not a chord");
  const auto& ui = cycle.vertices[static_cast<std::size_t>(i)];
  const auto& uj = cycle.vertices[static_cast<std::size_t>(j)];
  if (!psg.has_arc(ui, uj)) {
    fail(ErrorKind::InvalidInput, "chord " + ui.to_string() + " -> " + uj.to_string() + " is not an arc");
  }
  auto at = [&](int k) { return cycle.vertices[static_cast<std::size_t>(((k % r) + r) % r)]; };
  PermutationCycle first;
  for (int k = j;; ++k) {
    first.push_back(at(k));
    if (((k - i) % r + r) % r == 0) break;
  }
  PermutationCycle second;
  for (int k = i + 1;; ++k) {
    second.push_back(at(k));
    if (((k - (j - 1)) % r + r) % r == 0) break;
  }
  return {std::move(first), std::move(second)};
}

int totient(int r) {
  if (r < 1) fail(ErrorKind::InvalidInput, "totient needs r >= 1");
  int count = 0;
  for (int d = 1; d <= r; ++d) {
    if (std::gcd(d, r) == 1) ++count;
  }
  return count;
}

std::vector<std::pair<ShiftCycle, Chord>> chorded_shift_cycles(int r) {
  check_order(r);
  if (r < 2) fail(ErrorKind::InvalidInput, "chorded shift cycles need r >= 2");
  std::vector<std::pair<ShiftCycle, Chord>> out;
  for (int d = 1; d <= r; ++d) {
    if (std::gcd(d, r) != 1) continue;
    std::vector<int> x(static_cast<std::size_t>(r));
    for (int s = 0; s < r; ++s) {
      const int residue = (d * s) % r;
      x[static_cast<std::size_t>(s)] = residue == 0 ? r : residue;
    }
    int inverse = 1;
    while ((inverse * d) % r != 1 % r) ++inverse;
    ShiftCycle c;
    Permutation p{std::move(x)};
    for (int j = 0; j < r; ++j) {
      c.vertices.push_back(p);
      p = p.forward_shift();
    }
    const int from = inverse % r;
    const int to = 1 % r;
    Chord chord{from, to, {c.vertices[static_cast<std::size_t>(from)], c.vertices[static_cast<std::size_t>(to)]}};
    out.emplace_back(std::move(c), std::move(chord));
  }
  return out;
}

std::vector<int> realize_walk(int r, const std::vector<Permutation>& walk) {
  if (walk.empty()) fail(ErrorKind::InvalidInput, "walk must have at least one vertex");
  for (const auto& w : walk) {
    if (w.size() != r) fail(ErrorKind::InvalidInput, "walk vertex " + w.to_string() + " has wrong order");
  }
  for (std::size_t k = 0; k + 1 < walk.size(); ++k) {
    if (!pattern_match(walk[k].values().subspan(1), walk[k + 1].values().first(static_cast<std::size_t>(r - 1)))) {
      fail(ErrorKind::InvalidInput,
           walk[k].to_string() + " -> " + walk[k + 1].to_string() + " is not an arc of PSG");
    }
  }
  // Values are kept as a permutation of [m]; inserting a value just above
  // (or below) a window entry shifts everything at or above it by one.
  std::vector<int> x(walk.front().values().begin(), walk.front().values().end());
  for (std::size_t k = 1; k < walk.size(); ++k) {
    const std::size_t start = x.size() - static_cast<std::size_t>(r - 1);
    std::vector<int> window(x.begin() + static_cast<std::ptrdiff_t>(start), x.end());
    std::sort(window.begin(), window.end());
    const int target = walk[k].at(r);  // rank of the new entry within its r-interval
    int new_value;
    if (window.empty()) {
      new_value = static_cast<int>(x.size()) + 1;
    } else if (target == 1) {
      new_value = window.front();
    } else {
      new_value = window[static_cast<std::size_t>(target - 2)] + 1;
    }
    for (int& v : x) {
      if (v >= new_value) ++v;
    }
    x.push_back(new_value);
  }
  return x;
}

}  // namespace tightpath
