#include "tightpath/rdigraph.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "tightpath/error.hpp"

namespace tightpath {

namespace {

constexpr std::uint64_t kDenseBitLimit = std::uint64_t{1} << 27;

// n^r, or nullopt-like max on overflow.
std::uint64_t power_or_max(int n, int r) {
  std::uint64_t out = 1;
  for (int i = 0; i < r; ++i) {
    if (n != 0 && out > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= static_cast<std::uint64_t>(n);
  }
  return out;
}

}  // namespace

EdgeIndex::EdgeIndex(int n, int r) : n_(n), r_(r) {
  const std::uint64_t space = power_or_max(n, r);
  if (space == std::numeric_limits<std::uint64_t>::max()) {
    fail(ErrorKind::Unsupported, "tuple space n^r does not fit in 64 bits");
  }
  dense_ = space <= kDenseBitLimit;
  if (dense_) bits_.assign(static_cast<std::size_t>((space + 63) / 64), 0);
}

void EdgeIndex::insert(std::span<const int> tuple) {
  const std::uint64_t c = code(tuple);
  if (dense_) {
    bits_[c >> 6] |= std::uint64_t{1} << (c & 63);
  } else {
    sparse_.insert(c);
  }
}

RDigraph::RDigraph(int n, int r, std::vector<Tuple> edges) : n_(n), r_(r), edges_(std::move(edges)) {
  if (n < 0) fail(ErrorKind::InvalidInput, "negative vertex count");
  if (r < 1) fail(ErrorKind::InvalidInput, "uniformity r must be >= 1");
  for (const Tuple& e : edges_) {
    if (static_cast<int>(e.size()) != r) fail(ErrorKind::InvalidInput, "edge of wrong length");
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= n) fail(ErrorKind::InvalidInput, "edge vertex out of range");
      for (std::size_t j = 0; j < i; ++j) {
        if (e[i] == e[j]) fail(ErrorKind::InvalidInput, "edge with repeated vertex");
      }
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    fail(ErrorKind::InvalidInput, "duplicate edge");
  }
  auto index = std::make_shared<EdgeIndex>(n, r);
  for (const Tuple& e : edges_) index->insert(e);
  index_ = std::move(index);
}

RDigraph RDigraph::complete(int n, int r) {
  std::vector<Tuple> edges;
  Tuple t(static_cast<std::size_t>(r));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  // Depth-first enumeration of all ordered r-tuples of distinct vertices.
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == r) {
      edges.push_back(t);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      t[static_cast<std::size_t>(depth)] = v;
      self(self, depth + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  if (r <= n) rec(rec, 0);
  return RDigraph(n, r, std::move(edges));
}

bool RDigraph::has_edge(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != r_) return false;
  for (int v : tuple) {
    if (v < 0 || v >= n_) return false;
  }
  return index_->contains(tuple);
}

bool is_tight_path(const RDigraph& g, std::span<const int> seq, std::string* why) {
  auto reject = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  std::vector<bool> seen(static_cast<std::size_t>(g.n()), false);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const int v = seq[i];
    if (v < 0 || v >= g.n()) return reject("vertex " + std::to_string(v) + " out of range");
    if (seen[static_cast<std::size_t>(v)]) return reject("vertex " + std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v)] = true;
  }
  const auto r = static_cast<std::size_t>(g.r());
  for (std::size_t i = 0; i + r <= seq.size(); ++i) {
    if (!g.has_edge(seq.subspan(i, r))) {
      return reject("interval at position " + std::to_string(i) + " is not an edge");
    }
  }
  return true;
}

bool is_walk(const RDigraph& g, std::span<const int> seq) {
  for (int v : seq) {
    if (v < 0 || v >= g.n()) return false;
  }
  const auto r = static_cast<std::size_t>(g.r());
  for (std::size_t i = 0; i + r <= seq.size(); ++i) {
    if (!g.has_edge(seq.subspan(i, r))) return false;
  }
  return true;
}

bool is_tight_cycle(const RDigraph& g, std::span<const int> seq) {
  const std::size_t s = seq.size();
  const auto r = static_cast<std::size_t>(g.r());
  if (s < r) return false;
  if (!is_tight_path(g, seq)) return false;
  Tuple window(r);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t k = 0; k < r; ++k) window[k] = seq[(i + k) % s];
    if (!g.has_edge(window)) return false;
  }
  return true;
}

int ShiftDigraph::find(std::span<const int> tuple, int n) const {
  std::uint64_t c = 0;
  for (int v : tuple) c = c * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v);
  auto it = lookup.find(c);
  return it == lookup.end() ? -1 : it->second;
}

ShiftDigraph shift_digraph(const RDigraph& g) {
  if (g.r() < 2) fail(ErrorKind::Unsupported, "shift digraph needs r >= 2");
  const auto k = static_cast<std::size_t>(g.r() - 1);
  std::map<Tuple, int> ids;
  for (const Tuple& e : g.edges()) {
    ids.emplace(Tuple(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k)), 0);
    ids.emplace(Tuple(e.begin() + 1, e.end()), 0);
  }
  ShiftDigraph out;
  int next = 0;
  for (auto& [tuple, id] : ids) {
    id = next++;
    out.labels.push_back(tuple);
  }
  for (const Tuple& t : out.labels) {
    std::uint64_t c = 0;
    for (int v : t) c = c * static_cast<std::uint64_t>(g.n()) + static_cast<std::uint64_t>(v);
    out.lookup.emplace(c, static_cast<int>(out.lookup.size()));
  }
  std::vector<Arc> arcs;
  arcs.reserve(g.edge_count());
  for (const Tuple& e : g.edges()) {
    const int u = ids.at(Tuple(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k)));
    const int v = ids.at(Tuple(e.begin() + 1, e.end()));
    arcs.emplace_back(u, v);
  }
  out.graph = Digraph(next, std::move(arcs));
  return out;
}

bool has_closed_walk(const RDigraph& g) {
  if (g.r() < 2) fail(ErrorKind::Unsupported, "closed walks need r >= 2");
  return !is_acyclic(shift_digraph(g).graph);
}

WalkReport longest_walk(const RDigraph& g) {
  if (g.r() < 2) fail(ErrorKind::Unsupported, "walk analysis needs r >= 2");
  const ShiftDigraph sd = shift_digraph(g);
  const WalkReport inner = longest_walk(sd.graph);
  WalkReport out;
  out.finite = inner.finite;
  const int k = g.r() - 1;
  if (!inner.finite) {
    // A cycle of (r-1)-tuples; each step contributes the last vertex of the
    // next tuple, so listing first coordinates gives the closed vertex walk.
    for (int id : inner.witness) out.witness.push_back(sd.labels[static_cast<std::size_t>(id)].front());
    return out;
  }
  if (inner.witness.empty()) {
    if (g.n() == 0) return out;
    out.max_walk_size = k;
    for (int i = 0; i < k; ++i) out.witness.push_back(i % g.n());
    return out;
  }
  out.max_walk_size = inner.max_walk_size + g.r() - 2;
  out.witness = sd.labels[static_cast<std::size_t>(inner.witness.front())];
  for (std::size_t i = 1; i < inner.witness.size(); ++i) {
    out.witness.push_back(sd.labels[static_cast<std::size_t>(inner.witness[i])].back());
  }
  return out;
}

Rational edge_density(const RDigraph& g) {
  if (g.n() < g.r()) fail(ErrorKind::InvalidInput, "density needs n >= r");
  return Rational(BigInt(g.edge_count()), falling_factorial(g.n(), g.r()));
}

RDigraph induced_subgraph(const RDigraph& g, std::span<const int> vertices) {
  std::vector<int> relabel(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= g.n() || relabel[static_cast<std::size_t>(v)] >= 0) {
      fail(ErrorKind::InvalidInput, "induced subgraph vertex list invalid");
    }
    relabel[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<Tuple> edges;
  for (const Tuple& e : g.edges()) {
    Tuple mapped;
    mapped.reserve(e.size());
    for (int v : e) {
      const int w = relabel[static_cast<std::size_t>(v)];
      if (w < 0) break;
      mapped.push_back(w);
    }
    if (mapped.size() == e.size()) edges.push_back(std::move(mapped));
  }
  return RDigraph(static_cast<int>(vertices.size()), g.r(), std::move(edges));
}

RDigraph reversed(const RDigraph& g) {
  std::vector<Tuple> edges = g.edges();
  for (Tuple& e : edges) std::reverse(e.begin(), e.end());
  return RDigraph(g.n(), g.r(), std::move(edges));
}

}  // namespace tightpath
