#include "tightpath/digraph.hpp"

#include <algorithm>
#include <deque>

#include "tightpath/error.hpp"

namespace tightpath {

Digraph::Digraph(int m, std::vector<Arc> arcs) : m_(m), arcs_(std::move(arcs)) {
  if (m < 0) fail(ErrorKind::InvalidInput, "negative vertex count");
  for (const auto& [u, v] : arcs_) {
    if (u < 0 || u >= m || v < 0 || v >= m) fail(ErrorKind::InvalidInput, "arc endpoint out of range");
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());

  const auto sz = static_cast<std::size_t>(m);
  out_offsets_.assign(sz + 1, 0);
  in_offsets_.assign(sz + 1, 0);
  for (const auto& [u, v] : arcs_) {
    ++out_offsets_[static_cast<std::size_t>(u) + 1];
    ++in_offsets_[static_cast<std::size_t>(v) + 1];
  }
  for (std::size_t i = 0; i < sz; ++i) {
    out_offsets_[i + 1] += out_offsets_[i];
    in_offsets_[i + 1] += in_offsets_[i];
  }
  out_targets_.resize(arcs_.size());
  in_sources_.resize(arcs_.size());
  std::vector<std::size_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  // arcs_ is sorted by (u, v) so out lists come out sorted; in lists are
  // filled in increasing u for each v, also sorted.
  for (const auto& [u, v] : arcs_) {
    out_targets_[out_fill[static_cast<std::size_t>(u)]++] = v;
    in_sources_[in_fill[static_cast<std::size_t>(v)]++] = u;
  }
}

bool Digraph::has_arc(int u, int v) const {
  if (u < 0 || u >= m_ || v < 0 || v >= m_) return false;
  auto nbrs = out(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

namespace {

bool is_alive(const std::vector<bool>& alive, int v) {
  return alive.empty() || alive[static_cast<std::size_t>(v)];
}

struct TopoResult {
  std::vector<int> order;
  std::vector<int> residual_indegree;
};

TopoResult kahn(const Digraph& d, const std::vector<bool>& alive) {
  const int m = d.vertex_count();
  TopoResult res;
  res.residual_indegree.assign(static_cast<std::size_t>(m), 0);
  auto& indeg = res.residual_indegree;
  for (int v = 0; v < m; ++v) {
    if (!is_alive(alive, v)) continue;
    for (int u : d.in(v)) {
      if (is_alive(alive, u)) ++indeg[static_cast<std::size_t>(v)];
    }
  }
  std::deque<int> queue;
  for (int v = 0; v < m; ++v) {
    if (is_alive(alive, v) && indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    res.order.push_back(u);
    for (int v : d.out(u)) {
      if (!is_alive(alive, v)) continue;
      if (--indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    }
  }
  return res;
}

// Every vertex left with positive residual in-degree has an in-neighbour that
// is also left, so walking backwards must eventually repeat a vertex.
std::vector<int> cycle_from_residual(const Digraph& d, const std::vector<bool>& alive,
                                     const std::vector<int>& residual) {
  int start = -1;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (is_alive(alive, v) && residual[static_cast<std::size_t>(v)] > 0) {
      start = v;
      break;
    }
  }
  std::vector<int> seen_at(static_cast<std::size_t>(d.vertex_count()), -1);
  std::vector<int> trail;
  int v = start;
  while (seen_at[static_cast<std::size_t>(v)] < 0) {
    seen_at[static_cast<std::size_t>(v)] = static_cast<int>(trail.size());
    trail.push_back(v);
    int next = -1;
    for (int u : d.in(v)) {
      if (is_alive(alive, u) && residual[static_cast<std::size_t>(u)] > 0) {
        next = u;
        break;
      }
    }
    v = next;
  }
  std::vector<int> cycle(trail.begin() + seen_at[static_cast<std::size_t>(v)], trail.end());
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

std::size_t alive_count(const Digraph& d, const std::vector<bool>& alive) {
  if (alive.empty()) return static_cast<std::size_t>(d.vertex_count());
  return static_cast<std::size_t>(std::count(alive.begin(), alive.end(), true));
}

}  // namespace

WalkReport longest_walk(const Digraph& d, const std::vector<bool>& alive) {
  if (!alive.empty() && alive.size() != static_cast<std::size_t>(d.vertex_count())) {
    fail(ErrorKind::InvalidInput, "alive mask size mismatch");
  }
  WalkReport report;
  TopoResult topo = kahn(d, alive);
  if (topo.order.size() != alive_count(d, alive)) {
    report.finite = false;
    report.witness = cycle_from_residual(d, alive, topo.residual_indegree);
    return report;
  }
  const auto m = static_cast<std::size_t>(d.vertex_count());
  std::vector<std::int64_t> len(m, 0);
  std::vector<int> pred(m, -1);
  int best = -1;
  for (int v : topo.order) {
    std::int64_t l = 1;
    for (int u : d.in(v)) {
      if (!is_alive(alive, u)) continue;
      if (len[static_cast<std::size_t>(u)] + 1 > l) {
        l = len[static_cast<std::size_t>(u)] + 1;
        pred[static_cast<std::size_t>(v)] = u;
      }
    }
    len[static_cast<std::size_t>(v)] = l;
    if (best < 0 || l > len[static_cast<std::size_t>(best)]) best = v;
  }
  if (best >= 0) {
    report.max_walk_size = len[static_cast<std::size_t>(best)];
    for (int v = best; v >= 0; v = pred[static_cast<std::size_t>(v)]) report.witness.push_back(v);
    std::reverse(report.witness.begin(), report.witness.end());
  }
  return report;
}

std::optional<std::vector<int>> find_cycle(const Digraph& d, const std::vector<bool>& alive) {
  TopoResult topo = kahn(d, alive);
  if (topo.order.size() == alive_count(d, alive)) return std::nullopt;
  return cycle_from_residual(d, alive, topo.residual_indegree);
}

bool is_acyclic(const Digraph& d, const std::vector<bool>& alive) {
  return kahn(d, alive).order.size() == alive_count(d, alive);
}

std::vector<std::vector<int>> strongly_connected_components(const Digraph& d,
                                                            const std::vector<bool>& alive) {
  // Iterative Tarjan; recursion depth would reach |V| on long paths.
  const int m = d.vertex_count();
  const auto sz = static_cast<std::size_t>(m);
  std::vector<int> index(sz, -1), low(sz, 0);
  std::vector<bool> on_stack(sz, false);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> frames;
  std::vector<std::vector<int>> comps;
  int counter = 0;
  for (int root = 0; root < m; ++root) {
    if (!is_alive(alive, root) || index[static_cast<std::size_t>(root)] >= 0) continue;
    frames.emplace_back(root, 0);
    while (!frames.empty()) {
      auto& [v, child] = frames.back();
      const auto vs = static_cast<std::size_t>(v);
      if (child == 0 && index[vs] < 0) {
        index[vs] = low[vs] = counter++;
        stack.push_back(v);
        on_stack[vs] = true;
      }
      auto nbrs = d.out(v);
      bool descended = false;
      while (child < nbrs.size()) {
        const int w = nbrs[child++];
        const auto ws = static_cast<std::size_t>(w);
        if (!is_alive(alive, w)) continue;
        if (index[ws] < 0) {
          frames.emplace_back(w, 0);
          descended = true;
          break;
        }
        if (on_stack[ws]) low[vs] = std::min(low[vs], index[ws]);
      }
      if (descended) continue;
      if (low[vs] == index[vs]) {
        std::vector<int> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
      const int finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        const auto ps = static_cast<std::size_t>(frames.back().first);
        low[ps] = std::min(low[ps], low[static_cast<std::size_t>(finished)]);
      }
    }
  }
  return comps;
}

bool is_cycle(const Digraph& d, std::span<const int> cycle) {
  if (cycle.empty()) return false;
  std::vector<int> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!d.has_arc(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

bool is_walk(const Digraph& d, std::span<const int> walk) {
  for (int v : walk) {
    if (v < 0 || v >= d.vertex_count()) return false;
  }
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    if (!d.has_arc(walk[i], walk[i + 1])) return false;
  }
  return true;
}

}  // namespace tightpath
