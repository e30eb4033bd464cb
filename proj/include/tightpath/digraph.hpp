#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tightpath {

using Arc = std::pair<int, int>;

// Ordinary digraph on vertices 0..m-1. Loops allowed, parallel arcs are
// collapsed. Immutable after construction; adjacency is stored in CSR form
// with sorted neighbour lists.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int m, std::vector<Arc> arcs);

  int vertex_count() const { return m_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  std::span<const int> out(int u) const {
    return {out_targets_.data() + out_offsets_[u], out_targets_.data() + out_offsets_[u + 1]};
  }
  std::span<const int> in(int v) const {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }
  bool has_arc(int u, int v) const;

 private:
  int m_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<int> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<int> in_sources_;
};

// Walk size counts vertices. When a closed walk exists the walk size is
// unbounded and `witness` holds a directed cycle (a single vertex for a loop);
// otherwise `witness` is a longest walk, which is then a path.
struct WalkReport {
  bool finite = true;
  std::int64_t max_walk_size = 0;
  std::vector<int> witness;
};

// `alive` restricts the search to an induced subgraph; empty means all vertices.
WalkReport longest_walk(const Digraph& d, const std::vector<bool>& alive = {});

std::optional<std::vector<int>> find_cycle(const Digraph& d, const std::vector<bool>& alive = {});

bool is_acyclic(const Digraph& d, const std::vector<bool>& alive = {});

// Tarjan SCCs in reverse topological order of the condensation.
std::vector<std::vector<int>> strongly_connected_components(const Digraph& d,
                                                            const std::vector<bool>& alive = {});

// True iff consecutive vertices (cyclically) are arcs and vertices are distinct.
bool is_cycle(const Digraph& d, std::span<const int> cycle);

// True iff consecutive vertices are arcs (repeats allowed).
bool is_walk(const Digraph& d, std::span<const int> walk);

}  // namespace tightpath
