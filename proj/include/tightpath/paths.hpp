#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tightpath/rational.hpp"
#include "tightpath/rdigraph.hpp"
#include "tightpath/tournament.hpp"

namespace tightpath {

enum class PathSearchMode { Exact, Heuristic };

struct PathSearchOptions {
  PathSearchMode mode = PathSearchMode::Exact;
  // Zero means unlimited. Exact mode stops and flags the result non-optimal.
  std::chrono::milliseconds time_budget{0};
  std::size_t state_cap = 8'000'000;  // memoised (visited set, suffix) states
  std::uint64_t seed = 1;
  // Only paths starting with this sequence are considered (must be a path).
  std::vector<int> prefix;
};

struct PathResult {
  std::vector<int> path;
  bool optimal = false;
  std::uint64_t states = 0;
  std::string note;  // why the search stopped early, if it did
  int size() const { return static_cast<int>(path.size()); }
};

// Exact: DFS over (visited set, last r-1 vertices) with memoisation; stops at
// the first spanning path. n <= 32 for exact mode, n <= 64 for heuristic.
PathResult longest_tight_path(const RDigraph& g, const PathSearchOptions& opts = {});
PathResult longest_tight_path(const Tournament& g, const PathSearchOptions& opts = {});

// An undirected r-uniform hypergraph; edges are sorted vertex lists.
struct Hypergraph {
  int n = 0;
  int r = 0;
  std::vector<std::vector<int>> edges;
};

struct MinDegreeSubgraph {
  std::vector<int> vertices;     // surviving vertices, ascending
  std::vector<int> edge_ids;     // indices into the input edge list
  std::vector<int> peel_order;   // removed vertices, first removed first
  int min_degree = 0;
};

// Peels minimum-degree vertices until the remaining graph has minimum degree
// greater than d/r (at least d/r when d = 0 or r = 1). Requires average
// degree >= d.
MinDegreeSubgraph min_degree_subgraph(const Hypergraph& h, const Rational& d);

struct CyclePathResult {
  std::vector<int> path;
  std::uint64_t cycles = 0;        // copies of C^(r)_r
  std::uint64_t tuples = 0;        // n_(r-1)
  int h0_min_degree = 0;
  Rational guarantee;              // m / n_(r-1) + (r-1)
};

// Long path from many tight r-cycles through the auxiliary (r-1)-tuple graph.
CyclePathResult path_from_cycles(const RDigraph& g);

struct InsertionResult {
  std::vector<int> path;
  int insertions = 0;
};

// Spanning path in a (3,5)-tournament by insertion. `order` is the vertex
// insertion order (default ascending).
InsertionResult spanning_path_35(const RDigraph& g, const std::vector<int>& order = {});

struct FlexibleResult {
  bool success = false;
  std::vector<int> path;
  int steps = 0;       // (r-1)-tuple extensions performed
  std::string report;  // failure report
};

// Spanning path through flexible paths; requires an (r,k)-tournament with
// k > (1 - 1/(4(r-1))) r!.
FlexibleResult spanning_path_flexible(const RDigraph& g);

struct BoundedWalkSubgraph {
  std::vector<int> vertices;  // T, ascending
  RDigraph subgraph;          // G[T], relabelled in the order of `vertices`
  std::int64_t longest_walk = 0;
  std::uint64_t good_sets = 0;
};

// Greedy vertex set containing no good r-set; every walk in the induced
// subgraph has size <= max(r-1, s). Requires every tight path of G to have
// size <= s.
BoundedWalkSubgraph extract_bounded_walk_subgraph(const RDigraph& g, int s);

}  // namespace tightpath
