#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tightpath/rdigraph.hpp"
#include "tightpath/tournament.hpp"

namespace tightpath {

enum class SearchMode { Exhaustive, Random };

struct SearchReport {
  int n = 0;
  SearchMode mode = SearchMode::Random;
  bool acyclic_only = false;
  std::uint64_t samples = 0;  // requested (random mode)
  std::uint64_t seed = 0;
  std::uint64_t raw_instances = 0;        // masks enumerated or sampled
  std::uint64_t canonical_instances = 0;  // distinct canonical forms (exhaustive)
  std::uint64_t filtered_out = 0;         // acyclic mode: forms with a closed walk, or rejected chain moves
  std::uint64_t checked = 0;              // instances handed to the path solver
  std::optional<std::uint64_t> min_spanning_paths;
  std::optional<Tournament> counterexample;
  double runtime_ms = 0;
};

// Every (3,4)-tournament has a spanning path. Exhaustive mode enumerates all
// 15^C(n,3) masks (n <= 4) and checks one representative per canonical form.
SearchReport check_34(int n, SearchMode mode, std::uint64_t seed, std::uint64_t samples);
// As check_34, over (3,4)-tournaments with no closed walk. These are too rare
// to sample by rejection, so random mode runs a short chain of closed-walk-free
// triple reorientations from a relabelled first-not-max tournament.
SearchReport check_34_acyclic(int n, SearchMode mode, std::uint64_t seed, std::uint64_t samples);

// Lexicographically least mask encoding over all relabelings and global
// reversal. n <= 8.
std::vector<std::uint64_t> canonical_form(const Tournament& g);
Tournament relabel(const Tournament& g, const std::vector<int>& perm);
Tournament reverse_all(const Tournament& g);

// Exact number of spanning tight paths (as vertex sequences). n <= 12.
std::uint64_t count_spanning_paths(const RDigraph& g);

// Brute force over all orderings; independent of the path solver.
bool has_spanning_path_bruteforce(const RDigraph& g);

struct IntersectionReport {
  bool intersecting = true;
  int max_size = 0;
  std::uint64_t maximum_paths = 0;
  std::uint64_t distinct_vertex_sets = 0;
  std::vector<int> first, second;  // disjoint maximum paths, if any
  std::vector<int> repaired;       // the longer path the repair produces
};

// Maximum paths of a triangle-free (3,4)-tournament pairwise share a vertex.
IntersectionReport check_pairwise_intersecting(const RDigraph& g);

// Repair step for two disjoint equal-size paths A, B: an out-edge splice or
// the interleaving a_t b_t ... a_1 b_1.
std::vector<int> repair_disjoint_paths(const RDigraph& g, const std::vector<int>& a, const std::vector<int>& b);

struct WalkColoring {
  // colour of {u,v}, u < v: (longest walk ending uv, longest walk ending vu), in vertices.
  std::map<std::pair<int, int>, std::pair<int, int>> colour;
  std::int64_t longest_walk = 0;
  int distinct_colours = 0;
  std::optional<std::vector<int>> monochromatic_triangle;
};

// Closed-walk-free (3,3)-tournament, n <= 12.
WalkColoring walk_length_coloring(const RDigraph& g);

}  // namespace tightpath
