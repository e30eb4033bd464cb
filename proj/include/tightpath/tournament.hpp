#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tightpath/permutation.hpp"
#include "tightpath/rdigraph.hpp"
#include "tightpath/rng.hpp"

namespace tightpath {

// Orientation masks over the r-subsets of [n]. Bit p of the mask of S is set
// when the ordering of S with pattern rank p (lexicographic) is an edge.
// Subsets are indexed in colexicographic order.
class Tournament {
 public:
  static constexpr int kMaxOrder = 8;

  Tournament() = default;
  Tournament(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  std::uint64_t subset_count() const { return subsets_; }
  int pattern_count() const { return patterns_; }

  std::vector<int> subset(std::uint64_t index) const;
  std::uint64_t subset_index(std::span<const int> sorted) const;

  bool test(std::uint64_t subset, int pattern) const {
    return (masks_[subset * words_ + static_cast<std::uint64_t>(pattern) / 64] >> (pattern % 64)) & 1u;
  }
  void set(std::uint64_t subset, int pattern, bool on = true);
  int popcount(std::uint64_t subset) const;

  bool has_edge(std::span<const int> tuple) const;

  // Common popcount of all masks; nullopt if they differ. 0 when n < r.
  std::optional<int> k() const;

  RDigraph to_rdigraph() const;
  // Throws InvalidInput on out-of-range order.
  static Tournament from_rdigraph(const RDigraph& g);

  bool operator==(const Tournament& other) const = default;

 private:
  int n_ = 0;
  int r_ = 1;
  int patterns_ = 1;
  std::uint64_t words_ = 1;
  std::uint64_t subsets_ = 0;
  std::vector<std::uint64_t> masks_;
};

struct RkCheck {
  std::optional<int> k;
  std::vector<int> counterexample;  // an r-set whose edge count differs from the first r-set's
  int expected = 0;
  int found = 0;
};

RkCheck is_rk_tournament(const RDigraph& g);

Tournament construct_from_pattern_set(int n, int r, const std::vector<Permutation>& patterns);

// u_2 = max(u_1, u_2, u_3): an (r, r!/3)-tournament without P^(r)_{r+1}.
Tournament construct_max_second(int n, int r);
// Orderings whose first entry is not the maximum; no closed walk.
Tournament construct_first_not_max(int n, int r);
// r = 3, (u,v,w) an edge iff max(u,v,w) != v; 2^(n-1) spanning paths.
Tournament construct_middle_not_max(int n);

// [n] split into t consecutive intervals X_0..X_{t-1}; (u_1..u_r) is an edge
// iff some u_j lies in a later interval than u_1.
RDigraph construct_interval_density(int n, int r, int t);

// (3,3)-tournament on F_2^t: coordinate 1 is the most significant bit.
bool binary33_has_edge(int t, std::uint32_t u, std::uint32_t v, std::uint32_t w);
constexpr int kBinary33MaterialiseLimit = 7;
Tournament construct_binary_33(int t);

struct CycleSharpness {
  Tournament tournament;
  std::vector<int> independent_classes;  // indices into shift_cycles(r)
  // Per-r-set class is that of the part holding min(S); parts are contiguous.
  std::vector<int> part_of_vertex;
};

// r in {3, 4}. Every r-set carries one whole shift class of orderings.
CycleSharpness construct_cycle_sharpness(int n, int r);

// Per r-set, a uniform k-subset of the r! orderings.
Tournament random_rk_tournament(int n, int r, int k, Rng& rng);

// (3,4)-tournament with no tight 3-cycle: per triple, drop one ordering from
// each of its two cyclic classes.
Tournament random_triangle_free_34(int n, Rng& rng);

}  // namespace tightpath
