#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tightpath/digraph.hpp"
#include "tightpath/permutation.hpp"

namespace tightpath {

// The pattern-shift graph of order r: vertices are permutations of [r],
// indexed by lexicographic rank; a -> b iff the (r-1)-suffix of a and the
// (r-1)-prefix of b pattern-match.
class PatternShiftGraph {
 public:
  static constexpr int kMaxOrder = 9;

  explicit PatternShiftGraph(int r);

  int r() const { return r_; }
  const Digraph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  Permutation permutation(int v) const { return Permutation::unrank(r_, static_cast<std::uint64_t>(v)); }
  int vertex(const Permutation& p) const;
  bool has_arc(const Permutation& u, const Permutation& v) const;

 private:
  int r_;
  Digraph graph_;
};

PatternShiftGraph build_psg(int r);

// Out-neighbours of `a` in PSG_r, computed directly (no materialised graph).
// Ordered by the value placed in the last position, 1..r.
std::vector<Permutation> psg_out_neighbors(const Permutation& a);

// Same, as lexicographic ranks, for streaming over orders beyond kMaxOrder.
void psg_out_neighbor_ranks(std::span<const int> a, std::vector<std::uint64_t>& out);

using PermutationCycle = std::vector<Permutation>;

// r cyclic shifts of one permutation; vertices[i+1] = vertices[i].forward_shift().
struct ShiftCycle {
  std::vector<Permutation> vertices;
};

struct Chord {
  int from_index = 0;
  int to_index = 0;
  std::pair<Permutation, Permutation> arc;
};

// Partition of V(PSG_r) into shift classes; each cycle starts at its
// lexicographically least member and cycles are listed in that order.
std::vector<ShiftCycle> shift_cycles(int r);

// Backward shift of v and forward shift of u; an arc of PSG_r whenever uv is.
std::pair<Permutation, Permutation> second_chord(const PatternShiftGraph& psg, const Permutation& u,
                                                 const Permutation& v);

// Exhaustive scan of the arcs u_i -> u_j with j != i+1 (mod r), loops included.
std::vector<Chord> chords_of(const PatternShiftGraph& psg, const ShiftCycle& cycle);

// Splits a shift cycle along a chord (or loop) into two vertex-disjoint cycles:
// u_j .. u_i closed by the chord, and u_{i+1} .. u_{j-1} closed by its second chord.
std::pair<PermutationCycle, PermutationCycle> split_cycle(const PatternShiftGraph& psg, const ShiftCycle& cycle,
                                                          const Chord& chord);

// One entry per d in [r] coprime to r: the shift cycle through x with
// x_s = d*s mod r (0-based s, residue 0 written as r), with chord u_{d'} -> u_1.
std::vector<std::pair<ShiftCycle, Chord>> chorded_shift_cycles(int r);

int totient(int r);

// Integer sequence x_1..x_{r-1+t} whose r-intervals have canonical patterns
// walk[0..t-1]. Output is a permutation of [r-1+t].
std::vector<int> realize_walk(int r, const std::vector<Permutation>& walk);

}  // namespace tightpath
