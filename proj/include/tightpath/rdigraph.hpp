#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tightpath/digraph.hpp"
#include "tightpath/rational.hpp"

namespace tightpath {

using Tuple = std::vector<int>;

// Membership oracle for ordered r-tuples over [n]. Dense bitset when n^r is
// small, hash set of tuple codes otherwise.
class EdgeIndex {
 public:
  EdgeIndex() = default;
  EdgeIndex(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }

  void insert(std::span<const int> tuple);
  bool contains(std::span<const int> tuple) const {
    const std::uint64_t c = code(tuple);
    if (dense_) return (bits_[c >> 6] >> (c & 63)) & 1u;
    return sparse_.count(c) != 0;
  }

  std::uint64_t code(std::span<const int> tuple) const {
    std::uint64_t c = 0;
    for (int v : tuple) c = c * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(v);
    return c;
  }

 private:
  int n_ = 0;
  int r_ = 0;
  bool dense_ = true;
  std::vector<std::uint64_t> bits_;
  std::unordered_set<std::uint64_t> sparse_;
};

// An r-uniform fully directed hypergraph on vertices 0..n-1. Edges are kept as
// a sorted, duplicate-free list of tuples; immutable after construction.
class RDigraph {
 public:
  RDigraph() = default;
  // Throws InvalidInput on malformed or duplicate edges.
  RDigraph(int n, int r, std::vector<Tuple> edges);

  static RDigraph complete(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  const std::vector<Tuple>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  // False for tuples of the wrong length or with out-of-range vertices.
  bool has_edge(std::span<const int> tuple) const;
  const EdgeIndex& index() const { return *index_; }

 private:
  int n_ = 0;
  int r_ = 1;
  std::vector<Tuple> edges_;
  std::shared_ptr<const EdgeIndex> index_ = std::make_shared<EdgeIndex>();
};

// Distinct vertices and every r-interval an edge. Sequences shorter than r
// only need distinct in-range vertices. `why` receives a diagnostic on failure.
bool is_tight_path(const RDigraph& g, std::span<const int> seq, std::string* why = nullptr);

// Every r-interval an edge; vertices may repeat.
bool is_walk(const RDigraph& g, std::span<const int> seq);

// All cyclic r-intervals are edges and vertices are distinct (a copy of the
// tight cycle C^(r)_s with s = seq.size() >= r).
bool is_tight_cycle(const RDigraph& g, std::span<const int> seq);

// Vertices are the (r-1)-tuples occurring as prefix or suffix of an edge, in
// lexicographic order; each edge contributes the arc prefix -> suffix.
struct ShiftDigraph {
  Digraph graph;
  std::vector<Tuple> labels;
  std::unordered_map<std::uint64_t, int> lookup;  // EdgeIndex-style code of an (r-1)-tuple

  int find(std::span<const int> tuple, int n) const;
};

ShiftDigraph shift_digraph(const RDigraph& g);

bool has_closed_walk(const RDigraph& g);

// Walk sizes in G: a shift-digraph walk of w vertices is a G-walk of w+r-2
// vertices; sequences of r-1 vertices are walks vacuously, so a non-empty G
// always reports at least r-1. Witnesses are vertex sequences of G (a closed
// walk, listed once around, when infinite).
WalkReport longest_walk(const RDigraph& g);

Rational edge_density(const RDigraph& g);

// Induced sub-r-digraph on `vertices`, relabelled 0..k-1 in the given order.
RDigraph induced_subgraph(const RDigraph& g, std::span<const int> vertices);

// Every edge tuple reversed; tight paths of g reversed are tight paths of this.
RDigraph reversed(const RDigraph& g);

}  // namespace tightpath
