#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tightpath/error.hpp"
#include "tightpath/permutation.hpp"
#include "tightpath/rdigraph.hpp"
#include "tightpath/tournament.hpp"

namespace tightpath::detail {

inline constexpr std::uint64_t kSuccessorTableLimit = std::uint64_t{1} << 24;

inline std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

// succ[code of an (r-1)-tuple] = bitmask of w with (tuple, w) an edge.
class SuccessorTable {
 public:
  SuccessorTable(int n, int r) : n_(n), q_(r - 1) {
    if (n > 64) fail(ErrorKind::Unsupported, "path search supports at most 64 vertices");
    if (r < 1) fail(ErrorKind::InvalidInput, "r must be positive");
    std::uint64_t size = 1;
    for (int i = 0; i < q_; ++i) {
      size *= static_cast<std::uint64_t>(std::max(n, 1));
      if (size > kSuccessorTableLimit) {
        fail(ErrorKind::Resource, "successor table for n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                                      " exceeds the memory limit");
      }
    }
    modulus_ = size;
    succ_.assign(size, 0);
  }

  void add(std::span<const int> edge) {
    succ_[code(edge.first(static_cast<std::size_t>(q_)))] |= std::uint64_t{1} << edge[static_cast<std::size_t>(q_)];
  }

  std::uint64_t code(std::span<const int> tuple) const {
    std::uint64_t c = 0;
    for (int v : tuple) c = c * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(v);
    return c;
  }
  std::uint64_t shift(std::uint64_t c, int w) const {
    if (q_ == 0) return 0;
    return (c * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(w)) % modulus_;
  }
  std::uint64_t next(std::uint64_t c) const { return succ_[c]; }
  std::uint64_t modulus() const { return modulus_; }
  int n() const { return n_; }
  int q() const { return q_; }

 private:
  int n_;
  int q_;
  std::uint64_t modulus_ = 1;
  std::vector<std::uint64_t> succ_;
};

inline SuccessorTable table_of(const RDigraph& g) {
  SuccessorTable t(g.n(), g.r());
  for (const Tuple& e : g.edges()) t.add(e);
  return t;
}

inline SuccessorTable table_of(const Tournament& g) {
  SuccessorTable t(g.n(), g.r());
  const int r = g.r();
  std::vector<Permutation> orderings;
  for (int p = 0; p < g.pattern_count(); ++p) orderings.push_back(Permutation::unrank(r, static_cast<std::uint64_t>(p)));
  std::vector<int> e(static_cast<std::size_t>(r));
  for (std::uint64_t s = 0; s < g.subset_count(); ++s) {
    const auto set = g.subset(s);
    for (int p = 0; p < g.pattern_count(); ++p) {
      if (!g.test(s, p)) continue;
      for (int i = 0; i < r; ++i) e[static_cast<std::size_t>(i)] = set[static_cast<std::size_t>(orderings[p][i] - 1)];
      t.add(e);
    }
  }
  return t;
}

inline std::uint64_t mask_of(std::span<const int> seq) {
  std::uint64_t m = 0;
  for (int v : seq) m |= std::uint64_t{1} << v;
  return m;
}

}  // namespace tightpath::detail
