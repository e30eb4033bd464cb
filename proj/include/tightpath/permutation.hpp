#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tightpath {

// A permutation of [r] in one-line notation. Values are 1-based; positions in
// the public API are 1-based as well, the storage is an ordinary 0-based vector.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidInput unless `values` is a bijection on {1..size}.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int r);
  static Permutation reversed_identity(int r);
  // Inverse of rank(): lexicographic order over permutations of [r].
  static Permutation unrank(int r, std::uint64_t rank);
  // Accepts "3142" (r <= 9) or "3,1,4,2".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }
  int operator[](std::size_t i) const { return values_[i]; }
  // 1-based positional access.
  int at(int position) const { return values_.at(static_cast<std::size_t>(position - 1)); }
  std::span<const int> values() const { return values_; }
  // 1-based position holding `value`.
  int position_of(int value) const;

  std::uint64_t rank() const;

  // (a2, ..., ar, a1)
  Permutation forward_shift() const;
  // (ar, a1, ..., a(r-1))
  Permutation backward_shift() const;

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

// The unique permutation order-isomorphic to `a`. Throws InvalidInput on
// duplicate entries or an empty list.
Permutation canonical_pattern(std::span<const int> a);

// True iff a_i < a_j <=> b_i < b_j for all i < j.
bool pattern_match(std::span<const int> a, std::span<const int> b);

// Lexicographic rank of the pattern of `a` without materialising it.
std::uint64_t pattern_rank(std::span<const int> a);

std::uint64_t permutation_count(int r);

}  // namespace tightpath
