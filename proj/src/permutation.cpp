#include "tightpath/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "tightpath/error.hpp"
#include "tightpath/rational.hpp"

namespace tightpath {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int r = size();
  std::vector<bool> seen(static_cast<std::size_t>(r) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > r || seen[static_cast<std::size_t>(v)]) {
      fail(ErrorKind::InvalidInput, "not a permutation of [" + std::to_string(r) + "]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int r) {
  std::vector<int> v(static_cast<std::size_t>(r));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::reversed_identity(int r) {
  std::vector<int> v(static_cast<std::size_t>(r));
  std::iota(v.rbegin(), v.rend(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::unrank(int r, std::uint64_t rank) {
  if (r < 0 || r > 20) fail(ErrorKind::Unsupported, "permutation rank needs 0 <= r <= 20");
  if (rank >= factorial_u64(static_cast<std::uint64_t>(r))) {
    fail(ErrorKind::InvalidInput, "permutation rank out of range");
  }
  std::vector<int> pool(static_cast<std::size_t>(r));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(r));
  for (int i = r; i >= 1; --i) {
    const std::uint64_t block = factorial_u64(static_cast<std::uint64_t>(i - 1));
    const std::size_t idx = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  Permutation p;
  p.values_ = std::move(out);
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') fail(ErrorKind::InvalidInput, "bad permutation digit in '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view part = text.substr(start, end - start);
      int v = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (ec != std::errc() || ptr != part.data() + part.size()) {
        fail(ErrorKind::InvalidInput, "bad permutation entry in '" + std::string(text) + "'");
      }
      values.push_back(v);
      start = end + 1;
    }
  }
  return Permutation(std::move(values));
}

int Permutation::position_of(int value) const {
  auto it = std::find(values_.begin(), values_.end(), value);
  if (it == values_.end()) fail(ErrorKind::InvalidInput, "value not in permutation");
  return static_cast<int>(it - values_.begin()) + 1;
}

std::uint64_t Permutation::rank() const { return pattern_rank(values_); }

Permutation Permutation::forward_shift() const {
  Permutation p = *this;
  if (!p.values_.empty()) std::rotate(p.values_.begin(), p.values_.begin() + 1, p.values_.end());
  return p;
}

Permutation Permutation::backward_shift() const {
  Permutation p = *this;
  if (!p.values_.empty()) std::rotate(p.values_.rbegin(), p.values_.rbegin() + 1, p.values_.rend());
  return p;
}

std::string Permutation::to_string() const {
  std::string out;
  const bool digits = size() <= 9;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

Permutation canonical_pattern(std::span<const int> a) {
  if (a.empty()) fail(ErrorKind::InvalidInput, "canonical pattern of an empty list");
  std::vector<std::size_t> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a[x] < a[y]; });
  std::vector<int> values(a.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && a[order[k]] == a[order[k - 1]]) {
      fail(ErrorKind::InvalidInput, "canonical pattern needs distinct entries");
    }
    values[order[k]] = static_cast<int>(k) + 1;
  }
  return Permutation(std::move(values));
}

bool pattern_match(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) fail(ErrorKind::InvalidInput, "pattern_match needs equal lengths");
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] == a[j] || b[i] == b[j]) fail(ErrorKind::InvalidInput, "pattern_match needs distinct entries");
      if ((a[i] < a[j]) != (b[i] < b[j])) return false;
    }
  }
  return true;
}

std::uint64_t pattern_rank(std::span<const int> a) {
  // Lehmer code: for each position count later entries that are smaller.
  const std::size_t r = a.size();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < r; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < r; ++j) {
      if (a[j] < a[i]) ++smaller;
    }
    rank = rank * (r - i) + smaller;
  }
  return rank;
}

std::uint64_t permutation_count(int r) { return factorial_u64(static_cast<std::uint64_t>(r)); }

}  // namespace tightpath
