#include "tightpath/rational.hpp"

#include <limits>

#include "tightpath/error.hpp"

namespace tightpath {

BigInt falling_factorial(std::int64_t n, std::int64_t k) {
  if (k < 0) fail(ErrorKind::InvalidInput, "falling factorial with negative k");
  BigInt out = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    if (n - i <= 0) return 0;
    out *= n - i;
  }
  return out;
}

BigInt factorial(std::int64_t n) { return falling_factorial(n, n); }

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  return falling_factorial(n, k) / factorial(k);
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    fail(ErrorKind::Resource, "integer overflow in combinatorial count");
  }
  return a * b;
}

}  // namespace

std::uint64_t falling_factorial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < k; ++i) out = checked_mul(out, n - i);
  return out;
}

std::uint64_t factorial_u64(std::uint64_t n) { return falling_factorial_u64(n, n); }

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // out * (n-k+i) is divisible by i at every step.
    out = checked_mul(out, n - k + i) / i;
  }
  return out;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

BigInt floor_plus_one(const Rational& q) {
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  BigInt fl = num / den;
  if (num < 0 && fl * den != num) fl -= 1;
  return fl + 1;
}

}  // namespace tightpath
