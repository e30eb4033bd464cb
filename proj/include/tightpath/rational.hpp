#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tightpath {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// n(n-1)...(n-k+1); zero when k > n.
BigInt falling_factorial(std::int64_t n, std::int64_t k);
BigInt factorial(std::int64_t n);
BigInt binomial(std::int64_t n, std::int64_t k);

// Small-integer versions for index arithmetic; they throw on overflow.
std::uint64_t falling_factorial_u64(std::uint64_t n, std::uint64_t k);
std::uint64_t factorial_u64(std::uint64_t n);
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

std::string to_string(const Rational& q);

// Smallest integer strictly greater than q.
BigInt floor_plus_one(const Rational& q);

}  // namespace tightpath
