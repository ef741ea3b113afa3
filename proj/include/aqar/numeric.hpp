#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace aqar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, ascending primes with multiplicity
/// collapsed: {(p, e), ...}.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Exponent of the prime u in n.
unsigned valuation(std::uint64_t n, std::uint64_t u);

/// base^exp, throwing LimitExceeded on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

/// Least e >= 1 with a^e = 1 (mod m).
std::uint64_t multiplicative_order(std::int64_t a, std::int64_t m);

/// If n = u^k for a prime u and k >= 1, returns (u, k).
bool prime_power(std::uint64_t n, std::uint64_t &u, unsigned &k);

}  // namespace aqar
