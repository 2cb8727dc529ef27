#pragma once

// Exact integer and rational helpers shared by every module.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace psl2mu {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Deterministic primality test for 64-bit values.
bool is_prime(std::uint64_t n);

/// Primality for arbitrary precision values. Deterministic below 2^64,
/// Miller-Rabin with 32 rounds above.
bool is_prime(const BigInt& n);

/// Prime factorization in ascending prime order. n must be positive.
std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);
std::map<BigInt, unsigned> factorize(const BigInt& n);

/// Returns (p, k) with n = p^k, k >= 1, when n is a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);
std::optional<std::pair<BigInt, unsigned>> prime_power(const BigInt& n);

/// Largest power of the prime p dividing n (n >= 1).
BigInt p_part(const BigInt& n, std::uint64_t p);
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

/// n with every factor of p removed.
std::uint64_t remove_factor(std::uint64_t n, std::uint64_t p);

std::uint64_t euler_phi(std::uint64_t n);
int mobius(std::uint64_t n);

/// All positive divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Overflow-checked lcm; throws std::overflow_error past 2^64.
std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b);

BigInt ipow(const BigInt& base, unsigned exponent);
BigInt factorial(unsigned n);
BigInt gcd(const BigInt& a, const BigInt& b);

/// Integer k-th root, rounded down. n >= 0, k >= 1.
BigInt iroot(const BigInt& n, unsigned k);

/// "num/den" for proper fractions, bare digits for integers.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

/// Parses "a/b" or "a"; throws std::invalid_argument on malformed text or a
/// zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace psl2mu
