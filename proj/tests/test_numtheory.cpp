#include "doctest.h"
#include "oracles.hpp"
#include "psl2mu/numtheory.hpp"

using namespace psl2mu;

TEST_CASE("primality agrees with trial division below 20000") {
  for (std::uint64_t n = 0; n < 20000; ++n) CHECK(is_prime(n) == oracle::trial_is_prime(n));
}

TEST_CASE("primality of large values") {
  CHECK(is_prime(std::uint64_t{18446744073709551557ULL}));
  CHECK_FALSE(is_prime(std::uint64_t{18446744073709551555ULL}));
  CHECK(is_prime(BigInt("170141183460469231731687303715884105727")));  // 2^127 - 1
  CHECK_FALSE(is_prime(BigInt("170141183460469231731687303715884105729")));
}

TEST_CASE("factorization reassembles") {
  for (std::uint64_t n : {1ULL, 2ULL, 60ULL, 7920ULL, 175560ULL, 1000000007ULL * 998244353ULL, 4294967297ULL}) {
    std::uint64_t back = 1;
    for (auto [p, e] : factorize(n)) {
      CHECK(is_prime(p));
      for (unsigned i = 0; i < e; ++i) back *= p;
    }
    CHECK(back == n);
  }
  const BigInt big = ipow(BigInt(2), 64) + 1;  // 274177 * 67280421310721
  auto f = factorize(big);
  REQUIRE(f.size() == 2);
  CHECK(f.begin()->first == 274177);
}

TEST_CASE("prime powers and p-parts") {
  CHECK(prime_power(std::uint64_t{49}) == std::make_pair(std::uint64_t{7}, 2u));
  CHECK_FALSE(prime_power(std::uint64_t{6}).has_value());
  CHECK_FALSE(prime_power(std::uint64_t{1}).has_value());
  CHECK(p_part(BigInt(24), 2) == 8);
  CHECK(p_part(BigInt(63), 3) == 9);
  CHECK(p_part(BigInt(35), 2) == 1);
  CHECK(p_part(std::uint64_t{48}, 2) == 16);
}

TEST_CASE("euler phi and mobius against definitions") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    std::uint64_t coprime = 0;
    for (std::uint64_t k = 1; k <= n; ++k) coprime += oracle::trial_gcd(k, n) == 1;
    CHECK(euler_phi(n) == coprime);
    int sum = 0;
    for (std::uint64_t d : divisors(n)) sum += mobius(d);
    CHECK(sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("checked lcm overflows loudly") {
  CHECK(checked_lcm(4, 6) == 12);
  CHECK_THROWS_AS(checked_lcm(1ULL << 63, 3), std::overflow_error);
}

TEST_CASE("integer roots") {
  CHECK(iroot(BigInt(1000), 3) == 10);
  CHECK(iroot(BigInt(999), 3) == 9);
  CHECK(iroot(BigInt(2), 2) == 1);
}

TEST_CASE("rational rendering and parsing") {
  CHECK(to_string(Rational(2, 4)) == "1/2");
  CHECK(to_string(Rational(6, 3)) == "2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(parse_rational("2/5") == Rational(2, 5));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}
