#include "doctest.h"
#include "oracles.hpp"
#include "psl2mu/errors.hpp"
#include "psl2mu/lie_orders.hpp"
#include "psl2mu/psl2.hpp"

using namespace psl2mu;

namespace {

// Integer coefficients of Phi_m, lowest degree first, by dividing x^m - 1 by
// Phi_d for every proper divisor d.
std::vector<BigInt> cyclotomic_poly(std::uint64_t m) {
  static std::map<std::uint64_t, std::vector<BigInt>> memo;
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  std::vector<BigInt> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (std::uint64_t d = 1; d < m; ++d) {
    if (m % d) continue;
    const auto den = cyclotomic_poly(d);
    std::vector<BigInt> quot(num.size() - den.size() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
      quot[i] = num[i + den.size() - 1];
      for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= quot[i] * den[j];
    }
    num = quot;
  }
  memo[m] = num;
  return num;
}

BigInt eval(const std::vector<BigInt>& poly, std::uint64_t x) {
  BigInt acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
  return acc;
}

// Least k >= 1 with x^k = 1 mod r, capped at 64.
std::uint64_t multiplicative_order(std::uint64_t x, std::uint64_t r) {
  std::uint64_t acc = x % r;
  for (std::uint64_t k = 1; k <= 64; ++k, acc = static_cast<std::uint64_t>((unsigned __int128)acc * x % r)) {
    if (acc == 1) return k;
  }
  return 0;
}

BigInt pw(std::uint64_t b, unsigned e) { return ipow(BigInt(b), e); }

const std::vector<std::uint64_t> kQ0{2, 3, 4, 5, 7, 8, 9};

}  // namespace

TEST_CASE("cyclotomic values") {
  CHECK(cyclotomic_value(1, 5) == 4);
  CHECK(cyclotomic_value(6, 2) == 3);
  CHECK(cyclotomic_value(12, 2) == 13);
  CHECK(cyclotomic_value(12, 9) == 6481);
  CHECK(cyclotomic_value(4, 8) == 65);
  CHECK_THROWS_AS(cyclotomic_value(0, 2), DomainError);
  CHECK_THROWS_AS(cyclotomic_value(3, 1), DomainError);
  for (std::uint64_t m = 1; m <= 30; ++m) {
    for (std::uint64_t x = 2; x <= 9; ++x) CHECK(cyclotomic_value(m, x) == eval(cyclotomic_poly(m), x));
  }
}

TEST_CASE("cyclotomic completeness") {
  for (std::uint64_t m = 1; m <= 30; ++m) {
    for (std::uint64_t x = 2; x <= 9; ++x) {
      BigInt product = 1;
      for (auto k : divisors(m)) product *= cyclotomic_value(k, x);
      CHECK(product == pw(x, static_cast<unsigned>(m)) - 1);
    }
  }
}

TEST_CASE("family construction") {
  CHECK_THROWS_AS(LieFamily(LieType::linear, 1), ConstraintViolation);
  CHECK_THROWS_AS(LieFamily(LieType::unitary, 2), ConstraintViolation);
  CHECK_THROWS_AS(LieFamily(LieType::orthogonal_plus, 2), ConstraintViolation);
  CHECK_NOTHROW(LieFamily(LieType::orthogonal_minus, 2));
  CHECK(LieFamily(LieType::orthogonal_odd, 2).simplicity_caveat());
  CHECK(!LieFamily(LieType::orthogonal_odd, 3).simplicity_caveat());
  CHECK(LieFamily(LieType::symplectic, 2).name() == "PSp(4)");
  CHECK(LieFamily(LieType::orthogonal_odd, 3).name() == "POmega(7)");
  CHECK(LieFamily(LieType::orthogonal_minus, 4).name() == "POmega-(8)");
  CHECK(LieFamily(LieType::e7, 9).n() == 0);
  for (auto t : all_lie_types()) CHECK(parse_lie_type(tag(t)) == t);
  CHECK_THROWS_AS(parse_lie_type("H4"), std::invalid_argument);
}

TEST_CASE("table entries") {
  CHECK(exponent_e(LieFamily(LieType::linear, 3), 1) == 2);
  for (unsigned n = 3; n <= 8; ++n) CHECK(exponent_e(LieFamily(LieType::unitary, n), 2) == n - 1);
  CHECK(exponent_e(LieFamily(LieType::e8), 30) == 1);
  CHECK(exponent_e(LieFamily(LieType::e8), 11) == 0);
  CHECK(exponent_h(LieFamily(LieType::linear, 4)) == 6);
  CHECK(exponent_h(LieFamily(LieType::suzuki)) == 2);
  CHECK(denominator_d(LieFamily(LieType::e7), 3) == 2);
  CHECK(denominator_d(LieFamily(LieType::e7), 4) == 1);
  CHECK(denominator_d(LieFamily(LieType::orthogonal_minus, 4), 3) == 2);
  // Branch coverage: PSU x = 6 uses [2n/x], PSU x = 4 uses [n/x].
  CHECK(exponent_e(LieFamily(LieType::unitary, 6), 6) == 2);
  CHECK(exponent_e(LieFamily(LieType::unitary, 6), 4) == 1);
  CHECK(exponent_e(LieFamily(LieType::unitary, 6), 3) == 1);
  // POmega+(12): 4 divides 12 but not 6.
  CHECK(exponent_e(LieFamily(LieType::orthogonal_plus, 6), 4) == 2);
  CHECK(exponent_e(LieFamily(LieType::orthogonal_plus, 3), 6) == 0);
  // POmega-(8): x = 4 divides n, x = 8 does not.
  CHECK(exponent_e(LieFamily(LieType::orthogonal_minus, 4), 4) == 1);
  CHECK(exponent_e(LieFamily(LieType::orthogonal_minus, 4), 8) == 1);
}

TEST_CASE("hand-expanded orders") {
  CHECK(lie_order(LieFamily(LieType::linear, 3), 2) == 168);
  CHECK(lie_order(LieFamily(LieType::suzuki), 8) == 29120);
  CHECK(lie_order(LieFamily(LieType::unitary, 3), 3) == 6048);
  CHECK(lie_order(LieFamily(LieType::symplectic, 2), 2) == 720);
  CHECK(lie_order(LieFamily(LieType::orthogonal_minus, 4), 2) == 197406720);
  CHECK(lie_order(LieFamily(LieType::g2), 3) == 4245696);
  CHECK(lie_order(LieFamily(LieType::triality), 2) == 211341312);
  CHECK(lie_order(LieFamily(LieType::ree_f4), 2) == 35942400);
  CHECK(lie_order(LieFamily(LieType::ree_g2), 27) == 10073444472ULL);
  CHECK(lie_order(LieFamily(LieType::f4), 2) == BigInt("3311126603366400"));
  CHECK(lie_order(LieFamily(LieType::e6), 2) == BigInt("214841575522005575270400"));
  CHECK(lie_order(LieFamily(LieType::orthogonal_plus, 4), 2) == 174182400);
  CHECK(lie_order(LieFamily(LieType::orthogonal_odd, 3), 3) == 4585351680ULL);
  CHECK(lie_order(LieFamily(LieType::unitary, 4), 2) == 25920);
  for (std::uint64_t q = 4; q <= 64; ++q) {
    if (prime_power(q)) CHECK(lie_order(LieFamily(LieType::linear, 2), q) == psl2_order(q));
  }
}

TEST_CASE("field-size constraints") {
  CHECK_THROWS_AS(lie_order(LieFamily(LieType::suzuki), 4), ConstraintViolation);
  CHECK_THROWS_AS(lie_order(LieFamily(LieType::ree_g2), 9), ConstraintViolation);
  CHECK_THROWS_AS(lie_order(LieFamily(LieType::ree_f4), 3), ConstraintViolation);
  CHECK_THROWS_AS(lie_order(LieFamily(LieType::linear, 3), 6), ConstraintViolation);
  CHECK(lie_order(LieFamily(LieType::suzuki), 2) == 20);
  CHECK(!is_simple_instance(LieFamily(LieType::suzuki), 2));
  CHECK(!is_simple_instance(LieFamily(LieType::linear, 2), 3));
  CHECK(is_simple_instance(LieFamily(LieType::linear, 2), 4));
}

TEST_CASE("factorization reassembles to the product formula") {
  for (auto t : all_lie_types()) {
    if (!is_classical(t)) continue;
    for (unsigned n = 2; n <= 6; ++n) {
      if ((t == LieType::unitary || t == LieType::orthogonal_plus) && n < 3) continue;
      const LieFamily family(t, n);
      for (auto q0 : kQ0) {
        const auto report = verify_order_closed_form(family, q0);
        CHECK_MESSAGE(report.verdict == Verdict::pass, family.name() << " q0=" << q0);
      }
    }
  }
  for (std::uint64_t q0 : {2, 8, 32}) CHECK(verify_order_closed_form(LieFamily(LieType::suzuki), q0).ok());
  for (std::uint64_t q0 : {3, 27}) CHECK(verify_order_closed_form(LieFamily(LieType::ree_g2), q0).ok());
  for (std::uint64_t q0 : {2, 8}) CHECK(verify_order_closed_form(LieFamily(LieType::ree_f4), q0).ok());
  for (auto t : {LieType::triality, LieType::g2, LieType::f4, LieType::e6, LieType::twisted_e6, LieType::e7,
                 LieType::e8}) {
    for (auto q0 : kQ0) CHECK(verify_order_closed_form(LieFamily(t), q0).ok());
  }
  const auto report = verify_order_closed_form(LieFamily(LieType::orthogonal_minus, 4), 2);
  CHECK(report.lhs == "197406720");
  CHECK(report.rhs == "197406720");
}

TEST_CASE("primitive primes") {
  CHECK(*primitive_prime(2, 4) == 5);
  CHECK(!primitive_prime(2, 6));
  CHECK(*primitive_prime(3, 5) == 11);
  CHECK(!primitive_prime(2, 1));
  CHECK(!primitive_prime(7, 2));
  CHECK(!primitive_prime(3, 2));
  CHECK(*primitive_prime(5, 2) == 3);
  CHECK(*primitive_prime(3, 1) == 2);
  CHECK_THROWS_AS(primitive_prime(1, 3), DomainError);
  for (std::uint64_t q0 = 2; q0 <= 16; ++q0) {
    for (std::uint64_t m = 1; m <= 24; ++m) {
      const auto r = primitive_prime(q0, m);
      if (!r) continue;
      CHECK(cyclotomic_value(m, q0) % *r == 0);
      if (*r > 1000000000) continue;
      const auto rr = static_cast<std::uint64_t>(*r);
      CHECK(oracle::trial_is_prime(rr));
      CHECK(multiplicative_order(q0, rr) == m);
      // Least such prime, checked by scanning below it.
      if (rr > 200000) continue;
      for (std::uint64_t s = 2; s < rr; ++s) {
        if (q0 % s == 0 || !oracle::trial_is_prime(s)) continue;
        CHECK(multiplicative_order(q0, s) != m);
      }
    }
  }
}

TEST_CASE("prime power from a cyclotomic factor") {
  CHECK(defining_prime_power(LieFamily(LieType::linear, 4), 2, 3, 7) == 7);
  CHECK(defining_prime_power(LieFamily(LieType::linear, 6), 2, 3, 7) == 49);
  CHECK(defining_prime_power(LieFamily(LieType::suzuki), 8, 4, 5) == 5);
  CHECK(defining_prime_power(LieFamily(LieType::g2), 2, 6, 3) == 3);
  CHECK_THROWS_AS(defining_prime_power(LieFamily(LieType::g2), 2, 6, 5), NotADivisor);
  CHECK_THROWS_AS(defining_prime_power(LieFamily(LieType::g2), 2, 5, 31), ConstraintViolation);
}

TEST_CASE("cyclotomic growth bound") {
  CHECK(cyclotomic_growth_bound(2, 1).verdict == Verdict::pass);
  const auto r = cyclotomic_growth_bound(2, 6);
  CHECK(r.lhs == "3");
  CHECK(r.rhs == "16");
  CHECK(cyclotomic_growth_bound(9, 12).rhs == "26244");
  for (std::uint64_t q0 = 2; q0 <= 16; ++q0) {
    for (std::uint64_t m = 1; m <= 30; ++m) CHECK(cyclotomic_growth_bound(q0, m).ok());
  }
}
