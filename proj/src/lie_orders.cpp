#include "psl2mu/lie_orders.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "psl2mu/errors.hpp"

namespace psl2mu {

namespace {

struct ExceptionalRow {
  LieType type;
  unsigned h;
  std::vector<std::pair<std::uint64_t, unsigned>> exponents;
};

// Cyclotomic exponents of the exceptional families, indexed by m.
const std::vector<ExceptionalRow>& exceptional_rows() {
  static const std::vector<ExceptionalRow> rows{
      {LieType::suzuki, 2, {{1, 1}, {4, 1}}},
      {LieType::triality, 12, {{1, 2}, {2, 2}, {3, 2}, {6, 2}, {12, 1}}},
      {LieType::g2, 6, {{1, 2}, {2, 2}, {3, 1}, {6, 1}}},
      {LieType::ree_g2, 3, {{1, 1}, {2, 1}, {6, 1}}},
      {LieType::f4, 24, {{1, 4}, {2, 4}, {3, 2}, {4, 2}, {6, 2}, {8, 1}, {12, 1}}},
      {LieType::ree_f4, 12, {{1, 2}, {2, 2}, {4, 2}, {6, 1}, {12, 1}}},
      {LieType::e6, 36, {{1, 6}, {2, 4}, {3, 3}, {4, 2}, {5, 1}, {6, 2}, {8, 1}, {9, 1}, {12, 1}}},
      {LieType::twisted_e6,
       36,
       {{1, 4}, {2, 6}, {3, 2}, {4, 2}, {6, 3}, {8, 1}, {10, 1}, {12, 1}, {18, 1}}},
      {LieType::e7,
       63,
       {{1, 7}, {2, 7}, {3, 3}, {4, 2}, {5, 1}, {6, 3}, {7, 1}, {8, 1}, {9, 1}, {10, 1}, {12, 1},
        {14, 1}, {18, 1}}},
      {LieType::e8,
       120,
       {{1, 8}, {2, 8}, {3, 4}, {4, 4}, {5, 2}, {6, 4}, {7, 1}, {8, 2}, {9, 1}, {10, 2}, {12, 2},
        {14, 1}, {15, 1}, {18, 1}, {20, 1}, {24, 1}, {30, 1}}},
  };
  return rows;
}

const ExceptionalRow& exceptional_row(LieType type) {
  for (const auto& row : exceptional_rows()) {
    if (row.type == type) return row;
  }
  throw std::logic_error("no exceptional row for " + tag(type));
}

std::uint64_t lcm2(std::uint64_t x) { return x % 2 ? 2 * x : x; }

BigInt big_pow(std::uint64_t base, unsigned exponent) { return ipow(BigInt(base), exponent); }

// q^k - sign for sign = +1 or -1.
BigInt shifted_power(std::uint64_t q, unsigned k, int sign) { return big_pow(q, k) - sign; }

}  // namespace

bool is_classical(LieType type) {
  switch (type) {
    case LieType::linear:
    case LieType::unitary:
    case LieType::symplectic:
    case LieType::orthogonal_odd:
    case LieType::orthogonal_plus:
    case LieType::orthogonal_minus:
      return true;
    default:
      return false;
  }
}

std::string tag(LieType type) {
  switch (type) {
    case LieType::linear: return "PSL";
    case LieType::unitary: return "PSU";
    case LieType::symplectic: return "PSp";
    case LieType::orthogonal_odd: return "POmega";
    case LieType::orthogonal_plus: return "POmega+";
    case LieType::orthogonal_minus: return "POmega-";
    case LieType::suzuki: return "2B2";
    case LieType::triality: return "3D4";
    case LieType::g2: return "G2";
    case LieType::ree_g2: return "2G2";
    case LieType::f4: return "F4";
    case LieType::ree_f4: return "2F4";
    case LieType::e6: return "E6";
    case LieType::twisted_e6: return "2E6";
    case LieType::e7: return "E7";
    case LieType::e8: return "E8";
  }
  throw std::logic_error("unknown LieType");
}

LieType parse_lie_type(const std::string& text) {
  for (LieType t : all_lie_types()) {
    if (tag(t) == text) return t;
  }
  throw std::invalid_argument("unknown Lie family '" + text + "'");
}

std::vector<LieType> all_lie_types() {
  return {LieType::linear,     LieType::unitary,         LieType::symplectic, LieType::orthogonal_odd,
          LieType::orthogonal_plus, LieType::orthogonal_minus, LieType::suzuki, LieType::triality,
          LieType::g2,         LieType::ree_g2,          LieType::f4,         LieType::ree_f4,
          LieType::e6,         LieType::twisted_e6,      LieType::e7,         LieType::e8};
}

LieFamily::LieFamily(LieType type, unsigned n) : type_(type), n_(is_classical(type) ? n : 0) {
  unsigned least = 0;
  switch (type) {
    case LieType::linear: least = 2; break;
    case LieType::unitary: least = 3; break;
    case LieType::symplectic: least = 2; break;
    case LieType::orthogonal_odd: least = 2; break;
    case LieType::orthogonal_plus: least = 3; break;
    case LieType::orthogonal_minus: least = 2; break;
    default: break;
  }
  if (n_ < least) {
    throw ConstraintViolation(tag(type) + " needs rank at least " + std::to_string(least) +
                              ", got " + std::to_string(n));
  }
}

bool LieFamily::simplicity_caveat() const noexcept {
  return type_ == LieType::orthogonal_odd && n_ == 2;
}

std::string LieFamily::name() const {
  switch (type_) {
    case LieType::linear:
    case LieType::unitary:
      return tag(type_) + "(" + std::to_string(n_) + ")";
    case LieType::symplectic:
    case LieType::orthogonal_plus:
    case LieType::orthogonal_minus:
      return tag(type_) + "(" + std::to_string(2 * n_) + ")";
    case LieType::orthogonal_odd:
      return tag(type_) + "(" + std::to_string(2 * n_ + 1) + ")";
    default:
      return tag(type_);
  }
}

BigInt cyclotomic_value(std::uint64_t m, std::uint64_t x) {
  if (m == 0) throw DomainError("cyclotomic_value: m must be positive");
  if (x < 2) throw DomainError("cyclotomic_value: x must be at least 2");
  BigInt numerator = 1;
  BigInt denominator = 1;
  for (std::uint64_t k : divisors(m)) {
    const int mu = mobius(k);
    if (mu == 0) continue;
    const BigInt term = big_pow(x, static_cast<unsigned>(m / k)) - 1;
    (mu > 0 ? numerator : denominator) *= term;
  }
  if (numerator % denominator != 0) throw std::logic_error("cyclotomic_value: inexact quotient");
  return numerator / denominator;
}

unsigned exponent_e(const LieFamily& family, std::uint64_t x) {
  if (x == 0) return 0;
  const std::uint64_t n = family.n();
  switch (family.type()) {
    case LieType::linear:
      return static_cast<unsigned>(x == 1 ? n - 1 : n / x);
    case LieType::unitary:
      if (x == 2) return static_cast<unsigned>(n - 1);
      if (x % 4 != 2) return static_cast<unsigned>(n / lcm2(x));
      return static_cast<unsigned>(2 * n / x);
    case LieType::symplectic:
    case LieType::orthogonal_odd:
      return static_cast<unsigned>(2 * n / lcm2(x));
    case LieType::orthogonal_plus:
      if (n % x == 0 || (2 * n) % x != 0) return static_cast<unsigned>(2 * n / lcm2(x));
      return static_cast<unsigned>(2 * n / x - 1);
    case LieType::orthogonal_minus:
      if (n % x == 0) return static_cast<unsigned>(2 * n / lcm2(x) - 1);
      return static_cast<unsigned>(2 * n / lcm2(x));
    default:
      for (const auto& [m, e] : exceptional_row(family.type()).exponents) {
        if (m == x) return e;
      }
      return 0;
  }
}

unsigned exponent_h(const LieFamily& family) {
  const unsigned n = family.n();
  switch (family.type()) {
    case LieType::linear:
    case LieType::unitary:
      return n * (n - 1) / 2;
    case LieType::symplectic:
    case LieType::orthogonal_odd:
      return n * n;
    case LieType::orthogonal_plus:
    case LieType::orthogonal_minus:
      return n * (n - 1);
    default:
      return exceptional_row(family.type()).h;
  }
}

void check_field_size(const LieFamily& family, std::uint64_t q0) {
  const auto pp = prime_power(q0);
  if (!pp) throw ConstraintViolation("q0 = " + std::to_string(q0) + " is not a prime power");
  const auto [p, f] = *pp;
  const auto odd_power_of = [&](std::uint64_t base) { return p == base && f % 2 == 1; };
  if ((family.type() == LieType::suzuki || family.type() == LieType::ree_f4) && !odd_power_of(2)) {
    throw ConstraintViolation(family.name() + " needs q0 = 2^(2s+1), got " + std::to_string(q0));
  }
  if (family.type() == LieType::ree_g2 && !odd_power_of(3)) {
    throw ConstraintViolation(family.name() + " needs q0 = 3^(2t+1), got " + std::to_string(q0));
  }
}

BigInt denominator_d(const LieFamily& family, std::uint64_t q0) {
  check_field_size(family, q0);
  const std::uint64_t n = family.n();
  switch (family.type()) {
    case LieType::linear: return std::gcd(n, q0 - 1);
    case LieType::unitary: return std::gcd(n, q0 + 1);
    case LieType::symplectic:
    case LieType::orthogonal_odd:
    case LieType::e7:
      return std::gcd<std::uint64_t>(2, q0 - 1);
    case LieType::orthogonal_plus:
      return gcd(BigInt(4), big_pow(q0, static_cast<unsigned>(n)) - 1);
    case LieType::orthogonal_minus:
      return gcd(BigInt(4), big_pow(q0, static_cast<unsigned>(n)) + 1);
    case LieType::e6: return std::gcd<std::uint64_t>(3, q0 - 1);
    case LieType::twisted_e6: return std::gcd<std::uint64_t>(3, q0 + 1);
    default: return 1;
  }
}

bool is_simple_instance(const LieFamily& family, std::uint64_t q0) {
  const unsigned n = family.n();
  switch (family.type()) {
    case LieType::linear: return !(n == 2 && q0 <= 3);
    case LieType::unitary: return !(n == 3 && q0 == 2);
    case LieType::symplectic:
    case LieType::orthogonal_odd:
      return !(n == 2 && q0 == 2);
    case LieType::g2:
    case LieType::suzuki:
    case LieType::ree_f4:
      return q0 != 2;
    case LieType::ree_g2: return q0 != 3;
    default: return true;
  }
}

BigInt CyclotomicFactorization::order() const {
  BigInt product = big_pow(q0, h);
  for (const auto& [m, e] : exponents) product *= ipow(cyclotomic_value(m, q0), e);
  if (product % d != 0) throw std::logic_error("factorized order not divisible by d");
  return product / d;
}

Json CyclotomicFactorization::to_json() const {
  Json factors = Json::array();
  for (const auto& [m, e] : exponents) {
    factors.push_back({{"m", m}, {"phi_m", to_json_value(cyclotomic_value(m, q0))}, {"e", e}});
  }
  return {{"family", family.name()}, {"q0", q0},         {"d", to_json_value(d)},
          {"h", h},                  {"factors", factors}, {"order", to_json_value(order())}};
}

CyclotomicFactorization factorize_order(const LieFamily& family, std::uint64_t q0) {
  CyclotomicFactorization out{family, q0, denominator_d(family, q0), exponent_h(family), {}};
  if (is_classical(family.type())) {
    for (std::uint64_t m = 1; m <= 2 * static_cast<std::uint64_t>(family.n()) + 2; ++m) {
      if (const unsigned e = exponent_e(family, m)) out.exponents[m] = e;
    }
  } else {
    for (const auto& [m, e] : exceptional_row(family.type()).exponents) out.exponents[m] = e;
  }
  return out;
}

BigInt lie_order(const LieFamily& family, std::uint64_t q0) { return factorize_order(family, q0).order(); }

BigInt closed_form_order(const LieFamily& family, std::uint64_t q0) {
  check_field_size(family, q0);
  const unsigned n = family.n();
  const BigInt q = q0;
  BigInt order;
  switch (family.type()) {
    case LieType::linear:
      order = big_pow(q0, n * (n - 1) / 2);
      for (unsigned i = 2; i <= n; ++i) order *= shifted_power(q0, i, 1);
      return order / std::gcd<std::uint64_t>(n, q0 - 1);
    case LieType::unitary:
      order = big_pow(q0, n * (n - 1) / 2);
      for (unsigned i = 2; i <= n; ++i) order *= shifted_power(q0, i, i % 2 ? -1 : 1);
      return order / std::gcd<std::uint64_t>(n, q0 + 1);
    case LieType::symplectic:
    case LieType::orthogonal_odd:
      order = big_pow(q0, n * n);
      for (unsigned i = 1; i <= n; ++i) order *= shifted_power(q0, 2 * i, 1);
      return order / std::gcd<std::uint64_t>(2, q0 - 1);
    case LieType::orthogonal_plus:
    case LieType::orthogonal_minus: {
      const int sign = family.type() == LieType::orthogonal_plus ? 1 : -1;
      const BigInt top = shifted_power(q0, n, sign);
      order = big_pow(q0, n * (n - 1)) * top;
      for (unsigned i = 1; i < n; ++i) order *= shifted_power(q0, 2 * i, 1);
      return order / gcd(BigInt(4), top);
    }
    case LieType::suzuki:
      return q * q * (q * q + 1) * (q - 1);
    case LieType::triality:
      return big_pow(q0, 12) * (big_pow(q0, 8) + big_pow(q0, 4) + 1) * shifted_power(q0, 6, 1) *
             shifted_power(q0, 2, 1);
    case LieType::g2:
      return big_pow(q0, 6) * shifted_power(q0, 6, 1) * shifted_power(q0, 2, 1);
    case LieType::ree_g2:
      return big_pow(q0, 3) * shifted_power(q0, 3, -1) * (q - 1);
    case LieType::f4:
      order = big_pow(q0, 24);
      for (unsigned k : {2u, 6u, 8u, 12u}) order *= shifted_power(q0, k, 1);
      return order;
    case LieType::ree_f4:
      return big_pow(q0, 12) * shifted_power(q0, 6, -1) * shifted_power(q0, 4, 1) *
             shifted_power(q0, 3, -1) * (q - 1);
    case LieType::e6:
      order = big_pow(q0, 36);
      for (unsigned k : {2u, 5u, 6u, 8u, 9u, 12u}) order *= shifted_power(q0, k, 1);
      return order / std::gcd<std::uint64_t>(3, q0 - 1);
    case LieType::twisted_e6:
      order = big_pow(q0, 36);
      for (unsigned k : {2u, 6u, 8u, 12u}) order *= shifted_power(q0, k, 1);
      for (unsigned k : {5u, 9u}) order *= shifted_power(q0, k, -1);
      return order / std::gcd<std::uint64_t>(3, q0 + 1);
    case LieType::e7:
      order = big_pow(q0, 63);
      for (unsigned k : {2u, 6u, 8u, 10u, 12u, 14u, 18u}) order *= shifted_power(q0, k, 1);
      return order / std::gcd<std::uint64_t>(2, q0 - 1);
    case LieType::e8:
      order = big_pow(q0, 120);
      for (unsigned k : {2u, 8u, 12u, 14u, 18u, 20u, 24u, 30u}) order *= shifted_power(q0, k, 1);
      return order;
  }
  throw std::logic_error("unknown LieType");
}

AuditReport verify_order_closed_form(const LieFamily& family, std::uint64_t q0) {
  AuditReport report;
  report.check = "lie_order_closed_form";
  report.inputs = {{"family", family.name()}, {"q0", q0}};
  const BigInt factored = lie_order(family, q0);
  const BigInt direct = closed_form_order(family, q0);
  report.lhs = to_json_value(factored);
  report.rhs = to_json_value(direct);
  report.verdict = factored == direct ? Verdict::pass : Verdict::fail;
  report.claim = "cyclotomic factorization reassembles to the product formula";
  return report;
}

std::optional<BigInt> primitive_prime(std::uint64_t q0, std::uint64_t m) {
  if (q0 < 2) throw DomainError("primitive_prime: q0 must be at least 2");
  if (m == 0) throw DomainError("primitive_prime: m must be positive");
  if (m == 1 && q0 == 2) return std::nullopt;
  if (m == 2 && prime_power(q0 + 1) && prime_power(q0 + 1)->first == 2) return std::nullopt;
  if (m == 6 && q0 == 2) return std::nullopt;

  // The primitive primes are the prime factors of Phi_m(q0) not dividing m.
  const BigInt phi = cyclotomic_value(m, q0);
  for (const auto& [r, unused] : factorize(phi)) {
    (void)unused;
    if (m > 1 && BigInt(m) % r == 0) continue;
    for (std::uint64_t k = 1; k < m; ++k) {
      if (boost::multiprecision::powm(BigInt(q0), BigInt(k), r) == 1) {
        throw std::logic_error("primitive_prime: factor of Phi_m is not primitive");
      }
    }
    return r;
  }
  throw std::logic_error("primitive_prime: no primitive prime outside the exceptions (q0 = " +
                         std::to_string(q0) + ", m = " + std::to_string(m) + ")");
}

BigInt defining_prime_power(const LieFamily& family, std::uint64_t q0, std::uint64_t m,
                            std::uint64_t p) {
  const unsigned e = exponent_e(family, m);
  if (e == 0) {
    throw ConstraintViolation("Phi_" + std::to_string(m) + " does not occur in the order of " +
                              family.name());
  }
  const BigInt phi = cyclotomic_value(m, q0);
  if (phi % p != 0) {
    throw NotADivisor(std::to_string(p) + " does not divide Phi_" + std::to_string(m) + "(" +
                      std::to_string(q0) + ") = " + phi.str());
  }
  return ipow(p_part(phi, p), e);
}

AuditReport cyclotomic_growth_bound(std::uint64_t q0, std::uint64_t m) {
  AuditReport report;
  report.check = "cyclotomic_growth_bound";
  report.inputs = {{"q0", q0}, {"m", m}};
  const BigInt value = cyclotomic_value(m, q0);
  const BigInt bound = 4 * big_pow(q0, static_cast<unsigned>(euler_phi(m)));
  report.lhs = to_json_value(value);
  report.rhs = to_json_value(bound);
  report.verdict = value < bound ? Verdict::pass : Verdict::fail;
  report.claim = "Phi_m(q0) < 4 q0^phi(m)";
  return report;
}

}  // namespace psl2mu
