#pragma once

// Cyclotomic factorization of the orders of the simple groups of Lie type:
// |L(q0)| = q0^h * prod_m Phi_m(q0)^e(m) / d.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psl2mu/audit_report.hpp"
#include "psl2mu/numtheory.hpp"

namespace psl2mu {

enum class LieType {
  linear,          // PSL(n)
  unitary,         // PSU(n)
  symplectic,      // PSp(2n)
  orthogonal_odd,  // POmega(2n+1)
  orthogonal_plus, // POmega+(2n)
  orthogonal_minus,// POmega-(2n)
  suzuki,          // 2B2
  triality,        // 3D4
  g2,
  ree_g2,          // 2G2
  f4,
  ree_f4,          // 2F4
  e6,
  twisted_e6,      // 2E6
  e7,
  e8,
};

bool is_classical(LieType type);

/// ASCII tag: PSL, PSU, PSp, POmega, POmega+, POmega-, 2B2, 3D4, G2, 2G2, F4,
/// 2F4, E6, 2E6, E7, E8.
std::string tag(LieType type);

/// Inverse of tag(). Throws std::invalid_argument.
LieType parse_lie_type(const std::string& text);

std::vector<LieType> all_lie_types();

/// A family with its rank parameter. For PSp, POmega and POmega+- the rank n
/// is half the dimension; exceptional families carry n = 0.
class LieFamily {
 public:
  /// Rank bounds: PSL n >= 2, PSU n >= 3, PSp n >= 2, POmega n >= 2,
  /// POmega+ n >= 3, POmega- n >= 2. Exceptional families ignore n.
  /// Throws ConstraintViolation.
  LieFamily(LieType type, unsigned n = 0);

  LieType type() const noexcept { return type_; }
  unsigned n() const noexcept { return n_; }

  /// POmega(5) is accepted but coincides with PSp(4); only n >= 3 is a
  /// separate simple family.
  bool simplicity_caveat() const noexcept;

  /// Conventional name, e.g. "PSp(4)", "POmega-(8)", "2F4".
  std::string name() const;

  friend bool operator==(const LieFamily&, const LieFamily&) = default;

 private:
  LieType type_;
  unsigned n_;
};

/// Phi_m(x) as the exact quotient of prod_{k | m} (x^{m/k} - 1)^mobius(k).
/// Throws DomainError for m = 0 or x < 2.
BigInt cyclotomic_value(std::uint64_t m, std::uint64_t x);

/// Multiplicity of Phi_m in the order; 0 for m absent from the tables.
unsigned exponent_e(const LieFamily& family, std::uint64_t m);

/// Power of q0 in the order.
unsigned exponent_h(const LieFamily& family);

/// Denominator d. Throws ConstraintViolation if q0 is not a valid field size
/// for the family.
BigInt denominator_d(const LieFamily& family, std::uint64_t q0);

/// Throws ConstraintViolation unless q0 is a prime power (and of the form
/// 2^{2s+1} for 2B2 and 2F4, 3^{2t+1} for 2G2).
void check_field_size(const LieFamily& family, std::uint64_t q0);

/// False for the instances that are not simple: PSL(2,2), PSL(2,3), PSU(3,2),
/// PSp(4,2), POmega(5,2), G2(2), 2B2(2), 2G2(3), 2F4(2).
bool is_simple_instance(const LieFamily& family, std::uint64_t q0);

struct CyclotomicFactorization {
  LieFamily family;
  std::uint64_t q0 = 0;
  BigInt d;
  unsigned h = 0;
  std::map<std::uint64_t, unsigned> exponents;  // only e(m) > 0

  /// q0^h * prod Phi_m(q0)^e(m) / d; throws std::logic_error if inexact.
  BigInt order() const;
  Json to_json() const;
};

/// Throws ConstraintViolation.
CyclotomicFactorization factorize_order(const LieFamily& family, std::uint64_t q0);
BigInt lie_order(const LieFamily& family, std::uint64_t q0);

/// Order from the textbook product formula, written out per family without
/// the cyclotomic tables. Throws ConstraintViolation.
BigInt closed_form_order(const LieFamily& family, std::uint64_t q0);

/// lie_order against closed_form_order.
AuditReport verify_order_closed_form(const LieFamily& family, std::uint64_t q0);

/// Least prime dividing q0^m - 1 but no q0^k - 1 with k < m. Empty exactly in
/// the exceptional cases: (2, 1), (q0, 2) with q0 + 1 a power of 2, (2, 6).
/// Throws DomainError for q0 < 2 or m = 0.
std::optional<BigInt> primitive_prime(std::uint64_t q0, std::uint64_t m);

/// (Phi_m(q0))_p ^ e(m): the prime power a Sylow p-subgroup of L(q0) has
/// when p is a primitive prime for m.
/// Throws ConstraintViolation if e(m) = 0, NotADivisor if p does not divide
/// Phi_m(q0).
BigInt defining_prime_power(const LieFamily& family, std::uint64_t q0, std::uint64_t m,
                            std::uint64_t p);

/// Phi_m(q0) < 4 q0^phi(m).
AuditReport cyclotomic_growth_bound(std::uint64_t q0, std::uint64_t m);

}  // namespace psl2mu
