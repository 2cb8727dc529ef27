#pragma once

#include <cstdint>
#include <vector>

namespace psl2mu {

inline constexpr std::uint64_t kDefaultFieldBudget = 1u << 16;

/// GF(p^f) with log/exp tables.
///
/// An element is the residue c_0 + c_1 x + ... + c_{f-1} x^{f-1} modulo the
/// chosen modulus, encoded as the integer sum of c_i p^i. That encoding is
/// also the element order used to pick the modulus and the primitive element.
class FieldTable {
 public:
  using Element = std::uint32_t;

  std::uint64_t p() const noexcept { return p_; }
  unsigned f() const noexcept { return f_; }
  std::uint64_t q() const noexcept { return q_; }

  /// Coefficients of the monic modulus, constant term first (size f + 1).
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
  Element primitive_element() const noexcept { return primitive_; }

  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const;
  /// Throws DomainError for zero.
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t k) const;

  /// Discrete log to the primitive element; a must be nonzero.
  std::uint64_t log(Element a) const;

  friend FieldTable build_field(std::uint64_t p, unsigned f, std::uint64_t budget);

 private:
  std::uint64_t p_ = 0;
  unsigned f_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint64_t> modulus_;
  Element primitive_ = 0;
  std::vector<Element> exp_;  // exp_[k] = primitive^k, k < q - 1
  std::vector<std::uint32_t> log_;
};

/// Deterministic GF(p^f): the modulus is the least monic irreducible of
/// degree f (higher coefficients compared first) and the primitive element is
/// the least generator of the multiplicative group.
/// Throws NotPrime, BudgetExceeded (q > budget), std::invalid_argument (f = 0).
FieldTable build_field(std::uint64_t p, unsigned f, std::uint64_t budget = kDefaultFieldBudget);

/// Monic polynomials over GF(p), constant term first. Exposed for tests.
namespace poly {
using Poly = std::vector<std::uint64_t>;
void trim(Poly& a);
Poly mod(Poly a, const Poly& m, std::uint64_t p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
/// No factor of degree < deg(m), tested by gcd(m, x^(p^k) - x) = 1 for 0 < k < deg(m).
bool is_irreducible(const Poly& m, std::uint64_t p);
}  // namespace poly

}  // namespace psl2mu
