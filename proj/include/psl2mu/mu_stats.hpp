#pragma once

// Proportions of r-singular elements: an element is r-singular when r divides
// its order, and mu_r(G) is the exact fraction of such elements.

#include <cstdint>
#include <map>
#include <vector>

#include "psl2mu/audit_report.hpp"
#include "psl2mu/numtheory.hpp"
#include "psl2mu/perm_group.hpp"

namespace psl2mu {

/// prime -> mu_r, one entry per prime dividing |G|.
using MuProfile = std::map<std::uint64_t, Rational>;

/// mu_r = t / sylow_order with gcd(t, r) = 1.
struct MuDecomposition {
  std::uint64_t prime;
  BigInt t;
  BigInt sylow_order;
};

/// Ascending primes dividing |G|.
std::vector<std::uint64_t> prime_spectrum(const PermGroup& g);

/// Throws PrimeNotInSpectrum, CapExceeded.
BigInt singular_count(const PermGroup& g, std::uint64_t r);
Rational mu_r(const PermGroup& g, std::uint64_t r);

/// mu_r, or 0 when r does not divide |G|.
Rational mu_r_or_zero(const PermGroup& g, std::uint64_t r);

MuProfile mu_profile(const PermGroup& g);

/// Throws CoprimalityViolation if the numerator shares a factor with r.
MuDecomposition mu_decomposition(const PermGroup& g, std::uint64_t r);

/// Distinct values of the profile, ascending.
std::vector<Rational> value_set(const MuProfile& profile);

/// Recovers the prime of each value from its reduced prime-power denominator.
/// Throws MalformedProfile for values outside (0, 1), non-prime-power
/// denominators, or two values on the same prime.
MuProfile profile_from_value_set(const std::vector<Rational>& values);

/// Product of the reduced denominators. Throws MalformedProfile.
BigInt order_from_mu(const std::vector<Rational>& values);

/// mu_r(G) against the sum over classes of nontrivial r-elements x of
/// 1 - mu_r(C_G(x)).
AuditReport verify_centralizer_identity(const PermGroup& g, std::uint64_t r);

/// mu_r(G) >= mu_r(G/N) + mu_r(N)/|G:N|. Throws NotNormal.
AuditReport verify_quotient_inequality(const PermGroup& g, const Subgroup& n, std::uint64_t r);

/// mu_r(G) = mu_r(G/N) for a normal subgroup N of order prime to r.
/// Throws NotNormal, NotRPrime.
AuditReport verify_oprime_reduction(const PermGroup& g, const Subgroup& n, std::uint64_t r);

/// When the numerator t of mu_r(G) is below r, r divides at most one of |N|
/// and |G/N|. Vacuous when t >= r. Throws NotNormal.
AuditReport check_small_numerator_split(const PermGroup& g, const Subgroup& n, std::uint64_t r);

}  // namespace psl2mu
