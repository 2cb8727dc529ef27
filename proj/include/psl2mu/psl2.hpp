#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "psl2mu/audit_report.hpp"
#include "psl2mu/galois_field.hpp"
#include "psl2mu/mu_stats.hpp"
#include "psl2mu/perm_group.hpp"

namespace psl2mu {

/// Number of elements of each order in PSL(2, q).
struct Psl2Census {
  std::uint64_t q = 0;
  std::map<std::uint64_t, BigInt> counts;
};

/// (p, f) with q = p^f. Throws NotPrimePower.
std::pair<std::uint64_t, unsigned> split_prime_power(std::uint64_t q);

/// PSL(2, q) on the projective line: point 0 is infinity, point 1 + e is the
/// field element with code e. Generated by x -> x + 1, x -> l^2 x (l x when
/// q is even, l primitive) and x -> -1/x.
/// Throws NotPrimePower, BudgetExceeded.
PermGroup psl2_group(std::uint64_t q, std::uint64_t cap = kDefaultEnumerationCap);

/// q(q^2 - 1)/gcd(2, q - 1). Throws NotPrimePower.
BigInt psl2_order(std::uint64_t q);

/// Closed-form census for q >= 4: 1 identity, q^2 - 1 elements of order p,
/// and q(q -+ 1) phi(d)/2 elements of order d for each d > 1 dividing
/// (q +- 1)/gcd(2, q - 1).
/// Throws NotPrimePower, DomainError for q < 4.
Psl2Census element_order_census_analytic(std::uint64_t q);

/// Census counted over the enumerated group.
Psl2Census element_order_census_brute(const PermGroup& g, std::uint64_t q);

/// Closed-form mu_r(PSL(2, q)) for q >= 4. Throws PrimeNotInSpectrum.
Rational mu_analytic(std::uint64_t q, std::uint64_t r);
MuProfile mu_profile_analytic(std::uint64_t q);

/// Every q >= 4 whose closed-form value set equals `values`, ascending.
/// Both 4 and 5 are returned for the profile they share.
/// Throws MalformedProfile.
std::vector<std::uint64_t> identify_psl2(const std::vector<Rational>& values);

/// Enumerated census and profile against the closed forms. Throws CapExceeded.
AuditReport brute_vs_analytic(std::uint64_t q, std::uint64_t cap = kDefaultEnumerationCap);

Json census_to_json(const Psl2Census& census);
Json profile_to_json(const MuProfile& profile);

}  // namespace psl2mu
