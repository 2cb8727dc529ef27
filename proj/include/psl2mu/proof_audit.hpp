#pragma once

// Exact replays of the arithmetic behind the characterization of PSL(2, q)
// by its proportions of r-singular elements. Every relation is checked in
// cleared-denominator integer form.

#include <cstdint>
#include <string>
#include <vector>

#include "psl2mu/audit_report.hpp"
#include "psl2mu/lie_orders.hpp"
#include "psl2mu/perm_group.hpp"

namespace psl2mu {

/// (n!)^2 > 4 (n + 1)^n. Throws DomainError for n < 6.
AuditReport factorial_inequality(unsigned n);

/// factorial_inequality over 6..n_max in one report. Throws DomainError for
/// n_max < 6.
AuditReport factorial_inequality_sweep(unsigned n_max);

/// Degrees n >= 5 for which A_n could be the simple section: the Sylow
/// p-subgroup of A_n is abelian (n < p^2) and has order exactly p^f
/// (pf <= n < p(f + 1)). A degree survives when |A_n| divides
/// |PSL(2, p^f)|. Throws NotPrime unless p is an odd prime, DomainError for
/// f = 0.
AuditReport alternating_case_scan(std::uint64_t p, unsigned f);

struct AlternatingSurvivor {
  std::uint64_t p;
  unsigned f;
  unsigned n;
  friend bool operator==(const AlternatingSurvivor&, const AlternatingSurvivor&) = default;
};

/// Survivors of alternating_case_scan over the given primes and 1..f_max.
std::vector<AlternatingSurvivor> alternating_survivors(const std::vector<std::uint64_t>& primes,
                                                       unsigned f_max);

struct ScanPair {
  unsigned n = 0;  // 0 for exceptional families
  std::uint64_t m = 0;
  unsigned e = 0;
  friend bool operator==(const ScanPair&, const ScanPair&) = default;
};

/// One region of (n, m) space with the rank bound used there.
struct ScanBranch {
  std::string condition;  // e.g. "m > 1"
  std::string bound;      // inequality that limits n
  std::vector<ScanPair> pairs;
};

/// Solutions of h + 1 < 2(m + 1) e(m).
///
/// Exceptional families: every table row satisfying the inequality exactly.
/// Classical families are split by the exponent formula's branches. The
/// m in {1, 2} regions are scanned with the exact inequality; the remaining
/// regions use the linear relaxation of 2(m + 1) e(m) that bounds n there
/// (3n, 14n/3, 5n or 16n/3) and keep every pair where Phi_m occurs in the
/// unreduced product, so pairs with e(m) = 0 can appear.
std::vector<ScanBranch> order_inequality_solutions(LieType type);

/// Flattened m values for an exceptional family.
std::vector<std::uint64_t> exceptional_solutions(LieType type);

AuditReport order_inequality_report(LieType type);

/// For each q0: U = Phi_m(q0)^e(m) bounds p^f, so |PSL(2, p^f)| < U^3.
/// Each instance is one of
///   pass      |L(q0)| > U^3,
///   survivor  |L(q0)| <= U^3 and L(q0) is isomorphic to PSL(2, q0) or
///             PSL(2, q0^2), or is PSL(3, 2) (order 168 = |PSL(2, 7)|),
///   vacuous   e(m) = 0, L(q0) is not simple, or q0 is not a valid field size,
///   fail      anything else.
/// The report's verdict is the worst instance outcome.
AuditReport subcase_order_comparison(const LieFamily& family, std::uint64_t m,
                                     const std::vector<std::uint64_t>& q0s);

/// All order comparisons for a family over its scanner output.
std::vector<AuditReport> lie_order_comparison(LieType type, const std::vector<std::uint64_t>& q0s);

struct ComparisonSurvivor {
  std::string family;  // LieFamily::name()
  unsigned n;
  std::uint64_t m;
  std::uint64_t q0;
  std::string reason;
};

/// Survivor instances extracted from comparison reports.
std::vector<ComparisonSurvivor> comparison_survivors(const std::vector<AuditReport>& reports);

/// For q0 = 2^{2s+1}: gcd(q0 - 1, q0^2 + 2) = 1, 5 | q0^2 + 1, some prime
/// s' != 5 divides q0^2 + 1, and q0^2 exceeds both (q0^2 + 1)/5 + 1 and
/// (q0^2 + 1)/s' + 1. Throws DomainError for s_min = 0.
AuditReport suzuki_audit(unsigned s_min, unsigned s_max);

/// mu_2 of the simple groups with abelian Sylow 2-subgroups against 1/2^f,
/// for f in f_min..f_max. Throws DomainError for f_min < 2.
AuditReport claim3_audit(unsigned f_min, unsigned f_max);

/// True when v = 1/q or v = 2/q for some prime power q.
bool is_psl2_characteristic_value(const Rational& v);

/// mu_3 of 2F4(2^{2m+1}) from the generic class count:
/// 1 - (89/144 + 1/(4 t) + 1/(48 t^2)) with t = (2^{2m+1} + 1)_3.
Rational ree_f4_mu3(unsigned m);

/// Fixed mu values of the groups with non-abelian Sylow subgroups that survive
/// the p-centrality argument, checked against 1/q and 2/q.
AuditReport claim2_constants();

struct SporadicEntry {
  std::string name;
  BigInt order;
  std::vector<std::pair<std::uint64_t, unsigned>> factorization;

  /// Largest prime power dividing the order.
  BigInt largest_sylow() const;
  /// Largest power of an odd prime dividing the order.
  BigInt largest_odd_sylow() const;
};

/// The 26 sporadic groups and 2F4(2)'. Orders are validated against the
/// stored factorizations on first use; a mismatch throws std::logic_error.
const std::vector<SporadicEntry>& sporadic_groups();

/// order > l(l^2 - 1)/2 for each group. The verdict uses l = the largest odd
/// Sylow order, since the characteristic is odd wherever this bound is
/// applied; the comparison with the overall largest Sylow is kept in details.
AuditReport sporadic_order_audit();

/// mu(G) by enumeration, then identify_psl2. For each identified q: |G| must
/// equal |PSL(2, q)| and G must be perfect. Throws CapExceeded.
AuditReport mu_equality_theorem_check(const PermGroup& g, const std::string& label);

/// POmega-(4, 2) = PSL(2, 4): mu_3(PSL(2, 9)) = 2/9 is below
/// mu_3(PSL(2, 5)) = 1/3, so the quotient inequality rules out
/// G = PSL(2, 9) over this section.
AuditReport omega_minus_followup();

struct AuditOptions {
  unsigned n_max = 200;
  std::vector<std::uint64_t> q0s{2, 3, 4, 5, 7, 8, 9};
  std::vector<std::uint64_t> alternating_primes{3, 5, 7, 11, 13};
  unsigned f_max = 6;
  std::uint64_t cap = kDefaultEnumerationCap;
};

/// Every audit, sorted by check id (stable within a check).
std::vector<AuditReport> run_all_audits(const AuditOptions& options = {});

/// Audits for one family: the scanner report and either the order
/// comparisons or, for 2B2, suzuki_audit.
std::vector<AuditReport> family_audit(LieType type, const std::vector<std::uint64_t>& q0s);

/// Stable sort by check id.
void sort_reports(std::vector<AuditReport>& reports);

}  // namespace psl2mu
