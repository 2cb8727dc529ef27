#include "psl2mu/psl2.hpp"

#include <algorithm>

#include "psl2mu/errors.hpp"

namespace psl2mu {

namespace {

void require_at_least_four(std::uint64_t q) {
  if (q < 4) throw DomainError("closed forms need q >= 4, got " + std::to_string(q));
}

std::uint64_t gcd2(std::uint64_t q) { return q % 2 == 1 ? 2 : 1; }

// q^3 - q, the order times gcd(2, q - 1).
BigInt cubic(const BigInt& q) { return q * q * q - q; }

}  // namespace

std::pair<std::uint64_t, unsigned> split_prime_power(std::uint64_t q) {
  const auto pp = prime_power(q);
  if (!pp) throw NotPrimePower(std::to_string(q) + " is not a prime power");
  return *pp;
}

PermGroup psl2_group(std::uint64_t q, std::uint64_t cap) {
  const auto [p, f] = split_prime_power(q);
  const FieldTable field = build_field(p, f);
  const std::size_t degree = q + 1;
  auto point = [](FieldTable::Element e) { return static_cast<Point>(e + 1); };
  const FieldTable::Element lambda = field.primitive_element();
  const FieldTable::Element scale = p == 2 ? lambda : field.mul(lambda, lambda);

  std::vector<Point> translate(degree), dilate(degree), invert(degree);
  translate[0] = dilate[0] = 0;
  invert[0] = point(0);
  invert[point(0)] = 0;
  for (FieldTable::Element e = 0; e < q; ++e) {
    translate[point(e)] = point(field.add(e, 1));
    dilate[point(e)] = point(field.mul(scale, e));
    if (e != 0) invert[point(e)] = point(field.neg(field.inv(e)));
  }
  std::vector<Permutation> gens{Permutation(std::move(translate)), Permutation(std::move(dilate)),
                                Permutation(std::move(invert))};
  return PermGroup(degree, std::move(gens), cap);
}

BigInt psl2_order(std::uint64_t q) {
  split_prime_power(q);
  return cubic(BigInt(q)) / gcd2(q);
}

Psl2Census element_order_census_analytic(std::uint64_t q) {
  const auto [p, f] = split_prime_power(q);
  require_at_least_four(q);
  const std::uint64_t g = gcd2(q);
  Psl2Census census;
  census.q = q;
  census.counts[1] = 1;
  census.counts[p] = BigInt(q) * q - 1;
  // Divisors of (q - 1)/g pair with the cofactor q + 1 and vice versa.
  for (const auto& [side, cofactor] : {std::pair{(q - 1) / g, q + 1}, std::pair{(q + 1) / g, q - 1}}) {
    for (std::uint64_t d : divisors(side)) {
      if (d == 1) continue;
      census.counts[d] += BigInt(q) * cofactor * euler_phi(d) / 2;
    }
  }
  return census;
}

Psl2Census element_order_census_brute(const PermGroup& g, std::uint64_t q) {
  Psl2Census census;
  census.q = q;
  for (std::uint64_t o : g.element_orders()) census.counts[o] += 1;
  return census;
}

Rational mu_analytic(std::uint64_t q, std::uint64_t r) {
  const auto [p, f] = split_prime_power(q);
  require_at_least_four(q);
  if (!is_prime(r) || psl2_order(q) % r != 0) {
    throw PrimeNotInSpectrum(std::to_string(r) + " does not divide |PSL(2," + std::to_string(q) + ")|");
  }
  if (r == p) return Rational(p == 2 ? 1 : 2, q);
  const std::uint64_t part = std::max(p_part(q - 1, r), p_part(q + 1, r));
  if (r == 2) return Rational(1, 2) - Rational(1, part);
  return Rational(1, 2) - Rational(1, 2 * BigInt(part));
}

MuProfile mu_profile_analytic(std::uint64_t q) {
  MuProfile profile;
  for (const auto& [r, e] : factorize(psl2_order(q))) {
    const auto prime = static_cast<std::uint64_t>(r);
    profile[prime] = mu_analytic(q, prime);
  }
  return profile;
}

std::vector<std::uint64_t> identify_psl2(const std::vector<Rational>& values) {
  const BigInt order = order_from_mu(values);
  std::vector<Rational> wanted = values;
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

  std::vector<std::uint64_t> found;
  // q^3 - q = g |G| with g = 2 for odd q and g = 1 for even q.
  for (const std::uint64_t g : {1u, 2u}) {
    const BigInt target = order * g;
    BigInt q = iroot(target, 3);
    // q^3 - q = target has at most one root and it lies in {floor(cbrt), +1}.
    for (int step = 0; step < 2; ++step, ++q) {
      if (q < 4 || cubic(q) != target) continue;
      if (q > std::numeric_limits<std::uint64_t>::max()) continue;
      const auto candidate = static_cast<std::uint64_t>(q);
      if (gcd2(candidate) != g || !prime_power(candidate)) continue;
      if (value_set(mu_profile_analytic(candidate)) == wanted) found.push_back(candidate);
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

Json census_to_json(const Psl2Census& census) {
  Json j = Json::object();
  for (const auto& [d, n] : census.counts) j[std::to_string(d)] = n.str();
  return j;
}

Json profile_to_json(const MuProfile& profile) {
  Json j = Json::object();
  for (const auto& [r, v] : profile) j[std::to_string(r)] = to_string(v);
  return j;
}

AuditReport brute_vs_analytic(std::uint64_t q, std::uint64_t cap) {
  const PermGroup g = psl2_group(q, cap);
  const Psl2Census analytic_census = element_order_census_analytic(q);
  const MuProfile analytic_profile = mu_profile_analytic(q);
  const Psl2Census brute_census = element_order_census_brute(g, q);
  const MuProfile brute_profile = mu_profile(g);

  AuditReport report;
  report.check = "psl2_brute_vs_closed_form";
  report.inputs["q"] = q;
  report.inputs["order"] = g.order().str();
  report.claim = "enumerated element-order census and mu profile of PSL(2,q) equal the closed forms";
  report.lhs = {{"census", census_to_json(brute_census)}, {"profile", profile_to_json(brute_profile)}};
  report.rhs = {{"census", census_to_json(analytic_census)}, {"profile", profile_to_json(analytic_profile)}};
  const bool census_match = brute_census.counts == analytic_census.counts;
  const bool profile_match = brute_profile == analytic_profile;
  report.details["census_match"] = census_match;
  report.details["profile_match"] = profile_match;
  report.verdict = census_match && profile_match ? Verdict::pass : Verdict::fail;
  return report;
}

}  // namespace psl2mu
