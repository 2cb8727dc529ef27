#include "psl2mu/mu_stats.hpp"

#include <algorithm>
#include <limits>

#include "psl2mu/errors.hpp"

namespace psl2mu {

namespace {

bool divides_order(const PermGroup& g, std::uint64_t r) { return r >= 2 && g.order() % r == 0; }

Json group_inputs(const PermGroup& g) {
  Json j = Json::object();
  j["degree"] = g.degree();
  j["order"] = g.order().str();
  return j;
}

void require_normal(const PermGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw NotNormal("supplied subgroup is not normal");
}

}  // namespace

std::vector<std::uint64_t> prime_spectrum(const PermGroup& g) {
  std::vector<std::uint64_t> primes;
  if (g.order() == 1) return primes;
  for (const auto& [p, e] : factorize(g.order())) primes.push_back(static_cast<std::uint64_t>(p));
  return primes;
}

BigInt singular_count(const PermGroup& g, std::uint64_t r) {
  if (!is_prime(r) || !divides_order(g, r)) {
    throw PrimeNotInSpectrum(std::to_string(r) + " is not a prime divisor of |G| = " + g.order().str());
  }
  const auto& orders = g.element_orders();
  return BigInt(std::count_if(orders.begin(), orders.end(), [r](std::uint64_t o) { return o % r == 0; }));
}

Rational mu_r(const PermGroup& g, std::uint64_t r) { return Rational(singular_count(g, r), g.order()); }

Rational mu_r_or_zero(const PermGroup& g, std::uint64_t r) {
  if (!divides_order(g, r)) return Rational(0);
  return mu_r(g, r);
}

MuProfile mu_profile(const PermGroup& g) {
  MuProfile profile;
  for (std::uint64_t r : prime_spectrum(g)) profile[r] = mu_r(g, r);
  return profile;
}

MuDecomposition mu_decomposition(const PermGroup& g, std::uint64_t r) {
  const Rational mu = mu_r(g, r);
  const BigInt sylow = p_part(g.order(), r);
  const Rational scaled = mu * sylow;
  if (boost::multiprecision::denominator(scaled) != 1) {
    throw CoprimalityViolation("mu_" + std::to_string(r) + " = " + to_string(mu) +
                               " does not have an r-power denominator");
  }
  const BigInt t = boost::multiprecision::numerator(scaled);
  if (t % r == 0) {
    throw CoprimalityViolation("numerator " + t.str() + " of mu_" + std::to_string(r) + " is divisible by r");
  }
  return {r, t, sylow};
}

std::vector<Rational> value_set(const MuProfile& profile) {
  std::vector<Rational> values;
  for (const auto& [r, v] : profile) values.push_back(v);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

MuProfile profile_from_value_set(const std::vector<Rational>& values) {
  MuProfile profile;
  for (const Rational& v : values) {
    if (v <= 0 || v >= 1) throw MalformedProfile(to_string(v) + " lies outside (0, 1)");
    const BigInt den = boost::multiprecision::denominator(v);
    const auto pp = prime_power(den);
    if (!pp) throw MalformedProfile("denominator of " + to_string(v) + " is not a prime power");
    if (pp->first > std::numeric_limits<std::uint64_t>::max()) {
      throw MalformedProfile("prime of " + to_string(v) + " exceeds 64 bits");
    }
    const auto r = static_cast<std::uint64_t>(pp->first);
    const auto [it, inserted] = profile.emplace(r, v);
    if (!inserted && it->second != v) {
      throw MalformedProfile("two values share the prime " + std::to_string(r));
    }
  }
  return profile;
}

BigInt order_from_mu(const std::vector<Rational>& values) {
  BigInt order = 1;
  for (const auto& [r, v] : profile_from_value_set(values)) order *= boost::multiprecision::denominator(v);
  return order;
}

AuditReport verify_centralizer_identity(const PermGroup& g, std::uint64_t r) {
  AuditReport report;
  report.check = "centralizer_sum_identity";
  report.inputs = group_inputs(g);
  report.inputs["prime"] = r;
  report.claim = "mu_r(G) equals the sum over classes of nontrivial r-elements x of 1 - mu_r(C_G(x))";
  const Rational lhs = mu_r_or_zero(g, r);
  Rational rhs = 0;
  Json terms = Json::array();
  for (const auto& x : conjugacy_class_reps(g, r)) {
    const Subgroup c = centralizer(g, x);
    const Rational term = 1 - mu_r(c.group(), r);
    rhs += term;
    terms.push_back({{"representative", x.to_string()}, {"centralizer_order", c.order().str()}, {"term", to_string(term)}});
  }
  report.lhs = to_json_value(lhs);
  report.rhs = to_json_value(rhs);
  report.details["classes"] = terms;
  report.verdict = lhs == rhs ? Verdict::pass : Verdict::fail;
  return report;
}

AuditReport verify_quotient_inequality(const PermGroup& g, const Subgroup& n, std::uint64_t r) {
  require_normal(g, n);
  AuditReport report;
  report.check = "quotient_inequality";
  report.inputs = group_inputs(g);
  report.inputs["normal_subgroup_order"] = n.order().str();
  report.inputs["prime"] = r;
  report.claim = "mu_r(G) >= mu_r(G/N) + mu_r(N)/|G:N|";
  const PermGroup quotient = quotient_group(g, n);
  const Rational mu_g = mu_r_or_zero(g, r);
  const Rational mu_q = mu_r_or_zero(quotient, r);
  const Rational mu_n = mu_r_or_zero(n.group(), r);
  const Rational rhs = mu_q + mu_n / Rational(quotient.order());
  report.lhs = to_json_value(mu_g);
  report.rhs = to_json_value(rhs);
  report.details["mu_quotient"] = to_string(mu_q);
  report.details["mu_subgroup"] = to_string(mu_n);
  report.details["index"] = quotient.order().str();
  report.details["equality"] = mu_g == rhs;
  report.verdict = mu_g >= rhs ? Verdict::pass : Verdict::fail;
  return report;
}

AuditReport verify_oprime_reduction(const PermGroup& g, const Subgroup& n, std::uint64_t r) {
  require_normal(g, n);
  if (n.order() % r == 0) {
    throw NotRPrime("normal subgroup of order " + n.order().str() + " is divisible by " + std::to_string(r));
  }
  AuditReport report;
  report.check = "r_prime_normal_reduction";
  report.inputs = group_inputs(g);
  report.inputs["normal_subgroup_order"] = n.order().str();
  report.inputs["prime"] = r;
  report.claim = "mu_r(G) = mu_r(G/N) when N is a normal subgroup of order prime to r";
  const Rational lhs = mu_r_or_zero(g, r);
  const Rational rhs = mu_r_or_zero(quotient_group(g, n), r);
  report.lhs = to_json_value(lhs);
  report.rhs = to_json_value(rhs);
  report.verdict = lhs == rhs ? Verdict::pass : Verdict::fail;
  return report;
}

AuditReport check_small_numerator_split(const PermGroup& g, const Subgroup& n, std::uint64_t r) {
  require_normal(g, n);
  AuditReport report;
  report.check = "small_numerator_split";
  report.inputs = group_inputs(g);
  report.inputs["normal_subgroup_order"] = n.order().str();
  report.inputs["prime"] = r;
  report.claim = "if mu_r(G) = t/|R| with t < r then r divides at most one of |N| and |G/N|";
  const MuDecomposition d = mu_decomposition(g, r);
  const BigInt index = g.order() / n.order();
  const bool divides_n = n.order() % r == 0;
  const bool divides_index = index % r == 0;
  report.lhs = d.t.str();
  report.rhs = r;
  report.details["sylow_order"] = d.sylow_order.str();
  report.details["r_divides_subgroup"] = divides_n;
  report.details["r_divides_quotient"] = divides_index;
  if (d.t >= r) {
    report.verdict = Verdict::vacuous;
  } else {
    report.verdict = (divides_n && divides_index) ? Verdict::fail : Verdict::pass;
  }
  return report;
}

}  // namespace psl2mu
