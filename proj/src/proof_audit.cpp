#include "psl2mu/proof_audit.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "psl2mu/catalog.hpp"
#include "psl2mu/errors.hpp"
#include "psl2mu/mu_stats.hpp"
#include "psl2mu/psl2.hpp"

namespace psl2mu {

namespace {

constexpr unsigned kRankScanLimit = 64;

std::uint64_t lcm2(std::uint64_t x) { return x % 2 ? 2 * x : x; }

Verdict worst(Verdict a, Verdict b) {
  auto rank = [](Verdict v) {
    switch (v) {
      case Verdict::fail: return 3;
      case Verdict::survivor: return 2;
      case Verdict::pass: return 1;
      case Verdict::vacuous: return 0;
    }
    return 3;
  };
  return rank(a) >= rank(b) ? a : b;
}

// Region of (n, m) space for one branch of a classical exponent formula.
struct Region {
  std::string condition;
  unsigned n_min;
  std::function<bool(std::uint64_t n, std::uint64_t m)> contains;
  // Multiplicity of Phi_m before the branch's "- 1" correction.
  std::function<std::uint64_t(std::uint64_t n, std::uint64_t m)> base;
  // Relaxed bound h + 1 < (num/den) n; num = 0 means the exact inequality.
  unsigned num = 0;
  unsigned den = 1;
};

std::vector<Region> regions(LieType type) {
  using N = std::uint64_t;
  const auto sp_base = [](N n, N m) { return 2 * n / lcm2(m); };
  switch (type) {
    case LieType::linear:
      return {{"m = 1", 2, [](N, N m) { return m == 1; }, [](N n, N) { return n - 1; }},
              {"m > 1", 2, [](N, N m) { return m > 1; }, [](N n, N m) { return n / m; }, 3, 1}};
    case LieType::unitary:
      return {{"m = 2", 3, [](N, N m) { return m == 2; }, [](N n, N) { return n - 1; }},
              {"m != 2 mod 4", 3, [](N, N m) { return m % 4 != 2; }, [](N n, N m) { return n / lcm2(m); }, 3, 1},
              {"m > 2, m = 2 mod 4", 3, [](N, N m) { return m > 2 && m % 4 == 2; },
               [](N n, N m) { return 2 * n / m; }, 14, 3}};
    case LieType::symplectic:
    case LieType::orthogonal_odd:
      return {{"m <= 2", 2, [](N, N m) { return m <= 2; }, sp_base},
              {"m > 2", 2, [](N, N m) { return m > 2; }, sp_base, 5, 1}};
    case LieType::orthogonal_plus:
      return {{"m <= 2", 3, [](N, N m) { return m <= 2; }, sp_base},
              {"m > 2, m | n or m does not divide 2n", 3,
               [](N n, N m) { return m > 2 && (n % m == 0 || (2 * n) % m != 0); }, sp_base, 5, 1},
              {"m > 2, m does not divide n, m | 2n", 3,
               [](N n, N m) { return m > 2 && n % m != 0 && (2 * n) % m == 0; }, [](N n, N m) { return 2 * n / m; },
               16, 3}};
    case LieType::orthogonal_minus:
      return {{"m = 1", 2, [](N, N m) { return m == 1; }, sp_base},
              {"m = 2", 2, [](N, N m) { return m == 2; }, sp_base},
              {"m > 2, m | n", 2, [](N n, N m) { return m > 2 && n % m == 0; }, sp_base, 5, 1},
              {"m > 2, m does not divide n", 2, [](N n, N m) { return m > 2 && n % m != 0; }, sp_base, 5, 1}};
    default:
      throw std::logic_error("regions: not a classical type");
  }
}

std::string bound_text(const Region& region) {
  if (region.num == 0) return "h + 1 < 2(m + 1) e(m)";
  std::string factor = std::to_string(region.num) + "n";
  if (region.den != 1) factor += "/" + std::to_string(region.den);
  return "h + 1 < " + factor;
}

Json pairs_to_json(const std::vector<ScanPair>& pairs, bool with_n) {
  Json out = Json::array();
  for (const auto& p : pairs) {
    if (with_n) {
      out.push_back({{"n", p.n}, {"m", p.m}, {"e", p.e}});
    } else {
      out.push_back({{"m", p.m}, {"e", p.e}});
    }
  }
  return out;
}

std::string survivor_reason(const LieFamily& family, std::uint64_t q0) {
  if (family.type() == LieType::linear && family.n() == 2) return "PSL(2, q0) itself";
  if (family.type() == LieType::orthogonal_minus && family.n() == 2) return "isomorphic to PSL(2, q0^2)";
  if (family.type() == LieType::linear && family.n() == 3 && q0 == 2) return "PSL(3, 2) has order 168 = |PSL(2, 7)|";
  return "";
}

}  // namespace

AuditReport factorial_inequality(unsigned n) {
  if (n < 6) throw DomainError("factorial inequality needs n >= 6, got " + std::to_string(n));
  AuditReport report;
  report.check = "factorial_inequality";
  report.inputs = {{"n", n}};
  const BigInt f = factorial(n);
  const BigInt lhs = f * f;
  const BigInt rhs = 4 * ipow(BigInt(n + 1), n);
  report.lhs = to_json_value(lhs);
  report.rhs = to_json_value(rhs);
  report.verdict = lhs > rhs ? Verdict::pass : Verdict::fail;
  report.claim = "(n!)^2 > 4 (n + 1)^n";
  return report;
}

AuditReport factorial_inequality_sweep(unsigned n_max) {
  if (n_max < 6) throw DomainError("factorial inequality sweep needs n_max >= 6");
  AuditReport report;
  report.check = "factorial_inequality";
  report.inputs = {{"n_min", 6}, {"n_max", n_max}};
  Json failures = Json::array();
  for (unsigned n = 6; n <= n_max; ++n) {
    if (!factorial_inequality(n).ok()) failures.push_back(n);
  }
  const auto first = factorial_inequality(6);
  report.lhs = first.lhs;
  report.rhs = first.rhs;
  report.verdict = failures.empty() ? Verdict::pass : Verdict::fail;
  report.claim = "(n!)^2 > 4 (n + 1)^n for every n in range; lhs/rhs shown for n = 6";
  report.details = {{"checked", n_max - 5}, {"failures", failures}};
  return report;
}

AuditReport alternating_case_scan(std::uint64_t p, unsigned f) {
  if (p < 3 || !is_prime(p)) throw NotPrime("alternating scan needs an odd prime, got " + std::to_string(p));
  if (f == 0) throw DomainError("alternating scan needs f >= 1");
  AuditReport report;
  report.check = "alternating_scan";
  report.inputs = {{"p", p}, {"f", f}};
  const BigInt q = ipow(BigInt(p), f);
  const BigInt target = q * (q * q - 1) / 2;
  const std::uint64_t lo = std::max<std::uint64_t>(5, p * f);
  const std::uint64_t hi = std::min<std::uint64_t>(p * (f + 1), p * p);
  Json candidates = Json::array();
  Json survivors = Json::array();
  for (std::uint64_t n = lo; n < hi; ++n) {
    const BigInt an = factorial(static_cast<unsigned>(n)) / 2;
    // (n!/2)^2 > (pf + 1)^{pf}.
    const bool size_bound = an * an > ipow(BigInt(p * f + 1), static_cast<unsigned>(p * f));
    const bool divides = target % an == 0;
    candidates.push_back({{"n", n}, {"alternating_order", to_json_value(an)}, {"divides", divides},
                          {"exceeds_sylow_bound", size_bound}});
    if (divides) survivors.push_back(n);
  }
  report.lhs = Json::array();
  for (const auto& s : survivors) report.lhs.push_back(s);
  report.rhs = to_json_value(target);
  report.verdict = survivors.empty() ? Verdict::pass : Verdict::survivor;
  report.claim = "A_n with abelian Sylow p-subgroup of order p^f has order dividing |PSL(2, p^f)| only for the survivors";
  report.details = {{"degree_range", {lo, hi}}, {"candidates", candidates}};
  return report;
}

std::vector<AlternatingSurvivor> alternating_survivors(const std::vector<std::uint64_t>& primes, unsigned f_max) {
  std::vector<AlternatingSurvivor> out;
  for (auto p : primes) {
    for (unsigned f = 1; f <= f_max; ++f) {
      const auto report = alternating_case_scan(p, f);
      for (const auto& n : report.lhs) out.push_back({p, f, n.get<unsigned>()});
    }
  }
  return out;
}

std::vector<ScanBranch> order_inequality_solutions(LieType type) {
  if (!is_classical(type)) {
    const LieFamily family(type);
    const unsigned h = exponent_h(family);
    ScanBranch branch{"all m", "h + 1 < 2(m + 1) e(m)", {}};
    const std::uint64_t q0 = type == LieType::ree_g2 ? 27 : 8;
    const auto factorization = factorize_order(family, q0);
    for (const auto& [m, e] : factorization.exponents) {
      if (h + 1 < 2 * (m + 1) * e) branch.pairs.push_back({0, m, e});
    }
    return {branch};
  }
  std::vector<ScanBranch> out;
  for (const auto& region : regions(type)) {
    ScanBranch branch{region.condition, bound_text(region), {}};
    for (unsigned n = region.n_min; n <= kRankScanLimit; ++n) {
      const LieFamily family(type, n);
      const std::uint64_t h = exponent_h(family);
      if (region.num != 0 && region.den * (h + 1) >= static_cast<std::uint64_t>(region.num) * n) continue;
      for (std::uint64_t m = 1; m <= 2 * static_cast<std::uint64_t>(n) + 2; ++m) {
        if (!region.contains(n, m) || region.base(n, m) == 0) continue;
        const unsigned e = exponent_e(family, m);
        if (region.num == 0 && !(h + 1 < 2 * (m + 1) * e)) continue;
        branch.pairs.push_back({n, m, e});
      }
    }
    out.push_back(std::move(branch));
  }
  return out;
}

std::vector<std::uint64_t> exceptional_solutions(LieType type) {
  if (is_classical(type)) throw std::invalid_argument("exceptional_solutions: classical type " + tag(type));
  std::vector<std::uint64_t> out;
  const auto branches = order_inequality_solutions(type);
  for (const auto& p : branches.front().pairs) out.push_back(p.m);
  return out;
}

AuditReport order_inequality_report(LieType type) {
  AuditReport report;
  report.check = "order_inequality_scan";
  report.inputs = {{"family", tag(type)}};
  Json branches = Json::array();
  std::size_t total = 0;
  for (const auto& b : order_inequality_solutions(type)) {
    branches.push_back({{"condition", b.condition}, {"bound", b.bound}, {"pairs", pairs_to_json(b.pairs, is_classical(type))}});
    total += b.pairs.size();
  }
  report.lhs = total;
  report.rhs = nullptr;
  report.verdict = Verdict::pass;
  report.claim = "parameters left open by h + 1 < 2(m + 1) e(m)";
  report.details = {{"branches", branches}};
  return report;
}

AuditReport subcase_order_comparison(const LieFamily& family, std::uint64_t m, const std::vector<std::uint64_t>& q0s) {
  AuditReport report;
  report.check = "order_comparison";
  const unsigned e = exponent_e(family, m);
  report.inputs = {{"family", family.name()}, {"n", family.n()}, {"m", m}, {"e", e}};
  Json rows = Json::array();
  Json skipped = Json::array();
  Verdict overall = Verdict::vacuous;
  BigInt worst_margin_lhs, worst_margin_rhs;
  bool have_margin = false;
  for (auto q0 : q0s) {
    try {
      check_field_size(family, q0);
    } catch (const ConstraintViolation&) {
      skipped.push_back(q0);
      continue;
    }
    Json row{{"q0", q0}};
    Verdict outcome;
    std::string reason;
    if (e == 0) {
      outcome = Verdict::vacuous;
      reason = "e(m) = 0 forces p^f = 1";
    } else if (!is_simple_instance(family, q0)) {
      outcome = Verdict::vacuous;
      reason = "not simple";
    } else {
      const BigInt order = lie_order(family, q0);
      const BigInt bound = ipow(cyclotomic_value(m, q0), 3 * e);
      row["order"] = to_json_value(order);
      row["bound"] = to_json_value(bound);
      if (order > bound) {
        outcome = Verdict::pass;
      } else {
        reason = survivor_reason(family, q0);
        outcome = reason.empty() ? Verdict::fail : Verdict::survivor;
      }
      if (!have_margin || order * worst_margin_rhs < worst_margin_lhs * bound) {
        worst_margin_lhs = order;
        worst_margin_rhs = bound;
        have_margin = true;
      }
    }
    row["outcome"] = to_string(outcome);
    if (!reason.empty()) row["reason"] = reason;
    rows.push_back(std::move(row));
    overall = worst(overall, outcome);
  }
  report.lhs = have_margin ? to_json_value(worst_margin_lhs) : Json(nullptr);
  report.rhs = have_margin ? to_json_value(worst_margin_rhs) : Json(nullptr);
  report.verdict = overall;
  report.claim = "|L(q0)| > Phi_m(q0)^(3 e(m)) > |PSL(2, p^f)|; lhs/rhs at the tightest q0";
  report.details = {{"instances", rows}};
  if (!skipped.empty()) report.details["invalid_q0"] = skipped;
  return report;
}

std::vector<AuditReport> lie_order_comparison(LieType type, const std::vector<std::uint64_t>& q0s) {
  std::vector<AuditReport> out;
  if (type == LieType::suzuki) return out;
  for (const auto& branch : order_inequality_solutions(type)) {
    for (const auto& pair : branch.pairs) {
      auto report = subcase_order_comparison(LieFamily(type, pair.n), pair.m, q0s);
      report.details["branch"] = branch.condition;
      out.push_back(std::move(report));
    }
  }
  return out;
}

std::vector<ComparisonSurvivor> comparison_survivors(const std::vector<AuditReport>& reports) {
  std::vector<ComparisonSurvivor> out;
  for (const auto& r : reports) {
    if (r.check != "order_comparison") continue;
    for (const auto& row : r.details["instances"]) {
      if (row["outcome"] != "survivor") continue;
      out.push_back({r.inputs["family"].get<std::string>(), r.inputs["n"].get<unsigned>(),
                     r.inputs["m"].get<std::uint64_t>(), row["q0"].get<std::uint64_t>(),
                     row["reason"].get<std::string>()});
    }
  }
  return out;
}

AuditReport suzuki_audit(unsigned s_min, unsigned s_max) {
  if (s_min == 0) throw DomainError("suzuki audit needs s >= 1");
  AuditReport report;
  report.check = "suzuki_gcd";
  report.inputs = {{"s_min", s_min}, {"s_max", s_max}};
  Json rows = Json::array();
  bool all = true;
  for (unsigned s = s_min; s <= s_max; ++s) {
    const BigInt q0 = ipow(BigInt(2), 2 * s + 1);
    const BigInt sq = q0 * q0;
    const BigInt g = gcd(q0 - 1, sq + 2);
    const bool five = (sq + 1) % 5 == 0;
    BigInt other = 0;
    for (const auto& [r, k] : factorize(sq + 1)) {
      (void)k;
      if (r != 5) {
        other = r;
        break;
      }
    }
    const bool big_vs_five = 5 * sq > sq + 1 + 5;
    const bool big_vs_other = other != 0 && other * sq > sq + 1 + other;
    const bool ok = g == 1 && five && other != 0 && big_vs_five && big_vs_other;
    all = all && ok;
    rows.push_back({{"s", s},
                    {"q0", to_json_value(q0)},
                    {"gcd", to_json_value(g)},
                    {"five_divides", five},
                    {"other_prime", to_json_value(other)},
                    {"exceeds_fifth", big_vs_five},
                    {"exceeds_other_part", big_vs_other}});
  }
  report.lhs = rows.empty() ? Json(nullptr) : rows[0]["gcd"];
  report.rhs = "1";
  report.verdict = all ? Verdict::pass : Verdict::fail;
  report.claim = "gcd(q0 - 1, q0^2 + 2) = 1 and q0^2 exceeds (q0^2 + 1)/5 + 1 and (q0^2 + 1)/s' + 1";
  report.details = {{"instances", rows}};
  return report;
}

AuditReport claim3_audit(unsigned f_min, unsigned f_max) {
  if (f_min < 2) throw DomainError("mu_2 dispatch needs f >= 2");
  AuditReport report;
  report.check = "walter_dispatch";
  report.inputs = {{"f_min", f_min}, {"f_max", f_max}};
  bool consistent = true;

  // PSL(2, q1) with q1 = 3, 5 mod 8: (q1 +- 1)_2 = 4 gives 1/4.
  Json odd_samples = Json::array();
  for (std::uint64_t q1 = 5; q1 <= 243; ++q1) {
    if (!prime_power(q1) || (q1 % 8 != 3 && q1 % 8 != 5)) continue;
    const Rational v = mu_analytic(q1, 2);
    consistent = consistent && v == Rational(1, 4);
    odd_samples.push_back(q1);
  }
  // PSL(2, 2^m): 1/2^m.
  for (unsigned m = 2; m <= std::max(f_max + 2, 12u); ++m) {
    const std::uint64_t q1 = std::uint64_t{1} << m;
    consistent = consistent && mu_analytic(q1, 2) == Rational(1, q1);
  }
  // 2G2(3^{2t+1}): 5/12 - 1/(6 (3^{2t+1} + 1)_2).
  Json ree_values = Json::array();
  for (unsigned t = 1; t <= 8; ++t) {
    const BigInt q = ipow(BigInt(3), 2 * t + 1);
    const Rational v = Rational(5, 12) - Rational(1, 6 * p_part(q + 1, 2));
    consistent = consistent && v == Rational(3, 8);
    ree_values.push_back({{"t", t}, {"mu_2", to_json_value(v)}});
  }
  const Rational j1(3, 8);

  Json per_f = Json::array();
  bool dispatch_ok = true;
  for (unsigned f = f_min; f <= f_max; ++f) {
    const Rational target(1, BigInt(1) << f);
    Json matches = Json::array();
    if (Rational(1, 4) == target) matches.push_back("PSL(2,q1), q1 = 3,5 mod 8");
    // Only m = f gives 1/2^m = 1/2^f.
    matches.push_back("PSL(2," + std::to_string(std::uint64_t{1} << f) + ")");
    if (j1 == target) matches.push_back("J1");
    if (Rational(3, 8) == target) matches.push_back("2G2(3^(2t+1))");
    const bool degenerate = f == 2;
    dispatch_ok = dispatch_ok && (degenerate ? matches.size() == 2 : matches.size() == 1);
    Json row{{"f", f}, {"target", to_json_value(target)}, {"matches", matches}};
    if (degenerate) row["note"] = "1/4 is shared with PSL(2,q1), q1 = 3,5 mod 8; the profile is that of PSL(2,4)";
    per_f.push_back(std::move(row));
  }
  report.lhs = {{"PSL(2,q1), q1 = 3,5 mod 8", "1/4"},
                {"PSL(2,2^m)", "1/2^m"},
                {"J1", to_json_value(j1)},
                {"2G2(3^(2t+1))", "3/8"}};
  report.rhs = "1/2^f";
  report.verdict = consistent && dispatch_ok ? Verdict::pass : Verdict::fail;
  report.claim = "among simple groups with abelian Sylow 2-subgroups only PSL(2,2^f) has mu_2 = 1/2^f for f >= 3";
  report.details = {{"odd_q1_checked", odd_samples}, {"ree_g2", ree_values}, {"per_f", per_f}};
  return report;
}

bool is_psl2_characteristic_value(const Rational& v) {
  if (v <= 0) return false;
  const Rational one_over = 1 / v;
  const Rational two_over = 2 / v;
  for (const Rational& q : {one_over, two_over}) {
    if (denominator(q) == 1 && numerator(q) > 1 && prime_power(numerator(q))) return true;
  }
  return false;
}

Rational ree_f4_mu3(unsigned m) {
  const BigInt t = p_part(ipow(BigInt(2), 2 * m + 1) + 1, 3);
  return 1 - (Rational(89, 144) + Rational(1, 4 * t) + Rational(1, 48 * t * t));
}

AuditReport claim2_constants() {
  AuditReport report;
  report.check = "nonabelian_sylow_constants";
  std::vector<std::pair<std::string, Rational>> values{
      {"mu_3(Ru)", Rational(8, 27)},
      {"mu_3(J4)", Rational(8, 27)},
      {"mu_3(2F4(2)')", Rational(7, 27)},
      {"mu_5(Th)", Rational(24, 125)},
  };
  for (unsigned m = 1; m <= 5; ++m) values.emplace_back("mu_3(2F4(2^" + std::to_string(2 * m + 1) + "))", ree_f4_mu3(m));
  Json lhs = Json::object();
  Json hits = Json::array();
  bool in_range = true;
  for (const auto& [label, v] : values) {
    lhs[label] = to_json_value(v);
    in_range = in_range && v > 0 && v < 1;
    if (is_psl2_characteristic_value(v)) hits.push_back(label);
  }
  report.lhs = lhs;
  report.rhs = "1/q or 2/q";
  report.verdict = hits.empty() && in_range ? Verdict::pass : Verdict::fail;
  report.claim = "no listed value equals 1/q or 2/q for a prime power q";
  report.details = {{"matches", hits}};
  return report;
}

BigInt SporadicEntry::largest_sylow() const {
  BigInt best = 1;
  for (const auto& [p, k] : factorization) best = std::max(best, ipow(BigInt(p), k));
  return best;
}

BigInt SporadicEntry::largest_odd_sylow() const {
  BigInt best = 1;
  for (const auto& [p, k] : factorization) {
    if (p != 2) best = std::max(best, ipow(BigInt(p), k));
  }
  return best;
}

const std::vector<SporadicEntry>& sporadic_groups() {
  static const std::vector<SporadicEntry> groups = [] {
    std::vector<SporadicEntry> g{
        {"M11", BigInt("7920"), {{2, 4}, {3, 2}, {5, 1}, {11, 1}}},
        {"M12", BigInt("95040"), {{2, 6}, {3, 3}, {5, 1}, {11, 1}}},
        {"J1", BigInt("175560"), {{2, 3}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {19, 1}}},
        {"M22", BigInt("443520"), {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}},
        {"J2", BigInt("604800"), {{2, 7}, {3, 3}, {5, 2}, {7, 1}}},
        {"M23", BigInt("10200960"), {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
        {"HS", BigInt("44352000"), {{2, 9}, {3, 2}, {5, 3}, {7, 1}, {11, 1}}},
        {"J3", BigInt("50232960"), {{2, 7}, {3, 5}, {5, 1}, {17, 1}, {19, 1}}},
        {"M24", BigInt("244823040"), {{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
        {"McL", BigInt("898128000"), {{2, 7}, {3, 6}, {5, 3}, {7, 1}, {11, 1}}},
        {"He", BigInt("4030387200"), {{2, 10}, {3, 3}, {5, 2}, {7, 3}, {17, 1}}},
        {"Ru", BigInt("145926144000"), {{2, 14}, {3, 3}, {5, 3}, {7, 1}, {13, 1}, {29, 1}}},
        {"Suz", BigInt("448345497600"), {{2, 13}, {3, 7}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}},
        {"O'N", BigInt("460815505920"), {{2, 9}, {3, 4}, {5, 1}, {7, 3}, {11, 1}, {19, 1}, {31, 1}}},
        {"Co3", BigInt("495766656000"), {{2, 10}, {3, 7}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}},
        {"Co2", BigInt("42305421312000"), {{2, 18}, {3, 6}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}},
        {"Fi22", BigInt("64561751654400"), {{2, 17}, {3, 9}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}},
        {"HN", BigInt("273030912000000"), {{2, 14}, {3, 6}, {5, 6}, {7, 1}, {11, 1}, {19, 1}}},
        {"Ly", BigInt("51765179004000000"), {{2, 8}, {3, 7}, {5, 6}, {7, 1}, {11, 1}, {31, 1}, {37, 1}, {67, 1}}},
        {"Th", BigInt("90745943887872000"), {{2, 15}, {3, 10}, {5, 3}, {7, 2}, {13, 1}, {19, 1}, {31, 1}}},
        {"Fi23", BigInt("4089470473293004800"),
         {{2, 18}, {3, 13}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {23, 1}}},
        {"Co1", BigInt("4157776806543360000"), {{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}}},
        {"J4", BigInt("86775571046077562880"),
         {{2, 21}, {3, 3}, {5, 1}, {7, 1}, {11, 3}, {23, 1}, {29, 1}, {31, 1}, {37, 1}, {43, 1}}},
        {"Fi24'", BigInt("1255205709190661721292800"),
         {{2, 21}, {3, 16}, {5, 2}, {7, 3}, {11, 1}, {13, 1}, {17, 1}, {23, 1}, {29, 1}}},
        {"B", BigInt("4154781481226426191177580544000000"),
         {{2, 41}, {3, 13}, {5, 6}, {7, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {31, 1}, {47, 1}}},
        {"M", BigInt("808017424794512875886459904961710757005754368000000000"),
         {{2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3}, {17, 1}, {19, 1}, {23, 1}, {29, 1}, {31, 1},
          {41, 1}, {47, 1}, {59, 1}, {71, 1}}},
        {"2F4(2)'", BigInt("17971200"), {{2, 11}, {3, 3}, {5, 2}, {13, 1}}},
    };
    for (const auto& entry : g) {
      BigInt product = 1;
      for (const auto& [p, k] : entry.factorization) {
        if (!is_prime(p)) throw std::logic_error(entry.name + ": non-prime factor");
        product *= ipow(BigInt(p), k);
      }
      if (product != entry.order) throw std::logic_error(entry.name + ": order does not match its factorization");
    }
    return g;
  }();
  return groups;
}

AuditReport sporadic_order_audit() {
  AuditReport report;
  report.check = "sporadic_order";
  Json rows = Json::array();
  Json raw_failures = Json::array();
  bool all = true;
  for (const auto& entry : sporadic_groups()) {
    const BigInt l = entry.largest_sylow();
    const BigInt lo = entry.largest_odd_sylow();
    const BigInt raw_bound = l * (l * l - 1) / 2;
    const BigInt odd_bound = lo * (lo * lo - 1) / 2;
    const bool raw = entry.order > raw_bound;
    const bool odd = entry.order > odd_bound;
    all = all && odd;
    if (!raw) raw_failures.push_back(entry.name);
    rows.push_back({{"group", entry.name},
                    {"order", to_json_value(entry.order)},
                    {"largest_sylow", to_json_value(l)},
                    {"raw_bound", to_json_value(raw_bound)},
                    {"raw_holds", raw},
                    {"largest_odd_sylow", to_json_value(lo)},
                    {"odd_bound", to_json_value(odd_bound)},
                    {"odd_holds", odd}});
  }
  report.lhs = static_cast<std::uint64_t>(sporadic_groups().size());
  report.rhs = nullptr;
  report.verdict = all ? Verdict::pass : Verdict::fail;
  report.claim = "|S| > l(l^2 - 1)/2 with l the largest odd Sylow order";
  report.details = {{"raw_failures", raw_failures}, {"groups", rows}};
  return report;
}

AuditReport mu_equality_theorem_check(const PermGroup& g, const std::string& label) {
  AuditReport report;
  report.check = "mu_equality_theorem";
  report.inputs = {{"group", label}, {"order", to_json_value(g.order())}};
  const MuProfile profile = mu_profile(g);
  std::vector<std::uint64_t> identified;
  try {
    identified = identify_psl2(value_set(profile));
  } catch (const MalformedProfile&) {
    // Two primes share a value or a denominator is not a prime power.
  }
  report.lhs = profile_to_json(profile);
  report.rhs = identified;
  bool ok = true;
  Json rows = Json::array();
  if (!identified.empty()) {
    const bool perfect = derived_subgroup(g).order() == g.order();
    for (auto q : identified) {
      const bool order_match = psl2_order(q) == g.order();
      ok = ok && order_match && perfect;
      rows.push_back({{"q", q}, {"order_match", order_match}, {"perfect", perfect}});
    }
  }
  report.verdict = ok ? Verdict::pass : Verdict::fail;
  report.claim = "a group sharing the mu values of PSL(2,q) has its order and is perfect";
  report.details = {{"identified", rows}};
  return report;
}

AuditReport omega_minus_followup() {
  AuditReport report;
  report.check = "omega_minus_mu3_followup";
  report.inputs = {{"section", "POmega-(4,2)"}, {"candidate", "PSL(2,9)"}};
  const Rational whole = mu_analytic(9, 3);
  const Rational section = mu_analytic(5, 3);
  const bool iso = lie_order(LieFamily(LieType::orthogonal_minus, 2), 2) == psl2_order(5);
  report.lhs = to_json_value(whole);
  report.rhs = to_json_value(section);
  report.verdict = whole < section && iso ? Verdict::pass : Verdict::fail;
  report.claim = "mu_3(PSL(2,9)) < mu_3(PSL(2,5)), violating mu_r(G) >= mu_r(G/N)";
  report.details = {{"section_order_matches_PSL(2,5)", iso}};
  return report;
}

std::vector<AuditReport> family_audit(LieType type, const std::vector<std::uint64_t>& q0s) {
  std::vector<AuditReport> out{order_inequality_report(type)};
  if (type == LieType::suzuki) {
    out.push_back(suzuki_audit(1, 6));
  } else {
    for (auto& r : lie_order_comparison(type, q0s)) out.push_back(std::move(r));
  }
  return out;
}

void sort_reports(std::vector<AuditReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const AuditReport& a, const AuditReport& b) { return a.check < b.check; });
}

std::vector<AuditReport> run_all_audits(const AuditOptions& options) {
  std::vector<AuditReport> out;
  out.push_back(factorial_inequality_sweep(options.n_max));
  for (auto p : options.alternating_primes) {
    for (unsigned f = 1; f <= options.f_max; ++f) out.push_back(alternating_case_scan(p, f));
  }
  for (auto type : all_lie_types()) {
    for (auto& r : family_audit(type, options.q0s)) out.push_back(std::move(r));
  }
  out.push_back(claim3_audit(2, 12));
  out.push_back(claim2_constants());
  out.push_back(sporadic_order_audit());
  out.push_back(omega_minus_followup());
  for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13}) {
    out.push_back(mu_equality_theorem_check(psl2_group(q, options.cap), "PSL(2," + std::to_string(q) + ")"));
  }
  out.push_back(mu_equality_theorem_check(symmetric_group(5, options.cap), "S5"));
  out.push_back(mu_equality_theorem_check(symmetric_group(6, options.cap), "S6"));
  out.push_back(mu_equality_theorem_check(special_linear_2(5, options.cap), "SL(2,5)"));
  out.push_back(
      mu_equality_theorem_check(direct_product(alternating_group(6, options.cap), cyclic_group(2, options.cap)), "A6xZ2"));
  sort_reports(out);
  return out;
}

}  // namespace psl2mu
