#include <set>

#include "doctest.h"
#include "psl2mu/catalog.hpp"
#include "psl2mu/errors.hpp"
#include "psl2mu/proof_audit.hpp"
#include "psl2mu/psl2.hpp"

using namespace psl2mu;

namespace {

using PairSet = std::set<std::pair<unsigned, std::uint64_t>>;

PairSet pairs_of(const ScanBranch& branch) {
  PairSet out;
  for (const auto& p : branch.pairs) out.insert({p.n, p.m});
  return out;
}

const ScanBranch& branch_named(const std::vector<ScanBranch>& branches, const std::string& condition) {
  for (const auto& b : branches) {
    if (b.condition == condition) return b;
  }
  throw std::runtime_error("no branch " + condition);
}

std::set<std::uint64_t> as_set(const std::vector<std::uint64_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("factorial inequality") {
  const auto six = factorial_inequality(6);
  CHECK(six.ok());
  CHECK(six.lhs == "518400");
  CHECK(six.rhs == "470596");
  CHECK(factorial_inequality_sweep(200).ok());
  CHECK_THROWS_AS(factorial_inequality(5), DomainError);
  CHECK_THROWS_AS(factorial_inequality_sweep(5), DomainError);
}

TEST_CASE("alternating scan") {
  const std::vector<AlternatingSurvivor> expected{{3, 2, 6}, {5, 1, 5}};
  CHECK(alternating_survivors({3, 5, 7, 11, 13}, 6) == expected);
  // A_6 has order 360 = |PSL(2, 9)|.
  const auto a6 = alternating_case_scan(3, 2);
  CHECK(a6.verdict == Verdict::survivor);
  CHECK(a6.rhs == "360");
  CHECK(alternating_case_scan(7, 1).verdict == Verdict::pass);
  CHECK_THROWS_AS(alternating_case_scan(2, 1), NotPrime);
  CHECK_THROWS_AS(alternating_case_scan(9, 1), NotPrime);
  CHECK_THROWS_AS(alternating_case_scan(3, 0), DomainError);
}

TEST_CASE("classical scanner lists") {
  const auto psl = order_inequality_solutions(LieType::linear);
  CHECK(pairs_of(branch_named(psl, "m > 1")) == PairSet{{2, 2}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {4, 4}, {5, 2}, {5, 3},
                                                         {5, 4}, {5, 5}, {6, 2}, {6, 3}, {6, 4}, {6, 5}, {6, 6}});
  CHECK(pairs_of(branch_named(order_inequality_solutions(LieType::unitary), "m != 2 mod 4")) ==
        PairSet{{3, 1}, {4, 1}, {4, 4}, {5, 1}, {5, 4}, {6, 1}, {6, 3}, {6, 4}});
  const PairSet sp{{2, 4}, {3, 3}, {3, 4}, {3, 6}, {4, 3}, {4, 4}, {4, 6}, {4, 8}};
  CHECK(pairs_of(branch_named(order_inequality_solutions(LieType::symplectic), "m > 2")) == sp);
  CHECK(pairs_of(branch_named(order_inequality_solutions(LieType::orthogonal_odd), "m > 2")) == sp);
  const auto plus = order_inequality_solutions(LieType::orthogonal_plus);
  CHECK(pairs_of(branch_named(plus, "m > 2, m | n or m does not divide 2n")) ==
        PairSet{{3, 3}, {3, 4}, {4, 3}, {4, 4}, {4, 6}, {5, 3}, {5, 4}, {5, 5}, {5, 6}, {5, 8}});
  CHECK(pairs_of(branch_named(plus, "m > 2, m does not divide n, m | 2n")) ==
        PairSet{{3, 6}, {4, 8}, {5, 10}, {6, 4}, {6, 12}});
  CHECK(pairs_of(branch_named(order_inequality_solutions(LieType::orthogonal_minus), "m > 2, m | n")) ==
        PairSet{{3, 3}, {4, 4}, {5, 5}});
}

TEST_CASE("classical scanner exponents") {
  for (auto type : all_lie_types()) {
    if (!is_classical(type)) continue;
    for (const auto& branch : order_inequality_solutions(type)) {
      for (const auto& p : branch.pairs) {
        CHECK(exponent_e(LieFamily(type, p.n), p.m) == p.e);
      }
    }
  }
  // Pairs with e(m) = 0: Phi_m occurs in the product before the "- 1" term.
  const auto minus = order_inequality_solutions(LieType::orthogonal_minus);
  for (const auto& p : branch_named(minus, "m > 2, m | n").pairs) {
    CHECK(p.e == (p.m == 4 ? 1u : 0u));
  }
}

TEST_CASE("exceptional scanner lists") {
  CHECK(as_set(exceptional_solutions(LieType::triality)) == std::set<std::uint64_t>{3, 6, 12});
  // m = 1: h + 1 = 7 < 2 * 2 * e(1) = 8.
  CHECK(as_set(exceptional_solutions(LieType::g2)) == std::set<std::uint64_t>{1, 2, 3, 6});
  CHECK(as_set(exceptional_solutions(LieType::ree_g2)) == std::set<std::uint64_t>{2, 6});
  CHECK(as_set(exceptional_solutions(LieType::f4)) == std::set<std::uint64_t>{6, 12});
  CHECK(as_set(exceptional_solutions(LieType::ree_f4)) == std::set<std::uint64_t>{4, 6, 12});
  CHECK(as_set(exceptional_solutions(LieType::twisted_e6)) == std::set<std::uint64_t>{6, 18});
  CHECK(as_set(exceptional_solutions(LieType::suzuki)) == std::set<std::uint64_t>{1, 4});
  CHECK(exceptional_solutions(LieType::e6).empty());
  CHECK(exceptional_solutions(LieType::e7).empty());
  CHECK(exceptional_solutions(LieType::e8).empty());
  CHECK_THROWS_AS(exceptional_solutions(LieType::linear), std::invalid_argument);
}

TEST_CASE("order comparison outcomes") {
  const std::vector<std::uint64_t> q0s{2, 3, 4, 5, 7, 8, 9};
  // PSL(3, 2): 168 <= 7^3.
  const auto psl3 = subcase_order_comparison(LieFamily(LieType::linear, 3), 3, q0s);
  CHECK(psl3.verdict == Verdict::survivor);
  // POmega-(4, 2) = PSL(2, 4): e(2) = 1, 60 > 3^3.
  const auto om = subcase_order_comparison(LieFamily(LieType::orthogonal_minus, 2), 2, {2});
  CHECK(om.verdict == Verdict::pass);
  CHECK(om.lhs == "60");
  CHECK(om.rhs == "27");
  // e(3) = 0 for POmega-(6).
  CHECK(subcase_order_comparison(LieFamily(LieType::orthogonal_minus, 3), 3, q0s).verdict == Verdict::vacuous);
  // 2G2 skips q0 that are not odd powers of 3.
  const auto ree = subcase_order_comparison(LieFamily(LieType::ree_g2), 6, {3, 9, 27});
  CHECK(ree.details["invalid_q0"] == Json::array({9}));
  CHECK(ree.verdict == Verdict::pass);

  std::vector<AuditReport> all;
  for (auto type : all_lie_types()) {
    for (auto& r : lie_order_comparison(type, q0s)) {
      CHECK(r.verdict != Verdict::fail);
      all.push_back(std::move(r));
    }
  }
  std::set<std::string> kinds;
  for (const auto& s : comparison_survivors(all)) kinds.insert(s.family + "/" + std::to_string(s.m));
  CHECK(kinds == std::set<std::string>{"PSL(2)/1", "PSL(2)/2", "PSL(3)/3", "POmega-(4)/4"});
  CHECK(lie_order_comparison(LieType::suzuki, q0s).empty());
}

TEST_CASE("suzuki audit") {
  const auto r = suzuki_audit(1, 6);
  CHECK(r.ok());
  CHECK(r.details["instances"][0]["gcd"] == "1");
  CHECK(r.details["instances"][0]["q0"] == "8");
  CHECK(r.details["instances"][0]["other_prime"] == "13");
  CHECK_THROWS_AS(suzuki_audit(0, 2), DomainError);
}

TEST_CASE("mu_2 dispatch") {
  const auto r = claim3_audit(2, 12);
  CHECK(r.ok());
  const auto& per_f = r.details["per_f"];
  CHECK(per_f[0]["matches"].size() == 2);
  CHECK(per_f[0].contains("note"));
  for (std::size_t i = 1; i < per_f.size(); ++i) CHECK(per_f[i]["matches"].size() == 1);
  CHECK(per_f[1]["matches"][0] == "PSL(2,8)");
  CHECK(mu_analytic(11, 2) == Rational(1, 4));
  CHECK_THROWS_AS(claim3_audit(1, 4), DomainError);
}

TEST_CASE("non-abelian Sylow constants") {
  CHECK(ree_f4_mu3(1) == Rational(86, 243));
  CHECK(ree_f4_mu3(1) == 1 - (Rational(89, 144) + Rational(1, 36) + Rational(1, 3888)));
  CHECK(is_psl2_characteristic_value(Rational(1, 9)));
  CHECK(is_psl2_characteristic_value(Rational(2, 27)));
  CHECK(is_psl2_characteristic_value(Rational(1, 4)));
  CHECK_FALSE(is_psl2_characteristic_value(Rational(8, 27)));
  CHECK_FALSE(is_psl2_characteristic_value(Rational(1, 6)));
  CHECK_FALSE(is_psl2_characteristic_value(Rational(0)));
  CHECK(claim2_constants().ok());
}

TEST_CASE("sporadic data") {
  const auto& groups = sporadic_groups();
  CHECK(groups.size() == 27);
  const auto find = [&](const std::string& name) {
    for (const auto& g : groups) {
      if (g.name == name) return g;
    }
    throw std::runtime_error(name);
  };
  CHECK(find("M11").largest_sylow() == 16);
  CHECK(find("J1").largest_sylow() == 19);
  CHECK(find("2F4(2)'").largest_sylow() == 2048);
  CHECK(find("2F4(2)'").largest_odd_sylow() == 27);
  const auto r = sporadic_order_audit();
  CHECK(r.ok());
  std::set<std::string> raw;
  for (const auto& n : r.details["raw_failures"]) raw.insert(n.get<std::string>());
  CHECK(raw.count("2F4(2)'"));
  CHECK(raw.count("M12"));
  CHECK_FALSE(raw.count("M11"));
  CHECK_FALSE(raw.count("J1"));
}

TEST_CASE("end-to-end identification") {
  const auto p7 = mu_equality_theorem_check(psl2_group(7), "PSL(2,7)");
  CHECK(p7.ok());
  CHECK(p7.rhs == Json::array({7}));
  const auto p4 = mu_equality_theorem_check(psl2_group(4), "PSL(2,4)");
  CHECK(p4.ok());
  CHECK(p4.rhs == Json::array({4, 5}));
  for (const auto& [g, label] : std::vector<std::pair<PermGroup, std::string>>{
           {symmetric_group(5), "S5"}, {special_linear_2(5), "SL(2,5)"}}) {
    const auto r = mu_equality_theorem_check(g, label);
    CHECK(r.ok());
    CHECK(r.rhs.empty());
  }
}

TEST_CASE("omega minus follow-up") {
  const auto r = omega_minus_followup();
  CHECK(r.ok());
  CHECK(r.lhs == "2/9");
  CHECK(r.rhs == "1/3");
}

TEST_CASE("run all") {
  const auto reports = run_all_audits();
  for (const auto& r : reports) CHECK_MESSAGE(r.verdict != Verdict::fail, r.check);
  CHECK(std::is_sorted(reports.begin(), reports.end(),
                       [](const AuditReport& a, const AuditReport& b) { return a.check < b.check; }));
  CHECK(to_json(reports).dump() == to_json(run_all_audits()).dump());
}
