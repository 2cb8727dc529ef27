#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "psl2mu/errors.hpp"
#include "psl2mu/perm_group.hpp"

using namespace psl2mu;
using oracle::cycle;

namespace {

PermGroup symmetric(std::size_t n) {
  if (n == 1) return PermGroup::trivial(1);
  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), Point{0});
  return PermGroup(n, {cycle(n, {0, 1}), cycle(n, all)});
}

PermGroup alternating5() { return PermGroup(5, {cycle(5, {0, 1, 2, 3, 4}), cycle(5, {0, 1, 2})}); }

PermGroup cyclic(std::size_t n) {
  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), Point{0});
  return PermGroup(n, {cycle(n, all)});
}

}  // namespace

TEST_CASE("composition applies the right factor first") {
  const auto c = cycle(3, {0, 1, 2});
  const auto t = cycle(3, {0, 1});
  // 0 -> 1 -> 2, 1 -> 0 -> 1, 2 -> 2 -> 0
  CHECK(compose(c, t) == cycle(3, {0, 2}));
  CHECK(compose(t, c) == cycle(3, {1, 2}));
  CHECK(compose(t, t).is_identity());
  CHECK(compose(Permutation::identity(3), c) == c);
  CHECK_THROWS_AS(compose(c, Permutation::identity(4)), DegreeError);
}

TEST_CASE("permutation validation and printing") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation({0, 3}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), InvalidPermutation);
  CHECK(Permutation::identity(4).to_string() == "()");
  CHECK(Permutation::from_cycles(5, {{3, 4}, {2, 0, 1}}).to_string() == "(0 1 2)(3 4)");
}

TEST_CASE("element order matches repeated multiplication") {
  CHECK(element_order(Permutation::identity(5)) == 1);
  CHECK(element_order(cycle(5, {0, 1, 2, 3, 4})) == 5);
  const auto x = Permutation::from_cycles(5, {{0, 1}, {2, 3, 4}});
  CHECK(element_order(x) == 6);
  CHECK(element_order(x) == oracle::order_by_powers(x));
  CHECK(power(x, 6).is_identity());
  CHECK(power(x, 2) == x * x);
}

TEST_CASE("group order against breadth-first closure") {
  CHECK(group_order(alternating5()) == 60);
  CHECK(group_order(PermGroup::trivial(3)) == 1);
  CHECK(group_order(symmetric(7)) == 5040);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto g = symmetric(n);
    CHECK(g.order() == oracle::closure(g.generators()).size());
  }
  const auto a5 = alternating5();
  CHECK(a5.order() == oracle::closure(a5.generators()).size());
}

TEST_CASE("enumeration yields every element once, in rank order") {
  const auto a5 = alternating5();
  const auto& elems = enumerate_elements(a5);
  const std::set<Permutation> distinct(elems.begin(), elems.end());
  CHECK(distinct == oracle::closure(a5.generators()));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    CHECK(a5.index_of(elems[i]) == i);
    CHECK(a5.chain().unrank(i) == elems[i]);
  }
  CHECK(oracle::order_histogram(distinct)[2] == 15);
  CHECK(enumerate_elements(PermGroup::trivial(4)).size() == 1);
  CHECK(enumerate_elements(symmetric(3)).size() == 6);
}

TEST_CASE("cap is enforced") {
  const PermGroup s7(7, symmetric(7).generators(), 1000);
  CHECK(s7.order() == 5040);
  CHECK_THROWS_AS(s7.elements(), CapExceeded);
  CHECK_THROWS_AS(count_solutions_xn(s7, 2), CapExceeded);
  CHECK(s7.with_cap(10000).elements().size() == 5040);
}

TEST_CASE("membership") {
  const auto a5 = alternating5();
  CHECK(a5.contains(cycle(5, {0, 1, 2})));
  CHECK_FALSE(a5.contains(cycle(5, {0, 1})));
  CHECK_THROWS_AS(a5.index_of(cycle(5, {0, 1})), NotAMember);
  CHECK_THROWS_AS(Subgroup(a5, {cycle(5, {0, 1})}), NotAMember);
}

TEST_CASE("centralizers") {
  const auto s3 = symmetric(3);
  CHECK(centralizer(s3, Permutation::identity(3)).order() == 6);
  const auto c = centralizer(s3, cycle(3, {0, 1, 2}));
  CHECK(c.order() == 3);
  CHECK(c.contains(cycle(3, {0, 2, 1})));
  CHECK(centralizer(alternating5(), cycle(5, {0, 1, 2, 3, 4})).order() == 5);
  CHECK_THROWS_AS(centralizer(alternating5(), cycle(5, {0, 1})), NotAMember);
}

TEST_CASE("conjugacy class representatives") {
  CHECK(conjugacy_class_reps(symmetric(3)).size() == 3);
  const auto a5 = alternating5();
  CHECK(conjugacy_class_reps(a5).size() == 5);
  CHECK(conjugacy_class_reps(a5, 2).size() == 1);
  CHECK(conjugacy_class_reps(a5, 5).size() == 2);
  CHECK(conjugacy_class_reps(a5, 3).size() == 1);
  // Representatives are lexicographically least in their class.
  for (const auto& cls : conjugacy_classes(a5)) {
    for (const auto& g : a5.elements()) CHECK_FALSE(conjugate(cls.representative, g) < cls.representative);
  }
}

TEST_CASE("class equation and centralizer sizes") {
  for (const auto& g : {symmetric(4), alternating5(), cyclic(6)}) {
    std::uint64_t total = 0;
    for (const auto& cls : conjugacy_classes(g)) {
      total += cls.size;
      CHECK(centralizer(g, cls.representative).order() * cls.size == g.order());
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("solution counts of x^n = 1") {
  CHECK(count_solutions_xn(symmetric(3), 2) == 4);
  CHECK(count_solutions_xn(alternating5(), 5) == 25);
  CHECK(count_solutions_xn(alternating5(), 60) == 60);
  CHECK(count_solutions_xn(cyclic(12), 4) == 4);
}

TEST_CASE("normality") {
  const auto s3 = symmetric(3);
  const Subgroup a3(s3, {cycle(3, {0, 1, 2})});
  CHECK(is_normal(s3, a3));
  CHECK_FALSE(is_normal(s3, Subgroup(s3, {cycle(3, {0, 1})})));
  const auto a5 = alternating5();
  CHECK_FALSE(is_normal(a5, Subgroup(a5, {cycle(5, {0, 1, 2})})));
  CHECK_FALSE(is_normal(a5, centralizer(a5, cycle(5, {0, 1, 2, 3, 4}))));
  CHECK(is_normal(a5, Subgroup::trivial(a5)));
}

TEST_CASE("quotients act on cosets") {
  const auto s3 = symmetric(3);
  const Subgroup a3(s3, {cycle(3, {0, 1, 2})});
  const auto q = quotient_group(s3, a3);
  CHECK(q.degree() == 2);
  CHECK(q.order() == 2);
  const auto same = quotient_group(s3, Subgroup::trivial(s3));
  CHECK(same.order() == 6);
  CHECK_THROWS_AS(quotient_group(s3, Subgroup(s3, {cycle(3, {0, 1})})), NotNormal);
  const auto z12 = cyclic(12);
  CHECK(quotient_group(z12, Subgroup(z12, {power(z12.generators()[0], 4)})).order() == 4);
}

TEST_CASE("derived subgroups") {
  const auto s3 = symmetric(3);
  const auto d = derived_subgroup(s3);
  CHECK(d.order() == 3);
  CHECK(d.contains(cycle(3, {0, 1, 2})));
  CHECK(derived_subgroup(alternating5()).order() == 60);
  CHECK(derived_subgroup(cyclic(10)).order() == 1);
  CHECK(derived_subgroup(symmetric(5)).order() == 60);
  CHECK(center(symmetric(4)).order() == 1);
  CHECK(center(cyclic(7)).order() == 7);
}

TEST_CASE("closure of solution sets") {
  const auto a5 = alternating5();
  // Five solutions of x^5 = 1 in a cyclic subgroup of order 5 form a subgroup.
  const auto z5 = Subgroup(a5, {cycle(5, {0, 1, 2, 3, 4})});
  CHECK(is_closed_subset(a5, z5.group().elements()));
  CHECK_FALSE(is_closed_subset(a5, solutions_xn(a5, 2)));
}
