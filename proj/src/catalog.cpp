#include "psl2mu/catalog.hpp"

#include <numeric>
#include <stdexcept>

#include "psl2mu/numtheory.hpp"
#include "psl2mu/psl2.hpp"

namespace psl2mu {

namespace {

Permutation full_cycle(std::size_t degree, Point first, Point last) {
  std::vector<Point> pts(last - first + 1);
  std::iota(pts.begin(), pts.end(), first);
  return Permutation::from_cycles(degree, {pts});
}

bool same_subgroup(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return false;
  for (const auto& g : a.group().generators()) {
    if (!b.contains(g)) return false;
  }
  return true;
}

}  // namespace

PermGroup symmetric_group(std::size_t n, std::uint64_t cap) {
  if (n < 2) return PermGroup::trivial(std::max<std::size_t>(n, 1), cap);
  return PermGroup(n, {full_cycle(n, 0, 1), full_cycle(n, 0, static_cast<Point>(n - 1))}, cap);
}

PermGroup alternating_group(std::size_t n, std::uint64_t cap) {
  if (n < 3) return PermGroup::trivial(std::max<std::size_t>(n, 1), cap);
  const Permutation three = full_cycle(n, 0, 2);
  if (n == 3) return PermGroup(n, {three}, cap);
  const Permutation long_cycle = n % 2 ? full_cycle(n, 0, static_cast<Point>(n - 1))
                                       : full_cycle(n, 1, static_cast<Point>(n - 1));
  return PermGroup(n, {three, long_cycle}, cap);
}

PermGroup dihedral_group(std::size_t k, std::uint64_t cap) {
  if (k < 3) throw std::invalid_argument("dihedral group needs at least 3 points");
  std::vector<Point> reflection(k);
  for (std::size_t i = 0; i < k; ++i) reflection[i] = static_cast<Point>((k - i) % k);
  return PermGroup(k, {full_cycle(k, 0, static_cast<Point>(k - 1)), Permutation(std::move(reflection))}, cap);
}

PermGroup cyclic_group(std::size_t n, std::uint64_t cap) {
  if (n < 2) return PermGroup::trivial(1, cap);
  return PermGroup(n, {full_cycle(n, 0, static_cast<Point>(n - 1))}, cap);
}

PermGroup special_linear_2(std::uint64_t p, std::uint64_t cap) {
  if (!is_prime(p)) throw std::invalid_argument("special_linear_2 expects a prime");
  const std::size_t degree = p * p - 1;
  // Vector (a, b) != 0 is point a*p + b - 1.
  auto act = [&](std::uint64_t m00, std::uint64_t m01, std::uint64_t m10, std::uint64_t m11) {
    std::vector<Point> images(degree);
    for (std::uint64_t a = 0; a < p; ++a) {
      for (std::uint64_t b = 0; b < p; ++b) {
        if (a == 0 && b == 0) continue;
        const std::uint64_t x = (m00 * a + m01 * b) % p;
        const std::uint64_t y = (m10 * a + m11 * b) % p;
        images[a * p + b - 1] = static_cast<Point>(x * p + y - 1);
      }
    }
    return Permutation(std::move(images));
  };
  return PermGroup(degree, {act(1, 1, 0, 1), act(0, p - 1, 1, 0)}, cap);
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (Point i = 0; i < a.degree(); ++i) images[i] = g[i];
    gens.emplace_back(std::move(images));
  }
  const auto shift = static_cast<Point>(a.degree());
  for (const auto& h : b.generators()) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (Point i = 0; i < b.degree(); ++i) images[shift + i] = shift + h[i];
    gens.emplace_back(std::move(images));
  }
  return PermGroup(degree, std::move(gens), std::min(a.cap(), b.cap()));
}

std::vector<CatalogEntry> builtin_catalog(std::uint64_t cap) {
  std::vector<CatalogEntry> out;
  auto add = [&out](std::string name, PermGroup g) { out.push_back({std::move(name), std::move(g)}); };
  for (std::size_t n = 1; n <= 7; ++n) add("S" + std::to_string(n), symmetric_group(n, cap));
  for (std::size_t n = 3; n <= 7; ++n) add("A" + std::to_string(n), alternating_group(n, cap));
  for (std::size_t k = 3; k <= 20; ++k) add("D" + std::to_string(2 * k), dihedral_group(k, cap));
  for (std::size_t n = 1; n <= 64; ++n) add("Z" + std::to_string(n), cyclic_group(n, cap));
  add("SL(2,3)", special_linear_2(3, cap));
  add("SL(2,5)", special_linear_2(5, cap));

  const std::vector<std::pair<std::string, std::string>> products{
      {"S3", "Z5"}, {"A6", "Z2"}, {"Z2", "Z2"}, {"Z2", "Z4"},      {"Z3", "Z3"}, {"S3", "S3"},
      {"A4", "Z2"}, {"SL(2,3)", "Z2"}, {"A5", "Z3"}, {"D8", "Z2"}, {"Z4", "Z4"}};
  auto find = [&out](const std::string& name) -> const PermGroup& {
    for (const auto& e : out) {
      if (e.name == name) return e.group;
    }
    throw std::out_of_range("unknown catalog group " + name);
  };
  for (const auto& [left, right] : products) {
    const PermGroup& a = find(left);
    CatalogEntry entry{left + "x" + right, direct_product(a, find(right)), {left, right}, a.generators().size()};
    out.push_back(std::move(entry));
  }

  for (std::uint64_t q = 4; q <= 49; ++q) {
    if (prime_power(q)) add("PSL(2," + std::to_string(q) + ")", psl2_group(q, cap));
  }
  return out;
}

CatalogEntry catalog_group(const std::string& name, std::uint64_t cap) {
  for (auto& e : builtin_catalog(cap)) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("unknown catalog group " + name);
}

std::vector<NormalSubgroupEntry> normal_subgroup_table(const std::vector<CatalogEntry>& catalog,
                                                       std::uint64_t max_index) {
  std::vector<NormalSubgroupEntry> out;
  for (const auto& entry : catalog) {
    const PermGroup& g = entry.group;
    if (g.order() > g.cap()) continue;
    std::vector<std::pair<std::string, Subgroup>> candidates;
    candidates.emplace_back("trivial", Subgroup::trivial(g));
    candidates.emplace_back("centre", center(g));
    const Subgroup derived = derived_subgroup(g);
    candidates.emplace_back("derived", derived);
    candidates.emplace_back("second_derived", normal_closure(g, [&] {
                              std::vector<Permutation> seeds;
                              const auto& gens = derived.group().generators();
                              for (std::size_t i = 0; i < gens.size(); ++i) {
                                for (std::size_t j = i + 1; j < gens.size(); ++j) {
                                  seeds.push_back(commutator(gens[i], gens[j]));
                                }
                              }
                              return seeds;
                            }()));
    candidates.emplace_back("whole", Subgroup::whole(g));
    if (!entry.factors.empty()) {
      const auto& gens = g.generators();
      const auto split = static_cast<std::ptrdiff_t>(entry.first_factor_generators);
      candidates.emplace_back(entry.factors[0], Subgroup(g, {gens.begin(), gens.begin() + split}));
      candidates.emplace_back(entry.factors[1], Subgroup(g, {gens.begin() + split, gens.end()}));
    }
    std::vector<Subgroup> kept;
    for (auto& [label, sub] : candidates) {
      if (g.order() / sub.order() > max_index) continue;
      bool duplicate = false;
      for (const auto& k : kept) duplicate = duplicate || same_subgroup(k, sub);
      if (duplicate) continue;
      kept.push_back(sub);
      out.push_back({entry.name, label, g, sub});
    }
  }
  return out;
}

}  // namespace psl2mu
