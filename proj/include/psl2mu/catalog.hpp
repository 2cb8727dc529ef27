#pragma once

#include <string>
#include <vector>

#include "psl2mu/perm_group.hpp"

namespace psl2mu {

struct CatalogEntry {
  std::string name;
  PermGroup group;
  // Direct products only: factor names and how many leading generators
  // belong to the first factor.
  std::vector<std::string> factors = {};
  std::size_t first_factor_generators = 0;
};

struct NormalSubgroupEntry {
  std::string group_name;
  std::string subgroup_name;
  PermGroup group;
  Subgroup subgroup;
};

PermGroup symmetric_group(std::size_t n, std::uint64_t cap = kDefaultEnumerationCap);
PermGroup alternating_group(std::size_t n, std::uint64_t cap = kDefaultEnumerationCap);
/// Dihedral group of order 2k on k points.
PermGroup dihedral_group(std::size_t k, std::uint64_t cap = kDefaultEnumerationCap);
PermGroup cyclic_group(std::size_t n, std::uint64_t cap = kDefaultEnumerationCap);
/// SL(2, p) on the p^2 - 1 nonzero vectors of GF(p)^2.
PermGroup special_linear_2(std::uint64_t p, std::uint64_t cap = kDefaultEnumerationCap);
/// Acts on the disjoint union of both point sets, first factor first.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

/// Every built-in group, in a fixed order.
std::vector<CatalogEntry> builtin_catalog(std::uint64_t cap = kDefaultEnumerationCap);

/// Looks a group up by its catalog name. Throws std::out_of_range.
CatalogEntry catalog_group(const std::string& name, std::uint64_t cap = kDefaultEnumerationCap);

/// Normal subgroups worth replaying quotient checks on: trivial, centre,
/// first and second derived subgroups, the whole group and, for direct
/// products, both factors. Duplicates are dropped, as are pairs whose index
/// exceeds `max_index` (the quotient acts on that many cosets).
std::vector<NormalSubgroupEntry> normal_subgroup_table(const std::vector<CatalogEntry>& catalog,
                                                       std::uint64_t max_index = 1000);

}  // namespace psl2mu
