#pragma once

// Text format for permutation groups:
//
//   # comment
//   degree 5
//   (0 1 2 3 4)
//   (0 1 2)
//
// One generator per line in disjoint-cycle notation with 0-based points.
// "()" is the identity. A file with no generator lines is the trivial group.

#include <iosfwd>
#include <string>

#include "psl2mu/perm_group.hpp"

namespace psl2mu {

/// Throws ParseError carrying the 1-based line number.
PermGroup read_group(std::istream& in, std::uint64_t cap = kDefaultEnumerationCap);
PermGroup parse_group(const std::string& text, std::uint64_t cap = kDefaultEnumerationCap);

/// Throws ParseError with line 0 when the file cannot be opened.
PermGroup load_group(const std::string& path, std::uint64_t cap = kDefaultEnumerationCap);

/// Inverse of read_group.
std::string write_group(const PermGroup& g);

}  // namespace psl2mu
