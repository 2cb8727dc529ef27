#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace psl2mu {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}, stored as its image table.
///
/// Products follow the apply-right-first convention: (a * b)(i) = a(b(i)).
/// Ordering is lexicographic on the image sequence, which is what picks
/// canonical conjugacy-class representatives.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidPermutation unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds from disjoint cycles; points not mentioned are fixed.
  /// Throws InvalidPermutation on out-of-range or repeated points.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Nontrivial cycles, each starting at its least point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// Disjoint-cycle notation, e.g. "(0 1 2)(3 4)"; the identity prints "()".
  std::string to_string() const;

  /// Least point not fixed, or degree() for the identity.
  Point least_moved_point() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Point> images_;
};

/// a * b with b applied first. Throws DegreeError on mismatched degrees.
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

/// g x g^-1
Permutation conjugate(const Permutation& x, const Permutation& g);

/// Least m >= 1 with x^m = 1, as the lcm of cycle lengths.
/// Throws std::overflow_error if the order does not fit in 64 bits.
std::uint64_t element_order(const Permutation& x);

Permutation power(const Permutation& x, std::uint64_t exponent);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace psl2mu
