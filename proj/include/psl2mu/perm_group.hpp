#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "psl2mu/numtheory.hpp"
#include "psl2mu/permutation.hpp"

namespace psl2mu {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Deterministic Schreier-Sims base and strong generating set.
///
/// Each level stores the generators that were first added there; the strong
/// generators of level i are all generators stored at levels >= i. New levels
/// take the least point moved by the residue that created them.
class StabilizerChain {
 public:
  explicit StabilizerChain(std::size_t degree);

  /// Extends the group by g. Returns false when g was already a member.
  bool add_generator(const Permutation& g);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_sizes() const;

  BigInt order() const;
  bool contains(const Permutation& g) const;

  /// Mixed-radix index of g (level 0 most significant), in [0, order).
  /// Throws NotAMember.
  std::uint64_t rank(const Permutation& g) const;
  Permutation unrank(std::uint64_t index) const;

  /// Every element in rank order.
  std::vector<Permutation> elements() const;

 private:
  struct Level {
    Point base;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::int64_t> orbit_index;  // -1 when the point is off the orbit
    std::vector<Permutation> transversal;   // transversal[k](base) == orbit[k]
    std::vector<Permutation> transversal_inverse;
  };

  // Residue of g after sifting from `level`, and the level where it stopped.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t level) const;
  void rebuild_orbit(std::size_t level);
  void complete(std::size_t level);
  void insert_at(std::size_t level, const Permutation& g, std::size_t floor);

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// Generator-defined permutation group with lazily cached enumeration.
///
/// Copies share the cache. The chain is built at construction; the element
/// list and element orders are computed once on first use, and only when the
/// order is within the enumeration cap.
class PermGroup {
 public:
  /// Throws DegreeError on mismatched generator degrees and
  /// std::invalid_argument on an empty generator list or zero degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::uint64_t cap = kDefaultEnumerationCap);

  static PermGroup trivial(std::size_t degree, std::uint64_t cap = kDefaultEnumerationCap);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::uint64_t cap() const noexcept { return cap_; }
  const StabilizerChain& chain() const noexcept { return cache_->chain; }

  const BigInt& order() const noexcept { return cache_->order; }
  bool contains(const Permutation& x) const;

  /// Position of x in elements(). Throws NotAMember.
  std::size_t index_of(const Permutation& x) const;

  /// Throws CapExceeded when order() > cap().
  const std::vector<Permutation>& elements() const;
  /// element_orders()[i] is the order of elements()[i].
  const std::vector<std::uint64_t>& element_orders() const;

  /// Same group, different cap; shares nothing mutable.
  PermGroup with_cap(std::uint64_t cap) const;

 private:
  struct Cache {
    explicit Cache(std::size_t degree) : chain(degree) {}
    StabilizerChain chain;
    BigInt order;
    std::once_flag elements_once;
    std::vector<Permutation> elements;
    std::once_flag orders_once;
    std::vector<std::uint64_t> orders;
  };

  void require_within_cap() const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::uint64_t cap_;
  std::shared_ptr<Cache> cache_;
};

/// A subgroup given by generators, each verified to lie in the parent.
class Subgroup {
 public:
  /// Throws NotAMember when a generator is outside the parent.
  Subgroup(const PermGroup& parent, std::vector<Permutation> generators);

  static Subgroup trivial(const PermGroup& parent);
  static Subgroup whole(const PermGroup& parent);
  /// Subgroup generated by `members`, with a greedily pruned generator list.
  static Subgroup generated_by(const PermGroup& parent, const std::vector<Permutation>& members);

  const PermGroup& parent() const noexcept { return parent_; }
  const PermGroup& group() const noexcept { return group_; }
  const BigInt& order() const noexcept { return group_.order(); }
  bool contains(const Permutation& x) const { return group_.contains(x); }

 private:
  Subgroup(PermGroup parent, PermGroup group) : parent_(std::move(parent)), group_(std::move(group)) {}

  PermGroup parent_;
  PermGroup group_;
};

struct ConjugacyClass {
  Permutation representative;  // lexicographically least member
  std::uint64_t size;
  std::uint64_t element_order;
};

BigInt group_order(const PermGroup& g);
const std::vector<Permutation>& enumerate_elements(const PermGroup& g);

/// Throws NotAMember, CapExceeded.
Subgroup centralizer(const PermGroup& g, const Permutation& x);

/// All classes, ordered by representative.
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g);

/// One lexicographically least representative per class. With `prime`,
/// only classes of elements whose order is a positive power of it.
std::vector<Permutation> conjugacy_class_reps(const PermGroup& g, std::optional<std::uint64_t> prime = std::nullopt);

/// |{x in G : x^n = 1}|
BigInt count_solutions_xn(const PermGroup& g, std::uint64_t n);

/// The solutions of x^n = 1, in element order.
std::vector<Permutation> solutions_xn(const PermGroup& g, std::uint64_t n);

/// True when the given elements form a subgroup, i.e. their span has exactly
/// that many elements. `members` must be distinct elements of g.
bool is_closed_subset(const PermGroup& g, const std::vector<Permutation>& members);

bool is_normal(const PermGroup& g, const Subgroup& h);

/// Action on the left cosets of n. Throws NotNormal, CapExceeded.
PermGroup quotient_group(const PermGroup& g, const Subgroup& n);

Subgroup normal_closure(const PermGroup& g, const std::vector<Permutation>& seeds);
Subgroup derived_subgroup(const PermGroup& g);
Subgroup center(const PermGroup& g);

/// [a, b] = a^-1 b^-1 a b
Permutation commutator(const Permutation& a, const Permutation& b);

}  // namespace psl2mu
