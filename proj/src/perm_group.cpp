#include "psl2mu/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "psl2mu/errors.hpp"

namespace psl2mu {

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree) : degree_(degree) {}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const auto& level : levels_) out.push_back(level.base);
  return out;
}

std::vector<std::size_t> StabilizerChain::orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels_) out.push_back(level.orbit.size());
  return out;
}

BigInt StabilizerChain::order() const {
  BigInt n = 1;
  for (const auto& level : levels_) n *= level.orbit.size();
  return n;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g, std::size_t level) const {
  for (; level < levels_.size(); ++level) {
    const Level& l = levels_[level];
    const std::int64_t k = l.orbit_index[g[l.base]];
    if (k < 0) return {std::move(g), level};
    g = compose(l.transversal_inverse[static_cast<std::size_t>(k)], g);
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw DegreeError("membership test: degree mismatch");
  auto [residue, level] = sift(g, 0);
  return level == levels_.size() && residue.is_identity();
}

void StabilizerChain::rebuild_orbit(std::size_t level) {
  Level& l = levels_[level];
  l.orbit.assign(1, l.base);
  l.orbit_index.assign(degree_, -1);
  l.orbit_index[l.base] = 0;
  l.transversal.assign(1, Permutation::identity(degree_));
  l.transversal_inverse.assign(1, Permutation::identity(degree_));
  for (std::size_t k = 0; k < l.orbit.size(); ++k) {
    for (std::size_t j = level; j < levels_.size(); ++j) {
      for (const Permutation& s : levels_[j].generators) {
        const Point image = s[l.orbit[k]];
        if (l.orbit_index[image] >= 0) continue;
        l.orbit_index[image] = static_cast<std::int64_t>(l.orbit.size());
        l.orbit.push_back(image);
        Permutation u = compose(s, l.transversal[k]);
        l.transversal_inverse.push_back(u.inverse());
        l.transversal.push_back(std::move(u));
      }
    }
  }
}

void StabilizerChain::insert_at(std::size_t level, const Permutation& g, std::size_t floor) {
  if (level == levels_.size()) {
    Level fresh;
    fresh.base = g.least_moved_point();
    levels_.push_back(std::move(fresh));
  }
  levels_[level].generators.push_back(g);
  // Levels down to `floor` gained a strong generator; deeper ones are untouched.
  for (std::size_t j = level + 1; j-- > floor;) complete(j);
}

void StabilizerChain::complete(std::size_t level) {
  for (;;) {
    rebuild_orbit(level);
    bool extended = false;
    const std::size_t orbit_size = levels_[level].orbit.size();
    for (std::size_t k = 0; k < orbit_size && !extended; ++k) {
      for (std::size_t j = level; j < levels_.size() && !extended; ++j) {
        for (std::size_t gi = 0; gi < levels_[j].generators.size(); ++gi) {
          const Level& l = levels_[level];
          const Permutation& s = levels_[j].generators[gi];
          const Point image = s[l.orbit[k]];
          const auto target = static_cast<std::size_t>(l.orbit_index[image]);
          // u_{s(b)}^-1 s u_b fixes the base point of this level.
          Permutation schreier = compose(l.transversal_inverse[target], compose(s, l.transversal[k]));
          auto [residue, stop] = sift(std::move(schreier), level + 1);
          if (residue.is_identity()) continue;
          insert_at(stop, residue, level + 1);
          extended = true;
          break;
        }
      }
    }
    if (!extended) return;
  }
}

bool StabilizerChain::add_generator(const Permutation& g) {
  if (g.degree() != degree_) throw DegreeError("generator degree does not match the chain");
  auto [residue, level] = sift(g, 0);
  if (residue.is_identity()) return false;
  insert_at(level, residue, 0);
  return true;
}

std::uint64_t StabilizerChain::rank(const Permutation& g) const {
  if (g.degree() != degree_) throw DegreeError("rank: degree mismatch");
  std::uint64_t index = 0;
  Permutation rest = g;
  for (const Level& l : levels_) {
    const std::int64_t k = l.orbit_index[rest[l.base]];
    if (k < 0) throw NotAMember(g.to_string() + " is not in the group");
    index = index * l.orbit.size() + static_cast<std::uint64_t>(k);
    rest = compose(l.transversal_inverse[static_cast<std::size_t>(k)], rest);
  }
  if (!rest.is_identity()) throw NotAMember(g.to_string() + " is not in the group");
  return index;
}

Permutation StabilizerChain::unrank(std::uint64_t index) const {
  std::vector<std::size_t> digits(levels_.size());
  for (std::size_t i = levels_.size(); i-- > 0;) {
    digits[i] = index % levels_[i].orbit.size();
    index /= levels_[i].orbit.size();
  }
  if (index != 0) throw std::out_of_range("unrank: index exceeds the group order");
  Permutation g = Permutation::identity(degree_);
  for (std::size_t i = 0; i < levels_.size(); ++i) g = compose(g, levels_[i].transversal[digits[i]]);
  return g;
}

std::vector<Permutation> StabilizerChain::elements() const {
  std::vector<Permutation> out;
  // prefix[i] is the product of the chosen transversal elements above level i.
  std::vector<Permutation> prefix(levels_.size() + 1, Permutation::identity(degree_));
  std::vector<std::size_t> digits(levels_.size(), 0);
  auto refresh_from = [&](std::size_t i) {
    for (; i < levels_.size(); ++i) prefix[i + 1] = compose(prefix[i], levels_[i].transversal[digits[i]]);
  };
  refresh_from(0);
  for (;;) {
    out.push_back(prefix[levels_.size()]);
    std::size_t i = levels_.size();
    while (i > 0 && ++digits[i - 1] == levels_[i - 1].orbit.size()) {
      digits[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
    refresh_from(i - 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, std::uint64_t cap)
    : degree_(degree), generators_(std::move(generators)), cap_(cap) {
  if (degree_ == 0) throw std::invalid_argument("group degree must be positive");
  if (generators_.empty()) throw std::invalid_argument("group needs at least one generator");
  if (cap_ == 0) throw std::invalid_argument("enumeration cap must be positive");
  for (const auto& g : generators_) {
    if (g.degree() != degree_) {
      throw DegreeError("generator " + g.to_string() + " has degree " + std::to_string(g.degree()) +
                        ", expected " + std::to_string(degree_));
    }
  }
  cache_ = std::make_shared<Cache>(degree_);
  for (const auto& g : generators_) cache_->chain.add_generator(g);
  cache_->order = cache_->chain.order();
}

PermGroup PermGroup::trivial(std::size_t degree, std::uint64_t cap) {
  return PermGroup(degree, {Permutation::identity(degree)}, cap);
}

bool PermGroup::contains(const Permutation& x) const {
  return x.degree() == degree_ && cache_->chain.contains(x);
}

std::size_t PermGroup::index_of(const Permutation& x) const {
  require_within_cap();
  if (x.degree() != degree_) throw NotAMember(x.to_string() + " has the wrong degree");
  return static_cast<std::size_t>(cache_->chain.rank(x));
}

void PermGroup::require_within_cap() const {
  if (cache_->order > cap_) {
    throw CapExceeded("group order " + cache_->order.str() + " exceeds enumeration cap " + std::to_string(cap_));
  }
}

const std::vector<Permutation>& PermGroup::elements() const {
  require_within_cap();
  std::call_once(cache_->elements_once, [this] { cache_->elements = cache_->chain.elements(); });
  return cache_->elements;
}

const std::vector<std::uint64_t>& PermGroup::element_orders() const {
  const auto& elems = elements();
  std::call_once(cache_->orders_once, [this, &elems] {
    cache_->orders.reserve(elems.size());
    for (const auto& x : elems) cache_->orders.push_back(element_order(x));
  });
  return cache_->orders;
}

PermGroup PermGroup::with_cap(std::uint64_t cap) const { return PermGroup(degree_, generators_, cap); }

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(const PermGroup& parent, std::vector<Permutation> generators)
    : parent_(parent), group_(PermGroup::trivial(parent.degree(), parent.cap())) {
  if (generators.empty()) generators.push_back(Permutation::identity(parent.degree()));
  for (const auto& g : generators) {
    if (!parent.contains(g)) throw NotAMember(g.to_string() + " is not in the parent group");
  }
  group_ = PermGroup(parent.degree(), std::move(generators), parent.cap());
}

Subgroup Subgroup::trivial(const PermGroup& parent) { return Subgroup(parent, {}); }

Subgroup Subgroup::whole(const PermGroup& parent) { return Subgroup(parent, parent.generators()); }

Subgroup Subgroup::generated_by(const PermGroup& parent, const std::vector<Permutation>& members) {
  StabilizerChain chain(parent.degree());
  std::vector<Permutation> kept;
  for (const auto& m : members) {
    if (!parent.contains(m)) throw NotAMember(m.to_string() + " is not in the parent group");
    if (chain.add_generator(m)) kept.push_back(m);
  }
  return Subgroup(parent, std::move(kept));
}

// ---------------------------------------------------------------------------
// Operations

namespace {

bool commutes(const Permutation& a, const Permutation& b) {
  for (Point i = 0; i < a.degree(); ++i) {
    if (a[b[i]] != b[a[i]]) return false;
  }
  return true;
}

}  // namespace

Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(a.inverse(), b.inverse()), compose(a, b));
}

BigInt group_order(const PermGroup& g) { return g.order(); }

const std::vector<Permutation>& enumerate_elements(const PermGroup& g) { return g.elements(); }

Subgroup centralizer(const PermGroup& g, const Permutation& x) {
  const auto& elems = g.elements();
  if (!g.contains(x)) throw NotAMember(x.to_string() + " is not in the group");
  std::vector<Permutation> members;
  for (const auto& y : elems) {
    if (commutes(x, y)) members.push_back(y);
  }
  return Subgroup::generated_by(g, members);
}

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g) {
  const auto& elems = g.elements();
  const auto& orders = g.element_orders();
  std::vector<bool> seen(elems.size(), false);
  std::vector<ConjugacyClass> classes;
  std::deque<std::size_t> queue;
  for (std::size_t start = 0; start < elems.size(); ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    queue.assign(1, start);
    std::size_t least = start;
    std::uint64_t size = 0;
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      ++size;
      if (elems[i] < elems[least]) least = i;
      for (const auto& s : g.generators()) {
        const std::size_t j = g.index_of(conjugate(elems[i], s));
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
    classes.push_back({elems[least], size, orders[least]});
  }
  std::sort(classes.begin(), classes.end(),
            [](const ConjugacyClass& a, const ConjugacyClass& b) { return a.representative < b.representative; });
  return classes;
}

std::vector<Permutation> conjugacy_class_reps(const PermGroup& g, std::optional<std::uint64_t> prime) {
  if (prime && !is_prime(*prime)) throw NotPrime(std::to_string(*prime) + " is not prime");
  std::vector<Permutation> reps;
  for (const auto& c : conjugacy_classes(g)) {
    if (prime) {
      if (c.element_order == 1) continue;
      if (remove_factor(c.element_order, *prime) != 1) continue;
    }
    reps.push_back(c.representative);
  }
  return reps;
}

std::vector<Permutation> solutions_xn(const PermGroup& g, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("exponent must be positive");
  const auto& elems = g.elements();
  const auto& orders = g.element_orders();
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (n % orders[i] == 0) out.push_back(elems[i]);
  }
  return out;
}

BigInt count_solutions_xn(const PermGroup& g, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("exponent must be positive");
  const auto& orders = g.element_orders();
  return BigInt(std::count_if(orders.begin(), orders.end(), [n](std::uint64_t o) { return n % o == 0; }));
}

bool is_closed_subset(const PermGroup& g, const std::vector<Permutation>& members) {
  return Subgroup::generated_by(g, members).order() == members.size();
}

bool is_normal(const PermGroup& g, const Subgroup& h) {
  for (const auto& s : g.generators()) {
    for (const auto& x : h.group().generators()) {
      if (!h.contains(conjugate(x, s))) return false;
    }
  }
  return true;
}

PermGroup quotient_group(const PermGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw NotNormal("subgroup is not normal");
  const auto& elems = g.elements();
  const auto& kernel = n.group().elements();
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> coset_of(elems.size(), kUnset);
  std::vector<std::size_t> coset_rep;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (coset_of[i] != kUnset) continue;
    const std::size_t label = coset_rep.size();
    coset_rep.push_back(i);
    for (const auto& k : kernel) coset_of[g.index_of(compose(elems[i], k))] = label;
  }
  const std::size_t index = coset_rep.size();
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<Point> images(index);
    for (std::size_t c = 0; c < index; ++c) {
      images[c] = static_cast<Point>(coset_of[g.index_of(compose(s, elems[coset_rep[c]]))]);
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(index, std::move(gens), g.cap());
}

Subgroup normal_closure(const PermGroup& g, const std::vector<Permutation>& seeds) {
  StabilizerChain chain(g.degree());
  std::vector<Permutation> kept;
  std::deque<Permutation> pending(seeds.begin(), seeds.end());
  while (!pending.empty()) {
    Permutation x = std::move(pending.front());
    pending.pop_front();
    if (!g.contains(x)) throw NotAMember(x.to_string() + " is not in the group");
    if (!chain.add_generator(x)) continue;
    for (const auto& s : g.generators()) pending.push_back(conjugate(x, s));
    kept.push_back(std::move(x));
  }
  return Subgroup(g, std::move(kept));
}

Subgroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> seeds;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(commutator(gens[i], gens[j]));
  }
  return normal_closure(g, seeds);
}

Subgroup center(const PermGroup& g) {
  std::vector<Permutation> members;
  for (const auto& x : g.elements()) {
    const bool central = std::all_of(g.generators().begin(), g.generators().end(),
                                     [&x](const Permutation& s) { return commutes(s, x); });
    if (central) members.push_back(x);
  }
  return Subgroup::generated_by(g, members);
}

}  // namespace psl2mu
