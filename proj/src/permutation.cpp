#include "psl2mu/permutation.hpp"

#include <numeric>

#include "psl2mu/errors.hpp"
#include "psl2mu/numtheory.hpp"

namespace psl2mu {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw InvalidPermutation("image table is not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation id;
  id.images_.resize(degree);
  std::iota(id.images_.begin(), id.images_.end(), Point{0});
  return id;
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Permutation result = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (Point p : cycle) {
      if (p >= degree) {
        throw InvalidPermutation("point " + std::to_string(p) + " outside degree " + std::to_string(degree));
      }
      if (used[p]) throw InvalidPermutation("point " + std::to_string(p) + " repeated");
      used[p] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      result.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

Point Permutation::least_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw DegreeError("cannot compose degree " + std::to_string(a.degree()) + " with degree " +
                      std::to_string(b.degree()));
  }
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = a[b[static_cast<Point>(i)]];
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  // g x g^-1 maps g(i) to g(x(i)).
  if (x.degree() != g.degree()) throw DegreeError("conjugate: degree mismatch");
  std::vector<Point> images(x.degree());
  for (Point i = 0; i < images.size(); ++i) images[g[i]] = g[x[i]];
  return Permutation(std::move(images));
}

std::uint64_t element_order(const Permutation& x) {
  std::uint64_t order = 1;
  std::vector<bool> seen(x.degree(), false);
  for (Point start = 0; start < x.degree(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (Point p = start; !seen[p]; p = x[p]) {
      seen[p] = true;
      ++len;
    }
    order = checked_lcm(order, len);
  }
  return order;
}

Permutation power(const Permutation& x, std::uint64_t exponent) {
  std::vector<Point> images(x.degree());
  std::vector<bool> seen(x.degree(), false);
  std::vector<Point> cycle;
  for (Point start = 0; start < x.degree(); ++start) {
    if (seen[start]) continue;
    cycle.clear();
    for (Point p = start; !seen[p]; p = x[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    const std::size_t shift = exponent % cycle.size();
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + shift) % cycle.size()];
  }
  return Permutation(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace psl2mu
