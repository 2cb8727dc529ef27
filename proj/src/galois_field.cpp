#include "psl2mu/galois_field.hpp"

#include <stdexcept>
#include <string>

#include "psl2mu/errors.hpp"
#include "psl2mu/numtheory.hpp"

namespace psl2mu {

namespace poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // p is prime, so a^(p-2) is the inverse.
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

Poly mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  Poly mm = m;
  trim(mm);
  if (mm.empty()) throw std::invalid_argument("polynomial division by zero");
  const std::uint64_t lead_inv = inverse_mod(mm.back(), p);
  while (a.size() >= mm.size()) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - mm.size();
    for (std::size_t i = 0; i < mm.size(); ++i) {
      a[shift + i] = (a[shift + i] + p * p - factor * mm[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return mod(std::move(c), m, p);
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const Poly& m, std::uint64_t p) {
  Poly monic = m;
  trim(monic);
  if (monic.size() < 2) return false;
  const std::size_t degree = monic.size() - 1;
  if (degree == 1) return true;
  // xp holds x^(p^k) mod m.
  Poly xp = mod({0, 1}, monic, p);
  for (std::size_t k = 1; k < degree; ++k) {
    Poly acc{1};
    Poly base = xp;
    for (std::uint64_t e = p; e; e >>= 1) {
      if (e & 1) acc = mulmod(acc, base, monic, p);
      base = mulmod(base, base, monic, p);
    }
    xp = acc;
    Poly diff = xp;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;  // x^(p^k) = x: m splits over GF(p^k)
    if (gcd(monic, diff, p).size() > 1) return false;
  }
  return true;
}

}  // namespace poly

namespace {

poly::Poly decode(std::uint64_t code, std::uint64_t p, unsigned f) {
  poly::Poly out(f, 0);
  for (unsigned i = 0; i < f; ++i) {
    out[i] = code % p;
    code /= p;
  }
  poly::trim(out);
  return out;
}

std::uint64_t encode(const poly::Poly& a, std::uint64_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

}  // namespace

FieldTable build_field(std::uint64_t p, unsigned f, std::uint64_t budget) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (f == 0) throw std::invalid_argument("field degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < f; ++i) {
    if (q > budget / p) {
      throw BudgetExceeded("GF(" + std::to_string(p) + "^" + std::to_string(f) + ") exceeds the table budget " +
                           std::to_string(budget));
    }
    q *= p;
  }

  FieldTable t;
  t.p_ = p;
  t.f_ = f;
  t.q_ = q;

  // Lower coefficients enumerated by their code run through the monic
  // polynomials with higher coefficients compared first.
  for (std::uint64_t low = 0; low < q; ++low) {
    poly::Poly candidate = decode(low, p, f);
    candidate.resize(f + 1, 0);
    candidate[f] = 1;
    if (poly::is_irreducible(candidate, p)) {
      t.modulus_ = candidate;
      break;
    }
  }
  if (t.modulus_.empty()) throw std::logic_error("no irreducible polynomial found");

  const std::uint64_t group = q - 1;
  const auto factors = factorize(group);
  auto slow_pow = [&](std::uint64_t code, std::uint64_t k) {
    poly::Poly acc{1}, base = decode(code, p, f);
    for (; k; k >>= 1) {
      if (k & 1) acc = poly::mulmod(acc, base, t.modulus_, p);
      base = poly::mulmod(base, base, t.modulus_, p);
    }
    return encode(acc, p);
  };
  for (std::uint64_t a = 1; a < q; ++a) {
    bool generator = true;
    for (const auto& [ell, e] : factors) {
      if (slow_pow(a, group / ell) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) {
      t.primitive_ = static_cast<FieldTable::Element>(a);
      break;
    }
  }
  if (q == 2) t.primitive_ = 1;

  t.exp_.resize(group);
  t.log_.assign(q, 0);
  const poly::Poly lambda = decode(t.primitive_, p, f);
  poly::Poly power{1};
  for (std::uint64_t k = 0; k < group; ++k) {
    const std::uint64_t code = encode(power, p);
    t.exp_[k] = static_cast<FieldTable::Element>(code);
    t.log_[code] = static_cast<std::uint32_t>(k);
    power = poly::mulmod(power, lambda, t.modulus_, p);
  }
  return t;
}

FieldTable::Element FieldTable::add(Element a, Element b) const {
  std::uint64_t x = a, y = b, out = 0, place = 1;
  for (unsigned i = 0; i < f_; ++i) {
    out += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return static_cast<Element>(out);
}

FieldTable::Element FieldTable::neg(Element a) const {
  std::uint64_t x = a, out = 0, place = 1;
  for (unsigned i = 0; i < f_; ++i) {
    out += ((p_ - x % p_) % p_) * place;
    x /= p_;
    place *= p_;
  }
  return static_cast<Element>(out);
}

FieldTable::Element FieldTable::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

FieldTable::Element FieldTable::inv(Element a) const {
  if (a == 0) throw DomainError("zero has no inverse");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FieldTable::Element FieldTable::pow(Element a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint64_t>(log_[a]) * (k % (q_ - 1)) % (q_ - 1)];
}

std::uint64_t FieldTable::log(Element a) const {
  if (a == 0) throw DomainError("zero has no logarithm");
  return log_[a];
}

}  // namespace psl2mu
