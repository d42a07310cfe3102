#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "specgraph/arith.hpp"
#include "specgraph/error.hpp"
#include "specgraph/ring.hpp"

namespace specgraph {

/// Compact element handle: the mixed-radix index of the coordinate tuple,
/// first coordinate most significant. Code order is lexicographic tuple order.
using Code = std::uint32_t;

struct Element {
  std::vector<u64> coordinates;
  bool operator==(const Element&) const = default;
};

/// A finite module over Z or Z/NZ presented as Z/d1 ⊕ ... ⊕ Z/dk with
/// 2 <= d1 | d2 | ... | dk (and dk | N over Z/NZ).
class FinModule {
 public:
  FinModule() = default;
  FinModule(Ring ring, std::vector<u64> invariant_factors)
      : ring_(ring), factors_(std::move(invariant_factors)) {
    u64 order = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const u64 d = factors_[i];
      if (d < 2) throw InvalidArgument("invariant factors must be >= 2");
      if (i > 0 && d % factors_[i - 1] != 0)
        throw InvalidArgument("invariant factors must form a divisibility chain");
      if (!ring_.is_integers() && ring_.modulus() % d != 0)
        throw InvalidArgument("invariant factor " + std::to_string(d) +
                              " does not divide the ring modulus " +
                              std::to_string(ring_.modulus()));
      if (order > std::numeric_limits<Code>::max() / d)
        throw InvalidArgument("module order does not fit the element encoding");
      order *= d;
    }
    order_ = order;
    strides_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * factors_[i];
  }

  static FinModule cyclic(Ring ring, u64 n) { return FinModule(ring, {n}); }

  const Ring& ring() const { return ring_; }
  std::span<const u64> invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  u64 order() const { return order_; }
  u64 exponent() const { return factors_.empty() ? 1 : factors_.back(); }
  bool is_zero() const { return factors_.empty(); }

  Ideal annihilator() const { return Ideal(ring_, exponent()); }

  /// Over Z/NZ, whether the annihilator is the zero ideal. Finite modules
  /// over Z are never faithful.
  bool is_faithful() const { return annihilator().is_zero(); }

  Code encode(std::span<const u64> coords) const {
    u64 c = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) c += (coords[i] % factors_[i]) * strides_[i];
    return static_cast<Code>(c);
  }
  Code encode(const Element& e) const { return encode(e.coordinates); }

  Element decode(Code c) const {
    Element e;
    e.coordinates.resize(factors_.size());
    u64 rest = c;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      e.coordinates[i] = rest % factors_[i];
      rest /= factors_[i];
    }
    return e;
  }

  Code add(Code a, Code b) const {
    u64 out = 0, mult = 1;
    u64 x = a, y = b;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      const u64 d = factors_[i];
      out += ((x % d + y % d) % d) * mult;
      x /= d;
      y /= d;
      mult *= d;
    }
    return static_cast<Code>(out);
  }

  Code negate(Code a) const {
    u64 out = 0, mult = 1, x = a;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      const u64 d = factors_[i];
      out += ((d - x % d) % d) * mult;
      x /= d;
      mult *= d;
    }
    return static_cast<Code>(out);
  }

  /// r·a. Ring residues act through their integer representative.
  Code scale(u64 r, Code a) const {
    u64 out = 0, mult = 1, x = a;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      const u64 d = factors_[i];
      out += ((r % d) * (x % d) % d) * mult;
      x /= d;
      mult *= d;
    }
    return static_cast<Code>(out);
  }

  u64 element_order(Code a) const {
    u64 ord = 1, x = a;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      const u64 d = factors_[i];
      const u64 c = x % d;
      ord = std::lcm(ord, d / std::gcd(d, c));
      x /= d;
    }
    return ord;
  }

  Code unit_vector(std::size_t i) const { return static_cast<Code>(strides_[i]); }

  std::string to_string() const {
    if (factors_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += "+";
      s += "Z/" + std::to_string(factors_[i]);
    }
    return s + " over " + ring_.name();
  }

  std::string element_string(Code c) const {
    const auto e = decode(c);
    std::string s = "(";
    for (std::size_t i = 0; i < e.coordinates.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(e.coordinates[i]);
    }
    return s + ")";
  }

  bool operator==(const FinModule& o) const { return ring_ == o.ring_ && factors_ == o.factors_; }

 private:
  Ring ring_;
  std::vector<u64> factors_;
  std::vector<u64> strides_;
  u64 order_ = 1;
};

/// Invariant factors of the abelian group whose p-primary parts have the
/// given cyclic orders. Input: list of prime powers (any order).
inline std::vector<u64> invariant_factors_from_prime_powers(std::vector<u64> prime_powers) {
  // Group by prime, sort each group descending, then combine position-wise.
  std::vector<std::vector<u64>> by_prime;
  std::vector<u64> primes;
  for (u64 q : prime_powers) {
    const u64 p = prime_factors(q).front();
    std::size_t k = 0;
    while (k < primes.size() && primes[k] != p) ++k;
    if (k == primes.size()) {
      primes.push_back(p);
      by_prime.emplace_back();
    }
    by_prime[k].push_back(q);
  }
  std::size_t rank = 0;
  for (auto& g : by_prime) {
    std::sort(g.begin(), g.end(), std::greater<>());
    rank = std::max(rank, g.size());
  }
  std::vector<u64> out(rank, 1);
  for (auto& g : by_prime)
    for (std::size_t i = 0; i < g.size(); ++i) out[rank - 1 - i] *= g[i];
  return out;
}

}  // namespace specgraph
