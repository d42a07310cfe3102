#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "specgraph/bitset.hpp"
#include "specgraph/module.hpp"

namespace specgraph {

/// A submodule of a FinModule, stored as its member set. The sorted member
/// list is the canonical key: two submodules of one parent are equal iff
/// their keys are equal. Every subgroup of a module over Z or Z/NZ is closed
/// under the ring action, so subgroup closure is all that is required.
class Submodule {
 public:
  Submodule() = default;

  /// members must already be a subgroup of M; see is_submodule() for a check.
  Submodule(const FinModule& m, std::vector<Code> members) : bits_(m.order()) {
    for (Code c : members) bits_.set(c);
    members_ = bits_positions(bits_);
  }
  explicit Submodule(Bitset bits) : bits_(std::move(bits)) { members_ = bits_positions(bits_); }

  static Submodule zero(const FinModule& m) { return Submodule(m, {0}); }
  static Submodule whole(const FinModule& m) {
    return Submodule(Bitset::full(m.order()));
  }

  std::size_t order() const { return members_.size(); }
  std::span<const Code> members() const { return members_; }
  const Bitset& bits() const { return bits_; }

  bool contains(Code c) const { return bits_.test(c); }
  bool contains(const Submodule& other) const { return other.bits_.is_subset_of(bits_); }
  bool is_zero() const { return members_.size() == 1; }

  bool operator==(const Submodule& o) const { return bits_ == o.bits_; }
  /// Canonical order: by order, then lexicographically by member list.
  std::strong_ordering operator<=>(const Submodule& o) const {
    if (auto c = order() <=> o.order(); c != 0) return c;
    if (bits_ == o.bits_) return std::strong_ordering::equal;
    return bits_.lex_less(o.bits_) ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  std::size_t hash() const { return bits_.hash(); }

 private:
  static std::vector<Code> bits_positions(const Bitset& b) {
    std::vector<Code> out;
    out.reserve(b.count());
    b.for_each([&](std::size_t i) { out.push_back(static_cast<Code>(i)); });
    return out;
  }

  Bitset bits_;
  std::vector<Code> members_;
};

struct SubmoduleHash {
  std::size_t operator()(const Submodule& s) const { return s.hash(); }
};

/// Whether a set of codes is closed under addition and negation and
/// contains zero. Multiplication by residues is repeated addition.
inline bool is_submodule(const FinModule& m, std::span<const Code> members) {
  Bitset b(m.order());
  for (Code c : members) b.set(c);
  if (!b.test(0)) return false;
  for (Code x : members) {
    if (!b.test(m.negate(x))) return false;
    for (Code y : members)
      if (!b.test(m.add(x, y))) return false;
  }
  return true;
}

/// <base, g>: the submodule generated by base and one more element.
inline Submodule adjoin(const FinModule& m, const Submodule& base, Code g) {
  if (base.contains(g)) return base;
  Bitset bits = base.bits();
  Code step = g;
  while (!base.contains(step)) {
    for (Code h : base.members()) bits.set(m.add(h, step));
    step = m.add(step, g);
  }
  return Submodule(std::move(bits));
}

inline Submodule span(const FinModule& m, std::span<const Code> generators) {
  Submodule s = Submodule::zero(m);
  for (Code g : generators) s = adjoin(m, s, g);
  return s;
}

inline Submodule sum(const FinModule& m, const Submodule& a, const Submodule& b) {
  const Submodule& big = a.order() >= b.order() ? a : b;
  const Submodule& small = a.order() >= b.order() ? b : a;
  Submodule s = big;
  for (Code g : small.members())
    if (!s.contains(g)) s = adjoin(m, s, g);
  return s;
}

inline Submodule intersect(const Submodule& a, const Submodule& b) {
  return Submodule(a.bits() & b.bits());
}

/// d·M.
inline Submodule scaled(const FinModule& m, u64 d) {
  Bitset b(m.order());
  for (Code x = 0; x < m.order(); ++x) b.set(m.scale(d, x));
  return Submodule(std::move(b));
}

/// (0 :_M d) = {x in M : d·x = 0}.
inline Submodule annihilated_by(const FinModule& m, u64 d) {
  Bitset b(m.order());
  for (Code x = 0; x < m.order(); ++x)
    if (m.scale(d, x) == 0) b.set(x);
  return Submodule(std::move(b));
}

/// Exponent of M/N: the least e > 0 with e·M ⊆ N. M is generated by the unit
/// vectors, so the lcm of their orders modulo N suffices.
inline u64 colon_divisor(const FinModule& m, const Submodule& n) {
  u64 e = 1;
  for (std::size_t i = 0; i < m.rank(); ++i) {
    const Code g = m.unit_vector(i);
    u64 t = 1;
    Code x = g;
    while (!n.contains(x)) {
      x = m.add(x, g);
      ++t;
    }
    e = std::lcm(e, t);
  }
  return e;
}

/// (N:M) = {r : rM ⊆ N} = Ann(M/N).
inline Ideal colon(const FinModule& m, const Submodule& n) {
  return Ideal(m.ring(), colon_divisor(m, n));
}

inline Submodule ideal_times_module(const Ideal& i, const FinModule& m) {
  if (i.ring() != m.ring()) throw InvalidArgument("ideal and module live over different rings");
  return scaled(m, i.divisor());
}

/// N·K = (N:M)(K:M)M.
inline Submodule product(const FinModule& m, const Submodule& n, const Submodule& k) {
  return ideal_times_module(colon(m, n) * colon(m, k), m);
}

/// An irredundant generating list: greedily adjoin the element that
/// enlarges the span most (ties to the smallest code), then drop redundant
/// generators.
inline std::vector<Code> generators(const FinModule& m, const Submodule& n) {
  std::vector<Code> gens;
  Submodule cur = Submodule::zero(m);
  while (cur.order() < n.order()) {
    Code best = 0;
    std::size_t best_size = 0;
    for (Code x : n.members()) {
      if (cur.contains(x)) continue;
      const auto size = adjoin(m, cur, x).order();
      if (size > best_size) {
        best_size = size;
        best = x;
      }
    }
    gens.push_back(best);
    cur = adjoin(m, cur, best);
  }
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<Code> rest = gens;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (span(m, rest) == n) gens = std::move(rest);
  }
  return gens;
}

inline std::string generators_string(const FinModule& m, const Submodule& n) {
  const auto gens = generators(m, n);
  if (gens.empty()) return "<0>";
  std::string s = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ",";
    s += m.element_string(gens[i]);
  }
  return s + ">";
}

}  // namespace specgraph
