#pragma once

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "specgraph/error.hpp"
#include "specgraph/submodule.hpp"

namespace specgraph {

inline constexpr std::size_t kDefaultMaxOrder = 4096;

/// Enumeration bound, taken from SPECGRAPH_MAX_ORDER when set.
inline std::size_t default_max_order() {
  if (const char* env = std::getenv("SPECGRAPH_MAX_ORDER")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxOrder;
}

/// Every submodule of M exactly once, sorted by (order, canonical key).
///
/// The lattice is generated from the cyclic submodules: every submodule is a
/// join of cyclic ones, so closing {0} under "join with a cyclic submodule"
/// reaches all of them.
inline std::vector<Submodule> enumerate_submodules(const FinModule& m,
                                                   std::size_t bound = kDefaultMaxOrder) {
  if (m.order() > bound)
    throw BoundExceeded("module order " + std::to_string(m.order()) +
                        " exceeds the enumeration bound " + std::to_string(bound));

  const Submodule zero = Submodule::zero(m);
  std::unordered_set<Submodule, SubmoduleHash> cyclic_seen;
  std::vector<Code> cyclic_gens;
  for (Code x = 1; x < m.order(); ++x) {
    auto c = adjoin(m, zero, x);
    if (cyclic_seen.insert(std::move(c)).second) cyclic_gens.push_back(x);
  }

  std::unordered_set<Submodule, SubmoduleHash> seen{zero};
  std::deque<Submodule> work{zero};
  while (!work.empty()) {
    Submodule h = std::move(work.front());
    work.pop_front();
    for (Code g : cyclic_gens) {
      if (h.contains(g)) continue;
      Submodule j = adjoin(m, h, g);
      if (seen.insert(j).second) work.push_back(std::move(j));
    }
  }
  std::vector<Submodule> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// The enumerated submodule lattice of a module with per-submodule colon
/// divisors. Immutable after construction; index 0 is the zero submodule and
/// the last index is M.
class SubmoduleLattice {
 public:
  explicit SubmoduleLattice(FinModule m, std::size_t bound = kDefaultMaxOrder)
      : module_(std::move(m)), subs_(enumerate_submodules(module_, bound)) {
    index_.reserve(subs_.size());
    colon_.reserve(subs_.size());
    for (std::size_t i = 0; i < subs_.size(); ++i) {
      index_.emplace(subs_[i], i);
      colon_.push_back(specgraph::colon_divisor(module_, subs_[i]));
    }
    for (u64 e : divisors(module_.exponent())) multiples_.emplace(e, index_of(scaled(module_, e)));
  }

  const FinModule& module() const { return module_; }
  std::size_t size() const { return subs_.size(); }
  const Submodule& operator[](std::size_t i) const { return subs_[i]; }
  const std::vector<Submodule>& submodules() const { return subs_; }

  std::size_t zero_index() const { return 0; }
  std::size_t top_index() const { return subs_.size() - 1; }
  bool is_proper(std::size_t i) const { return i != top_index(); }

  std::optional<std::size_t> find(const Submodule& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(const Submodule& s) const {
    if (auto i = find(s)) return *i;
    throw InvalidArgument("not a submodule of " + module_.to_string());
  }

  /// Divisor e with (N:M) = eR, i.e. the exponent of M/N.
  u64 colon_divisor(std::size_t i) const { return colon_[i]; }
  Ideal colon(std::size_t i) const { return Ideal(module_.ring(), colon_[i]); }

  std::size_t intersect(std::size_t a, std::size_t b) const {
    return index_of(specgraph::intersect(subs_[a], subs_[b]));
  }
  std::size_t sum(std::size_t a, std::size_t b) const {
    return index_of(specgraph::sum(module_, subs_[a], subs_[b]));
  }
  std::size_t product(std::size_t a, std::size_t b) const {
    return scaled_index(colon_[a] * colon_[b]);
  }
  /// Submodule d·M, which is gcd(d, exp M)·M.
  std::size_t scaled_index(u64 d) const { return multiples_.at(std::gcd(d, module_.exponent())); }

  /// Number of non-zero proper submodules.
  std::size_t nonzero_proper_count() const { return subs_.size() < 2 ? 0 : subs_.size() - 2; }

 private:
  FinModule module_;
  std::vector<Submodule> subs_;
  std::unordered_map<Submodule, std::size_t, SubmoduleHash> index_;
  std::vector<u64> colon_;
  std::unordered_map<u64, std::size_t> multiples_;
};

/// Sum of the simple (prime-order) submodules.
inline Submodule socle(const FinModule& m) {
  Submodule s = Submodule::zero(m);
  for (Code x = 1; x < m.order(); ++x)
    if (is_prime(m.element_order(x)) && !s.contains(x)) s = adjoin(m, s, x);
  return s;
}

/// Whether Nil(R)·M = 0.
inline bool nil_action_is_zero(const Ring& r, const FinModule& m) {
  return scaled(m, nil_radical(r).divisor()).is_zero();
}

}  // namespace specgraph
