#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "specgraph/lattice.hpp"

namespace specgraph {

/// A prime submodule together with the prime p for which (P:M) = pR.
struct PrimeWitness {
  std::size_t submodule;
  u64 prime;
  bool operator==(const PrimeWitness&) const = default;
};

/// Prime and maximal spectra of a module with their Zariski closed sets.
///
/// For a finite module, P is prime iff pM ⊆ P ⊊ M for a prime p (then
/// M/P is a non-zero F_p-vector space and (P:M) = pR), and maximal iff
/// |M/P| is prime. Closed sets are kept as bitsets over positions in
/// max_spec() / spec(). Subsets T of Max(M) use the same encoding.
class Spectrum {
 public:
  explicit Spectrum(std::shared_ptr<const SubmoduleLattice> lattice) : lat_(std::move(lattice)) {
    const auto& L = *lat_;
    const u64 order = L.module().order();
    for (std::size_t i = 0; i + 1 < L.size(); ++i) {
      const u64 e = L.colon_divisor(i);
      if (specgraph::is_prime(e)) spec_.push_back({i, e});
      if (specgraph::is_prime(order / L[i].order())) {
        max_.push_back(i);
        max_prime_.push_back(order / L[i].order());
      }
    }
    spec_pos_.assign(L.size(), npos);
    max_pos_.assign(L.size(), npos);
    for (std::size_t s = 0; s < spec_.size(); ++s) spec_pos_[spec_[s].submodule] = s;
    for (std::size_t q = 0; q < max_.size(); ++q) max_pos_[max_[q]] = q;

    vm_.reserve(L.size());
    v_.reserve(L.size());
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t i = 0; i < L.size(); ++i) {
      const u64 e = L.colon_divisor(i);
      Bitset vm(max_.size()), v(spec_.size());
      for (std::size_t q = 0; q < max_.size(); ++q)
        if (e % max_prime_[q] == 0) vm.set(q);
      for (std::size_t s = 0; s < spec_.size(); ++s)
        if (e % spec_[s].prime == 0) v.set(s);
      if (seen.insert(vm.positions()).second) closed_.push_back(vm);
      vm_.push_back(std::move(vm));
      v_.push_back(std::move(v));
    }
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  const SubmoduleLattice& lattice() const { return *lat_; }
  std::shared_ptr<const SubmoduleLattice> lattice_ptr() const { return lat_; }
  const FinModule& module() const { return lat_->module(); }

  const std::vector<PrimeWitness>& spec() const { return spec_; }
  const std::vector<std::size_t>& max_spec() const { return max_; }
  u64 max_prime(std::size_t pos) const { return max_prime_[pos]; }

  bool is_prime(std::size_t i) const { return spec_pos_[i] != npos; }
  bool is_maximal(std::size_t i) const { return max_pos_[i] != npos; }
  std::size_t spec_position(std::size_t i) const { return spec_pos_[i]; }
  std::size_t max_position(std::size_t i) const { return max_pos_[i]; }

  Bitset all_max() const { return Bitset::full(max_.size()); }
  Bitset all_spec() const { return Bitset::full(spec_.size()); }

  /// V^m(N) = {Q in Max(M) : (Q:M) ⊇ (N:M)}.
  const Bitset& vm_closed(std::size_t n) const { return vm_[n]; }
  /// V(N) = {P in Spec(M) : (P:M) ⊇ (N:M)}.
  const Bitset& v_closed(std::size_t n) const { return v_[n]; }

  /// Distinct closed subsets of Max(M), in first-seen lattice order.
  const std::vector<Bitset>& closed_sets() const { return closed_; }

  /// Intersection of the maximal submodules in T.
  std::size_t im_of(const Bitset& t) const {
    if (t.none()) throw EmptySubset("the subset T of Max(M) is empty");
    return intersect_members(t, max_);
  }
  /// Intersection of the prime submodules in a subset of Spec(M).
  std::size_t im_of_spec(const Bitset& t) const {
    if (t.none()) throw EmptySubset("the subset of Spec(M) is empty");
    std::vector<std::size_t> idx;
    for (const auto& w : spec_) idx.push_back(w.submodule);
    return intersect_members(t, idx);
  }

  /// J^m(N): intersection of V^m(N), or M when V^m(N) is empty.
  std::size_t jm_radical(std::size_t n) const {
    if (vm_[n].none()) return lat_->top_index();
    return im_of(vm_[n]);
  }

  /// Intersection of the prime submodules containing N; M if there are none.
  std::size_t prime_radical(std::size_t n) const {
    const auto& L = *lat_;
    Bitset acc = Submodule::whole(L.module()).bits();
    for (const auto& w : spec_)
      if (L[w.submodule].contains(L[n])) acc &= L[w.submodule].bits();
    return L.index_of(Submodule(std::move(acc)));
  }
  /// rad(M): intersection of all prime submodules.
  std::size_t rad() const { return prime_radical(lat_->zero_index()); }

  Bitset closure(const Bitset& t) const { return vm_[im_of(t)]; }
  bool is_closed(const Bitset& t) const { return closure(t) == t; }
  /// Closedness straight from the family {V^m(N)}.
  bool is_closed_in_family(const Bitset& t) const {
    return std::find(closed_.begin(), closed_.end(), t) != closed_.end();
  }

  /// Closed sets of the subspace T: T ∩ V^m(N) for all N.
  std::vector<Bitset> relative_closed_sets(const Bitset& t) const {
    std::vector<Bitset> out;
    std::set<std::vector<std::size_t>> seen;
    for (const auto& c : closed_) {
      Bitset r = c & t;
      if (seen.insert(r.positions()).second) out.push_back(std::move(r));
    }
    return out;
  }

  /// No decomposition T = A ∪ B into relatively closed proper subsets.
  bool is_irreducible(const Bitset& t) const {
    const auto rel = relative_closed_sets(t);
    for (std::size_t a = 0; a < rel.size(); ++a) {
      if (rel[a] == t) continue;
      for (std::size_t b = a; b < rel.size(); ++b)
        if (rel[b] != t && (rel[a] | rel[b]) == t) return false;
    }
    return true;
  }

  /// No partition of T into two non-empty relatively closed (hence open) sets.
  bool is_connected_subspace(const Bitset& t) const {
    const auto rel = relative_closed_sets(t);
    for (const auto& a : rel) {
      if (a.none() || a == t) continue;
      const Bitset rest = t - a;
      if (std::find(rel.begin(), rel.end(), rest) != rel.end()) return false;
    }
    return true;
  }

  /// ψ(Q) = (Q:M)/Ann(M), reported as the prime p with (Q:M) = pR.
  std::vector<u64> natural_map() const { return max_prime_; }

  /// Maximal ideals of R/Ann(M): the primes dividing exp(M).
  std::vector<u64> ring_side_max() const { return prime_factors(module().exponent()); }

  bool is_max_surjective() const {
    if (module().is_zero()) return true;
    for (u64 p : ring_side_max())
      if (std::find(max_prime_.begin(), max_prime_.end(), p) == max_prime_.end()) return false;
    return true;
  }

  /// Whether ψ is a bijection carrying closed sets to closed sets in both
  /// directions. The closed sets of Max(R/Ann M) are {p : p | d} for d | exp(M).
  bool is_natural_map_homeomorphism() const {
    const auto primes = ring_side_max();
    if (primes.size() != max_.size()) return false;
    std::vector<std::size_t> psi(max_.size());
    std::vector<bool> hit(primes.size(), false);
    for (std::size_t q = 0; q < max_.size(); ++q) {
      const auto it = std::find(primes.begin(), primes.end(), max_prime_[q]);
      if (it == primes.end()) return false;
      psi[q] = static_cast<std::size_t>(it - primes.begin());
      if (hit[psi[q]]) return false;
      hit[psi[q]] = true;
    }
    std::set<std::vector<std::size_t>> ring_closed;
    for (u64 d : divisors(module().exponent())) {
      std::vector<std::size_t> c;
      for (std::size_t j = 0; j < primes.size(); ++j)
        if (d % primes[j] == 0) c.push_back(j);
      ring_closed.insert(c);
    }
    std::set<std::vector<std::size_t>> pushed;
    for (const auto& c : closed_) {
      std::vector<std::size_t> image;
      c.for_each([&](std::size_t q) { image.push_back(psi[q]); });
      std::sort(image.begin(), image.end());
      pushed.insert(image);
    }
    return pushed == ring_closed;
  }

  /// All intersections of non-empty sets of maximal submodules, ascending.
  std::vector<std::size_t> semi_maximal_submodules() const {
    const auto& L = *lat_;
    std::set<std::size_t> found(max_.begin(), max_.end());
    std::vector<std::size_t> frontier(max_.begin(), max_.end());
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t a : frontier)
        for (std::size_t q : max_) {
          const std::size_t c = L.intersect(a, q);
          if (found.insert(c).second) next.push_back(c);
        }
      frontier = std::move(next);
    }
    return {found.begin(), found.end()};
  }

  bool spec_equals_max() const { return spec_.size() == max_.size(); }
  /// M is a prime module when 0 is a prime submodule.
  bool is_prime_module() const { return lat_->size() > 1 && is_prime(lat_->zero_index()); }

  /// Prime submodule positions in Spec(M) that are maximal, as a subset of Spec.
  Bitset max_as_spec_subset(const Bitset& t) const {
    Bitset out(spec_.size());
    t.for_each([&](std::size_t q) { out.set(spec_pos_[max_[q]]); });
    return out;
  }

 private:
  std::size_t intersect_members(const Bitset& t, const std::vector<std::size_t>& idx) const {
    const auto& L = *lat_;
    Bitset acc = Submodule::whole(L.module()).bits();
    t.for_each([&](std::size_t k) { acc &= L[idx[k]].bits(); });
    return L.index_of(Submodule(std::move(acc)));
  }

  std::shared_ptr<const SubmoduleLattice> lat_;
  std::vector<PrimeWitness> spec_;
  std::vector<std::size_t> max_;
  std::vector<u64> max_prime_;
  std::vector<std::size_t> spec_pos_, max_pos_;
  std::vector<Bitset> vm_, v_;
  std::vector<Bitset> closed_;
};

}  // namespace specgraph
