#pragma once

#include <cstdint>
#include <vector>

#include "specgraph/lattice.hpp"

namespace specgraph {

/// M/N in invariant-factor form together with an explicit projection
/// M -> M/N. The projection induces the lattice isomorphism
/// {L : N ⊆ L ⊆ M} -> submodules of M/N.
class Quotient {
 public:
  Quotient(const FinModule& m, const Submodule& n) : kernel_(n) {
    if (!n.contains(Code{0}) || n.bits().size() != m.order())
      throw InvalidArgument("quotient by a submodule of a different module");
    build_cosets(m);
    module_ = FinModule(m.ring(), quotient_factors(m));
    build_projection(m);
  }

  const FinModule& module() const { return module_; }
  const Submodule& kernel() const { return kernel_; }

  /// Image of x under M -> M/N, as a code of module().
  Code project(Code x) const { return projection_[x]; }

  /// (L + N)/N.
  Submodule image(const Submodule& l) const {
    Bitset b(module_.order());
    for (Code x : l.members()) b.set(projection_[x]);
    return Submodule(std::move(b));
  }

  /// The unique L ⊇ N with L/N = lbar.
  Submodule preimage(const Submodule& lbar) const {
    Bitset b(projection_.size());
    for (std::size_t x = 0; x < projection_.size(); ++x)
      if (lbar.contains(projection_[x])) b.set(x);
    return Submodule(std::move(b));
  }

 private:
  void build_cosets(const FinModule& m) {
    coset_of_.assign(m.order(), -1);
    for (Code x = 0; x < m.order(); ++x) {
      if (coset_of_[x] >= 0) continue;
      const auto id = static_cast<std::int32_t>(reps_.size());
      reps_.push_back(x);
      for (Code n : kernel_.members()) coset_of_[m.add(x, n)] = id;
    }
  }

  std::size_t coset_count() const { return reps_.size(); }
  std::size_t coset_add(const FinModule& m, std::size_t a, std::size_t b) const {
    return static_cast<std::size_t>(coset_of_[m.add(reps_[a], reps_[b])]);
  }
  std::size_t coset_scale(const FinModule& m, u64 r, std::size_t a) const {
    return static_cast<std::size_t>(coset_of_[m.scale(r, reps_[a])]);
  }

  // The p-primary part is read off from |{c : p^k c = 0}| for k = 1, 2, ...:
  // successive ratios are p^(number of cyclic factors of exponent >= k).
  std::vector<u64> quotient_factors(const FinModule& m) const {
    const u64 q = coset_count();
    std::vector<u64> prime_powers;
    for (u64 p : prime_factors(q)) {
      std::vector<unsigned> at_least;  // at_least[k-1] = #factors with exponent >= k
      u64 prev = 1, pk = 1;
      for (;;) {
        pk *= p;
        u64 count = 0;
        for (std::size_t c = 0; c < q; ++c)
          if (coset_scale(m, pk, c) == 0) ++count;
        if (count == prev) break;
        unsigned r = 0;
        for (u64 ratio = count / prev; ratio > 1; ratio /= p) ++r;
        at_least.push_back(r);
        prev = count;
      }
      for (std::size_t k = 0; k < at_least.size(); ++k) {
        const unsigned next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
        u64 power = 1;
        for (std::size_t i = 0; i <= k; ++i) power *= p;
        for (unsigned j = 0; j < at_least[k] - next; ++j) prime_powers.push_back(power);
      }
    }
    return invariant_factors_from_prime_powers(prime_powers);
  }

  // Chooses coset generators g_i of order d_i whose span is direct and
  // everything, largest factor first, with backtracking.
  bool choose_basis(const FinModule& m, std::size_t level, std::vector<std::size_t>& gens,
                    const Bitset& spanned, std::size_t spanned_size) const {
    const auto factors = module_.invariant_factors();
    if (level == factors.size()) return spanned_size == coset_count();
    const std::size_t fi = factors.size() - 1 - level;
    const u64 d = factors[fi];
    for (std::size_t c = 1; c < coset_count(); ++c) {
      if (spanned.test(c) || coset_scale(m, d, c) != 0) continue;
      // Adjoining c must multiply the span size by exactly d.
      Bitset next = spanned;
      std::size_t step = c;
      u64 multiples = 1;
      while (!spanned.test(step)) {
        spanned.for_each([&](std::size_t h) { next.set(coset_add(m, h, step)); });
        step = coset_add(m, step, c);
        ++multiples;
      }
      // Direct iff the first multiple of c landing in the span is 0 = d·c.
      if (multiples != d || step != 0) continue;
      gens[fi] = c;
      if (choose_basis(m, level + 1, gens, next, spanned_size * d)) return true;
    }
    return false;
  }

  void build_projection(const FinModule& m) {
    const std::size_t q = coset_count();
    std::vector<std::size_t> gens(module_.rank(), 0);
    Bitset start(q);
    start.set(0);
    if (!choose_basis(m, 0, gens, start, 1))
      throw Error("failed to decompose the quotient module");  // unreachable for abelian groups
    std::vector<Code> coset_to_code(q, 0);
    for (Code code = 0; code < module_.order(); ++code) {
      const auto e = module_.decode(code);
      std::size_t c = 0;
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (u64 t = 0; t < e.coordinates[i]; ++t) c = coset_add(m, c, gens[i]);
      coset_to_code[c] = code;
    }
    projection_.resize(m.order());
    for (Code x = 0; x < m.order(); ++x)
      projection_[x] = coset_to_code[static_cast<std::size_t>(coset_of_[x])];
  }

  Submodule kernel_;
  FinModule module_;
  std::vector<std::int32_t> coset_of_;
  std::vector<Code> reps_;
  std::vector<Code> projection_;
};

inline Quotient quotient(const FinModule& m, const Submodule& n) { return Quotient(m, n); }

}  // namespace specgraph
