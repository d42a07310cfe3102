#pragma once

#include <numeric>
#include <string>

#include "specgraph/arith.hpp"
#include "specgraph/error.hpp"

namespace specgraph {

/// The base ring: the integers (modulus 0) or Z/NZ for N >= 2.
class Ring {
 public:
  Ring() = default;
  explicit Ring(u64 modulus) : modulus_(modulus) {
    if (modulus == 1) throw InvalidArgument("ring modulus 1 (the zero ring) is not allowed");
  }

  static Ring integers() { return Ring(0); }

  u64 modulus() const { return modulus_; }
  bool is_integers() const { return modulus_ == 0; }

  int krull_dimension() const { return is_integers() ? 1 : 0; }
  bool is_artinian() const { return !is_integers(); }
  bool is_reduced() const { return is_integers() || is_squarefree(modulus_); }

  std::string name() const { return is_integers() ? "Z" : "Z/" + std::to_string(modulus_); }

  bool operator==(const Ring&) const = default;

 private:
  u64 modulus_ = 0;
};

/// An ideal of a Ring encoded by a single divisor d: the ideal dZ, or dZ/NZ
/// with d | N. The unit ideal has divisor 1; the zero ideal has divisor 0
/// over Z and N over Z/NZ.
class Ideal {
 public:
  Ideal(Ring ring, u64 divisor) : ring_(ring), divisor_(normalize(ring, divisor)) {}

  static Ideal unit(Ring r) { return Ideal(r, 1); }
  static Ideal zero(Ring r) { return Ideal(r, 0); }

  const Ring& ring() const { return ring_; }
  u64 divisor() const { return divisor_; }

  bool is_unit() const { return divisor_ == 1; }
  bool is_zero() const { return divisor_ == (ring_.is_integers() ? 0 : ring_.modulus()); }
  bool is_maximal() const { return is_prime_number(); }
  bool is_prime() const { return is_prime_number() || (ring_.is_integers() && divisor_ == 0); }

  /// this ⊇ other.
  bool contains(const Ideal& other) const { return divides(divisor_, other.divisor_); }

  Ideal operator*(const Ideal& o) const { return Ideal(ring_, divisor_ * o.divisor_); }
  /// Ideal sum, i.e. the gcd of the generators.
  Ideal operator+(const Ideal& o) const { return Ideal(ring_, std::gcd(divisor_, o.divisor_)); }
  Ideal intersect(const Ideal& o) const {
    if (divisor_ == 0 || o.divisor_ == 0) return Ideal(ring_, 0);
    return Ideal(ring_, std::lcm(divisor_, o.divisor_));
  }

  std::string to_string() const { return std::to_string(divisor_) + ring_.name(); }

  bool operator==(const Ideal&) const = default;

 private:
  static u64 normalize(const Ring& r, u64 d) {
    return r.is_integers() ? d : std::gcd(d, r.modulus());
  }
  bool is_prime_number() const { return specgraph::is_prime(divisor_); }

  Ring ring_;
  u64 divisor_;
};

/// Nilradical: the ideal of nilpotent elements.
inline Ideal nil_radical(const Ring& r) {
  if (r.is_integers()) return Ideal::zero(r);
  return Ideal(r, radical(r.modulus()));
}

/// Intersection of the maximal ideals containing I. For the unit ideal no
/// maximal ideal qualifies and the unit ideal is returned.
inline Ideal jm_radical_ideal(const Ideal& i) {
  if (i.divisor() == 0) return i;  // Jacobson radical of Z is 0
  return Ideal(i.ring(), radical(i.divisor()));
}

/// Whether Z/mZ has an idempotent other than 0 and 1. m == 0 stands for Z.
inline bool idempotents_nontrivial(u64 m) {
  if (m == 0) return false;
  return prime_factors(m).size() >= 2;
}

}  // namespace specgraph
