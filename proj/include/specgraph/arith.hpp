#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace specgraph {

using u64 = std::uint64_t;

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

/// Distinct prime divisors of n in ascending order. Empty for n <= 1.
inline std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  if (n < 2) return out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Product of the distinct primes of n; radical(0) == 0 and radical(1) == 1.
inline u64 radical(u64 n) {
  if (n == 0) return 0;
  u64 r = 1;
  for (u64 p : prime_factors(n)) r *= p;
  return r;
}

inline bool is_squarefree(u64 n) { return n != 0 && radical(n) == n; }

inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

/// Exponent of p in n (n > 0).
inline unsigned valuation(u64 n, u64 p) {
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline u64 smallest_prime_not_dividing(u64 n) {
  for (u64 p = 2;; ++p)
    if (is_prime(p) && (n == 0 || n % p != 0)) return p;
}

/// True when d divides n, with the conventions 0 | 0 and d | 0 for all d.
inline bool divides(u64 d, u64 n) {
  if (d == 0) return n == 0;
  return n % d == 0;
}

}  // namespace specgraph
