#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace bsymb {

// Small integer helpers shared by the field and constacyclic layers. All
// inputs here are desk scale (below 2^20 or so); trial division is enough.

inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::pair<uint64_t, int>> factorize_u64(uint64_t n) {
  std::vector<std::pair<uint64_t, int>> out;
  for (uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) { n /= d; ++e; }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Smallest s > 0 with a^s == 1 (mod m); requires gcd(a, m) == 1 and m > 1.
inline uint64_t mult_order_mod(uint64_t a, uint64_t m) {
  uint64_t x = a % m, s = 1;
  while (x != 1) {
    x = x * (a % m) % m;
    ++s;
  }
  return s;
}

// min(base^e, cap); never overflows.
inline uint64_t pow_sat_u64(uint64_t base, uint32_t e, uint64_t cap) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < e; ++i) {
    if (base != 0 && r > cap / base) return cap;
    r *= base;
    if (r >= cap) return cap;
  }
  return r;
}

// Number of points of PG(r, q), saturating at cap.
inline uint64_t pg_count_sat(uint64_t q, uint32_t r, uint64_t cap) {
  uint64_t total = 0, term = 1;
  for (uint32_t i = 0; i <= r; ++i) {
    if (total > cap - term) return cap;
    total += term;
    if (term > cap / q) return cap;
    term *= q;
  }
  return total;
}

inline uint64_t inverse_mod(uint64_t a, uint64_t m) {
  // extended Euclid; requires gcd(a, m) == 1
  int64_t t = 0, nt = 1;
  int64_t r = static_cast<int64_t>(m), nr = static_cast<int64_t>(a % m);
  while (nr != 0) {
    int64_t qq = r / nr;
    std::swap(t -= qq * nt, nt);
    std::swap(r -= qq * nr, nr);
  }
  if (t < 0) t += static_cast<int64_t>(m);
  return static_cast<uint64_t>(t);
}

}  // namespace bsymb
