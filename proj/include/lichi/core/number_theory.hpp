#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "lichi/core/error.hpp"

namespace lichi::nt {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 pow_mod(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

struct PrimePower {
  u64 p;
  unsigned e;
};

/// Trial division; inputs here are moduli and small integers.
inline std::vector<PrimePower> factorize(u64 n) {
  std::vector<PrimePower> f;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.push_back({p, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

inline u64 ipow(u64 b, unsigned e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

inline u64 totient(u64 n) {
  u64 r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

inline bool is_squarefree(u64 n) {
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return false;
  }
  return true;
}

inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> d{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t k = d.size();
    u64 pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < k; ++j) d.push_back(d[j] * pk);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

/// Smallest primitive root modulo p^e for an odd prime p.
inline u64 primitive_root_odd_prime_power(u64 p, unsigned e) {
  const u64 phi_p = p - 1;
  const auto factors = factorize(phi_p);
  u64 g = 2;
  for (;; ++g) {
    bool ok = true;
    for (auto [r, k] : factors) {
      if (pow_mod(g, phi_p / r, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) break;
  }
  if (e >= 2 && pow_mod(g, p - 1, p * p) == 1) g += p;
  return g;
}

/// Kronecker symbol (d/n) for n >= 0.
inline int kronecker(long long d, u64 n) {
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    const long long dm8 = ((d % 8) + 8) % 8;
    if (dm8 % 2 == 0) return 0;
    if (dm8 == 3 || dm8 == 5) result = -result;
  }
  if (n == 1) return result;
  // Jacobi symbol (d mod n / n) for odd n
  u64 a = static_cast<u64>(((d % static_cast<long long>(n)) + static_cast<long long>(n)) % static_cast<long long>(n));
  u64 m = n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const u64 r = m % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

inline bool is_fundamental_discriminant(long long d) {
  if (d == 0 || d == 1) return false;
  const u64 ad = static_cast<u64>(d < 0 ? -d : d);
  const long long r4 = ((d % 4) + 4) % 4;
  if (r4 == 1) return is_squarefree(ad);
  if (r4 != 0) return false;
  const long long m = d / 4;
  const long long m4 = ((m % 4) + 4) % 4;
  return (m4 == 2 || m4 == 3) && is_squarefree(static_cast<u64>(m < 0 ? -m : m));
}

/// Primes <= limit by an odd-only sieve of Eratosthenes.
inline std::vector<std::uint32_t> primes_up_to(u64 limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  primes.push_back(2);
  const u64 half = (limit - 1) / 2;  // index i <-> 2i+1, i >= 1
  std::vector<bool> composite(half + 1, false);
  for (u64 i = 1; i <= half; ++i) {
    if (composite[i]) continue;
    const u64 p = 2 * i + 1;
    primes.push_back(static_cast<std::uint32_t>(p));
    for (u64 j = (p * p - 1) / 2; j <= half; j += p) composite[j] = true;
  }
  return primes;
}

}  // namespace lichi::nt
