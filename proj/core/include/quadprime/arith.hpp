#pragma once

// Word-size integer helpers shared by the sieve, primality and polynomial code.

#include <cstdint>
#include <numeric>

namespace quadprime {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// floor(sqrt(n)) exactly, for all 64-bit n.
u64 isqrt(u64 n);

// floor(n^(1/k)) exactly, k >= 1.
u64 iroot(u64 n, unsigned k);

inline bool is_square(u64 n) {
  const u64 r = isqrt(n);
  return r * r == n;
}

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m);

// Positive residue of v modulo m (m >= 1).
inline u64 mod_floor(i128 v, u64 m) {
  const i128 r = v % static_cast<i128>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i128>(m) : r);
}

// Legendre symbol (u | p) for an odd prime p, by Euler's criterion.
// Returns 0 when p divides u.
int legendre(i64 u, u64 p);

// Saturating integer power; returns false when the result exceeds 2^64 - 1.
bool checked_pow(u64 base, unsigned exp, u64& out);

}  // namespace quadprime
