#include "quadprime/arith.hpp"

#include <cmath>

#include "quadprime/errors.hpp"

namespace quadprime {

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool checked_pow(u64 base, unsigned exp, u64& out) {
  u128 acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > UINT64_MAX) return false;
  }
  out = static_cast<u64>(acc);
  return true;
}

u64 iroot(u64 n, unsigned k) {
  if (k == 0) throw ParameterError("iroot: k must be >= 1");
  if (k == 1 || n < 2) return n;
  if (k >= 64) return 1;
  u64 r = static_cast<u64>(std::pow(static_cast<long double>(n), 1.0L / k));
  u64 p = 0;
  while (r > 0 && (!checked_pow(r, k, p) || p > n)) --r;
  while (checked_pow(r + 1, k, p) && p <= n) ++r;
  return r;
}

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

int legendre(i64 u, u64 p) {
  if (p < 3 || p % 2 == 0) throw DomainError("legendre: modulus must be an odd prime");
  const u64 r = powmod(mod_floor(u, p), (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

}  // namespace quadprime
