#include "quadprime/primality.hpp"

#include <array>
#include <bit>

#include "quadprime/arith.hpp"

namespace quadprime {

namespace {
constexpr std::array<u64, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
}  // namespace

bool is_strong_probable_prime(u64 n, u64 base) {
  const u64 d_full = n - 1;
  const int s = std::countr_zero(d_full);
  const u64 d = d_full >> s;
  u64 x = powmod(base % n, d, n);
  if (x == 1 || x == n - 1 || x == 0) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

bool is_prime_wide(u64 n) {
  if (n < 2) return false;
  for (u64 p : kBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;
  for (u64 b : kBases) {
    if (!is_strong_probable_prime(n, b)) return false;
  }
  return true;
}

}  // namespace quadprime
