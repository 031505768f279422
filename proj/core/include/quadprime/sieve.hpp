#pragma once

// Smallest-prime-factor table on [1, N] and the multiplicative functions
// derived from it.
//
// The table is built once by a segmented sieve and is immutable afterwards;
// every query is a pure function of (table, n) and may be issued from any
// number of threads.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace quadprime {

struct BuildOptions;
class SieveTable;
SieveTable build_table(std::uint64_t limit, const BuildOptions& options);

struct BuildOptions {
  std::uint64_t segment_size = std::uint64_t{1} << 16;
  unsigned workers = 1;
  // Largest limit accepted at all.
  std::uint64_t max_limit = std::uint64_t{1} << 32;
  // spf (4 bytes) + Omega (1 byte) + mu (1 byte) per entry.
  std::uint64_t memory_budget_bytes = std::uint64_t{4} << 30;
};

inline constexpr std::uint64_t kMinSegmentSize = std::uint64_t{1} << 10;
inline constexpr std::uint64_t kBytesPerEntry = 6;

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;  // primes strictly increasing

  std::uint64_t value() const;
};

class SieveTable {
 public:
  // Takes ownership of a complete spf array (index 0..limit, spf[0] = spf[1]
  // = 0) and derives Omega and mu. Throws DomainError if any entry violates
  // the spf invariants.
  static SieveTable from_spf(std::vector<std::uint32_t> spf, std::uint64_t segment_size);

  std::uint64_t limit() const { return limit_; }
  std::uint64_t segment_size() const { return segment_size_; }

  std::uint32_t spf(std::uint64_t n) const;
  bool is_prime(std::uint64_t n) const;

  Factorization factorize(std::uint64_t n) const;
  // All positive divisors of n in increasing order.
  std::vector<std::uint64_t> divisors(std::uint64_t n) const;

  // Calls fn(d) for every divisor d of n without allocating. The visiting
  // order is fixed for a given n but is not sorted.
  template <typename Fn>
  void for_each_divisor(std::uint64_t n, Fn&& fn) const;

  int liouville(std::uint64_t n) const;
  int mobius(std::uint64_t n) const;
  unsigned big_omega(std::uint64_t n) const;
  double von_mangoldt(std::uint64_t n) const;
  std::uint64_t euler_phi(std::uint64_t n) const;

  // Raw views, indexed by n. Entries 0 and 1 carry no meaning for spf.
  std::span<const std::uint32_t> spf_data() const { return spf_; }
  std::span<const std::int8_t> mobius_data() const { return mu_; }
  std::span<const std::uint8_t> omega_data() const { return omega_; }

  // Unchecked fast paths for scans that have already validated their range.
  int liouville_unchecked(std::uint64_t n) const { return (omega_[n] & 1U) ? -1 : 1; }
  int mobius_unchecked(std::uint64_t n) const { return mu_[n]; }
  double von_mangoldt_unchecked(std::uint64_t n) const;

 private:
  friend SieveTable build_table(std::uint64_t, const BuildOptions&);
  SieveTable() = default;
  void derive_functions();
  void check_range(std::uint64_t n, const char* what) const;

  std::uint64_t limit_ = 0;
  std::uint64_t segment_size_ = 0;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint8_t> omega_;
  std::vector<std::int8_t> mu_;
};

template <typename Fn>
void SieveTable::for_each_divisor(std::uint64_t n, Fn&& fn) const {
  check_range(n, "for_each_divisor");
  // d(n) <= 1344 for n < 2^32
  std::array<std::uint64_t, 1536> divs;
  std::size_t count = 1;
  divs[0] = 1;
  while (n > 1) {
    const std::uint64_t p = spf_[n];
    const std::size_t base = count;
    std::uint64_t pk = 1;
    while (n % p == 0) {
      n /= p;
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs[count++] = divs[i] * pk;
    }
  }
  for (std::size_t i = 0; i < count; ++i) fn(divs[i]);
}

// Segmented smallest-prime-factor sieve. The output does not depend on
// segment_size or workers.
SieveTable build_table(std::uint64_t limit, const BuildOptions& options = {});

// Primes up to bound by a plain odd-only Eratosthenes sieve. Independent of
// SieveTable; used by the Euler-product code and by tests.
std::vector<std::uint32_t> primes_up_to(std::uint64_t bound);

}  // namespace quadprime
