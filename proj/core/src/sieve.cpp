#include "quadprime/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "quadprime/arith.hpp"
#include "quadprime/errors.hpp"

namespace quadprime {

std::uint64_t Factorization::value() const {
  std::uint64_t v = 1;
  for (const auto& f : factors) {
    for (unsigned i = 0; i < f.exponent; ++i) v *= f.prime;
  }
  return v;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint32_t> primes;
  if (bound < 2) return primes;
  // composite[i] describes the odd number 2i + 1
  const std::uint64_t half = (bound - 1) / 2 + 1;
  std::vector<bool> composite(half, false);
  primes.push_back(2);
  for (std::uint64_t i = 1; i < half; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    primes.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t j = p * p / 2; j < half; j += p) composite[j] = true;
  }
  return primes;
}

namespace {

void sieve_segment(std::vector<std::uint32_t>& spf, std::span<const std::uint32_t> base_primes,
                   std::uint64_t lo, std::uint64_t hi) {
  for (const std::uint64_t p : base_primes) {
    if (p * p >= hi) break;
    std::uint64_t start = (lo + p - 1) / p * p;
    start = std::max(start, p * p);
    for (std::uint64_t m = start; m < hi; m += p) {
      if (spf[m] == 0) spf[m] = static_cast<std::uint32_t>(p);
    }
  }
  for (std::uint64_t n = lo; n < hi; ++n) {
    if (spf[n] == 0) spf[n] = static_cast<std::uint32_t>(n);
  }
}

}  // namespace

SieveTable build_table(std::uint64_t limit, const BuildOptions& options) {
  if (limit < 2) throw RangeError("build_table: limit must be >= 2, got " + std::to_string(limit));
  if (options.segment_size < kMinSegmentSize) {
    throw ParameterError("build_table: segment_size must be >= " + std::to_string(kMinSegmentSize));
  }
  if (options.workers == 0) throw ParameterError("build_table: workers must be >= 1");
  if (limit > options.max_limit) {
    throw CapacityError("build_table: limit " + std::to_string(limit) + " exceeds the configured cap " +
                        std::to_string(options.max_limit));
  }
  const std::uint64_t bytes = (limit + 1) * kBytesPerEntry;
  if (bytes > options.memory_budget_bytes) {
    throw CapacityError("build_table: limit " + std::to_string(limit) + " needs " + std::to_string(bytes) +
                        " bytes, over the memory budget of " + std::to_string(options.memory_budget_bytes) +
                        " bytes");
  }

  const auto base_primes = primes_up_to(isqrt(limit));
  std::vector<std::uint32_t> spf(limit + 1, 0);

  const std::uint64_t seg = options.segment_size;
  const std::uint64_t first = 2;
  const std::uint64_t end = limit + 1;
  const std::uint64_t segments = (end - first + seg - 1) / seg;
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(options.workers, segments));

  auto run = [&](unsigned w) {
    for (std::uint64_t i = w; i < segments; i += workers) {
      const std::uint64_t lo = first + i * seg;
      sieve_segment(spf, base_primes, lo, std::min(end, lo + seg));
    }
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  SieveTable table;
  table.limit_ = limit;
  table.segment_size_ = seg;
  table.spf_ = std::move(spf);
  table.derive_functions();
  return table;
}

SieveTable SieveTable::from_spf(std::vector<std::uint32_t> spf, std::uint64_t segment_size) {
  if (spf.size() < 3) throw DomainError("spf array must cover at least [0, 2]");
  const std::uint64_t limit = spf.size() - 1;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    const std::uint64_t p = spf[n];
    if (p < 2 || n % p != 0 || spf[p] != p || (p != n && p * p > n)) {
      throw DomainError("spf array violates invariants at n = " + std::to_string(n));
    }
  }
  SieveTable table;
  table.limit_ = limit;
  table.segment_size_ = segment_size;
  table.spf_ = std::move(spf);
  table.spf_[0] = table.spf_[1] = 0;
  table.derive_functions();
  return table;
}

void SieveTable::derive_functions() {
  omega_.assign(limit_ + 1, 0);
  mu_.assign(limit_ + 1, 0);
  mu_[1] = 1;
  for (std::uint64_t n = 2; n <= limit_; ++n) {
    const std::uint64_t p = spf_[n];
    const std::uint64_t m = n / p;
    omega_[n] = static_cast<std::uint8_t>(omega_[m] + 1);
    mu_[n] = (m % p == 0) ? 0 : static_cast<std::int8_t>(-mu_[m]);
  }
}

void SieveTable::check_range(std::uint64_t n, const char* what) const {
  if (n < 1 || n > limit_) {
    throw RangeError(std::string(what) + ": n = " + std::to_string(n) + " outside table range [1, " +
                     std::to_string(limit_) + "]");
  }
}

std::uint32_t SieveTable::spf(std::uint64_t n) const {
  if (n < 2 || n > limit_) {
    throw RangeError("spf: n = " + std::to_string(n) + " outside [2, " + std::to_string(limit_) + "]");
  }
  return spf_[n];
}

bool SieveTable::is_prime(std::uint64_t n) const {
  check_range(n, "is_prime");
  return n >= 2 && spf_[n] == n;
}

Factorization SieveTable::factorize(std::uint64_t n) const {
  check_range(n, "factorize");
  Factorization f;
  f.n = n;
  while (n > 1) {
    const std::uint64_t p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  return f;
}

std::vector<std::uint64_t> SieveTable::divisors(std::uint64_t n) const {
  const auto f = factorize(n);
  std::vector<std::uint64_t> divs{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t count = divs.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

int SieveTable::liouville(std::uint64_t n) const {
  check_range(n, "liouville");
  return liouville_unchecked(n);
}

int SieveTable::mobius(std::uint64_t n) const {
  check_range(n, "mobius");
  return mu_[n];
}

unsigned SieveTable::big_omega(std::uint64_t n) const {
  check_range(n, "big_omega");
  return omega_[n];
}

double SieveTable::von_mangoldt_unchecked(std::uint64_t n) const {
  if (n < 2) return 0.0;
  const std::uint64_t p = spf_[n];
  std::uint64_t m = n;
  while (m % p == 0) m /= p;
  return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

double SieveTable::von_mangoldt(std::uint64_t n) const {
  check_range(n, "von_mangoldt");
  return von_mangoldt_unchecked(n);
}

std::uint64_t SieveTable::euler_phi(std::uint64_t n) const {
  std::uint64_t phi = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    phi *= p - 1;
    for (unsigned k = 1; k < e; ++k) phi *= p;
  }
  return phi;
}

}  // namespace quadprime
