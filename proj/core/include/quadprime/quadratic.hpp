#pragma once

// Quadratic polynomials f(x) = ax^2 + bx + c: primes along f(n), fixed
// divisors, root counts, Hardy-Littlewood constants and the set
// A = {primes n^2 + 1}.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "quadprime/claims.hpp"
#include "quadprime/constant_estimate.hpp"

namespace quadprime {

// Coefficients are limited to |a|, |b|, |c| < 2^30 so that the discriminant
// fits comfortably in 64 bits.
inline constexpr std::int64_t kMaxCoefficient = std::int64_t{1} << 30;

struct QuadraticPoly {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 1;
  std::int64_t discriminant = -4;
  std::int64_t content = 1;  // gcd(a, b, c), always >= 1

  // Throws DomainError when a = 0, ParameterError when a coefficient is out
  // of range.
  static QuadraticPoly make(std::int64_t a, std::int64_t b, std::int64_t c);

  __int128 evaluate(__int128 n) const { return (a * n + b) * n + c; }
  // f(n) mod m for m >= 1.
  std::uint64_t evaluate_mod(std::uint64_t n, std::uint64_t m) const;
  bool irreducible() const;  // discriminant not a perfect square
};

struct AdmissibilityReport {
  std::int64_t gcd_abc = 1;
  bool disc_nonsquare = false;
  std::uint64_t fixed_divisor = 1;
  bool odd_condition = false;  // gcd(a + b, c) odd
  bool admissible = false;     // gcd_abc = 1, disc_nonsquare, fixed_divisor = 1
};

AdmissibilityReport admissibility(const QuadraticPoly& f);
nlohmann::json to_json(const AdmissibilityReport& r);

// gcd of f(0), ..., f(deg f), which is the gcd of f(Z). Coefficients are
// listed constant term first. Throws DomainError for the zero polynomial or a
// constant.
std::uint64_t fixed_divisor(std::span<const std::int64_t> coefficients);
std::uint64_t fixed_divisor(const QuadraticPoly& f);

// #{0 <= n < q : f(n) = 0 mod q}. Direct scan for q <= kNuDirectLimit, the
// prime-power route otherwise.
inline constexpr std::uint64_t kNuDirectLimit = 1'000'000;
std::uint64_t nu_f(const QuadraticPoly& f, std::uint64_t q);
std::uint64_t nu_f_direct(const QuadraticPoly& f, std::uint64_t q);
// Factors q and multiplies root counts mod p^k. Odd p not dividing a use the
// closed form for y^2 = D (mod p^k); other prime powers are lifted class by
// class, throwing CapacityError past 2^22 live classes.
std::uint64_t nu_f_multiplicative(const QuadraticPoly& f, std::uint64_t q);

struct QuadraticPrimeCount {
  std::uint64_t count = 0;
  std::vector<std::uint64_t> values;  // increasing n, at most the requested cap
  bool values_truncated = false;
};

// Largest N with |f(n)| < 2^64 for every 1 <= n <= N.
std::uint64_t max_count_argument(const QuadraticPoly& f);

// #{1 <= n <= N : f(n) prime}. Throws RangeError naming the largest usable N
// when f(N) would not fit in 64 bits.
QuadraticPrimeCount count_quadratic_primes(const QuadraticPoly& f, std::uint64_t N, std::size_t value_cap = 0,
                                           unsigned workers = 1);

// n,f(n) rows for the listed values.
void write_prime_values_csv(std::ostream& out, const QuadraticPoly& f, const QuadraticPrimeCount& c);

// If m = r^k for some k >= 2, the representation with the largest k.
struct PerfectPower {
  std::uint64_t base = 0;
  unsigned exponent = 1;
};
PerfectPower largest_power(std::uint64_t m);

// Lambda(m) for any 64-bit m, with prime powers found by integer roots.
double von_mangoldt_wide(std::uint64_t m);

// sum_{n <= N} Lambda(n^2 + 1). N < 2^32.
double lambda_psi_quadratic(std::uint64_t N, unsigned workers = 1);

// int_2^x dt / log t, x >= 2.
double log_integral_from_2(double x);

inline constexpr double kA2Reference = 1.37281346;

// prod over odd p <= P of (1 - (-1|p) / (p - 1)). The product converges only
// conditionally, so the tail 2 / (sqrt(P) log P) is a heuristic.
ConstantEstimate a2_constant(std::uint64_t P, double tolerance = 1e-3);

struct HardyLittlewoodEstimate {
  ConstantEstimate estimate;
  double epsilon = 1.0;         // 2 - nu_f(2) when 2 does not divide gcd(a, b), else 1
  double gcd_factor = 1.0;      // prod_{p | gcd(a,b)} (1 + 1/(p - 1))
  std::uint64_t nu_at_two = 0;  // nu_f(2)
};

// epsilon / sqrt(a) * prod_{p | gcd(a,b)} (1 + 1/(p-1))
//   * prod_{2 < p <= P, p not dividing gcd(a,b)} (1 - (D|p) / (p-1)).
// Throws DomainError unless f is admissible with a > 0.
HardyLittlewoodEstimate hardy_littlewood_constant(const QuadraticPoly& f, std::uint64_t P, double tolerance = 1e-3);
nlohmann::json to_json(const HardyLittlewoodEstimate& h);

struct LeastPrime {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
};

// Smallest n in [0, n_max] with f(n) prime.
std::optional<LeastPrime> least_prime(const QuadraticPoly& f, std::uint64_t n_max);

// {sqrt p} < c / sqrt p for a prime p = n^2 + 1, evaluated as
// 1 / (sqrt(n^2 + 1) + n) in long double. computed carries the residual
// {sqrt p} - 1/(2n). Throws DomainError unless p is such a prime and c > 1/2.
ClaimVerdict sqrt_fractional_check(std::uint64_t p, double c);

struct FractionalScan {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::vector<std::uint64_t> failing_primes;  // first 16
  double worst_ratio = 0.0;                   // max {sqrt p} sqrt p / c
};

// Every prime p = n^2 + 1 with n_first <= n <= n_last.
FractionalScan sqrt_fractional_scan(std::uint64_t n_first, std::uint64_t n_last, double c);

struct PrimePowerHit {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t m = 0;
};

// Every p^k = m^2 + 1 with k >= 2 and 1 <= m <= N.
std::vector<PrimePowerHit> prime_power_scan(std::uint64_t N);

// sum of 1/p over primes p = n^2 + 1 with n <= N.
double harmonic_sum_A(std::uint64_t N);
// prod over the same primes of (1 - p^-s)^-1. Throws DomainError for s <= 1/2.
double zeta_A_truncated(double s, std::uint64_t N);

struct HalfLineGrowth {
  std::uint64_t x = 0;
  double value = 0.0;  // sum over prime powers p^k <= x, p in A, of log p / p^{k/2}
  double log_x = 0.0;
};

HalfLineGrowth zeta_A_half_line_growth(std::uint64_t x);

}  // namespace quadprime
