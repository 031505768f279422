#pragma once

// Divisor-sum identities around the Liouville and von Mangoldt functions,
// each evaluated as "left side vs right side" so that a false identity shows
// up as a failed check rather than being assumed.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "quadprime/claims.hpp"
#include "quadprime/sieve.hpp"

namespace quadprime {

using IdentityValue = std::variant<std::int64_t, double>;

struct IdentityCheck {
  std::string claim_id;
  std::uint64_t n_or_x = 0;
  IdentityValue lhs;
  IdentityValue rhs;
  bool equal = false;
  std::vector<std::pair<std::string, IdentityValue>> detail;
};

std::string format_value(const IdentityValue& v);

inline constexpr double kVonMangoldtAbsTol = 1e-12;
inline constexpr double kWeightedRelTol = 1e-8;

// sum_{d | n} lambda(d), evaluated over the divisors of n.
int square_indicator(const SieveTable& t, std::uint64_t n);

// sum_{d | n} lambda(d) for every n in [1, limit] by a divisor-sum sieve;
// index 0 is unused.
std::vector<std::int32_t> square_indicator_table(const SieveTable& t, std::uint64_t limit);

// Lambda(n + 1) * (sum_{d | n} lambda(d))^2. Needs n + 1 <= t.limit().
double quad_linear_weight(const SieveTable& t, std::uint64_t n);

// Lambda(n) against -sum_{d | n} mu(d) log d.
IdentityCheck check_vonmangoldt_divisor_sum(const SieveTable& t, std::uint64_t n);

// The three per-n hyperbola splits, thresholds taken at sqrt(n).
struct HyperbolaChecks {
  // Printed boundary convention: d < sqrt(n) in the first sum, d <= sqrt(n) in
  // the second.
  IdentityCheck vonmangoldt_split;
  IdentityCheck liouville_split;
  // Both sums with d <= sqrt(n); differs from the above only at squares.
  IdentityCheck vonmangoldt_split_inclusive;
  IdentityCheck liouville_split_inclusive;
  // (sum lambda(d))^2 against 2 A^2 + 2 lambda(n) B^2 with
  // A = sum_{d|n, d<=sqrt n} lambda(d), B = sum_{d|n, d<=sqrt n} lambda(n/d).
  // detail carries the dropped cross term sum_{d<sqrt n} lambda(d) * B.
  IdentityCheck square_expansion;
  std::int64_t cross_term = 0;
};

HyperbolaChecks check_hyperbola_splits(const SieveTable& t, std::uint64_t n);

// sum_{d^2 | n} mu(n / d^2) against lambda(n).
IdentityCheck check_mobius_square_divisors(const SieveTable& t, std::uint64_t n);

// sum_{n <= x} lambda(n) floor(x / n) against floor(sqrt x), by a direct loop.
IdentityCheck lambda_floor_sum(const SieveTable& t, std::uint64_t x);

// sum_{m <= sqrt x} Lambda(m^2 + 1) (direct) against
// sum_{n <= x} Lambda(n + 1) (sum_{d|n} lambda(d))^2. Needs x + 1 <= limit.
IdentityCheck check_summation_identity(const SieveTable& t, std::uint64_t x);

// Direct sum_{n <= x} (sum_{d|n} lambda(d))^2 and the double floor sum
// sum_{d, e <= x} lambda(d) lambda(e) floor(x / (de)), both against
// floor(sqrt x). lhs is the direct sum; detail holds all three values.
IdentityCheck check_squared_divisor_floor_sum(const SieveTable& t, std::uint64_t x);

// ((p-1)/2)! = +-a (mod p) with a = round(sqrt p), tested as an
// "if and only if" against p = a^2 + 1. Throws DomainError unless p is an
// odd prime.
ClaimVerdict wilson_quadratic_check(std::uint64_t p);

// Result of checking one identity over a range.
struct ScanSummary {
  std::string claim_id;
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::vector<IdentityCheck> failures;  // first kMaxRecordedFailures only

  bool all_passed() const { return checked > 0 && failed == 0; }
  double pass_rate() const { return checked == 0 ? 0.0 : static_cast<double>(passed) / checked; }
  void record(IdentityCheck c);
  void merge(ScanSummary other);
};

inline constexpr std::size_t kMaxRecordedFailures = 16;

nlohmann::json to_json(const ScanSummary& s);

// Every n <= limit: sum_{d|n} lambda(d) equals [n is a square], and the
// running total equals floor(sqrt x).
ScanSummary scan_square_indicator(const SieveTable& t, std::uint64_t limit);
ScanSummary scan_vonmangoldt_divisor_sum(const SieveTable& t, std::uint64_t n_max, unsigned workers = 1);
// Summaries in HyperbolaChecks field order: vonmangoldt_split,
// liouville_split, vonmangoldt_split_inclusive, liouville_split_inclusive,
// square_expansion.
std::array<ScanSummary, 5> scan_hyperbola_splits(const SieveTable& t, std::uint64_t n_max);
ScanSummary scan_mobius_square_divisors(const SieveTable& t, std::uint64_t n_max, unsigned workers = 1);
// Uses blocks of constant floor(x/n) with a prefix table of lambda, so each x
// costs O(sqrt x).
ScanSummary scan_lambda_floor_sum(const SieveTable& t, std::uint64_t x_max, unsigned workers = 1);
// [0]: direct sum of squares against floor(sqrt x); [1]: the double floor
// sum against floor(sqrt x).
std::array<ScanSummary, 2> scan_squared_divisor_floor_sum(const SieveTable& t, std::uint64_t x_max,
                                                          unsigned workers = 1);
ScanSummary scan_summation_identity(const SieveTable& t, std::span<const std::uint64_t> grid);
// Every odd prime p <= p_max.
ScanSummary scan_wilson(std::uint64_t p_max);

// claim_id,n_or_x,lhs,rhs,pass
void write_checks_csv(std::ostream& out, std::span<const IdentityCheck> checks);

}  // namespace quadprime
