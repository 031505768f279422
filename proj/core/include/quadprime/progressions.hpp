#pragma once

// Prime counting in residue classes and the main-term / error-term
// decomposition of sum_{n <= sqrt x} Lambda(n + 1) (sum_{d|n} lambda(d))^2.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <nlohmann/json.hpp>

#include "quadprime/sieve.hpp"

namespace quadprime {

// psi(x; q, a) = sum of Lambda(n) over n <= x, n = a (mod q). Any 0 <= a < q.
double psi_progression(const SieveTable& t, std::uint64_t x, std::uint64_t q, std::uint64_t a);

// Number of primes p <= x with p = a (mod q).
std::uint64_t pi_progression(const SieveTable& t, std::uint64_t x, std::uint64_t q, std::uint64_t a);

// psi(x; q, a) * phi(q) / x. Throws DomainError when gcd(a, q) > 1.
double siegel_walfisz_ratio(const SieveTable& t, std::uint64_t x, std::uint64_t q, std::uint64_t a);

struct AverageErrorSum {
  double value = 0.0;
  // Moduli with gcd(a, q) > 1; they contribute |psi(x; q, a)| with no main term.
  std::vector<std::uint64_t> non_coprime_moduli;
};

// sum_{q <= q_max} |psi(x; q, a mod q) - x / phi(q)|. Requires a != 0 and
// q_max <= x.
AverageErrorSum average_error_sum(const SieveTable& t, std::uint64_t x, std::uint64_t q_max, std::uint64_t a);

// psi(x; q, a) for every residue a in [0, q), one pass over prime powers.
std::vector<double> psi_all_residues(const SieveTable& t, std::uint64_t x, std::uint64_t q);

// Largest |psi(x; q, a) - x / phi(q)| over a coprime to q.
double max_residue_error(const SieveTable& t, std::uint64_t x, std::uint64_t q);

// sum_{q <= q_max} max_{(a,q)=1} |psi(x; q, a) - x / phi(q)|^power.
// power = 1 is the Bombieri-Vinogradov left side, power = 2 the
// Barban-Davenport-Halberstam one. Exploratory only.
double max_error_moment(const SieveTable& t, std::uint64_t x, std::uint64_t q_max, int power);

struct LambdaWeightedPsi {
  double liouville_weighted = 0.0;  // sum_{n <= x, q | n} lambda(n) Lambda(n + 1)
  double plain = 0.0;               // sum_{n <= x, q | n} Lambda(n + 1)
};

// Needs x + 1 <= t.limit().
LambdaWeightedPsi lambda_weighted_psi(const SieveTable& t, std::uint64_t x, std::uint64_t q);

// All terms of the main/error decomposition at a given x.
//
//   total = sum_{n <= sqrt x} Lambda(n+1) (sum_{d|n} lambda(d))^2
//   M     = 2 sum_{d,e <= x^{1/4}} lambda(d) lambda(e) sum_{n <= sqrt x, d|n, e|n} Lambda(n+1)
//   E     = same with lambda(n) Lambda(n+1) in the inner sum
//   S0/S1 = diagonal (d = e) / off-diagonal part of M
//   T0/T1 = S0 split at d <= x0 = (log x)^B
//   T2/T3 = S1 collapsed onto q = lcm(d, e), split at q <= x^{1/4}
//
// The lcm collapse uses the exact weight w(q) = sum over d != e with
// [d, e] = q of lambda(d) lambda(e); T2_liouville / T3_liouville repeat the
// collapse with lambda(q) as the weight instead.
struct DecompositionReport {
  std::uint64_t x = 0;
  double B = 0.0;
  double x0 = 0.0;
  std::uint64_t sqrt_bound = 0;     // floor(x^{1/2})
  std::uint64_t quarter_bound = 0;  // floor(x^{1/4})

  double total = 0.0;
  double M = 0.0;
  double E = 0.0;
  double S0 = 0.0;
  double S1 = 0.0;
  double T0 = 0.0;
  double T1 = 0.0;
  double T2 = 0.0;
  double T3 = 0.0;

  double residual_MS = 0.0;     // |M - S0 - S1|
  double residual_total = 0.0;  // |total - M - E|
  double residual_S0 = 0.0;     // |S0 - T0 - T1|
  double residual_S1 = 0.0;     // |S1 - T2 - T3|

  // Relative forms: residual / |reference| (reference = M, total, S0, S1),
  // or the absolute residual when the reference is zero.
  double relative_MS() const;
  double relative_total() const;
  double relative_S0() const;
  double relative_S1() const;

  // 2 sum_{d <= x^{1/4}} lambda(d^2) sum_{n <= sqrt x, d^2 | n} Lambda(n+1)
  double S0_square_divisor = 0.0;
  double T2_liouville = 0.0;
  double T3_liouville = 0.0;
  // T2 / (x^{1/2} (log log x)^2 / log x)
  double T2_scaled = 0.0;
  // S1 / (x^{1/2} (log log x)^2 / log x)
  double S1_scaled = 0.0;
};

// Requires B > 2 and floor(sqrt x) + 1 <= t.limit(). The d-loop of M and E
// is split across workers; partial sums are combined in d order.
DecompositionReport compute_decomposition(const SieveTable& t, std::uint64_t x, double B, unsigned workers = 1);

nlohmann::json to_json(const DecompositionReport& r);
// x,term,value,residual rows; residual is empty for terms without one.
void write_decomposition_csv(std::ostream& out, const std::vector<DecompositionReport>& reports);

// How the moduli q <= sqrt x are hit by lcm(d, e) with d != e <= x^{1/4}.
struct ModuliCoverage {
  std::uint64_t x = 0;
  std::uint64_t sqrt_bound = 0;
  std::uint64_t covered = 0;  // q <= sqrt x with at least one representation
  std::uint64_t max_multiplicity = 0;
  std::uint64_t max_multiplicity_at = 0;
  std::vector<std::uint64_t> first_missing;  // up to 32 entries
  // Number of q <= sqrt x whose collapse weight w(q) differs from lambda(q).
  std::uint64_t weight_mismatches = 0;

  bool covers_all() const { return covered == sqrt_bound; }
};

ModuliCoverage moduli_set_coverage(const SieveTable& t, std::uint64_t x);

}  // namespace quadprime
