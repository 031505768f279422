#pragma once

// Summatory functions over the sieve table and truncated Euler products.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "quadprime/claims.hpp"
#include "quadprime/constant_estimate.hpp"
#include "quadprime/sieve.hpp"

namespace quadprime {

// sum_{n <= x} mu(n) and sum_{n <= x} lambda(n), exact.
std::int64_t mertens(const SieveTable& t, std::uint64_t x);
std::int64_t liouville_summatory(const SieveTable& t, std::uint64_t x);

double sum_lambda_over_phi(const SieveTable& t, std::uint64_t x);
double sum_mu_over_phi(const SieveTable& t, std::uint64_t x);

// The same sum as sum_lambda_over_phi, regrouped through
// n / phi(n) = sum_{d | n} mu^2(d) / phi(d):
//   sum_{n <= x} lambda(n)/phi(n)
//     = sum_{d <= x} mu^2(d) lambda(d) / (d phi(d)) * sum_{m <= x/d} lambda(m)/m.
double sum_lambda_over_phi_rearranged(const SieveTable& t, std::uint64_t x);

double sum_lambda_vonmangoldt(const SieveTable& t, std::uint64_t x);
double sum_mu_vonmangoldt(const SieveTable& t, std::uint64_t x);

inline constexpr double kC0Reference = 0.615132657318171877819725438740602;
inline constexpr double kLambdaNPhiReference = 0.458937522009147570415895603071402;
inline constexpr double kArtinLikeReference = 0.373955832771;

// prod_{p <= P} (1 - 1/((p^2 - 1)(p - 1))).
ConstantEstimate product_c0(std::uint64_t P, double tolerance = 1e-9);
// prod_{p <= P} (1 - p/((p^2 + 1)(p - 1))).
ConstantEstimate product_sum_lambda_n_phi(std::uint64_t P, double tolerance = 1e-6);
// prod_{p <= P} (1 - 1/(p(p - 1))).
ConstantEstimate product_artin_like(std::uint64_t P, double tolerance = 1e-7);

// sum_{n <= N} 1/phi(n^2) = sum_{n <= N} 1/(n phi(n)). The tail ~ 1.9436/N
// is heuristic (the mean of n/phi(n) is 315 zeta(3) / (2 pi^4)).
ConstantEstimate a0_phi_square_sum(std::uint64_t N, double tolerance = 1e-6);
// sum_{n <= N} mu(n)/(n phi(n)); tail bounded by sum_{n > N} 1/(n phi(n)).
ConstantEstimate a0_mu_dphi(std::uint64_t N, double tolerance = 1e-6);

struct MusqOverPhi {
  double value = 0.0;  // sum_{n <= x} mu^2(n)/phi(n)
  double drift = 0.0;  // value - log x
};

MusqOverPhi sum_musq_over_phi(const SieveTable& t, std::uint64_t x);

// sum_{n <= x} lambda(n)/phi(n) against
// prod_{p <= x} (1 - 1/p)(1 - 1/((p^2 - 1)(p - 1))). Always indeterminate;
// computed carries both sides and the signed ratio.
ClaimVerdict product_sum_equivalence_check(const SieveTable& t, std::uint64_t x);

struct SummatoryCurve {
  std::vector<std::pair<std::uint64_t, double>> points;  // x strictly increasing
  // Least-squares slope of log|value| against log x; present only with at
  // least 4 points, all nonzero.
  std::optional<double> exponent_fit;
};

// Throws ParameterError unless xs is strictly increasing.
SummatoryCurve make_curve(std::span<const std::uint64_t> xs, std::span<const double> values);

// 10^2, ..., 10^6
std::vector<std::uint64_t> decade_grid(std::uint64_t first = 100, std::uint64_t last = 1'000'000);

nlohmann::json to_json(const SummatoryCurve& c);

}  // namespace quadprime
