#include "quadprime/partial_sums.hpp"

#include <cmath>
#include <string>

#include "quadprime/compensated_sum.hpp"
#include "quadprime/errors.hpp"

namespace quadprime {

namespace {

using u64 = std::uint64_t;

void require_table(const SieveTable& t, u64 x, const char* what) {
  if (x > t.limit()) {
    throw RangeError(std::string(what) + ": needs the table to cover " + std::to_string(x) + ", table limit is " +
                     std::to_string(t.limit()));
  }
}

template <typename Term>
double table_sum(const SieveTable& t, u64 x, const char* what, Term term) {
  require_table(t, x, what);
  CompensatedSum s;
  for (u64 n = 1; n <= x; ++n) s.add(term(n));
  return s.value();
}

// Euler products prod_{p <= P} (1 - term(p)), with decade checkpoints.
template <typename Term>
ConstantEstimate euler_product(const char* name, u64 P, Term term) {
  if (P < 2) throw ParameterError(std::string(name) + ": P must be >= 2");
  ConstantEstimate e;
  e.name = name;
  e.truncation_point = P;
  long double prod = 1.0L;
  u64 next = 10;
  for (const u64 p : primes_up_to(P)) {
    for (; next < p; next *= 10) e.checkpoints.emplace_back(next, static_cast<double>(prod));
    prod *= 1.0L - term(static_cast<long double>(p));
  }
  for (; next <= P; next *= 10) e.checkpoints.emplace_back(next, static_cast<double>(prod));
  e.value = static_cast<double>(prod);
  return e;
}

// sum_{p > P} 1/p^2 ~ 1/(P log P) by the prime number theorem; the factor
// 1.25 covers the (1 + O(1/p)) corrections in the products below.
double prime_square_tail(u64 P) {
  const double dp = static_cast<double>(P);
  return 1.25 / (dp * std::log(dp));
}

struct PhiMu {
  std::vector<std::uint32_t> phi;
  std::vector<std::int8_t> mu;
};

// Linear sieve for phi and mu on [0, N].
PhiMu phi_mu_sieve(u64 N) {
  PhiMu s;
  s.phi.assign(N + 1, 0);
  s.mu.assign(N + 1, 0);
  std::vector<std::uint32_t> primes;
  if (N >= 1) {
    s.phi[1] = 1;
    s.mu[1] = 1;
  }
  for (u64 i = 2; i <= N; ++i) {
    if (s.phi[i] == 0) {
      s.phi[i] = static_cast<std::uint32_t>(i - 1);
      s.mu[i] = -1;
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (const u64 p : primes) {
      const u64 m = i * p;
      if (m > N) break;
      if (i % p == 0) {
        s.phi[m] = static_cast<std::uint32_t>(s.phi[i] * p);
        s.mu[m] = 0;
        break;
      }
      s.phi[m] = static_cast<std::uint32_t>(s.phi[i] * (p - 1));
      s.mu[m] = static_cast<std::int8_t>(-s.mu[i]);
    }
  }
  return s;
}

// 315 zeta(3) / (2 pi^4), the mean value of n / phi(n)
constexpr double kMeanNOverPhi = 1.9435964368;

template <typename Term>
ConstantEstimate phi_series(const char* name, u64 N, double tolerance, Term term) {
  if (N < 1) throw ParameterError(std::string(name) + ": N must be >= 1");
  if (N >= (u64{1} << 32)) throw CapacityError(std::string(name) + ": N must be below 2^32");
  const PhiMu s = phi_mu_sieve(N);
  ConstantEstimate e;
  e.name = name;
  e.truncation_point = N;
  CompensatedSum sum;
  u64 next = 10;
  for (u64 n = 1; n <= N; ++n) {
    sum.add(term(n, s.phi[n], s.mu[n]));
    if (n == next) {
      e.checkpoints.emplace_back(n, sum.value());
      next *= 10;
    }
  }
  e.value = sum.value();
  e.tail_estimate = kMeanNOverPhi / static_cast<double>(N);
  e.tail_is_heuristic = true;
  e.converged = e.tail_estimate < tolerance;
  return e;
}

}  // namespace

std::int64_t mertens(const SieveTable& t, std::uint64_t x) {
  require_table(t, x, "mertens");
  std::int64_t s = 0;
  for (u64 n = 1; n <= x; ++n) s += t.mobius_unchecked(n);
  return s;
}

std::int64_t liouville_summatory(const SieveTable& t, std::uint64_t x) {
  require_table(t, x, "liouville_summatory");
  std::int64_t s = 0;
  for (u64 n = 1; n <= x; ++n) s += t.liouville_unchecked(n);
  return s;
}

double sum_lambda_over_phi(const SieveTable& t, std::uint64_t x) {
  return table_sum(t, x, "sum_lambda_over_phi",
                   [&](u64 n) { return t.liouville_unchecked(n) / static_cast<double>(t.euler_phi(n)); });
}

double sum_mu_over_phi(const SieveTable& t, std::uint64_t x) {
  return table_sum(t, x, "sum_mu_over_phi", [&](u64 n) {
    const int mu = t.mobius_unchecked(n);
    return mu == 0 ? 0.0 : mu / static_cast<double>(t.euler_phi(n));
  });
}

double sum_lambda_over_phi_rearranged(const SieveTable& t, std::uint64_t x) {
  require_table(t, x, "sum_lambda_over_phi_rearranged");
  // prefix[k] = sum_{m <= k} lambda(m) / m
  std::vector<double> prefix(x + 1, 0.0);
  CompensatedSum running;
  for (u64 m = 1; m <= x; ++m) {
    running.add(t.liouville_unchecked(m) / static_cast<double>(m));
    prefix[m] = running.value();
  }
  CompensatedSum s;
  for (u64 d = 1; d <= x; ++d) {
    if (t.mobius_unchecked(d) == 0) continue;
    const double weight =
        t.liouville_unchecked(d) / (static_cast<double>(d) * static_cast<double>(t.euler_phi(d)));
    s.add(weight * prefix[x / d]);
  }
  return s.value();
}

double sum_lambda_vonmangoldt(const SieveTable& t, std::uint64_t x) {
  return table_sum(t, x, "sum_lambda_vonmangoldt", [&](u64 n) {
    const double v = t.von_mangoldt_unchecked(n);
    return v == 0.0 ? 0.0 : t.liouville_unchecked(n) * v;
  });
}

double sum_mu_vonmangoldt(const SieveTable& t, std::uint64_t x) {
  return table_sum(t, x, "sum_mu_vonmangoldt", [&](u64 n) {
    const double v = t.von_mangoldt_unchecked(n);
    return v == 0.0 ? 0.0 : t.mobius_unchecked(n) * v;
  });
}

ConstantEstimate product_c0(std::uint64_t P, double tolerance) {
  ConstantEstimate e = euler_product("c0", P, [](long double p) { return 1.0L / ((p * p - 1.0L) * (p - 1.0L)); });
  // 1/((n^2-1)(n-1)) <= 2/n^3 for n >= 3, and sum_{n > P} 2/n^3 <= 1/P^2
  const double dp = static_cast<double>(P);
  e.tail_estimate = e.value / (dp * dp);
  e.reference_value = kC0Reference;
  e.converged = e.tail_estimate < tolerance;
  return e;
}

ConstantEstimate product_sum_lambda_n_phi(std::uint64_t P, double tolerance) {
  ConstantEstimate e =
      euler_product("lambda_n_phi_product", P, [](long double p) { return p / ((p * p + 1.0L) * (p - 1.0L)); });
  e.tail_estimate = e.value * prime_square_tail(P);
  e.tail_is_heuristic = true;
  e.reference_value = kLambdaNPhiReference;
  e.converged = e.tail_estimate < tolerance;
  return e;
}

ConstantEstimate product_artin_like(std::uint64_t P, double tolerance) {
  ConstantEstimate e = euler_product("artin_like", P, [](long double p) { return 1.0L / (p * (p - 1.0L)); });
  e.tail_estimate = e.value * prime_square_tail(P);
  e.tail_is_heuristic = true;
  e.reference_value = kArtinLikeReference;
  e.converged = e.tail_estimate < tolerance;
  return e;
}

ConstantEstimate a0_phi_square_sum(std::uint64_t N, double tolerance) {
  // phi(n^2) = n phi(n)
  return phi_series("a0_phi_square", N, tolerance, [](u64 n, std::uint32_t phi, int) {
    return 1.0 / (static_cast<double>(n) * static_cast<double>(phi));
  });
}

ConstantEstimate a0_mu_dphi(std::uint64_t N, double tolerance) {
  return phi_series("a0_mu_dphi", N, tolerance, [](u64 n, std::uint32_t phi, int mu) {
    return mu == 0 ? 0.0 : mu / (static_cast<double>(n) * static_cast<double>(phi));
  });
}

MusqOverPhi sum_musq_over_phi(const SieveTable& t, std::uint64_t x) {
  if (x == 0) throw ParameterError("sum_musq_over_phi: x must be >= 1");
  MusqOverPhi r;
  r.value = table_sum(t, x, "sum_musq_over_phi", [&](u64 n) {
    return t.mobius_unchecked(n) == 0 ? 0.0 : 1.0 / static_cast<double>(t.euler_phi(n));
  });
  r.drift = r.value - std::log(static_cast<double>(x));
  return r;
}

ClaimVerdict product_sum_equivalence_check(const SieveTable& t, std::uint64_t x) {
  if (x < 2) throw ParameterError("product_sum_equivalence_check: x must be >= 2");
  const double sum = sum_lambda_over_phi(t, x);
  long double prod = 1.0L;
  for (const u64 p : primes_up_to(x)) {
    const long double lp = static_cast<long double>(p);
    prod *= (1.0L - 1.0L / lp) * (1.0L - 1.0L / ((lp * lp - 1.0L) * (lp - 1.0L)));
  }
  ClaimVerdict v;
  v.claim_id = "lambda_over_phi_product_comparability";
  v.statement = "sum_{n<=x} lambda(n)/phi(n) is of the same order as prod_{p<=x} (1-1/p)(1-1/((p^2-1)(p-1)))";
  v.inputs = {{"x", x}};
  v.computed = {{"sum", sum}, {"product", static_cast<double>(prod)}, {"ratio", sum / static_cast<double>(prod)}};
  v.expected = "ratio bounded above and below by positive constants";
  v.status = ClaimStatus::indeterminate;
  v.note = "measured only; the sum changes sign";
  return v;
}

SummatoryCurve make_curve(std::span<const std::uint64_t> xs, std::span<const double> values) {
  if (xs.size() != values.size()) throw ParameterError("make_curve: x and value counts differ");
  SummatoryCurve c;
  bool all_nonzero = true;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0 && xs[i] <= xs[i - 1]) throw ParameterError("make_curve: x values must be strictly increasing");
    if (xs[i] == 0) throw ParameterError("make_curve: x must be >= 1");
    c.points.emplace_back(xs[i], values[i]);
    all_nonzero = all_nonzero && values[i] != 0.0;
  }
  if (c.points.size() >= 4 && all_nonzero) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(c.points.size());
    for (const auto& [x, v] : c.points) {
      const double lx = std::log(static_cast<double>(x));
      const double ly = std::log(std::fabs(v));
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    c.exponent_fit = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return c;
}

std::vector<std::uint64_t> decade_grid(std::uint64_t first, std::uint64_t last) {
  if (first == 0) throw ParameterError("decade_grid: first point must be >= 1");
  std::vector<u64> out;
  for (u64 x = first; x <= last; x *= 10) {
    out.push_back(x);
    if (x > last / 10) break;
  }
  return out;
}

nlohmann::json to_json(const SummatoryCurve& c) {
  nlohmann::json j;
  auto& pts = j["points"] = nlohmann::json::array();
  for (const auto& [x, v] : c.points) pts.push_back({x, v});
  j["exponent_fit"] = c.exponent_fit ? nlohmann::json(*c.exponent_fit) : nlohmann::json(nullptr);
  return j;
}

}  // namespace quadprime
