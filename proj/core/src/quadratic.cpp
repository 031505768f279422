#include "quadprime/quadratic.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "quadprime/arith.hpp"
#include "quadprime/compensated_sum.hpp"
#include "quadprime/detail/parallel.hpp"
#include "quadprime/errors.hpp"
#include "quadprime/primality.hpp"
#include "quadprime/sieve.hpp"

namespace quadprime {

namespace {

constexpr u64 kMaxLiveClasses = u64{1} << 22;

u64 abs_u64(i64 v) { return v < 0 ? static_cast<u64>(-(v + 1)) + 1 : static_cast<u64>(v); }

u128 abs_u128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    const u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// Prime factorization by trial division, with a primality shortcut for the
// cofactor.
std::vector<PrimePower> factor_wide(u64 n) {
  std::vector<PrimePower> out;
  for (u64 p = 2; n > 1; p += (p == 2 ? 1 : 2)) {
    if (is_prime_wide(n)) {
      out.push_back({n, 1});
      break;
    }
    if (static_cast<u128>(p) * p > n) {
      out.push_back({n, 1});
      break;
    }
    if (n % p != 0) continue;
    PrimePower pp{p, 0};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
    }
    out.push_back(pp);
  }
  return out;
}

unsigned valuation(u64 n, u64 p) {
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

u64 ipow(u64 p, unsigned k) {
  u64 r = 1;
  while (k-- > 0) r *= p;
  return r;
}

// Roots of a x^2 + b x + c modulo p^k.
u64 roots_mod_prime_power(i64 a, i64 b, i64 c, u64 p, unsigned k) {
  if (k == 0) return 1;
  const auto divisible = [p](i64 v) { return abs_u64(v) % p == 0; };
  if (divisible(a) && divisible(b) && divisible(c)) {
    const i64 sp = static_cast<i64>(p);
    return p * roots_mod_prime_power(a / sp, b / sp, c / sp, p, k - 1);
  }
  if (p != 2 && !divisible(a)) {
    // 4a f(x) = (2ax + b)^2 - D and x -> 2ax + b is a bijection mod p^k
    const i64 D = b * b - 4 * a * c;
    const u64 absD = abs_u64(D);
    const unsigned e = valuation(absD, p);
    if (D == 0 || e >= k) return ipow(p, k / 2);
    if (e % 2 != 0) return 0;
    const i64 unit = D / static_cast<i64>(ipow(p, e));
    return legendre(unit, p) == 1 ? 2 * ipow(p, e / 2) : 0;
  }

  const QuadraticPoly f{a, b, c, b * b - 4 * a * c, 1};
  std::vector<u64> live;
  if (p < (u64{1} << 20)) {
    for (u64 r = 0; r < p; ++r) {
      if (f.evaluate_mod(r, p) == 0) live.push_back(r);
    }
  } else if (!divisible(b)) {
    // p | a here, so f = bx + c mod p
    const u64 bm = mod_floor(b, p);
    live.push_back(mulmod(mod_floor(-static_cast<i128>(c), p), powmod(bm, p - 2, p), p));
  }
  u64 pj = p;
  for (unsigned j = 1; j < k && !live.empty(); ++j) {
    const u64 next = pj * p;
    std::vector<u64> lifted;
    for (const u64 r : live) {
      const u64 fr = f.evaluate_mod(r, next);
      const u64 deriv = mod_floor(2 * static_cast<i128>(a) * r + b, p);
      if (deriv != 0) {
        const u64 inv = p == 2 ? 1 : powmod(deriv, p - 2, p);
        const u64 t = mulmod((p - (fr / pj) % p) % p, inv, p);
        lifted.push_back(r + t * pj);
      } else if (fr == 0) {
        for (u64 t = 0; t < p; ++t) lifted.push_back(r + t * pj);
      }
      if (lifted.size() > kMaxLiveClasses) {
        throw CapacityError("nu_f: more than " + std::to_string(kMaxLiveClasses) + " root classes modulo " +
                            std::to_string(p) + "^" + std::to_string(j + 1));
      }
    }
    live = std::move(lifted);
    pj = next;
  }
  return live.size();
}

void require_admissible_range(u64 N, const QuadraticPoly& f, const char* what) {
  const u64 max_n = max_count_argument(f);
  if (N > max_n) {
    throw RangeError(std::string(what) + ": f(n) overflows 64 bits beyond N = " + std::to_string(max_n) +
                     ", requested N = " + std::to_string(N));
  }
}

bool value_is_prime(i128 v) { return v > 1 && v <= static_cast<i128>(~u64{0}) && is_prime_wide(static_cast<u64>(v)); }

// Appends value at decade checkpoints while a running product advances.
struct DecadeLog {
  u64 next = 10;
  std::vector<std::pair<u64, double>> points;

  void before(u64 p, double value) {
    while (next < p) {
      points.emplace_back(next, value);
      if (next > std::numeric_limits<u64>::max() / 10) {
        next = std::numeric_limits<u64>::max();
        break;
      }
      next *= 10;
    }
  }
  void finish(u64 P, double value) {
    while (next <= P) {
      points.emplace_back(next, value);
      if (next > std::numeric_limits<u64>::max() / 10) break;
      next *= 10;
    }
  }
};

double sqrt_log_tail(u64 P) {
  const double dp = static_cast<double>(P);
  return 2.0 / (std::sqrt(dp) * std::log(dp));
}

// Generators n <= N of the primes n^2 + 1.
template <typename Fn>
void for_each_A_prime(u64 N, Fn&& fn) {
  if (N >= (u64{1} << 32)) throw RangeError("n^2 + 1 overflows 64 bits for n >= 2^32");
  for (u64 n = 1; n <= N; ++n) {
    const u64 p = n * n + 1;
    if (is_prime_wide(p)) fn(n, p);
  }
}

}  // namespace

QuadraticPoly QuadraticPoly::make(i64 a, i64 b, i64 c) {
  if (a == 0) throw DomainError("quadratic polynomial needs a != 0");
  for (const i64 v : {a, b, c}) {
    if (v <= -kMaxCoefficient || v >= kMaxCoefficient) {
      throw ParameterError("polynomial coefficient " + std::to_string(v) + " outside (-2^30, 2^30)");
    }
  }
  QuadraticPoly f;
  f.a = a;
  f.b = b;
  f.c = c;
  f.discriminant = b * b - 4 * a * c;
  f.content = static_cast<i64>(std::gcd(std::gcd(abs_u64(a), abs_u64(b)), abs_u64(c)));
  return f;
}

u64 QuadraticPoly::evaluate_mod(u64 n, u64 m) const {
  const u64 x = n % m;
  const u64 am = mod_floor(a, m);
  const u64 bm = mod_floor(b, m);
  const u64 cm = mod_floor(c, m);
  const u64 t = (static_cast<u128>(mulmod(am, x, m)) + bm) % m;
  return static_cast<u64>((static_cast<u128>(mulmod(t, x, m)) + cm) % m);
}

bool QuadraticPoly::irreducible() const { return discriminant < 0 || !is_square(static_cast<u64>(discriminant)); }

AdmissibilityReport admissibility(const QuadraticPoly& f) {
  AdmissibilityReport r;
  r.gcd_abc = f.content;
  r.disc_nonsquare = f.irreducible();
  r.fixed_divisor = fixed_divisor(f);
  r.odd_condition = std::gcd(abs_u64(f.a + f.b), abs_u64(f.c)) % 2 == 1;
  r.admissible = r.gcd_abc == 1 && r.disc_nonsquare && r.fixed_divisor == 1;
  return r;
}

nlohmann::json to_json(const AdmissibilityReport& r) {
  return {{"gcd_abc", r.gcd_abc},
          {"disc_nonsquare", r.disc_nonsquare},
          {"fixed_divisor", r.fixed_divisor},
          {"odd_condition", r.odd_condition},
          {"admissible", r.admissible}};
}

std::uint64_t fixed_divisor(std::span<const std::int64_t> coefficients) {
  std::size_t len = coefficients.size();
  while (len > 0 && coefficients[len - 1] == 0) --len;
  if (len == 0) throw DomainError("fixed_divisor: zero polynomial");
  if (len == 1) throw DomainError("fixed_divisor: constant polynomial has degree 0");
  const std::size_t degree = len - 1;
  if (degree > 12) throw ParameterError("fixed_divisor: degree above 12 is not supported");
  u128 g = 0;
  for (std::size_t k = 0; k <= degree; ++k) {
    i128 v = 0;
    for (std::size_t i = len; i-- > 0;) v = v * static_cast<i128>(k) + coefficients[i];
    g = gcd_u128(g, abs_u128(v));
  }
  if (g > std::numeric_limits<u64>::max()) throw RangeError("fixed_divisor: result exceeds 64 bits");
  return static_cast<u64>(g);
}

std::uint64_t fixed_divisor(const QuadraticPoly& f) {
  const std::int64_t coeffs[] = {f.c, f.b, f.a};
  return fixed_divisor(coeffs);
}

std::uint64_t nu_f_direct(const QuadraticPoly& f, std::uint64_t q) {
  if (q == 0) throw ParameterError("nu_f: modulus must be >= 1");
  u64 count = 0;
  for (u64 n = 0; n < q; ++n) {
    if (f.evaluate_mod(n, q) == 0) ++count;
  }
  return count;
}

std::uint64_t nu_f_multiplicative(const QuadraticPoly& f, std::uint64_t q) {
  if (q == 0) throw ParameterError("nu_f: modulus must be >= 1");
  u64 total = 1;
  for (const auto& [p, k] : factor_wide(q)) {
    total *= roots_mod_prime_power(f.a, f.b, f.c, p, k);
    if (total == 0) break;
  }
  return total;
}

std::uint64_t nu_f(const QuadraticPoly& f, std::uint64_t q) {
  return q <= kNuDirectLimit ? nu_f_direct(f, q) : nu_f_multiplicative(f, q);
}

std::uint64_t max_count_argument(const QuadraticPoly& f) {
  const u128 limit = static_cast<u128>(std::numeric_limits<u64>::max());
  const auto bound = [&](u64 n) {
    const u128 nn = n;
    return abs_u64(f.a) * nn * nn + abs_u64(f.b) * nn + abs_u64(f.c);
  };
  u64 lo = 0, hi = u64{1} << 32;
  while (lo < hi) {
    const u64 mid = lo + (hi - lo + 1) / 2;
    if (bound(mid) <= limit) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

QuadraticPrimeCount count_quadratic_primes(const QuadraticPoly& f, std::uint64_t N, std::size_t value_cap,
                                           unsigned workers) {
  require_admissible_range(N, f, "count_quadratic_primes");
  QuadraticPrimeCount out;
  if (N == 0) return out;
  auto parts = detail::run_chunks(1, N, workers, [&](u64 lo, u64 hi) {
    QuadraticPrimeCount part;
    for (u64 n = lo; n <= hi; ++n) {
      const i128 v = f.evaluate(n);
      if (!value_is_prime(v)) continue;
      ++part.count;
      if (part.values.size() < value_cap) part.values.push_back(static_cast<u64>(v));
    }
    part.values_truncated = part.values.size() < part.count;
    return part;
  });
  for (auto& part : parts) {
    out.count += part.count;
    for (const u64 v : part.values) {
      if (out.values.size() < value_cap) out.values.push_back(v);
    }
  }
  out.values_truncated = out.values.size() < out.count;
  return out;
}

void write_prime_values_csv(std::ostream& out, const QuadraticPoly& f, const QuadraticPrimeCount& c) {
  out << "n,f(n)\n";
  std::size_t next = 0;
  for (u64 n = 1; next < c.values.size(); ++n) {
    const i128 v = f.evaluate(n);
    if (v == static_cast<i128>(c.values[next])) {
      out << n << ',' << c.values[next] << '\n';
      ++next;
    }
  }
}

PerfectPower largest_power(std::uint64_t m) {
  static constexpr unsigned kPrimeExponents[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61};
  if (m < 4) return {m, 1};
  for (const unsigned k : kPrimeExponents) {
    const u64 r = iroot(m, k);
    if (r < 2) break;
    u64 back = 0;
    if (checked_pow(r, k, back) && back == m) {
      const PerfectPower inner = largest_power(r);
      return {inner.base, inner.exponent * k};
    }
  }
  return {m, 1};
}

double von_mangoldt_wide(std::uint64_t m) {
  if (m < 2) return 0.0;
  if (is_prime_wide(m)) return std::log(static_cast<double>(m));
  const PerfectPower pp = largest_power(m);
  if (pp.exponent > 1 && is_prime_wide(pp.base)) return std::log(static_cast<double>(pp.base));
  return 0.0;
}

double lambda_psi_quadratic(std::uint64_t N, unsigned workers) {
  if (N >= (u64{1} << 32)) throw RangeError("lambda_psi_quadratic: N must be below 2^32");
  if (N == 0) return 0.0;
  const auto parts = detail::run_chunks(1, N, workers, [](u64 lo, u64 hi) {
    CompensatedSum s;
    for (u64 n = lo; n <= hi; ++n) s.add(von_mangoldt_wide(n * n + 1));
    return s;
  });
  CompensatedSum total;
  for (const auto& s : parts) total.add(s.value());
  return total.value();
}

double log_integral_from_2(double x) {
  if (!(x >= 2.0)) throw ParameterError("log_integral_from_2: x must be >= 2");
  // li(x) = gamma + log log x + sum_k (log x)^k / (k k!), all terms positive
  constexpr double kEulerGamma = 0.57721566490153286061;
  constexpr double kLi2 = 1.04516378011749278484;
  const double L = std::log(x);
  double term = 1.0, series = 0.0;
  for (int k = 1; k < 400; ++k) {
    term *= L / k;
    const double add = term / k;
    series += add;
    if (add < series * 1e-17) break;
  }
  return kEulerGamma + std::log(L) + series - kLi2;
}

ConstantEstimate a2_constant(std::uint64_t P, double tolerance) {
  if (P < 3) throw ParameterError("a2_constant: P must be >= 3");
  ConstantEstimate e;
  e.name = "a2";
  e.truncation_point = P;
  DecadeLog log;
  long double prod = 1.0L;
  for (const u64 p : primes_up_to(P)) {
    if (p == 2) continue;
    log.before(p, static_cast<double>(prod));
    const int chi = legendre(-1, p);
    prod *= 1.0L - static_cast<long double>(chi) / static_cast<long double>(p - 1);
  }
  e.value = static_cast<double>(prod);
  log.finish(P, e.value);
  e.checkpoints = std::move(log.points);
  e.tail_estimate = sqrt_log_tail(P);
  e.tail_is_heuristic = true;
  e.reference_value = kA2Reference;
  e.converged = e.tail_estimate < tolerance;
  return e;
}

HardyLittlewoodEstimate hardy_littlewood_constant(const QuadraticPoly& f, std::uint64_t P, double tolerance) {
  if (P < 3) throw ParameterError("hardy_littlewood_constant: P must be >= 3");
  const AdmissibilityReport adm = admissibility(f);
  if (!adm.admissible) throw DomainError("hardy_littlewood_constant: polynomial is not admissible");
  if (f.a <= 0) throw DomainError("hardy_littlewood_constant: leading coefficient must be positive");

  HardyLittlewoodEstimate h;
  const u64 g = std::gcd(abs_u64(f.a), abs_u64(f.b));
  std::vector<PrimePower> g_primes = factor_wide(g);
  for (const auto& pp : g_primes) h.gcd_factor *= 1.0 + 1.0 / static_cast<double>(pp.prime - 1);
  h.nu_at_two = nu_f_direct(f, 2);
  h.epsilon = g % 2 == 1 ? 2.0 - static_cast<double>(h.nu_at_two) : 1.0;
  const long double lead = h.epsilon / std::sqrt(static_cast<long double>(f.a)) * h.gcd_factor;

  ConstantEstimate& e = h.estimate;
  e.name = "C_f(" + std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c) + ")";
  e.truncation_point = P;
  DecadeLog log;
  long double prod = 1.0L;
  for (const u64 p : primes_up_to(P)) {
    if (p == 2 || g % p == 0) continue;
    log.before(p, static_cast<double>(lead * prod));
    const int chi = legendre(f.discriminant, p);
    prod *= 1.0L - static_cast<long double>(chi) / static_cast<long double>(p - 1);
  }
  e.value = static_cast<double>(lead * prod);
  log.finish(P, e.value);
  e.checkpoints = std::move(log.points);
  e.tail_estimate = std::fabs(static_cast<double>(lead)) * sqrt_log_tail(P);
  e.tail_is_heuristic = true;
  e.converged = e.tail_estimate < tolerance;
  return h;
}

nlohmann::json to_json(const HardyLittlewoodEstimate& h) {
  nlohmann::json j = to_json(h.estimate);
  j["epsilon"] = h.epsilon;
  j["epsilon_rule"] = "2 - nu_f(2) when gcd(a,b) is odd, else 1";
  j["gcd_factor"] = h.gcd_factor;
  j["nu_f_2"] = h.nu_at_two;
  return j;
}

std::optional<LeastPrime> least_prime(const QuadraticPoly& f, std::uint64_t n_max) {
  for (u64 n = 0; n <= n_max; ++n) {
    const i128 v = f.evaluate(n);
    if (v > static_cast<i128>(std::numeric_limits<u64>::max())) {
      throw RangeError("least_prime: f(" + std::to_string(n) + ") exceeds 64 bits");
    }
    if (value_is_prime(v)) return LeastPrime{n, static_cast<u64>(v)};
    if (n == std::numeric_limits<u64>::max()) break;
  }
  return std::nullopt;
}

namespace {

long double fractional_sqrt(u64 n) {
  const long double nn = static_cast<long double>(n);
  return 1.0L / (std::sqrt(nn * nn + 1.0L) + nn);
}

u64 generator_of(u64 p) {
  const u64 n = isqrt(p);
  if (p < 2 || static_cast<u128>(n) * n + 1 != p || !is_prime_wide(p)) {
    throw DomainError("sqrt_fractional_check: " + std::to_string(p) + " is not a prime of the form n^2 + 1");
  }
  return n;
}

}  // namespace

ClaimVerdict sqrt_fractional_check(std::uint64_t p, double c) {
  if (!(c > 0.5)) throw DomainError("sqrt_fractional_check: c must exceed 1/2");
  const u64 n = generator_of(p);
  const long double frac = fractional_sqrt(n);
  const long double bound = static_cast<long double>(c) / std::sqrt(static_cast<long double>(p));
  ClaimVerdict v;
  v.claim_id = "sqrt_fractional_part_bound";
  v.statement = "the fractional part of sqrt(p) is below c/sqrt(p) for primes p = n^2 + 1";
  v.inputs = {{"p", p}, {"c", c}};
  v.computed = {{"fractional_part", static_cast<double>(frac)},
                {"bound", static_cast<double>(bound)},
                {"residual", static_cast<double>(frac - 1.0L / (2.0L * n))}};
  v.expected = "fractional_part < bound";
  v.status = frac < bound ? ClaimStatus::verified : ClaimStatus::falsified;
  return v;
}

FractionalScan sqrt_fractional_scan(std::uint64_t n_first, std::uint64_t n_last, double c) {
  if (!(c > 0.5)) throw DomainError("sqrt_fractional_scan: c must exceed 1/2");
  if (n_first == 0) throw ParameterError("sqrt_fractional_scan: n starts at 1");
  FractionalScan s;
  if (n_last < n_first) return s;
  for_each_A_prime(n_last, [&](u64 n, u64 p) {
    if (n < n_first) return;
    const long double frac = fractional_sqrt(n);
    const long double ratio = frac * std::sqrt(static_cast<long double>(p)) / c;
    ++s.checked;
    s.worst_ratio = std::max(s.worst_ratio, static_cast<double>(ratio));
    if (!(ratio < 1.0L)) {
      ++s.failed;
      if (s.failing_primes.size() < 16) s.failing_primes.push_back(p);
    }
  });
  return s;
}

std::vector<PrimePowerHit> prime_power_scan(std::uint64_t N) {
  if (N >= (u64{1} << 32)) throw RangeError("prime_power_scan: N must be below 2^32");
  std::vector<PrimePowerHit> hits;
  for (u64 m = 1; m <= N; ++m) {
    const PerfectPower pp = largest_power(m * m + 1);
    if (pp.exponent >= 2 && is_prime_wide(pp.base)) hits.push_back({pp.base, pp.exponent, m});
  }
  return hits;
}

double harmonic_sum_A(std::uint64_t N) {
  CompensatedSum s;
  for_each_A_prime(N, [&](u64, u64 p) { s.add(1.0 / static_cast<double>(p)); });
  return s.value();
}

double zeta_A_truncated(double s, std::uint64_t N) {
  if (!(s > 0.5)) throw DomainError("zeta_A_truncated: s must exceed 1/2");
  CompensatedSum log_sum;
  for_each_A_prime(N, [&](u64, u64 p) { log_sum.add(-std::log1p(-std::pow(static_cast<double>(p), -s))); });
  return std::exp(log_sum.value());
}

HalfLineGrowth zeta_A_half_line_growth(std::uint64_t x) {
  if (x == 0) throw ParameterError("zeta_A_half_line_growth: x must be >= 1");
  HalfLineGrowth g;
  g.x = x;
  g.log_x = std::log(static_cast<double>(x));
  CompensatedSum s;
  for_each_A_prime(isqrt(x - 1), [&](u64, u64 p) {
    const double lp = std::log(static_cast<double>(p));
    for (u128 pk = p; pk <= x; pk *= p) s.add(lp / std::sqrt(static_cast<double>(pk)));
  });
  g.value = s.value();
  return g;
}

}  // namespace quadprime
