#include "quadprime/identities.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "quadprime/arith.hpp"
#include "quadprime/compensated_sum.hpp"
#include "quadprime/detail/parallel.hpp"
#include "quadprime/errors.hpp"
#include "quadprime/primality.hpp"

namespace quadprime {

namespace {

void require_upto(const SieveTable& t, u64 n, const char* what) {
  if (n < 1 || n > t.limit()) {
    throw RangeError(std::string(what) + ": needs the table to cover " + std::to_string(n) +
                     ", table limit is " + std::to_string(t.limit()));
  }
}

IdentityCheck make_check(const char* id, u64 n, IdentityValue lhs, IdentityValue rhs, bool equal) {
  IdentityCheck c;
  c.claim_id = id;
  c.n_or_x = n;
  c.lhs = lhs;
  c.rhs = rhs;
  c.equal = equal;
  return c;
}

bool rel_close(double a, double b, double tol) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= tol * (scale > 0 ? scale : 1.0);
}

// d < sqrt(n) and d <= sqrt(n) in exact integer form
bool below_root(u64 d, u64 n) { return static_cast<u128>(d) * d < n; }
bool at_most_root(u64 d, u64 n) { return static_cast<u128>(d) * d <= n; }

int square_indicator_unchecked(const SieveTable& t, u64 n) {
  int s = 0;
  t.for_each_divisor(n, [&](u64 d) { s += t.liouville_unchecked(d); });
  return s;
}

}  // namespace

std::string format_value(const IdentityValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(v));
  return buf;
}

int square_indicator(const SieveTable& t, u64 n) {
  require_upto(t, n, "square_indicator");
  return square_indicator_unchecked(t, n);
}

std::vector<std::int32_t> square_indicator_table(const SieveTable& t, u64 limit) {
  require_upto(t, limit, "square_indicator_table");
  std::vector<std::int32_t> s(limit + 1, 0);
  for (u64 d = 1; d <= limit; ++d) {
    const int l = t.liouville_unchecked(d);
    for (u64 m = d; m <= limit; m += d) s[m] += l;
  }
  return s;
}

double quad_linear_weight(const SieveTable& t, u64 n) {
  require_upto(t, n + 1, "quad_linear_weight");
  const int s = square_indicator_unchecked(t, n);
  return t.von_mangoldt_unchecked(n + 1) * s * s;
}

IdentityCheck check_vonmangoldt_divisor_sum(const SieveTable& t, u64 n) {
  require_upto(t, n, "check_vonmangoldt_divisor_sum");
  CompensatedSum sum;
  t.for_each_divisor(n, [&](u64 d) {
    if (const int m = t.mobius_unchecked(d); m != 0) sum.add(-m * std::log(static_cast<double>(d)));
  });
  const double lhs = t.von_mangoldt_unchecked(n);
  const double rhs = sum.value();
  return make_check("vonmangoldt_mobius_log_divisor_sum", n, lhs, rhs, std::fabs(lhs - rhs) <= kVonMangoldtAbsTol);
}

HyperbolaChecks check_hyperbola_splits(const SieveTable& t, u64 n) {
  require_upto(t, n, "check_hyperbola_splits");
  CompensatedSum vm_low_strict, vm_low_incl, vm_high;
  std::int64_t lam_total = 0, lam_low_strict = 0, lam_low_incl = 0, lam_high = 0;
  t.for_each_divisor(n, [&](u64 d) {
    const int ld = t.liouville_unchecked(d);
    lam_total += ld;
    if (!at_most_root(d, n)) return;
    const u64 co = n / d;
    const int md = t.mobius_unchecked(d);
    const int mco = t.mobius_unchecked(co);
    const double vd = md == 0 ? 0.0 : -md * std::log(static_cast<double>(d));
    lam_low_incl += ld;
    vm_low_incl.add(vd);
    if (below_root(d, n)) {
      lam_low_strict += ld;
      vm_low_strict.add(vd);
    }
    lam_high += t.liouville_unchecked(co);
    if (mco != 0) vm_high.add(-mco * std::log(static_cast<double>(co)));
  });

  const double lambda_n = t.von_mangoldt_unchecked(n);
  HyperbolaChecks h;
  {
    const double rhs = vm_low_strict.value() + vm_high.value();
    h.vonmangoldt_split = make_check("vonmangoldt_hyperbola_split", n, lambda_n, rhs,
                                     std::fabs(lambda_n - rhs) <= kVonMangoldtAbsTol);
    const double rhs_incl = vm_low_incl.value() + vm_high.value();
    h.vonmangoldt_split_inclusive = make_check("vonmangoldt_hyperbola_split_inclusive", n, lambda_n, rhs_incl,
                                               std::fabs(lambda_n - rhs_incl) <= kVonMangoldtAbsTol);
  }
  h.liouville_split = make_check("liouville_hyperbola_split", n, lam_total, lam_low_strict + lam_high,
                                 lam_total == lam_low_strict + lam_high);
  h.liouville_split_inclusive = make_check("liouville_hyperbola_split_inclusive", n, lam_total,
                                           lam_low_incl + lam_high, lam_total == lam_low_incl + lam_high);

  const std::int64_t lhs = lam_total * lam_total;
  const std::int64_t rhs = 2 * lam_low_incl * lam_low_incl + 2 * t.liouville_unchecked(n) * lam_high * lam_high;
  h.cross_term = lam_low_strict * lam_high;
  h.square_expansion = make_check("liouville_square_expansion", n, lhs, rhs, lhs == rhs);
  h.square_expansion.detail = {{"sum_low", lam_low_incl},
                               {"sum_high", lam_high},
                               {"cross_term", h.cross_term}};
  return h;
}

IdentityCheck check_mobius_square_divisors(const SieveTable& t, u64 n) {
  require_upto(t, n, "check_mobius_square_divisors");
  std::int64_t sum = 0;
  t.for_each_divisor(n, [&](u64 d) {
    if (at_most_root(d, n) && n % (d * d) == 0) sum += t.mobius_unchecked(n / (d * d));
  });
  const std::int64_t lam = t.liouville_unchecked(n);
  return make_check("mobius_square_divisor_sum", n, sum, lam, sum == lam);
}

IdentityCheck lambda_floor_sum(const SieveTable& t, u64 x) {
  require_upto(t, x, "lambda_floor_sum");
  std::int64_t sum = 0;
  for (u64 n = 1; n <= x; ++n) sum += t.liouville_unchecked(n) * static_cast<std::int64_t>(x / n);
  const auto root = static_cast<std::int64_t>(isqrt(x));
  return make_check("liouville_floor_sum", x, sum, root, sum == root);
}

IdentityCheck check_summation_identity(const SieveTable& t, u64 x) {
  require_upto(t, x + 1, "check_summation_identity");
  CompensatedSum lhs;
  const u64 root = isqrt(x);
  for (u64 m = 1; m <= root; ++m) lhs.add(t.von_mangoldt_unchecked(m * m + 1));
  CompensatedSum rhs;
  for (u64 n = 1; n <= x; ++n) {
    const int s = square_indicator_unchecked(t, n);
    if (s != 0) rhs.add(t.von_mangoldt_unchecked(n + 1) * s * s);
  }
  return make_check("quadratic_to_linear_summation", x, lhs.value(), rhs.value(),
                    rel_close(lhs.value(), rhs.value(), kWeightedRelTol));
}

namespace {

std::int64_t double_floor_sum(const SieveTable& t, u64 x) {
  std::int64_t sum = 0;
  for (u64 d = 1; d <= x; ++d) {
    const int ld = t.liouville_unchecked(d);
    const u64 xd = x / d;
    std::int64_t inner = 0;
    for (u64 e = 1; e <= xd; ++e) inner += t.liouville_unchecked(e) * static_cast<std::int64_t>(xd / e);
    sum += ld * inner;
  }
  return sum;
}

IdentityCheck squared_floor_check(u64 x, std::int64_t direct, std::int64_t dbl) {
  const auto root = static_cast<std::int64_t>(isqrt(x));
  auto c = make_check("squared_divisor_floor_sum", x, direct, root, direct == root && dbl == root);
  c.detail = {{"direct", direct}, {"double_floor_sum", dbl}, {"floor_sqrt", root}};
  return c;
}

}  // namespace

IdentityCheck check_squared_divisor_floor_sum(const SieveTable& t, u64 x) {
  require_upto(t, x, "check_squared_divisor_floor_sum");
  std::int64_t direct = 0;
  for (u64 n = 1; n <= x; ++n) {
    const int s = square_indicator_unchecked(t, n);
    direct += s * s;
  }
  // floor(x/(de)) = floor(floor(x/d)/e)
  return squared_floor_check(x, direct, double_floor_sum(t, x));
}

namespace {

struct WilsonOutcome {
  u64 p = 0;
  u64 half_factorial = 0;
  u64 a = 0;
  bool congruent = false;
  bool is_square_plus_one = false;
};

WilsonOutcome wilson_outcome(u64 p) {
  if (p < 3 || !is_prime_wide(p)) {
    throw DomainError("wilson_quadratic_check: p = " + std::to_string(p) + " is not an odd prime");
  }
  WilsonOutcome w;
  w.p = p;
  u64 f = 1;
  for (u64 k = 2; k <= (p - 1) / 2; ++k) f = mulmod(f, k, p);
  w.half_factorial = f;
  // round(sqrt p): sqrt p is never a half-integer, so compare (r + 1/2)^2 with p
  const u64 r = isqrt(p);
  w.a = (4 * static_cast<u128>(r) * r + 4 * r + 1 < 4 * static_cast<u128>(p)) ? r + 1 : r;
  const u64 am = w.a % p;
  w.congruent = f == am || f == (p - am) % p;
  w.is_square_plus_one = static_cast<u128>(w.a) * w.a + 1 == p;
  return w;
}

}  // namespace

ClaimVerdict wilson_quadratic_check(u64 p) {
  const auto w = wilson_outcome(p);
  ClaimVerdict v;
  v.claim_id = "wilson_quadratic_criterion";
  v.statement = "((p-1)/2)! = +-a (mod p) with a = round(sqrt p) if and only if p = a^2 + 1";
  v.inputs = {{"p", p}};
  v.computed = {{"half_factorial_mod_p", w.half_factorial},
                {"a", w.a},
                {"congruent_to_plus_minus_a", w.congruent},
                {"p_equals_a_squared_plus_one", w.is_square_plus_one}};
  v.expected = "both sides of the biconditional agree";
  v.status = w.congruent == w.is_square_plus_one ? ClaimStatus::verified : ClaimStatus::falsified;
  return v;
}

void ScanSummary::record(IdentityCheck c) {
  ++checked;
  if (c.equal) {
    ++passed;
    return;
  }
  ++failed;
  if (failures.size() < kMaxRecordedFailures) failures.push_back(std::move(c));
}

void ScanSummary::merge(ScanSummary other) {
  if (checked == 0) first = other.first;
  if (other.checked > 0) last = other.last;
  checked += other.checked;
  passed += other.passed;
  failed += other.failed;
  for (auto& f : other.failures) {
    if (failures.size() >= kMaxRecordedFailures) break;
    failures.push_back(std::move(f));
  }
}

nlohmann::json to_json(const ScanSummary& s) {
  nlohmann::json j;
  j["claim_id"] = s.claim_id;
  j["range"] = {s.first, s.last};
  j["checked"] = s.checked;
  j["passed"] = s.passed;
  j["failed"] = s.failed;
  auto& f = j["first_failures"] = nlohmann::json::array();
  for (const auto& c : s.failures) {
    nlohmann::json e = {{"n_or_x", c.n_or_x}, {"lhs", format_value(c.lhs)}, {"rhs", format_value(c.rhs)}};
    for (const auto& [k, v] : c.detail) e[k] = format_value(v);
    f.push_back(std::move(e));
  }
  return j;
}

namespace {

template <typename Check>
ScanSummary scan_range(const char* id, u64 first, u64 last, unsigned workers, Check check) {
  auto parts = detail::run_chunks(first, last, workers, [&](u64 lo, u64 hi) {
    ScanSummary s;
    s.claim_id = id;
    s.first = lo;
    s.last = hi;
    for (u64 n = lo; n <= hi; ++n) s.record(check(n));
    return s;
  });
  ScanSummary out;
  out.claim_id = id;
  for (auto& p : parts) out.merge(std::move(p));
  return out;
}

}  // namespace

ScanSummary scan_square_indicator(const SieveTable& t, u64 limit) {
  const auto s = square_indicator_table(t, limit);
  ScanSummary out;
  out.claim_id = "liouville_divisor_sum_square_indicator";
  out.first = 1;
  out.last = limit;
  std::int64_t running = 0;
  for (u64 n = 1; n <= limit; ++n) {
    running += s[n];
    const std::int64_t expected = is_square(n) ? 1 : 0;
    const auto root = static_cast<std::int64_t>(isqrt(n));
    auto c = make_check("liouville_divisor_sum_square_indicator", n, static_cast<std::int64_t>(s[n]), expected,
                        s[n] == expected && running == root);
    if (!c.equal) c.detail = {{"running_total", running}, {"floor_sqrt", root}};
    out.record(std::move(c));
  }
  return out;
}

ScanSummary scan_vonmangoldt_divisor_sum(const SieveTable& t, u64 n_max, unsigned workers) {
  require_upto(t, n_max, "scan_vonmangoldt_divisor_sum");
  return scan_range("vonmangoldt_mobius_log_divisor_sum", 1, n_max, workers,
                    [&](u64 n) { return check_vonmangoldt_divisor_sum(t, n); });
}

std::array<ScanSummary, 5> scan_hyperbola_splits(const SieveTable& t, u64 n_max) {
  require_upto(t, n_max, "scan_hyperbola_splits");
  std::array<ScanSummary, 5> out;
  const char* ids[5] = {"vonmangoldt_hyperbola_split", "liouville_hyperbola_split",
                        "vonmangoldt_hyperbola_split_inclusive", "liouville_hyperbola_split_inclusive",
                        "liouville_square_expansion"};
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].claim_id = ids[i];
    out[i].first = 1;
    out[i].last = n_max;
  }
  for (u64 n = 1; n <= n_max; ++n) {
    auto h = check_hyperbola_splits(t, n);
    out[0].record(std::move(h.vonmangoldt_split));
    out[1].record(std::move(h.liouville_split));
    out[2].record(std::move(h.vonmangoldt_split_inclusive));
    out[3].record(std::move(h.liouville_split_inclusive));
    out[4].record(std::move(h.square_expansion));
  }
  return out;
}

ScanSummary scan_mobius_square_divisors(const SieveTable& t, u64 n_max, unsigned workers) {
  require_upto(t, n_max, "scan_mobius_square_divisors");
  return scan_range("mobius_square_divisor_sum", 1, n_max, workers,
                    [&](u64 n) { return check_mobius_square_divisors(t, n); });
}

ScanSummary scan_lambda_floor_sum(const SieveTable& t, u64 x_max, unsigned workers) {
  require_upto(t, x_max, "scan_lambda_floor_sum");
  std::vector<std::int64_t> prefix(x_max + 1, 0);
  for (u64 n = 1; n <= x_max; ++n) prefix[n] = prefix[n - 1] + t.liouville_unchecked(n);
  return scan_range("liouville_floor_sum", 1, x_max, workers, [&](u64 x) {
    std::int64_t sum = 0;
    for (u64 lo = 1; lo <= x;) {
      const u64 q = x / lo;
      const u64 hi = x / q;
      sum += (prefix[hi] - prefix[lo - 1]) * static_cast<std::int64_t>(q);
      lo = hi + 1;
    }
    const auto root = static_cast<std::int64_t>(isqrt(x));
    return make_check("liouville_floor_sum", x, sum, root, sum == root);
  });
}

std::array<ScanSummary, 2> scan_squared_divisor_floor_sum(const SieveTable& t, u64 x_max, unsigned workers) {
  require_upto(t, x_max, "scan_squared_divisor_floor_sum");
  std::vector<std::int64_t> direct(x_max + 1, 0);
  for (u64 n = 1; n <= x_max; ++n) {
    const int s = square_indicator_unchecked(t, n);
    direct[n] = direct[n - 1] + s * s;
  }
  std::array<ScanSummary, 2> out;
  out[0] = scan_range("squared_divisor_floor_sum", 1, x_max, workers, [&](u64 x) {
    auto c = make_check("squared_divisor_floor_sum", x, direct[x], static_cast<std::int64_t>(isqrt(x)),
                        direct[x] == static_cast<std::int64_t>(isqrt(x)));
    return c;
  });
  out[1] = scan_range("lambda_double_floor_sum", 1, x_max, workers, [&](u64 x) {
    const std::int64_t dbl = double_floor_sum(t, x);
    const auto root = static_cast<std::int64_t>(isqrt(x));
    return make_check("lambda_double_floor_sum", x, dbl, root, dbl == root);
  });
  return out;
}

ScanSummary scan_summation_identity(const SieveTable& t, std::span<const u64> grid) {
  ScanSummary out;
  out.claim_id = "quadratic_to_linear_summation";
  for (const u64 x : grid) {
    ScanSummary one;
    one.claim_id = out.claim_id;
    one.first = one.last = x;
    one.record(check_summation_identity(t, x));
    out.merge(std::move(one));
  }
  return out;
}

ScanSummary scan_wilson(u64 p_max) {
  ScanSummary out;
  out.claim_id = "wilson_quadratic_criterion";
  out.first = 3;
  out.last = p_max;
  for (const u64 p : primes_up_to(p_max)) {
    if (p < 3) continue;
    const auto w = wilson_outcome(p);
    auto c = make_check("wilson_quadratic_criterion", p, static_cast<std::int64_t>(w.congruent),
                        static_cast<std::int64_t>(w.is_square_plus_one), w.congruent == w.is_square_plus_one);
    c.detail = {{"half_factorial_mod_p", static_cast<std::int64_t>(w.half_factorial)},
                {"a", static_cast<std::int64_t>(w.a)}};
    out.record(std::move(c));
  }
  return out;
}

void write_checks_csv(std::ostream& out, std::span<const IdentityCheck> checks) {
  out << "claim_id,n_or_x,lhs,rhs,pass\n";
  for (const auto& c : checks) {
    out << c.claim_id << ',' << c.n_or_x << ',' << format_value(c.lhs) << ',' << format_value(c.rhs) << ','
        << (c.equal ? 1 : 0) << '\n';
  }
}

}  // namespace quadprime
