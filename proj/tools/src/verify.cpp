#include "quadprime/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "quadprime/arith.hpp"
#include "quadprime/errors.hpp"
#include "quadprime/identities.hpp"
#include "quadprime/partial_sums.hpp"
#include "quadprime/progressions.hpp"
#include "quadprime/quadratic.hpp"

namespace quadprime::cli {

namespace {

using nlohmann::json;
using u64 = std::uint64_t;

constexpr u64 kIdentityScale = 1'000'000;
constexpr u64 kProgressionX = 1'000'000;
constexpr u64 kQuadraticN = 100'000;

json value_json(const IdentityValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  return std::get<double>(v);
}

ClaimStatus status_of(bool ok) { return ok ? ClaimStatus::verified : ClaimStatus::falsified; }

struct Expectation {
  std::string statement;
  std::string expected;
  // Set when a failure of this claim is already explained.
  std::string known_failure;
};

ClaimVerdict from_scan(const ScanSummary& s, const Expectation& e) {
  ClaimVerdict v;
  v.claim_id = s.claim_id;
  v.statement = e.statement;
  v.inputs = {{"first", s.first}, {"last", s.last}};
  json failures = json::array();
  for (std::size_t i = 0; i < s.failures.size() && i < 4; ++i) {
    const auto& f = s.failures[i];
    failures.push_back({{"n", f.n_or_x}, {"lhs", value_json(f.lhs)}, {"rhs", value_json(f.rhs)}});
  }
  v.computed = {{"checked", s.checked}, {"passed", s.passed}, {"failed", s.failed}, {"first_failures", failures}};
  v.expected = e.expected;
  v.status = status_of(s.all_passed());
  if (v.status == ClaimStatus::falsified && !e.known_failure.empty()) {
    v.documented = true;
    v.note = e.known_failure;
  }
  return v;
}

ClaimVerdict make_verdict(std::string id, std::string statement, json inputs, json computed, std::string expected,
                          ClaimStatus status) {
  ClaimVerdict v;
  v.claim_id = std::move(id);
  v.statement = std::move(statement);
  v.inputs = std::move(inputs);
  v.computed = std::move(computed);
  v.expected = std::move(expected);
  v.status = status;
  return v;
}

void document(ClaimVerdict& v, std::string note) {
  if (v.status == ClaimStatus::falsified) {
    v.documented = true;
    v.note = std::move(note);
  }
}

double relative_gap(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

void add_identities(ClaimsLedger& ledger, const SieveTable& t, unsigned workers) {
  ledger.add(from_scan(scan_square_indicator(t, kIdentityScale),
                       {"sum_{d|n} lambda(d) is 1 when n is a square and 0 otherwise",
                        "sum equals [n is a square] and partial totals equal floor(sqrt x)", ""}));
  ledger.add(from_scan(scan_vonmangoldt_divisor_sum(t, 100'000, workers),
                       {"Lambda(n) = -sum_{d|n} mu(d) log d", "agreement within 1e-12", ""}));

  const auto splits = scan_hyperbola_splits(t, 100'000);
  const std::string inclusive_note = "both sums include d = sqrt n, which counts that divisor twice at squares";
  ledger.add(from_scan(splits[0], {"Lambda(n) splits at sqrt n into d < sqrt n and d <= sqrt n divisor sums",
                                   "exact for every n", ""}));
  ledger.add(from_scan(splits[1], {"sum_{d|n} lambda(d) splits at sqrt n into d < sqrt n and d <= sqrt n parts",
                                   "exact for every n", ""}));
  ledger.add(from_scan(splits[2], {"Lambda(n) split with d <= sqrt n in both divisor sums",
                                   "exact for every n", inclusive_note}));
  ledger.add(from_scan(splits[3], {"sum_{d|n} lambda(d) split with d <= sqrt n in both parts",
                                   "exact for every n", inclusive_note}));
  ledger.add(from_scan(splits[4],
                       {"(sum_{d|n} lambda(d))^2 = 2 A^2 + 2 lambda(n) B^2 with A, B the half-range sums",
                        "exact for every n",
                        "the expansion drops the cross term and the square-root divisor; fails first at n = 1"}));

  ledger.add(from_scan(scan_mobius_square_divisors(t, kIdentityScale, workers),
                       {"sum_{d^2|n} mu(n/d^2) = lambda(n)", "exact for every n", ""}));
  ledger.add(from_scan(scan_lambda_floor_sum(t, 100'000, workers),
                       {"sum_{n<=x} lambda(n) floor(x/n) = floor(sqrt x)", "exact for every x", ""}));

  const auto floors = scan_squared_divisor_floor_sum(t, 10'000, workers);
  ledger.add(from_scan(floors[0], {"sum_{n<=x} (sum_{d|n} lambda(d))^2 = floor(sqrt x)", "exact for every x", ""}));
  ledger.add(from_scan(floors[1],
                       {"sum_{d,e<=x} lambda(d) lambda(e) floor(x/(de)) = floor(sqrt x)", "exact for every x",
                        "the double floor sum counts (lambda*lambda*1)(n), not the squared divisor sum; fails at x = 2"}));

  std::vector<u64> grid = decade_grid(100, kIdentityScale);
  ledger.add(from_scan(scan_summation_identity(t, grid),
                       {"sum_{m<=sqrt x} Lambda(m^2+1) = sum_{n<=x} Lambda(n+1) (sum_{d|n} lambda(d))^2",
                        "relative agreement within 1e-8 on the decade grid", ""}));

  ledger.add(from_scan(scan_wilson(10'000),
                       {"((p-1)/2)! = +-a mod p with a = round(sqrt p) if and only if p = a^2 + 1",
                        "biconditional holds for every odd prime p <= 1e4", ""}));
  ledger.add(wilson_quadratic_check(37));
}

void add_decomposition(ClaimsLedger& ledger, const SieveTable& t, const std::vector<u64>& xs, unsigned workers) {
  constexpr double B = 3.0;
  constexpr double tol = 1e-6;
  for (const u64 x : xs) {
    const DecompositionReport r = compute_decomposition(t, x, B, workers);
    const json in = {{"x", x}, {"B", B}};
    auto split = [&](const char* id, const char* statement, double residual, double relative) {
      return make_verdict(id, statement, in, {{"residual", residual}, {"relative_residual", relative}},
                          "relative residual <= 1e-6", status_of(relative <= tol));
    };
    ledger.add(split("decomposition_M_split", "M = S0 + S1 (diagonal plus off-diagonal)", r.residual_MS,
                     r.relative_MS()));
    auto total = split("decomposition_total_split", "total = M + E", r.residual_total, r.relative_total());
    total.computed["total"] = r.total;
    total.computed["M"] = r.M;
    total.computed["E"] = r.E;
    document(total,
             "the squared divisor sum over d, e <= sqrt n is replaced by d, e <= x^{1/4}, which is not a "
             "re-partition; the per-n expansion behind it already fails at n = 1");
    ledger.add(std::move(total));
    ledger.add(split("decomposition_S0_split", "S0 = T0 + T1 (split at d = (log x)^B)", r.residual_S0,
                     r.relative_S0()));
    ledger.add(split("decomposition_S1_split", "S1 = T2 + T3 (lcm collapse split at q = x^{1/4})", r.residual_S1,
                     r.relative_S1()));

    const double printed_gap = relative_gap(r.S0, r.S0_square_divisor);
    auto printed = make_verdict("decomposition_S0_printed_form",
                                "the diagonal d = e of M equals 2 sum_{d} lambda(d^2) sum_{d^2|n} Lambda(n+1)", in,
                                {{"S0", r.S0}, {"S0_square_divisor", r.S0_square_divisor},
                                 {"relative_gap", printed_gap}},
                                "relative gap <= 1e-6", status_of(printed_gap <= tol));
    document(printed, "the diagonal has d | n, not d^2 | n");
    ledger.add(std::move(printed));

    const double collapsed = r.T2_liouville + r.T3_liouville;
    const double collapse_gap = relative_gap(r.S1, collapsed);
    auto collapse = make_verdict("decomposition_liouville_collapse",
                                 "S1 equals sum_{q} lambda(q) sum_{q|n} Lambda(n+1) over q = lcm(d, e)", in,
                                 {{"S1", r.S1}, {"lambda_weighted", collapsed}, {"relative_gap", collapse_gap}},
                                 "relative gap <= 1e-6", status_of(collapse_gap <= tol));
    document(collapse, "the weight of q is sum over d != e with lcm q of lambda(d) lambda(e), not lambda(q)");
    ledger.add(std::move(collapse));

    ledger.add(make_verdict("decomposition_T2_growth", "T2 = O(x^{1/2} (log log x)^2 / log x)", in,
                            {{"T2", r.T2}, {"T2_scaled", r.T2_scaled}, {"S1_scaled", r.S1_scaled}},
                            "scaled value bounded as x grows", ClaimStatus::indeterminate));

    const ModuliCoverage c = moduli_set_coverage(t, x);
    auto cover = make_verdict("moduli_set_coverage", "every q <= x^{1/2} is lcm(d, e) for some d != e <= x^{1/4}",
                              {{"x", x}},
                              {{"covered", c.covered},
                               {"moduli", c.sqrt_bound},
                               {"first_missing", c.first_missing},
                               {"max_multiplicity", c.max_multiplicity},
                               {"max_multiplicity_at", c.max_multiplicity_at},
                               {"weight_mismatches", c.weight_mismatches}},
                              "covered = moduli", status_of(c.covers_all()));
    document(cover, "lcm(d, e) <= x^{1/2} for d, e <= x^{1/4} but many q, e.g. primes above x^{1/4}, never occur");
    ledger.add(std::move(cover));
  }
}

ClaimVerdict constant_verdict(const char* id, const char* statement, const ConstantEstimate& e, double reference,
                              double tolerance) {
  const double diff = std::fabs(e.value - reference);
  char expected[96];
  std::snprintf(expected, sizeof expected, "|value - %.12g| <= %g", reference, tolerance);
  return make_verdict(id, statement, {{"P", e.truncation_point}},
                      {{"value", e.value}, {"difference", diff}, {"tail_estimate", e.tail_estimate}}, expected,
                      status_of(diff <= tolerance));
}

ClaimVerdict digits_verdict(const char* id, const char* statement, const ConstantEstimate& e) {
  const double reference = *e.reference_value;
  const double diff = std::fabs(e.value - reference);
  auto v = make_verdict(id, statement, {{"P", e.truncation_point}},
                        {{"value", e.value},
                         {"printed", reference},
                         {"difference", diff},
                         {"tail_estimate", e.tail_estimate},
                         {"tail_heuristic", e.tail_is_heuristic}},
                        "difference <= 2 * tail_estimate", status_of(diff <= 2.0 * e.tail_estimate));
  document(v, "the printed digits disagree with the product beyond the 7th decimal");
  return v;
}

void add_constants(ClaimsLedger& ledger, const SieveTable& t, u64 P) {
  const ConstantEstimate a2 = a2_constant(P);
  ledger.add(constant_verdict("a2_constant", "prod_{p>=3} (1 - (-1|p)/(p-1)) = 1.37281346", a2, kA2Reference, 5e-3));
  ledger.add(constant_verdict("c0_constant", "prod_p (1 - 1/((p^2-1)(p-1))) = 0.615132657318...", product_c0(P),
                              0.615132657318, 1e-9));
  ledger.add(constant_verdict("lambda_n_phi_constant", "prod_p (1 - p/((p^2+1)(p-1))) = 0.458937522009...",
                              product_sum_lambda_n_phi(P), 0.458937522009, 1e-6));
  ledger.add(constant_verdict("artin_like_constant", "prod_p (1 - 1/(p(p-1))) = 0.373955832771",
                              product_artin_like(P), 0.3739558, 1e-7));

  const u64 deep = std::max<u64>(P, 10'000'000);
  ledger.add(digits_verdict("c0_printed_digits", "all printed digits of prod_p (1 - 1/((p^2-1)(p-1)))",
                            product_c0(deep)));
  ledger.add(digits_verdict("lambda_n_phi_printed_digits", "all printed digits of prod_p (1 - p/((p^2+1)(p-1)))",
                            product_sum_lambda_n_phi(deep)));
  ledger.add(digits_verdict("artin_like_printed_digits", "all printed digits of prod_p (1 - 1/(p(p-1)))",
                            product_artin_like(deep)));

  const auto hl = hardy_littlewood_constant(QuadraticPoly::make(1, 0, 1), P);
  const double hl_gap = std::fabs(hl.estimate.value - a2.value);
  ledger.add(make_verdict("hardy_littlewood_x2_plus_1", "C_f for f = x^2 + 1 reduces to a2", {{"P", P}},
                          {{"C_f", hl.estimate.value}, {"a2", a2.value}, {"epsilon", hl.epsilon}},
                          "|C_f - a2| <= 1e-12", status_of(hl_gap <= 1e-12)));

  const ConstantEstimate a0_low = a0_phi_square_sum(100'000);
  const ConstantEstimate a0_high = a0_phi_square_sum(1'000'000);
  ledger.add(make_verdict("a0_phi_square_convergence", "sum_{n>=1} 1/phi(n^2) converges to a positive constant",
                          {{"N", json::array({100'000, 1'000'000})}},
                          {{"value_1e5", a0_low.value},
                           {"value_1e6", a0_high.value},
                           {"difference", a0_high.value - a0_low.value},
                           {"tail_estimate_1e5", a0_low.tail_estimate},
                           {"tail_estimate_1e6", a0_high.tail_estimate}},
                          "partial sums increase and the change stays within the tail estimate",
                          ClaimStatus::indeterminate));

  const auto low = sum_musq_over_phi(t, 100'000);
  const auto high = sum_musq_over_phi(t, 1'000'000);
  const double drift_gap = std::fabs(low.drift - high.drift);
  ledger.add(make_verdict("musq_over_phi_drift", "sum_{n<=x} mu^2(n)/phi(n) - log x tends to a constant",
                          {{"x", json::array({100'000, 1'000'000})}},
                          {{"drift_1e5", low.drift}, {"drift_1e6", high.drift}, {"difference", drift_gap}},
                          "|difference| <= 5e-3", status_of(drift_gap <= 5e-3)));

  const double direct = sum_lambda_over_phi(t, 10'000);
  const double rearranged = sum_lambda_over_phi_rearranged(t, 10'000);
  ledger.add(make_verdict("lambda_over_phi_two_routes",
                          "sum lambda(n)/phi(n) equals its regrouping through n/phi(n) = sum_{d|n} mu^2(d)/phi(d)",
                          {{"x", 10'000}},
                          {{"direct", direct}, {"rearranged", rearranged}, {"difference", std::fabs(direct - rearranged)}},
                          "|difference| <= 1e-10", status_of(std::fabs(direct - rearranged) <= 1e-10)));

  for (const u64 x : {u64{100}, u64{10'000}, u64{1'000'000}}) ledger.add(product_sum_equivalence_check(t, x));

  const auto grid = decade_grid(100, 1'000'000);
  std::vector<double> lphi, muphi, mu_vm;
  for (const u64 x : grid) {
    lphi.push_back(sum_lambda_over_phi(t, x));
    muphi.push_back(sum_mu_over_phi(t, x));
    mu_vm.push_back(sum_mu_vonmangoldt(t, x));
  }
  const auto fit = [](const std::vector<u64>& g, const std::vector<double>& v) {
    const SummatoryCurve c = make_curve(g, v);
    return c.exponent_fit ? json(*c.exponent_fit) : json(nullptr);
  };
  ledger.add(make_verdict("lambda_over_phi_decay", "sum_{n<=x} lambda(n)/phi(n) = O(1/(log x)^C)", {{"grid", grid}},
                          {{"values", lphi}, {"exponent_fit", fit(grid, lphi)}}, "values shrink along the grid",
                          ClaimStatus::indeterminate));
  ledger.add(make_verdict("mu_over_phi_growth", "sum_{n<=x} mu(n)/phi(n) growth exponent", {{"grid", grid}},
                          {{"values", muphi}, {"exponent_fit", fit(grid, muphi)}}, "exponent near -1/2",
                          ClaimStatus::indeterminate));
  ledger.add(make_verdict("mu_vonmangoldt_growth", "sum_{n<=x} mu(n) Lambda(n) growth exponent", {{"grid", grid}},
                          {{"values", mu_vm}, {"exponent_fit", fit(grid, mu_vm)}}, "exponent near 1/2",
                          ClaimStatus::indeterminate));
}

void add_progressions(ClaimsLedger& ledger, const SieveTable& t) {
  const u64 x = kProgressionX;
  double worst = 0.0;
  u64 worst_q = 0, worst_a = 0;
  for (u64 q = 1; q <= 20; ++q) {
    for (u64 a = 0; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      const double dev = std::fabs(siegel_walfisz_ratio(t, x, q, a) - 1.0);
      if (dev > worst) {
        worst = dev;
        worst_q = q;
        worst_a = a;
      }
    }
  }
  ledger.add(make_verdict("siegel_walfisz_band", "psi(x; q, a) ~ x/phi(q) uniformly for small q",
                          {{"x", x}, {"q_max", 20}},
                          {{"max_deviation", worst}, {"worst_q", worst_q}, {"worst_a", worst_a}},
                          "|psi phi(q)/x - 1| <= 0.1 for every q <= 20, gcd(a, q) = 1", status_of(worst <= 0.1)));

  const AverageErrorSum avg = average_error_sum(t, x, 1000, 1);
  ledger.add(make_verdict("average_error_sum", "sum_{q<=Q} |psi(x; q, a) - x/phi(q)| is small against x",
                          {{"x", x}, {"q_max", 1000}, {"a", 1}},
                          {{"value", avg.value}, {"relative_to_x", avg.value / static_cast<double>(x)}},
                          "value = o(x)", ClaimStatus::indeterminate));
  for (const int power : {1, 2}) {
    const double m = max_error_moment(t, x, 100, power);
    ledger.add(make_verdict(power == 1 ? "max_error_first_moment" : "max_error_second_moment",
                            power == 1 ? "sum_{q<=Q} max_a |psi(x; q, a) - x/phi(q)|"
                                       : "sum_{q<=Q} max_a |psi(x; q, a) - x/phi(q)|^2",
                            {{"x", x}, {"q_max", 100}},
                            {{"value", m},
                             {"relative", m / std::pow(static_cast<double>(x), power == 1 ? 1.0 : 2.0)}},
                            "small against x^power", ClaimStatus::indeterminate));
  }
  for (const u64 q : {u64{1}, u64{2}, u64{3}, u64{4}, u64{5}, u64{6}}) {
    const LambdaWeightedPsi w = lambda_weighted_psi(t, x, q);
    ledger.add(make_verdict("liouville_weighted_psi", "sum_{n<=x, q|n} lambda(n) Lambda(n+1) is small against the plain sum",
                            {{"x", x}, {"q", q}},
                            {{"weighted", w.liouville_weighted},
                             {"plain", w.plain},
                             {"ratio", w.plain == 0.0 ? 0.0 : w.liouville_weighted / w.plain}},
                            "ratio tends to 0", ClaimStatus::indeterminate));
  }
}

void add_quadratic(ClaimsLedger& ledger, unsigned workers) {
  const QuadraticPoly g1 = QuadraticPoly::make(1, 0, 1);
  const auto small = count_quadratic_primes(g1, 10, 16);
  const std::vector<u64> expected_values = {2, 5, 17, 37, 101};
  ledger.add(make_verdict("quadratic_primes_first_terms", "the primes n^2 + 1 begin 2, 5, 17, 37, 101", {{"N", 10}},
                          {{"count", small.count}, {"values", small.values}}, "count 5, values 2,5,17,37,101",
                          status_of(small.count == 5 && small.values == expected_values)));

  const auto big = count_quadratic_primes(g1, kQuadraticN, 0, workers);
  const double a2 = a2_constant(1'000'000).value;
  const double li = log_integral_from_2(static_cast<double>(kQuadraticN));
  const double ratio = static_cast<double>(big.count) / (a2 / 2.0 * li);
  ledger.add(make_verdict("quadratic_prime_density", "#{n <= N : n^2 + 1 prime} ~ (a2/2) int_2^N dt/log t",
                          {{"N", kQuadraticN}}, {{"count", big.count}, {"a2", a2}, {"li", li}, {"ratio", ratio}},
                          "ratio in [0.9, 1.1]", status_of(ratio >= 0.9 && ratio <= 1.1)));

  const double psi = lambda_psi_quadratic(kQuadraticN, workers);
  ledger.add(make_verdict("lambda_psi_quadratic", "sum_{n<=x} Lambda(n^2+1) = a2 x + O(x/log x)",
                          {{"N", kQuadraticN}}, {{"value", psi}, {"value_over_N", psi / kQuadraticN}, {"a2", a2}},
                          "value_over_N approaches a2", ClaimStatus::indeterminate));

  const QuadraticPoly g3 = QuadraticPoly::make(1, 1, 2);
  const u64 div1 = fixed_divisor(g1);
  const u64 div3 = fixed_divisor(g3);
  ledger.add(make_verdict("fixed_divisor_examples", "div(x^2+1) = 1 and div(x(x+1)+2) = 2", json::object(),
                          {{"x^2+1", div1}, {"x^2+x+2", div3}}, "1 and 2", status_of(div1 == 1 && div3 == 2)));

  const auto euler = least_prime(QuadraticPoly::make(1, 1, 41), 100);
  ledger.add(make_verdict("euler_polynomial_least_prime", "the least prime of x^2 + x + 41 is 41 at n = 0",
                          {{"n_max", 100}},
                          {{"n", euler ? json(euler->n) : json(nullptr)}, {"p", euler ? json(euler->p) : json(nullptr)}},
                          "n = 0, p = 41", status_of(euler && euler->n == 0 && euler->p == 41)));

  const FractionalScan frac = sqrt_fractional_scan(2, kQuadraticN, 0.55);
  ledger.add(make_verdict("sqrt_fractional_part_scan", "{sqrt p} < c/sqrt p for every prime p = n^2 + 1",
                          {{"n_first", 2}, {"n_last", kQuadraticN}, {"c", 0.55}},
                          {{"checked", frac.checked}, {"failed", frac.failed}, {"worst_ratio", frac.worst_ratio}},
                          "no failures", status_of(frac.checked > 0 && frac.failed == 0)));
  auto at_two = sqrt_fractional_check(2, 0.55);
  document(at_two, "p = 2 (n = 1) lies below the range where 1/(2n) dominates; the bound needs n >= 2 at c = 0.55");
  ledger.add(std::move(at_two));

  const auto hits = prime_power_scan(1'000'000);
  json list = json::array();
  for (const auto& h : hits) list.push_back({{"p", h.p}, {"k", h.k}, {"m", h.m}});
  ledger.add(make_verdict("prime_powers_m2_plus_1", "only finitely many prime powers p^k = m^2 + 1 with k >= 2",
                          {{"m_max", 1'000'000}}, {{"hits", list}}, "finite list", ClaimStatus::indeterminate));

  json harmonic = json::array();
  for (const u64 n : decade_grid(10, kQuadraticN)) harmonic.push_back({n, harmonic_sum_A(n)});
  ledger.add(make_verdict("harmonic_sum_A", "sum of 1/p over primes p = n^2 + 1 converges", {{"N_max", kQuadraticN}},
                          {{"partial_sums", harmonic}}, "partial sums level off", ClaimStatus::indeterminate));

  json growth = json::array();
  for (const u64 x : decade_grid(100, 10'000'000'000)) {
    const HalfLineGrowth g = zeta_A_half_line_growth(x);
    growth.push_back({{"x", x}, {"value", g.value}, {"log_x", g.log_x}, {"ratio", g.value / g.log_x}});
  }
  ledger.add(make_verdict("zeta_A_half_line_growth", "sum_{n<=x} Lambda_A(n)/n^{1/2} grows at least like log x",
                          {{"x_max", 10'000'000'000}}, {{"points", growth}}, "ratio bounded below",
                          ClaimStatus::indeterminate));
}

std::vector<ClaimSet> expand(ClaimSet set) {
  if (set != ClaimSet::all) return {set};
  return {ClaimSet::identities, ClaimSet::decomposition, ClaimSet::constants, ClaimSet::progressions,
          ClaimSet::quadratic};
}

std::vector<u64> decomposition_grid(const RunConfig& config) {
  if (!config.seed_grid.empty()) return config.seed_grid;
  return {10'000, 1'000'000};
}

u64 required_for(ClaimSet set, const RunConfig& config) {
  if (set == ClaimSet::decomposition) {
    u64 need = 2;
    for (const u64 x : decomposition_grid(config)) need = std::max(need, isqrt(x) + 1);
    return need;
  }
  return required_table_limit(set);
}

}  // namespace

std::uint64_t required_table_limit(ClaimSet set) {
  switch (set) {
    case ClaimSet::identities:
      return kIdentityScale + 1;
    case ClaimSet::decomposition:
      return 1'001;
    case ClaimSet::constants:
      return 1'000'000;
    case ClaimSet::progressions:
      return kProgressionX + 1;
    case ClaimSet::quadratic:
      return 2;
    case ClaimSet::all:
      return kIdentityScale + 1;
  }
  return kIdentityScale + 1;
}

ClaimsLedger cmd_verify(ClaimSet set, const RunConfig& config) {
  validate(config);
  u64 need = 2;
  for (const ClaimSet s : expand(set)) need = std::max(need, required_for(s, config));
  if (config.table_limit < need) {
    throw CapacityError("verify " + std::string(to_string(set)) + " needs --limit >= " + std::to_string(need) +
                        ", got " + std::to_string(config.table_limit));
  }
  const SieveTable table = load_table(config, need);
  return cmd_verify(set, config, table);
}

ClaimsLedger cmd_verify(ClaimSet set, const RunConfig& config, const SieveTable& table) {
  validate(config);
  for (const ClaimSet s : expand(set)) {
    const u64 need = required_for(s, config);
    if (table.limit() < need) {
      throw CapacityError("verify " + std::string(to_string(s)) + " needs a table up to " + std::to_string(need) +
                          ", table limit is " + std::to_string(table.limit()));
    }
  }
  ClaimsLedger ledger;
  for (const ClaimSet s : expand(set)) {
    switch (s) {
      case ClaimSet::identities:
        add_identities(ledger, table, config.workers);
        break;
      case ClaimSet::decomposition:
        add_decomposition(ledger, table, decomposition_grid(config), config.workers);
        break;
      case ClaimSet::constants:
        add_constants(ledger, table, config.prime_bound);
        break;
      case ClaimSet::progressions:
        add_progressions(ledger, table);
        break;
      case ClaimSet::quadratic:
        add_quadratic(ledger, config.workers);
        break;
      case ClaimSet::all:
        break;
    }
  }
  return ledger;
}

std::string render_ledger(const ClaimsLedger& ledger, OutputFormat format) {
  if (format == OutputFormat::csv) return ledger.to_csv();
  return ledger.to_json(ledger_timestamp()).dump(2) + "\n";
}

}  // namespace quadprime::cli
