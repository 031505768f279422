#include "quadprime/progressions.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <string>

#include "quadprime/arith.hpp"
#include "quadprime/compensated_sum.hpp"
#include "quadprime/detail/parallel.hpp"
#include "quadprime/errors.hpp"

namespace quadprime {

namespace {

void require_table(const SieveTable& t, u64 n, const char* what) {
  if (n > t.limit()) {
    throw RangeError(std::string(what) + ": needs the table to cover " + std::to_string(n) +
                     ", table limit is " + std::to_string(t.limit()));
  }
}

void require_residue(u64 q, u64 a, const char* what) {
  if (q == 0) throw ParameterError(std::string(what) + ": modulus must be >= 1");
  if (a >= q) throw ParameterError(std::string(what) + ": residue must satisfy 0 <= a < q");
}

struct PrimePowerTerm {
  u64 n;
  double weight;
};

std::vector<PrimePowerTerm> prime_powers_upto(const SieveTable& t, u64 x) {
  std::vector<PrimePowerTerm> out;
  for (u64 n = 2; n <= x; ++n) {
    if (const double w = t.von_mangoldt_unchecked(n); w > 0) out.push_back({n, w});
  }
  return out;
}

double psi_unchecked(const SieveTable& t, u64 x, u64 q, u64 a) {
  CompensatedSum s;
  for (u64 n = a == 0 ? q : a; n <= x; n += q) s.add(t.von_mangoldt_unchecked(n));
  return s.value();
}

double relative_or_abs(double residual, double reference) {
  return reference == 0.0 ? residual : residual / std::fabs(reference);
}

}  // namespace

double psi_progression(const SieveTable& t, u64 x, u64 q, u64 a) {
  require_residue(q, a, "psi_progression");
  require_table(t, x, "psi_progression");
  return psi_unchecked(t, x, q, a);
}

u64 pi_progression(const SieveTable& t, u64 x, u64 q, u64 a) {
  require_residue(q, a, "pi_progression");
  require_table(t, x, "pi_progression");
  u64 count = 0;
  for (u64 n = a == 0 ? q : a; n <= x; n += q) {
    if (n >= 2 && t.spf_data()[n] == n) ++count;
  }
  return count;
}

double siegel_walfisz_ratio(const SieveTable& t, u64 x, u64 q, u64 a) {
  require_residue(q, a, "siegel_walfisz_ratio");
  if (std::gcd(a, q) != 1) {
    throw DomainError("siegel_walfisz_ratio: gcd(a, q) = " + std::to_string(std::gcd(a, q)) + ", must be 1");
  }
  if (x == 0) throw ParameterError("siegel_walfisz_ratio: x must be >= 1");
  require_table(t, x, "siegel_walfisz_ratio");
  return psi_unchecked(t, x, q, a) * static_cast<double>(t.euler_phi(q)) / static_cast<double>(x);
}

AverageErrorSum average_error_sum(const SieveTable& t, u64 x, u64 q_max, u64 a) {
  if (a == 0) throw ParameterError("average_error_sum: residue a must be nonzero");
  if (q_max == 0 || q_max > x) throw ParameterError("average_error_sum: need 1 <= q_max <= x");
  require_table(t, x, "average_error_sum");
  AverageErrorSum out;
  CompensatedSum total;
  for (u64 q = 1; q <= q_max; ++q) {
    const double psi = psi_unchecked(t, x, q, a % q);
    if (std::gcd(a, q) == 1) {
      total.add(std::fabs(psi - static_cast<double>(x) / static_cast<double>(t.euler_phi(q))));
    } else {
      total.add(std::fabs(psi));
      out.non_coprime_moduli.push_back(q);
    }
  }
  out.value = total.value();
  return out;
}

namespace {

std::vector<double> residues_from_terms(const std::vector<PrimePowerTerm>& terms, u64 q) {
  std::vector<CompensatedSum> acc(q);
  for (const auto& [n, w] : terms) acc[n % q].add(w);
  std::vector<double> out(q);
  for (u64 a = 0; a < q; ++a) out[a] = acc[a].value();
  return out;
}

double max_error_from_residues(const SieveTable& t, const std::vector<double>& psi, u64 x, u64 q) {
  const double main = static_cast<double>(x) / static_cast<double>(t.euler_phi(q));
  double worst = 0.0;
  for (u64 a = 0; a < q; ++a) {
    if (std::gcd(a, q) == 1) worst = std::max(worst, std::fabs(psi[a] - main));
  }
  return worst;
}

}  // namespace

std::vector<double> psi_all_residues(const SieveTable& t, u64 x, u64 q) {
  if (q == 0) throw ParameterError("psi_all_residues: modulus must be >= 1");
  require_table(t, x, "psi_all_residues");
  return residues_from_terms(prime_powers_upto(t, x), q);
}

double max_residue_error(const SieveTable& t, u64 x, u64 q) {
  const auto psi = psi_all_residues(t, x, q);
  return max_error_from_residues(t, psi, x, q);
}

double max_error_moment(const SieveTable& t, u64 x, u64 q_max, int power) {
  if (power < 1) throw ParameterError("max_error_moment: power must be >= 1");
  if (q_max == 0 || q_max > x) throw ParameterError("max_error_moment: need 1 <= q_max <= x");
  require_table(t, x, "max_error_moment");
  const auto terms = prime_powers_upto(t, x);
  CompensatedSum total;
  for (u64 q = 1; q <= q_max; ++q) {
    const double err = max_error_from_residues(t, residues_from_terms(terms, q), x, q);
    total.add(std::pow(err, power));
  }
  return total.value();
}

LambdaWeightedPsi lambda_weighted_psi(const SieveTable& t, u64 x, u64 q) {
  if (q == 0) throw ParameterError("lambda_weighted_psi: modulus must be >= 1");
  require_table(t, x + 1, "lambda_weighted_psi");
  CompensatedSum weighted, plain;
  for (u64 n = q; n <= x; n += q) {
    const double v = t.von_mangoldt_unchecked(n + 1);
    if (v == 0.0) continue;
    plain.add(v);
    weighted.add(t.liouville_unchecked(n) * v);
  }
  return {weighted.value(), plain.value()};
}

double DecompositionReport::relative_MS() const { return relative_or_abs(residual_MS, M); }
double DecompositionReport::relative_total() const { return relative_or_abs(residual_total, total); }
double DecompositionReport::relative_S0() const { return relative_or_abs(residual_S0, S0); }
double DecompositionReport::relative_S1() const { return relative_or_abs(residual_S1, S1); }

namespace {

struct StripeSums {
  CompensatedSum M, E, S0, S1;
};

}  // namespace

DecompositionReport compute_decomposition(const SieveTable& t, u64 x, double B, unsigned workers) {
  if (!(B > 2.0)) throw ParameterError("compute_decomposition: exponent B must exceed 2");
  if (x < 1) throw ParameterError("compute_decomposition: x must be >= 1");
  DecompositionReport r;
  r.x = x;
  r.B = B;
  r.sqrt_bound = isqrt(x);
  r.quarter_bound = isqrt(r.sqrt_bound);
  const double log_x = std::log(static_cast<double>(x));
  r.x0 = std::pow(log_x, B);
  const u64 n_max = r.sqrt_bound;
  const u64 d_max = r.quarter_bound;
  require_table(t, n_max + 1, "compute_decomposition");

  // shifted[n] = Lambda(n + 1), lam[n] = lambda(n)
  std::vector<double> shifted(n_max + 1, 0.0);
  std::vector<int> lam(n_max + 1, 0);
  for (u64 n = 1; n <= n_max; ++n) {
    shifted[n] = t.von_mangoldt_unchecked(n + 1);
    lam[n] = t.liouville_unchecked(n);
  }

  {
    CompensatedSum total;
    for (u64 n = 1; n <= n_max; ++n) {
      int s = 0;
      t.for_each_divisor(n, [&](u64 d) { s += lam[d]; });
      if (s != 0) total.add(shifted[n] * s * s);
    }
    r.total = total.value();
  }

  // M and E as the literal double sums: for each (d, e), walk the multiples
  // of d up to sqrt x and keep those divisible by e.
  std::vector<StripeSums> per_d(d_max + 1);
  std::vector<double> diagonal_inner(d_max + 1, 0.0);
  detail::run_chunks(1, d_max, workers, [&](u64 lo, u64 hi) {
    for (u64 d = lo; d <= hi; ++d) {
      auto& acc = per_d[d];
      for (u64 e = 1; e <= d_max; ++e) {
        CompensatedSum inner_m, inner_e;
        for (u64 n = d; n <= n_max; n += d) {
          if (n % e != 0 || shifted[n] == 0.0) continue;
          inner_m.add(shifted[n]);
          inner_e.add(lam[n] * shifted[n]);
        }
        const double sign = lam[d] * lam[e];
        const double m_term = 2.0 * sign * inner_m.value();
        acc.M.add(m_term);
        acc.E.add(2.0 * sign * inner_e.value());
        if (d == e) {
          acc.S0.add(m_term);
          diagonal_inner[d] = inner_m.value();
        } else {
          acc.S1.add(m_term);
        }
      }
    }
    return 0;
  });
  {
    CompensatedSum M, E, S0, S1, T0, T1;
    for (u64 d = 1; d <= d_max; ++d) {
      M.add(per_d[d].M.value());
      E.add(per_d[d].E.value());
      S0.add(per_d[d].S0.value());
      S1.add(per_d[d].S1.value());
      // lambda(d)^2 = 1
      (static_cast<double>(d) <= r.x0 ? T0 : T1).add(2.0 * diagonal_inner[d]);
    }
    r.M = M.value();
    r.E = E.value();
    r.S0 = S0.value();
    r.S1 = S1.value();
    r.T0 = T0.value();
    r.T1 = T1.value();
  }

  // lcm collapse of S1 onto q <= d_max^2 <= sqrt x
  std::vector<double> by_modulus(n_max + 1, 0.0);
  for (u64 q = 1; q <= n_max; ++q) {
    CompensatedSum s;
    for (u64 n = q; n <= n_max; n += q) s.add(shifted[n]);
    by_modulus[q] = s.value();
  }
  std::vector<std::int64_t> weight(n_max + 1, 0);
  for (u64 d = 1; d <= d_max; ++d) {
    for (u64 e = 1; e <= d_max; ++e) {
      if (d != e) weight[std::lcm(d, e)] += lam[d] * lam[e];
    }
  }
  {
    CompensatedSum T2, T3, T2l, T3l;
    for (u64 q = 1; q <= n_max; ++q) {
      const bool low = q <= d_max;
      if (weight[q] != 0) (low ? T2 : T3).add(2.0 * static_cast<double>(weight[q]) * by_modulus[q]);
      (low ? T2l : T3l).add(lam[q] * by_modulus[q]);
    }
    r.T2 = T2.value();
    r.T3 = T3.value();
    r.T2_liouville = T2l.value();
    r.T3_liouville = T3l.value();
  }
  {
    CompensatedSum s;
    for (u64 d = 1; d <= d_max; ++d) {
      const u64 d2 = d * d;
      if (d2 <= n_max) s.add(2.0 * by_modulus[d2]);
    }
    r.S0_square_divisor = s.value();
  }

  r.residual_MS = std::fabs(r.M - r.S0 - r.S1);
  r.residual_total = std::fabs(r.total - r.M - r.E);
  r.residual_S0 = std::fabs(r.S0 - r.T0 - r.T1);
  r.residual_S1 = std::fabs(r.S1 - r.T2 - r.T3);

  const double log_log_x = log_x > 0 ? std::log(log_x) : 0.0;
  const double scale = log_x > 0 ? std::sqrt(static_cast<double>(x)) * log_log_x * log_log_x / log_x : 0.0;
  r.T2_scaled = scale > 0 ? r.T2 / scale : 0.0;
  r.S1_scaled = scale > 0 ? r.S1 / scale : 0.0;
  return r;
}

nlohmann::json to_json(const DecompositionReport& r) {
  return {{"x", r.x},
          {"B", r.B},
          {"x0", r.x0},
          {"sqrt_bound", r.sqrt_bound},
          {"quarter_bound", r.quarter_bound},
          {"total", r.total},
          {"M", r.M},
          {"E", r.E},
          {"S0", r.S0},
          {"S1", r.S1},
          {"T0", r.T0},
          {"T1", r.T1},
          {"T2", r.T2},
          {"T3", r.T3},
          {"residual_MS", r.residual_MS},
          {"residual_total", r.residual_total},
          {"residual_S0", r.residual_S0},
          {"residual_S1", r.residual_S1},
          {"relative_residual_MS", r.relative_MS()},
          {"relative_residual_total", r.relative_total()},
          {"relative_residual_S0", r.relative_S0()},
          {"relative_residual_S1", r.relative_S1()},
          {"S0_square_divisor", r.S0_square_divisor},
          {"T2_liouville", r.T2_liouville},
          {"T3_liouville", r.T3_liouville},
          {"T2_scaled", r.T2_scaled},
          {"S1_scaled", r.S1_scaled}};
}

void write_decomposition_csv(std::ostream& out, const std::vector<DecompositionReport>& reports) {
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  out << "x,term,value,residual\n";
  for (const auto& r : reports) {
    const std::pair<const char*, double> plain[] = {{"S0_square_divisor", r.S0_square_divisor},
                                                    {"T0", r.T0},
                                                    {"T1", r.T1},
                                                    {"T2", r.T2},
                                                    {"T3", r.T3},
                                                    {"T2_liouville", r.T2_liouville},
                                                    {"T3_liouville", r.T3_liouville},
                                                    {"E", r.E}};
    out << r.x << ",total," << num(r.total) << ',' << num(r.residual_total) << '\n';
    out << r.x << ",M," << num(r.M) << ',' << num(r.residual_MS) << '\n';
    out << r.x << ",S0," << num(r.S0) << ',' << num(r.residual_S0) << '\n';
    out << r.x << ",S1," << num(r.S1) << ',' << num(r.residual_S1) << '\n';
    for (const auto& [name, v] : plain) out << r.x << ',' << name << ',' << num(v) << ",\n";
  }
}

ModuliCoverage moduli_set_coverage(const SieveTable& t, u64 x) {
  ModuliCoverage c;
  c.x = x;
  c.sqrt_bound = isqrt(x);
  const u64 d_max = isqrt(c.sqrt_bound);
  require_table(t, c.sqrt_bound, "moduli_set_coverage");
  std::vector<u64> multiplicity(c.sqrt_bound + 1, 0);
  std::vector<std::int64_t> weight(c.sqrt_bound + 1, 0);
  for (u64 d = 1; d <= d_max; ++d) {
    for (u64 e = d + 1; e <= d_max; ++e) {
      const u64 q = std::lcm(d, e);
      ++multiplicity[q];
      weight[q] += 2 * t.liouville_unchecked(d) * t.liouville_unchecked(e);
    }
  }
  for (u64 q = 1; q <= c.sqrt_bound; ++q) {
    if (multiplicity[q] > 0) {
      ++c.covered;
    } else if (c.first_missing.size() < 32) {
      c.first_missing.push_back(q);
    }
    if (multiplicity[q] > c.max_multiplicity) {
      c.max_multiplicity = multiplicity[q];
      c.max_multiplicity_at = q;
    }
    if (weight[q] != t.liouville_unchecked(q)) ++c.weight_mismatches;
  }
  return c;
}

}  // namespace quadprime
