#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quadprime/errors.hpp"
#include "quadprime/progressions.hpp"

using namespace quadprime;
using testing_support::table;

TEST(PsiProgression, Examples) {
  const auto& t = table(1000);
  EXPECT_NEAR(psi_progression(t, 20, 4, 1), std::log(5.0 * 3 * 13 * 17), 1e-12);
  EXPECT_NEAR(psi_progression(t, 20, 4, 1), 8.1062, 1e-4);
  EXPECT_NEAR(psi_progression(t, 10, 1, 0), std::log(2.0 * 3 * 2 * 5 * 7 * 2 * 3), 1e-12);
  EXPECT_NEAR(psi_progression(t, 100, 4, 3), static_cast<double>(oracle::psi(100, 4, 3)), 1e-12);
  EXPECT_THROW(psi_progression(t, 1001, 4, 1), RangeError);
}

TEST(PsiProgression, BruteForceGrid) {
  const auto& t = table(5000);
  for (std::uint64_t q = 1; q <= 12; ++q) {
    for (std::uint64_t a = 0; a < q; ++a) {
      ASSERT_NEAR(psi_progression(t, 5000, q, a), static_cast<double>(oracle::psi(5000, q, a)), 1e-9) << q << "," << a;
      ASSERT_EQ(pi_progression(t, 5000, q, a), oracle::pi(5000, q, a)) << q << "," << a;
    }
  }
}

TEST(PiProgression, Examples) {
  const auto& t = table(1000);
  EXPECT_EQ(pi_progression(t, 20, 4, 1), 3u);
  EXPECT_EQ(pi_progression(t, 20, 4, 3), 4u);
  EXPECT_EQ(pi_progression(t, 100, 1, 0), 25u);
}

TEST(PiProgression, MonotoneInX) {
  const auto& t = table(20'000);
  for (std::uint64_t q : {3ull, 7ull, 10ull}) {
    std::uint64_t prev = 0;
    for (std::uint64_t x = 1; x <= 20'000; x += 97) {
      const auto v = pi_progression(t, x, q, 1);
      ASSERT_GE(v, prev);
      prev = v;
    }
  }
}

TEST(PsiProgression, ResiduesPartitionFullPsi) {
  const auto& t = table(100'000);
  const double full = psi_progression(t, 100'000, 1, 0);
  for (std::uint64_t q = 2; q <= 6; ++q) {
    double s = 0.0;
    for (std::uint64_t a = 0; a < q; ++a) s += psi_progression(t, 100'000, q, a);
    EXPECT_LE(std::fabs(s - full) / full, 1e-9) << q;
    const auto all = psi_all_residues(t, 100'000, q);
    for (std::uint64_t a = 0; a < q; ++a) EXPECT_NEAR(all[a], psi_progression(t, 100'000, q, a), 1e-8);
  }
}

TEST(SiegelWalfisz, Examples) {
  const auto& t = table(1'000'000);
  const double r1 = siegel_walfisz_ratio(t, 1'000'000, 1, 0);
  EXPECT_GE(r1, 0.99);
  EXPECT_LE(r1, 1.01);
  const double r4 = siegel_walfisz_ratio(t, 1'000'000, 4, 1);
  EXPECT_GE(r4, 0.95);
  EXPECT_LE(r4, 1.05);
  EXPECT_THROW(siegel_walfisz_ratio(t, 1'000'000, 3, 0), DomainError);
}

TEST(AverageErrorSum, BruteForce) {
  const auto& t = table(1000);
  long double want = 0;
  for (std::uint64_t q = 1; q <= 31; ++q) {
    const long double psi = oracle::psi(1000, q, 1);
    want += std::fabs(static_cast<double>(psi - 1000.0L / oracle::phi(q)));
  }
  const auto got = average_error_sum(t, 1000, 31, 1);
  EXPECT_NEAR(got.value, static_cast<double>(want), 1e-8);
  EXPECT_TRUE(got.non_coprime_moduli.empty());
}

TEST(AverageErrorSum, SingleModulusIsPnTError) {
  const auto& t = table(10'000);
  const double psi = psi_progression(t, 10'000, 1, 0);
  EXPECT_NEAR(average_error_sum(t, 10'000, 1, 1).value, std::fabs(psi - 10'000.0), 1e-9);
}

TEST(AverageErrorSum, NonCoprimeModuliUseRawPsi) {
  const auto& t = table(1000);
  const auto got = average_error_sum(t, 1000, 6, 2);
  EXPECT_EQ(got.non_coprime_moduli, (std::vector<std::uint64_t>{2, 4, 6}));
  double want = 0;
  for (std::uint64_t q = 1; q <= 6; ++q) {
    const double psi = static_cast<double>(oracle::psi(1000, q, 2));
    want += std::gcd<std::uint64_t>(2, q) == 1 ? std::fabs(psi - 1000.0 / oracle::phi(q)) : std::fabs(psi);
  }
  EXPECT_NEAR(got.value, want, 1e-9);
}

TEST(AverageErrorSum, MonotoneInQmaxAndPreconditions) {
  const auto& t = table(100'000);
  double prev = 0.0;
  for (std::uint64_t q = 1; q <= 316; q += 5) {
    const double v = average_error_sum(t, 100'000, q, 1).value;
    ASSERT_GE(v, prev);
    prev = v;
  }
  // Empirical scale constant at x = 1e5, q <= sqrt x.
  const double x = 1e5;
  const double scale = x * std::pow(std::log(std::log(x)), 2) / std::log(x);
  const double C = average_error_sum(t, 100'000, 316, 1).value / scale;
  EXPECT_GT(C, 0.0);
  EXPECT_LT(C, 10.0);
  EXPECT_THROW(average_error_sum(t, 1000, 10, 0), ParameterError);
  EXPECT_THROW(average_error_sum(t, 100, 101, 1), ParameterError);
}

TEST(ErrorMoments, AgreeWithResidueMaximum) {
  const auto& t = table(20'000);
  double first = 0.0, second = 0.0;
  for (std::uint64_t q = 1; q <= 30; ++q) {
    double worst = 0.0;
    for (std::uint64_t a = 0; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      worst = std::max(worst, std::fabs(psi_progression(t, 20'000, q, a) - 20'000.0 / oracle::phi(q)));
    }
    EXPECT_NEAR(max_residue_error(t, 20'000, q), worst, 1e-8) << q;
    first += worst;
    second += worst * worst;
  }
  EXPECT_NEAR(max_error_moment(t, 20'000, 30, 1), first, 1e-7);
  EXPECT_NEAR(max_error_moment(t, 20'000, 30, 2), second, 1e-4);
}

TEST(LambdaWeightedPsi, Examples) {
  const auto& t = table(1000);
  const auto q1 = lambda_weighted_psi(t, 10, 1);
  EXPECT_NEAR(q1.plain, std::log(2.0 * 3 * 2 * 5 * 7 * 2 * 3 * 11), 1e-12);
  const auto q4 = lambda_weighted_psi(t, 20, 4);
  EXPECT_NEAR(q4.plain, std::log(5.0 * 3 * 13 * 17), 1e-12);
  // lambda(4) = lambda(16) = 1, lambda(8) = lambda(12) = -1.
  EXPECT_NEAR(q4.liouville_weighted, std::log(5.0) - std::log(3.0) - std::log(13.0) + std::log(17.0), 1e-12);
  const auto big_q = lambda_weighted_psi(t, 20, 21);
  EXPECT_EQ(big_q.plain, 0.0);
  EXPECT_EQ(big_q.liouville_weighted, 0.0);
  EXPECT_THROW(lambda_weighted_psi(t, 1000, 1), RangeError);
}

namespace {

struct Brute {
  double total = 0, M = 0, E = 0, S0 = 0, S1 = 0;
};

Brute brute_decomposition(std::uint64_t x) {
  Brute b;
  const std::uint64_t r = oracle::isqrt(x);
  const std::uint64_t r4 = oracle::isqrt(r);
  for (std::uint64_t n = 1; n <= r; ++n) {
    int s = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) s += oracle::liouville(d);
    }
    b.total += oracle::von_mangoldt(n + 1) * s * s;
  }
  for (std::uint64_t d = 1; d <= r4; ++d) {
    for (std::uint64_t e = 1; e <= r4; ++e) {
      for (std::uint64_t n = 1; n <= r; ++n) {
        if (n % d != 0 || n % e != 0) continue;
        const double w = 2.0 * oracle::liouville(d) * oracle::liouville(e) * oracle::von_mangoldt(n + 1);
        b.M += w;
        b.E += w * oracle::liouville(n);
        (d == e ? b.S0 : b.S1) += w;
      }
    }
  }
  return b;
}

}  // namespace

TEST(Decomposition, SixteenByHand) {
  const auto& t = table(1000);
  const auto r = compute_decomposition(t, 16, 3.0);
  // n <= sqrt 16 = 4: squares 1 and 4 carry Lambda(2) and Lambda(5).
  EXPECT_NEAR(r.total, std::log(2.0) + std::log(5.0), 1e-12);
  // d, e <= 2; n <= 4 divisible by lcm(d,e): M = 4 log 2 and E = 0.
  EXPECT_NEAR(r.M, 4.0 * std::log(2.0), 1e-12);
  EXPECT_NEAR(r.E, 0.0, 1e-12);
  // So the total is not M + E here.
  EXPECT_GT(r.residual_total, 0.1);
  EXPECT_LE(r.residual_MS, 1e-12);
}

TEST(Decomposition, MatchesBruteForceAndPartitions) {
  const auto& t = table(1000);
  for (std::uint64_t x : {16ull, 100ull, 1000ull, 10'000ull, 50'000ull, 300'000ull}) {
    const auto r = compute_decomposition(t, x, 3.0, 2);
    const Brute b = brute_decomposition(x);
    EXPECT_NEAR(r.total, b.total, 1e-9) << x;
    EXPECT_NEAR(r.M, b.M, 1e-9) << x;
    EXPECT_NEAR(r.E, b.E, 1e-9) << x;
    EXPECT_NEAR(r.S0, b.S0, 1e-9) << x;
    EXPECT_NEAR(r.S1, b.S1, 1e-9) << x;
    EXPECT_LE(r.relative_MS(), 1e-6) << x;
    EXPECT_LE(r.relative_S0(), 1e-6) << x;
    EXPECT_LE(r.relative_S1(), 1e-6) << x;
  }
}

TEST(Decomposition, FrozenValuesAtTenThousand) {
  const auto r = compute_decomposition(table(1000), 10'000, 3.0);
  EXPECT_NEAR(r.total, std::log(2.0 * 5 * 17 * 37 * 101), 1e-10);
  EXPECT_NEAR(r.M, 97.305130339537541, 1e-9);
  EXPECT_NEAR(r.E, 7.3564628810443002, 1e-9);
  EXPECT_NEAR(r.S0, 858.81115013290378, 1e-9);
  EXPECT_NEAR(r.S1, -761.50601979336625, 1e-9);
  EXPECT_NEAR(r.T2, -810.81780013712239, 1e-9);
  EXPECT_NEAR(r.T3, 49.311780343756183, 1e-9);
  // x0 = (log 1e4)^3 > 10 = x^{1/4}: every diagonal term lands in T0.
  EXPECT_EQ(r.T1, 0.0);
  EXPECT_EQ(r.sqrt_bound, 100u);
  EXPECT_EQ(r.quarter_bound, 10u);
}

TEST(Decomposition, WorkerCountDoesNotChangeBytes) {
  const auto& t = table(1001);
  const auto a = compute_decomposition(t, 1'000'000, 3.0, 1);
  const auto b = compute_decomposition(t, 1'000'000, 3.0, 3);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(Decomposition, Errors) {
  const auto& t = table(1000);
  EXPECT_THROW(compute_decomposition(t, 10'000, 2.0), ParameterError);
  EXPECT_THROW(compute_decomposition(t, 10'000, 1.5), ParameterError);
  EXPECT_THROW(compute_decomposition(t, 1'000'000, 3.0), RangeError);
}

TEST(Decomposition, CsvRows) {
  std::ostringstream s;
  write_decomposition_csv(s, {compute_decomposition(table(1000), 10'000, 3.0)});
  const std::string csv = s.str();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "x,term,value,residual");
  EXPECT_NE(csv.find("10000,M,"), std::string::npos);
}

TEST(ModuliCoverage, SmallX) {
  const auto& t = table(1000);
  const auto c = moduli_set_coverage(t, 10'000);
  EXPECT_EQ(c.sqrt_bound, 100u);
  // lcm(d, e) with d < e <= 10 reaches only 28 of the q <= 100.
  std::vector<bool> hit(101, false);
  for (std::uint64_t d = 1; d <= 10; ++d) {
    for (std::uint64_t e = d + 1; e <= 10; ++e) {
      const auto q = std::lcm(d, e);
      if (q <= 100) hit[q] = true;
    }
  }
  std::uint64_t covered = 0;
  for (std::uint64_t q = 1; q <= 100; ++q) covered += hit[q] ? 1 : 0;
  EXPECT_EQ(c.covered, covered);
  EXPECT_EQ(c.covered, 28u);
  EXPECT_FALSE(c.covers_all());
}
