#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quadprime/errors.hpp"
#include "quadprime/identities.hpp"

using namespace quadprime;
using testing_support::table;

namespace {

std::int64_t as_int(const IdentityValue& v) { return std::get<std::int64_t>(v); }
double as_real(const IdentityValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
  return std::get<double>(v);
}

}  // namespace

TEST(SquareIndicator, Examples) {
  const auto& t = table(1000);
  EXPECT_EQ(square_indicator(t, 4), 1);
  EXPECT_EQ(square_indicator(t, 6), 0);
  EXPECT_EQ(square_indicator(t, 1), 1);
  EXPECT_THROW(square_indicator(t, 1001), RangeError);
}

TEST(SquareIndicator, MatchesIsSquareToOneMillion) {
  const auto& t = table(1'000'000);
  const auto tab = square_indicator_table(t, 1'000'000);
  std::uint64_t running = 0;
  for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
    const int want = oracle::isqrt(n) * oracle::isqrt(n) == n ? 1 : 0;
    ASSERT_EQ(tab[n], want) << n;
    running += static_cast<std::uint64_t>(tab[n]);
    ASSERT_EQ(running, static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)) + 1e-9)) << n;
  }
  for (std::uint64_t n = 1; n <= 20'000; ++n) ASSERT_EQ(square_indicator(t, n), tab[n]) << n;
}

TEST(QuadLinearWeight, Examples) {
  const auto& t = table(1000);
  EXPECT_DOUBLE_EQ(quad_linear_weight(t, 4), std::log(5.0));
  EXPECT_EQ(quad_linear_weight(t, 6), 0.0);
  EXPECT_DOUBLE_EQ(quad_linear_weight(t, 16), std::log(17.0));
  EXPECT_THROW(quad_linear_weight(t, 1000), RangeError);
}

TEST(QuadLinearWeight, NonzeroOnlyAtSquares) {
  const auto& t = table(1'000'001);
  for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
    const double w = quad_linear_weight(t, n);
    ASSERT_GE(w, 0.0);
    if (w != 0.0) ASSERT_EQ(oracle::isqrt(n) * oracle::isqrt(n), n) << n;
  }
}

TEST(VonMangoldtDivisorSum, Examples) {
  const auto& t = table(1000);
  const auto c8 = check_vonmangoldt_divisor_sum(t, 8);
  EXPECT_TRUE(c8.equal);
  EXPECT_NEAR(as_real(c8.lhs), std::log(2.0), 1e-12);
  const auto c6 = check_vonmangoldt_divisor_sum(t, 6);
  EXPECT_TRUE(c6.equal);
  EXPECT_NEAR(as_real(c6.lhs), 0.0, 1e-12);
}

TEST(VonMangoldtDivisorSum, ScanToHundredThousand) {
  const auto s = scan_vonmangoldt_divisor_sum(table(100'000), 100'000, 2);
  EXPECT_EQ(s.checked, 100'000u);
  EXPECT_TRUE(s.all_passed());
}

TEST(HyperbolaSplits, NonSquarePartition) {
  const auto& t = table(1000);
  const auto h = check_hyperbola_splits(t, 6);
  EXPECT_TRUE(h.liouville_split.equal);
  EXPECT_TRUE(h.vonmangoldt_split.equal);
  EXPECT_TRUE(h.liouville_split_inclusive.equal);
}

TEST(HyperbolaSplits, SquareBoundaryBothReadings) {
  const auto& t = table(1000);
  const auto h = check_hyperbola_splits(t, 9);
  // Divisors 1, 3, 9. Printed reading: d < 3 gives lambda(1); d <= 3 on the
  // other side gives lambda(9) + lambda(3). Total 1 + 1 - 1 = 1 = lambda sum.
  EXPECT_TRUE(h.liouville_split.equal);
  EXPECT_EQ(as_int(h.liouville_split.rhs), 1);
  // Inclusive reading counts d = 3 twice: (1 - 1) + (1 - 1) = 0.
  EXPECT_FALSE(h.liouville_split_inclusive.equal);
  EXPECT_EQ(as_int(h.liouville_split_inclusive.rhs), 0);
  // (sum lambda(d))^2 = 1, 2A^2 + 2 lambda(9) B^2 with A = B = 0.
  EXPECT_FALSE(h.square_expansion.equal);
}

TEST(HyperbolaSplits, ScanPassRates) {
  const auto& t = table(10'000);
  const auto s = scan_hyperbola_splits(t, 10'000);
  EXPECT_TRUE(s[0].all_passed());
  EXPECT_TRUE(s[1].all_passed());
  // Inclusive readings fail exactly where the boundary divisor exists and
  // contributes: frozen counts from the scan, checked against squares below.
  std::uint64_t squares = 0;
  for (std::uint64_t m = 1; m * m <= 10'000; ++m) ++squares;
  EXPECT_LE(s[2].failed, squares);
  EXPECT_EQ(s[3].failed, squares);
  for (const auto& f : s[3].failures) EXPECT_EQ(oracle::isqrt(f.n_or_x) * oracle::isqrt(f.n_or_x), f.n_or_x);
  // The square expansion fails on every square and nowhere else.
  EXPECT_EQ(s[4].failed, squares);
}

TEST(MobiusSquareDivisors, Examples) {
  const auto& t = table(1000);
  const auto c4 = check_mobius_square_divisors(t, 4);
  EXPECT_TRUE(c4.equal);
  EXPECT_EQ(as_int(c4.lhs), 1);
  const auto c12 = check_mobius_square_divisors(t, 12);
  EXPECT_TRUE(c12.equal);
  EXPECT_EQ(as_int(c12.lhs), -1);
}

TEST(MobiusSquareDivisors, ScanToOneMillion) {
  const auto s = scan_mobius_square_divisors(table(1'000'000), 1'000'000);
  EXPECT_EQ(s.checked, 1'000'000u);
  EXPECT_TRUE(s.all_passed());
}

TEST(LambdaFloorSum, Examples) {
  const auto& t = table(1000);
  const auto c1 = lambda_floor_sum(t, 1);
  EXPECT_TRUE(c1.equal);
  EXPECT_EQ(as_int(c1.lhs), 1);
  const auto c10 = lambda_floor_sum(t, 10);
  EXPECT_EQ(as_int(c10.lhs), 10 - 5 - 3 + 2 - 2 + 1 - 1 - 1 + 1 + 1);
  EXPECT_EQ(as_int(c10.lhs), 3);
  EXPECT_TRUE(c10.equal);
}

TEST(LambdaFloorSum, BlockedScanMatchesDirectLoop) {
  const auto& t = table(100'000);
  const auto s = scan_lambda_floor_sum(t, 100'000, 2);
  EXPECT_EQ(s.checked, 100'000u);
  EXPECT_TRUE(s.all_passed());
  for (std::uint64_t x : {2ull, 99ull, 1000ull, 65'536ull, 99'999ull}) {
    std::int64_t direct = 0;
    for (std::uint64_t n = 1; n <= x; ++n) direct += oracle::liouville(n) * static_cast<std::int64_t>(x / n);
    EXPECT_EQ(as_int(lambda_floor_sum(t, x).lhs), direct) << x;
  }
}

TEST(SummationIdentity, SmallCases) {
  const auto& t = table(1000);
  const auto c4 = check_summation_identity(t, 4);
  EXPECT_TRUE(c4.equal);
  EXPECT_NEAR(as_real(c4.lhs), std::log(2.0) + std::log(5.0), 1e-12);
  const auto c100 = check_summation_identity(t, 100);
  EXPECT_TRUE(c100.equal);
  EXPECT_NEAR(as_real(c100.lhs), std::log(2.0 * 5 * 17 * 37 * 101), 1e-12);
  EXPECT_NEAR(as_real(c100.rhs), std::log(2.0 * 5 * 17 * 37 * 101), 1e-12);
  EXPECT_THROW(check_summation_identity(t, 1000), RangeError);
}

TEST(SummationIdentity, DecadesToOneMillion) {
  const auto& t = table(1'000'001);
  for (std::uint64_t x : {1000ull, 10'000ull, 100'000ull, 1'000'000ull}) {
    const auto c = check_summation_identity(t, x);
    EXPECT_TRUE(c.equal) << x;
    EXPECT_LE(std::fabs(as_real(c.lhs) - as_real(c.rhs)) / as_real(c.lhs), 1e-8) << x;
  }
}

TEST(SquaredDivisorFloorSum, Examples) {
  const auto& t = table(1000);
  const auto c4 = check_squared_divisor_floor_sum(t, 4);
  EXPECT_EQ(as_int(c4.lhs), 2);
  EXPECT_EQ(as_int(c4.rhs), 2);
  const auto c10 = check_squared_divisor_floor_sum(t, 10);
  EXPECT_EQ(as_int(c10.lhs), 3);
  EXPECT_EQ(as_int(c10.rhs), 3);
}

TEST(SquaredDivisorFloorSum, DoubleFloorSumIsNotTheRoot) {
  // sum_{d,e <= x} lambda(d) lambda(e) floor(x/(de)) counts
  // sum_{n <= x} (lambda * lambda * 1)(n), not the squares. At x = 2:
  // (d,e) = (1,1): 2; (1,2), (2,1): -1 each; total 0, while floor(sqrt 2) = 1.
  const auto& t = table(1000);
  const auto c2 = check_squared_divisor_floor_sum(t, 2);
  EXPECT_FALSE(c2.equal);
  bool found = false;
  for (const auto& [name, value] : c2.detail) {
    if (name == "double_floor_sum") {
      EXPECT_EQ(as_int(value), 0);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(SquaredDivisorFloorSum, ScanRoutes) {
  const auto s = scan_squared_divisor_floor_sum(table(10'000), 10'000);
  EXPECT_TRUE(s[0].all_passed());
  EXPECT_EQ(s[0].checked, 10'000u);
  EXPECT_GT(s[1].failed, 0u);
}

TEST(Wilson, Examples) {
  const auto v37 = wilson_quadratic_check(37);
  EXPECT_EQ(v37.status, ClaimStatus::verified);
  // 18! mod 37 computed independently.
  std::uint64_t w = 1;
  for (std::uint64_t k = 1; k <= 18; ++k) w = w * k % 37;
  EXPECT_TRUE(w == 6 || w == 31) << w;
  EXPECT_EQ(wilson_quadratic_check(5).status, ClaimStatus::verified);
  EXPECT_THROW(wilson_quadratic_check(9), DomainError);
  EXPECT_THROW(wilson_quadratic_check(2), DomainError);
}

TEST(Wilson, ThreeIsTheOnlyCounterexampleBelowTenThousand) {
  // p = 3: ((3-1)/2)! = 1, round(sqrt 3) = 2, and 1 = -2 mod 3, yet 3 != 2^2+1.
  EXPECT_EQ(wilson_quadratic_check(3).status, ClaimStatus::falsified);
  const auto s = scan_wilson(10'000);
  EXPECT_EQ(s.failed, 1u);
  ASSERT_EQ(s.failures.size(), 1u);
  EXPECT_EQ(s.failures[0].n_or_x, 3u);
}

TEST(IdentityChecks, ReproducibleAndCsv) {
  const auto& t = table(10'000);
  const auto a = scan_hyperbola_splits(t, 10'000);
  const auto b = scan_hyperbola_splits(t, 10'000);
  EXPECT_EQ(to_json(a[4]).dump(), to_json(b[4]).dump());
  std::ostringstream csv;
  const std::vector<IdentityCheck> checks{lambda_floor_sum(t, 10)};
  write_checks_csv(csv, checks);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), "claim_id,n_or_x,lhs,rhs,pass");
}
