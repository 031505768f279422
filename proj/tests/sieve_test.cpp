#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quadprime/errors.hpp"
#include "quadprime/primality.hpp"
#include "quadprime/sieve.hpp"
#include "quadprime/spf_cache.hpp"

using namespace quadprime;
using testing_support::table;

TEST(BuildTable, SmallSpf) {
  BuildOptions o;
  o.segment_size = 1024;
  const SieveTable t = build_table(10, o);
  const std::uint32_t want[] = {2, 3, 2, 5, 2, 7, 2, 3, 2};
  for (std::uint64_t n = 2; n <= 10; ++n) EXPECT_EQ(t.spf(n), want[n - 2]) << n;
}

TEST(BuildTable, SmallestCase) {
  BuildOptions o;
  o.segment_size = 1024;
  const SieveTable t = build_table(2, o);
  EXPECT_EQ(t.limit(), 2u);
  EXPECT_EQ(t.spf(2), 2u);
  EXPECT_TRUE(t.is_prime(2));
}

TEST(BuildTable, RandomAgainstTrialDivision) {
  BuildOptions o;
  o.segment_size = 1 << 16;
  const SieveTable t = build_table(1'000'000, o);
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::uint64_t> pick(2, 1'000'000);
  for (int i = 0; i < 1000; ++i) {
    const auto n = pick(rng);
    ASSERT_EQ(t.spf(n), oracle::spf(n)) << n;
  }
}

TEST(BuildTable, IndependentOfSegmentSizeAndWorkers) {
  BuildOptions a;
  a.segment_size = 1024;
  BuildOptions b;
  b.segment_size = 1 << 18;
  b.workers = 3;
  const SieveTable ta = build_table(300'000, a);
  const SieveTable tb = build_table(300'000, b);
  ASSERT_TRUE(std::equal(ta.spf_data().begin(), ta.spf_data().end(), tb.spf_data().begin(), tb.spf_data().end()));
  ASSERT_TRUE(
      std::equal(ta.mobius_data().begin(), ta.mobius_data().end(), tb.mobius_data().begin(), tb.mobius_data().end()));
}

TEST(BuildTable, Errors) {
  EXPECT_THROW(build_table(1), RangeError);
  BuildOptions small_segment;
  small_segment.segment_size = 512;
  EXPECT_THROW(build_table(100, small_segment), ParameterError);
  BuildOptions capped;
  capped.max_limit = 1000;
  EXPECT_THROW(build_table(1001, capped), CapacityError);
  BuildOptions budget;
  budget.memory_budget_bytes = 1000;
  try {
    build_table(10'000, budget);
    FAIL() << "expected CapacityError";
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("1000"), std::string::npos) << e.what();
  }
}

TEST(SieveInvariants, FullScanAtOneMillion) {
  const auto& t = table(1'000'000);
  for (std::uint64_t n = 2; n <= t.limit(); ++n) {
    const std::uint64_t p = t.spf(n);
    ASSERT_EQ(n % p, 0u) << n;
    ASSERT_EQ(t.spf(p), p) << n;
    ASSERT_TRUE(p * p <= n || p == n) << n;
  }
}

TEST(Factorize, Examples) {
  const auto& t = table(1000);
  using PP = std::vector<PrimePower>;
  EXPECT_EQ(t.factorize(12).factors, (PP{{2, 2}, {3, 1}}));
  EXPECT_EQ(t.factorize(97).factors, (PP{{97, 1}}));
  EXPECT_EQ(t.factorize(360).factors, (PP{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(t.factorize(360).value(), 360u);
  EXPECT_THROW(t.factorize(1001), RangeError);
}

TEST(Factorize, ProductAndOrder) {
  const auto& t = table(100'000);
  for (std::uint64_t n = 2; n <= 100'000; n += 7) {
    const auto f = t.factorize(n);
    ASSERT_EQ(f.value(), n);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      ASSERT_GE(f.factors[i].exponent, 1u);
      if (i > 0) ASSERT_LT(f.factors[i - 1].prime, f.factors[i].prime);
    }
  }
}

TEST(ArithmeticFunctions, Examples) {
  const auto& t = table(1000);
  EXPECT_EQ(t.liouville(1), 1);
  EXPECT_EQ(t.liouville(12), -1);
  EXPECT_EQ(t.mobius(30), -1);
  EXPECT_EQ(t.mobius(12), 0);
  EXPECT_DOUBLE_EQ(t.von_mangoldt(8), std::log(2.0));
  EXPECT_EQ(t.von_mangoldt(6), 0.0);
  EXPECT_EQ(t.mobius(1), 1);
  EXPECT_EQ(t.euler_phi(1), 1u);
  EXPECT_EQ(t.von_mangoldt(1), 0.0);
  EXPECT_EQ(t.big_omega(1), 0u);
  EXPECT_THROW(t.liouville(0), RangeError);
  EXPECT_THROW(t.mobius(1001), RangeError);
}

TEST(ArithmeticFunctions, LiouvilleAgainstTrialDivision) {
  const auto& t = table(10'000);
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    ASSERT_EQ(t.liouville(n), oracle::liouville(n)) << n;
    ASSERT_EQ(t.mobius(n), oracle::mobius(n)) << n;
    ASSERT_EQ(t.big_omega(n), oracle::big_omega(n)) << n;
    ASSERT_NEAR(t.von_mangoldt(n), oracle::von_mangoldt(n), 1e-15) << n;
  }
}

TEST(ArithmeticFunctions, PhiRandomAgainstFactorization) {
  const auto& t = table(1'000'000);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(1, 1'000'000);
  for (int i = 0; i < 2000; ++i) {
    const auto n = pick(rng);
    ASSERT_EQ(t.euler_phi(n), oracle::phi(n)) << n;
  }
}

TEST(ArithmeticFunctions, LiouvilleCompletelyMultiplicative) {
  const auto& t = table(1'000'000);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> pick(1, 1000);
  for (int i = 0; i < 10'000; ++i) {
    const auto m = pick(rng);
    const auto n = pick(rng);
    ASSERT_EQ(t.liouville(m * n), t.liouville(m) * t.liouville(n)) << m << "*" << n;
  }
}

TEST(ArithmeticFunctions, MobiusAgreesWithLiouvilleOnSquarefree) {
  const auto& t = table(100'000);
  for (std::uint64_t n = 1; n <= 100'000; ++n) {
    if (t.mobius(n) != 0) ASSERT_EQ(t.mobius(n), t.liouville(n)) << n;
  }
}

TEST(ArithmeticFunctions, PhiDivisorSum) {
  const auto& t = table(10'000);
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    std::uint64_t s = 0;
    t.for_each_divisor(n, [&](std::uint64_t d) { s += t.euler_phi(d); });
    ASSERT_EQ(s, n) << n;
  }
}

TEST(ArithmeticFunctions, DivisorsSorted) {
  const auto& t = table(1000);
  EXPECT_EQ(t.divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(t.divisors(1), (std::vector<std::uint64_t>{1}));
}

TEST(PrimalityWide, Examples) {
  EXPECT_TRUE(is_prime_wide(101));
  // (10^6)^2 + 1 = 73 * 137 * 99990001
  EXPECT_EQ(73ull * 137 * 99990001ull, 1'000'000'000'001ull);
  EXPECT_FALSE(is_prime_wide(1'000'000'000'001ull));
  EXPECT_TRUE(is_prime_wide((1ull << 61) - 1));
  EXPECT_FALSE(is_prime_wide(0));
  EXPECT_FALSE(is_prime_wide(1));
  EXPECT_TRUE(is_prime_wide(2));
  EXPECT_TRUE(is_prime_wide(18446744073709551557ull));  // largest 64-bit prime
  EXPECT_FALSE(is_prime_wide(18446744073709551615ull));
  // Strong pseudoprimes to several small bases.
  EXPECT_FALSE(is_prime_wide(3215031751ull));
  EXPECT_FALSE(is_prime_wide(3825123056546413051ull));
}

TEST(PrimalityWide, SmallFactorTrialDivisionCrossCheck) {
  // 1e12 + 1 has a factor below 1e6; confirm independently.
  std::uint64_t n = 1'000'000'000'001ull;
  bool found = false;
  for (std::uint64_t p = 2; p <= 1'000'000; ++p) {
    if (n % p == 0) {
      found = true;
      break;
    }
  }
  EXPECT_TRUE(found);
  // 2^61 - 1: no factor up to 1e6 either.
  n = (1ull << 61) - 1;
  for (std::uint64_t p = 2; p <= 1'000'000; ++p) ASSERT_NE(n % p, 0u);
}

TEST(PrimalityWide, AgreesWithTable) {
  const auto& t = table(1'000'000);
  for (std::uint64_t n = 2; n <= 1'000'000; ++n) ASSERT_EQ(is_prime_wide(n), t.is_prime(n)) << n;
}

TEST(PrimesUpTo, Counts) {
  EXPECT_EQ(primes_up_to(100).size(), 25u);
  EXPECT_EQ(primes_up_to(1'000'000).size(), 78498u);
}

TEST(SpfCache, RoundTripAndHeader) {
  const auto dir = std::filesystem::temp_directory_path() / "quadprime_cache_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const SieveTable built = load_or_build_table(5000, {}, dir);
  const auto file = spf_cache_path(dir, 5000);
  ASSERT_TRUE(std::filesystem::exists(file));
  EXPECT_EQ(std::filesystem::file_size(file), 16u + 4u * 5001u);
  {
    std::ifstream in(file, std::ios::binary);
    char magic[4];
    in.read(magic, 4);
    EXPECT_EQ(std::string(magic, 4), "SPF1");
  }
  const auto loaded = read_spf_cache(file, 5000);
  ASSERT_TRUE(loaded.has_value());
  EXPECT_TRUE(std::equal(built.spf_data().begin(), built.spf_data().end(), loaded->spf_data().begin(),
                         loaded->spf_data().end()));
  EXPECT_FALSE(read_spf_cache(file, 5001).has_value());
  // Truncated file.
  std::filesystem::resize_file(file, 100);
  EXPECT_THROW(read_spf_cache(file, 5000), DomainError);
  std::filesystem::remove_all(dir);
}
