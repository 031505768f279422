#pragma once

#include <cstdint>

namespace quadprime {

// Exact primality for any 64-bit n: trial division by the primes below 40,
// then strong probable-prime tests to the first twelve prime bases, a set
// with no strong pseudoprimes below 3.3 * 10^24.
bool is_prime_wide(std::uint64_t n);

// Strong probable-prime test of odd n > 2 to a single base.
bool is_strong_probable_prime(std::uint64_t n, std::uint64_t base);

}  // namespace quadprime
