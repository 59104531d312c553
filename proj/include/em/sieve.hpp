#pragma once

// Rational prime utilities: sieves, smallest-prime-factor tables,
// deterministic Miller-Rabin and Pollard rho for 64-bit integers.

#include <cstdint>
#include <vector>

namespace em {

// Primes p <= bound, ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

// Smallest prime factor of every n <= bound (spf[0] = spf[1] = 0).
std::vector<std::int32_t> spf_table(std::int32_t bound);

bool is_prime_u64(std::uint64_t n);

// Prime factorization of n as (prime, exponent), primes ascending.
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m);

}  // namespace em
