#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace vislat {

/// All primes p <= bound, ascending (sieve of Eratosthenes over odd numbers).
std::vector<std::uint32_t> primes_upto(std::uint64_t bound);

/// Shared table of primes below 2^16, built once on first use. Covers trial
/// division of every 32-bit integer.
std::span<const std::uint32_t> small_primes();

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n);

} // namespace vislat
