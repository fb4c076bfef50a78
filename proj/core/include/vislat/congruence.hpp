#pragma once

// Root counts of P(d) = 0 (mod l) over representatives d in [1, l].

#include <cstdint>
#include <optional>
#include <vector>

#include "vislat/poly.hpp"

namespace vislat {

/// Largest modulus the exhaustive scan accepts.
inline constexpr std::uint64_t kBruteModulusLimit = 10'000'000;

struct RootCount
{
	std::uint64_t modulus = 1;
	std::uint64_t count = 0;
	/// Sorted representatives in [1, modulus] when requested.
	std::optional<std::vector<std::uint64_t>> roots;
};

struct PrimePower
{
	std::uint64_t prime = 0;
	unsigned exponent = 0;

	friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factors in strictly increasing order.
using Factorization = std::vector<PrimePower>;

/// Exhaustive scan of d in [1, modulus]. Throws Error{ModulusTooLarge}
/// above kBruteModulusLimit.
RootCount roots_mod_brute(const PolyNoConst& poly, std::uint64_t modulus);

/// Trial division against the shared prime table.
Factorization factorize(std::uint64_t n);

/// Number of distinct roots of P in F_p, as deg gcd(P mod p, x^p - x).
/// Never enumerates residues, so it stays cheap for p up to 2^32.
std::uint64_t count_roots_mod_prime(const PolyNoConst& poly, std::uint64_t p);

/// Roots mod p^k by Hensel lifting from the roots mod p.
/// Throws Error{NotPrime} when p is composite and Error{ModulusTooLarge}
/// when p^k leaves 62 bits or p exceeds kBruteModulusLimit (k > 1 or roots requested).
RootCount f_prime_power(const PolyNoConst& poly, std::uint64_t p, unsigned k, bool with_roots = false);

/// f_P(l) as the product of prime-power counts; roots are recombined by CRT
/// when requested.
RootCount f_count(const PolyNoConst& poly, std::uint64_t modulus, bool with_roots = false);

} // namespace vislat
