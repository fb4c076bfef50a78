#pragma once

// Truncated Euler products with rigorous brackets on the infinite product.

#include <cstdint>

#include "vislat/poly.hpp"

namespace vislat {

inline constexpr std::uint64_t kDefaultPrimeBound = 1'000'000;

struct DensityBracket
{
	/// Product over primes p <= prime_bound.
	double value = 1.0;
	/// lower <= infinite product <= upper; upper == value.
	double lower = 0.0;
	double upper = 1.0;
	std::uint64_t prime_bound = 0;

	double width() const noexcept { return upper - lower; }
	bool contains(double x) const noexcept { return lower <= x && x <= upper; }
};

/// prod_{p <= B} (1 - f_P(p) / p^2). The tail uses f_P(p) <= deg P, valid at
/// every prime since P mod p is a non-zero polynomial of degree <= deg P over
/// a field, together with -log(1 - x) <= 2x for x <= 1/2:
/// tail <= 2 deg P sum_{m > B} 1/m^2 <= 2 deg P / B.
/// Throws Error{PrimeBoundTooSmall} when B < 2.
DensityBracket euler_product_density(const PolyNoConst& poly, std::uint64_t prime_bound = kDefaultPrimeBound,
									 unsigned threads = 0);

/// Closed form for P = x^2 + kx:
/// prod_{p <= B} (1 - 2/p^2) * prod_{p | k} (1 + 1/(p^2 - 2)).
DensityBracket corollary_s1k(std::uint64_t k, std::uint64_t prime_bound = kDefaultPrimeBound);

/// 1/zeta(s) = prod_p (1 - p^-s), tail <= B^(1-s) / ((s-1)(1 - (B+1)^-s)).
DensityBracket zeta_reciprocal(unsigned s, std::uint64_t prime_bound = kDefaultPrimeBound);

} // namespace vislat
