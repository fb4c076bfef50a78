#pragma once

// 128-bit helpers. Polynomial values at N=5000 reach ~2e19 for degree 5,
// past the 64-bit range, so every value path runs on unsigned __int128.

#include <bit>
#include <cstdint>
#include <string>

namespace vislat {

using u128 = unsigned __int128;

/// Largest value the library treats as exact; the top bit stays clear so
/// that a sum of two residues below it never wraps.
inline constexpr u128 kMaxExact = (u128(1) << 127) - 1;

constexpr int countr_zero(u128 x) noexcept
{
	const auto lo = static_cast<std::uint64_t>(x);
	if (lo != 0) return std::countr_zero(lo);
	return 64 + std::countr_zero(static_cast<std::uint64_t>(x >> 64));
}

constexpr bool fits_u64(u128 x) noexcept { return (x >> 64) == 0; }

constexpr std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept
{
	if (a == 0) return b;
	if (b == 0) return a;
	const int shift = std::countr_zero(a | b);
	a >>= std::countr_zero(a);
	do
	{
		b >>= std::countr_zero(b);
		if (a > b) { const std::uint64_t t = a; a = b; b = t; }
		b -= a;
	} while (b != 0);
	return a << shift;
}

/// Binary gcd; drops to the 64-bit loop as soon as both operands fit.
constexpr u128 gcd(u128 a, u128 b) noexcept
{
	if (a == 0) return b;
	if (b == 0) return a;
	const int shift = countr_zero(a | b);
	a >>= countr_zero(a);
	b >>= countr_zero(b);
	while (a != b)
	{
		if (fits_u64(a) && fits_u64(b))
			return u128(gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b))) << shift;
		if (a > b) { const u128 t = a; a = b; b = t; }
		b -= a;
		b >>= countr_zero(b);
	}
	return a << shift;
}

/// x mod m for a 64-bit modulus.
constexpr std::uint64_t mod_u64(u128 x, std::uint64_t m) noexcept
{
	if (fits_u64(x)) return static_cast<std::uint64_t>(x) % m;
	return static_cast<std::uint64_t>(x % m);
}

constexpr std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept
{
	return static_cast<std::uint64_t>((u128(a) * b) % m);
}

/// (x * k) mod m for x < m <= kMaxExact.
constexpr u128 mulmod(u128 x, std::uint64_t k, u128 m) noexcept
{
	u128 product = 0;
	if (!__builtin_mul_overflow(x, u128(k), &product)) return product % m;
	u128 acc = 0;
	while (k != 0)
	{
		if (k & 1)
		{
			acc += x;
			if (acc >= m) acc -= m;
		}
		x += x;
		if (x >= m) x -= m;
		k >>= 1;
	}
	return acc;
}

/// Product with a flag instead of wrapping.
constexpr bool checked_mul(u128 a, u128 b, u128& out) noexcept
{
	return !__builtin_mul_overflow(a, b, &out) && out <= kMaxExact;
}

constexpr bool checked_add(u128 a, u128 b, u128& out) noexcept
{
	return !__builtin_add_overflow(a, b, &out) && out <= kMaxExact;
}

std::string to_string(u128 x);

} // namespace vislat
