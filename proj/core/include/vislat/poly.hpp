#pragma once

// Polynomials a_n x^n + ... + a_1 x with non-negative coefficients, a_n >= 1,
// no constant term and gcd(a_n, ..., a_1) = 1.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vislat/wide_int.hpp"

namespace vislat {

using BigInt = boost::multiprecision::cpp_int;

class PolyNoConst
{
public:
	/// Validates and takes coefficients highest degree first.
	/// Throws Error{EmptyPolynomial|LeadingZero|NegativeCoefficient|GcdNotOne}.
	static PolyNoConst from_coeffs(std::span<const std::int64_t> coeffs);

	/// Parses the canonical text form, e.g. "2,0,15".
	static PolyNoConst parse(std::string_view text);

	/// Coefficients (a_n, ..., a_1).
	std::span<const std::uint64_t> coeffs() const noexcept { return _coeffs; }
	int degree() const noexcept { return static_cast<int>(_coeffs.size()); }

	/// Canonical comma-separated encoding; parse(to_string()) round-trips.
	std::string to_string() const;
	/// Human form such as "2x^3 + 15x".
	std::string pretty() const;

	/// P(x) mod m, for any m >= 1.
	std::uint64_t eval_mod(std::uint64_t x, std::uint64_t m) const noexcept;
	/// P'(x) mod m.
	std::uint64_t derivative_mod(std::uint64_t x, std::uint64_t m) const noexcept;

	friend bool operator==(const PolyNoConst&, const PolyNoConst&) = default;

private:
	explicit PolyNoConst(std::vector<std::uint64_t> coeffs) : _coeffs(std::move(coeffs)) {}

	std::vector<std::uint64_t> _coeffs;
};

PolyNoConst make_poly(std::span<const std::int64_t> coeffs);
inline PolyNoConst make_poly(std::initializer_list<std::int64_t> coeffs)
{
	return make_poly(std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
}

/// Exact P(a) for a >= 1. Throws Error{ValueOverflow} above kMaxExact;
/// callers that need larger values use eval_exact.
u128 eval(const PolyNoConst& poly, std::uint64_t a);

/// Arbitrary-precision P(a).
BigInt eval_exact(const PolyNoConst& poly, std::uint64_t a);

/// True when eval(poly, a) succeeds for every 1 <= a <= n.
bool eval_fits(const PolyNoConst& poly, std::uint64_t n);

/// P'(r) mod m, with r taken modulo m first (negative r allowed).
std::uint64_t eval_derivative_mod(const PolyNoConst& poly, std::int64_t r, std::uint64_t m);

/// P(1), ..., P(n) in a 1-based table (index 0 holds 0).
std::vector<u128> eval_table(const PolyNoConst& poly, std::uint64_t n);

} // namespace vislat
