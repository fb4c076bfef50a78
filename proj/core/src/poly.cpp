#include "vislat/poly.hpp"

#include <charconv>
#include <numeric>

#include "vislat/error.hpp"

namespace vislat {

const char* errc_name(Errc code) noexcept
{
	switch (code)
	{
		case Errc::EmptyPolynomial: return "EmptyPolynomial";
		case Errc::LeadingZero: return "LeadingZero";
		case Errc::NegativeCoefficient: return "NegativeCoefficient";
		case Errc::GcdNotOne: return "GcdNotOne";
		case Errc::ValueOverflow: return "ValueOverflow";
		case Errc::ModulusTooLarge: return "ModulusTooLarge";
		case Errc::NotPrime: return "NotPrime";
		case Errc::PrimeBoundTooSmall: return "PrimeBoundTooSmall";
		case Errc::GridTooLargeForDedup: return "GridTooLargeForDedup";
		case Errc::TooManyTerms: return "TooManyTerms";
		case Errc::InvalidArgument: return "InvalidArgument";
	}
	return "Unknown";
}

std::string to_string(u128 x)
{
	if (x == 0) return "0";
	std::string digits;
	while (x != 0)
	{
		digits.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
		x /= 10;
	}
	return {digits.rbegin(), digits.rend()};
}

PolyNoConst PolyNoConst::from_coeffs(std::span<const std::int64_t> coeffs)
{
	if (coeffs.empty()) throw Error(Errc::EmptyPolynomial, "polynomial needs at least one coefficient");
	if (coeffs.front() == 0) throw Error(Errc::LeadingZero, "leading coefficient a_n must be non-zero");

	std::vector<std::uint64_t> stored;
	stored.reserve(coeffs.size());
	std::uint64_t g = 0;
	for (const std::int64_t c : coeffs)
	{
		if (c < 0) throw Error(Errc::NegativeCoefficient, "coefficients must be non-negative");
		stored.push_back(static_cast<std::uint64_t>(c));
		g = std::gcd(g, static_cast<std::uint64_t>(c));
	}
	if (g != 1) throw Error(Errc::GcdNotOne, "coefficients share the common factor " + std::to_string(g));
	return PolyNoConst(std::move(stored));
}

PolyNoConst PolyNoConst::parse(std::string_view text)
{
	std::vector<std::int64_t> coeffs;
	std::size_t pos = 0;
	while (true)
	{
		const std::size_t comma = text.find(',', pos);
		std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
		while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
		while (!field.empty() && field.back() == ' ') field.remove_suffix(1);

		std::int64_t value = 0;
		const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
		if (field.empty() || ec != std::errc() || end != field.data() + field.size())
			throw Error(Errc::InvalidArgument, "malformed coefficient list '" + std::string(text) + "'");
		coeffs.push_back(value);

		if (comma == std::string_view::npos) break;
		pos = comma + 1;
	}
	return from_coeffs(coeffs);
}

std::string PolyNoConst::to_string() const
{
	std::string out;
	for (std::size_t i = 0; i < _coeffs.size(); ++i)
	{
		if (i != 0) out += ',';
		out += std::to_string(_coeffs[i]);
	}
	return out;
}

std::string PolyNoConst::pretty() const
{
	std::string out;
	const int n = degree();
	for (int i = 0; i < n; ++i)
	{
		const std::uint64_t c = _coeffs[i];
		if (c == 0) continue;
		const int power = n - i;
		if (!out.empty()) out += " + ";
		if (c != 1) out += std::to_string(c);
		out += 'x';
		if (power > 1) out += '^' + std::to_string(power);
	}
	return out;
}

std::uint64_t PolyNoConst::eval_mod(std::uint64_t x, std::uint64_t m) const noexcept
{
	if (m == 1) return 0;
	x %= m;
	std::uint64_t acc = 0;
	for (const std::uint64_t c : _coeffs) acc = static_cast<std::uint64_t>((u128(acc) * x + c % m) % m);
	return mulmod(acc, x, m);
}

std::uint64_t PolyNoConst::derivative_mod(std::uint64_t x, std::uint64_t m) const noexcept
{
	if (m == 1) return 0;
	x %= m;
	// P'(x) = sum k a_k x^(k-1), Horner over k = n..1
	std::uint64_t acc = 0;
	const int n = degree();
	for (int i = 0; i < n; ++i)
	{
		const std::uint64_t k = static_cast<std::uint64_t>(n - i);
		const std::uint64_t term = mulmod(_coeffs[i] % m, k % m, m);
		acc = static_cast<std::uint64_t>((u128(acc) * x + term) % m);
	}
	return acc;
}

PolyNoConst make_poly(std::span<const std::int64_t> coeffs) { return PolyNoConst::from_coeffs(coeffs); }

namespace {

bool try_eval(const PolyNoConst& poly, std::uint64_t a, u128& out) noexcept
{
	u128 acc = 0;
	for (const std::uint64_t c : poly.coeffs())
		if (!checked_mul(acc, a, acc) || !checked_add(acc, c, acc)) return false;
	return checked_mul(acc, a, out);
}

} // namespace

u128 eval(const PolyNoConst& poly, std::uint64_t a)
{
	u128 value = 0;
	if (!try_eval(poly, a, value))
		throw Error(Errc::ValueOverflow, "P(" + std::to_string(a) + ") exceeds 127 bits; use eval_exact");
	return value;
}

BigInt eval_exact(const PolyNoConst& poly, std::uint64_t a)
{
	BigInt acc = 0;
	for (const std::uint64_t c : poly.coeffs()) acc = acc * a + c;
	return acc * a;
}

bool eval_fits(const PolyNoConst& poly, std::uint64_t n)
{
	u128 value = 0;
	// P is increasing on the positive integers, so the largest argument decides.
	return n == 0 || try_eval(poly, n, value);
}

std::uint64_t eval_derivative_mod(const PolyNoConst& poly, std::int64_t r, std::uint64_t m)
{
	if (m == 0) throw Error(Errc::InvalidArgument, "modulus must be positive");
	std::uint64_t x = 0;
	if (r >= 0) x = static_cast<std::uint64_t>(r) % m;
	else
	{
		const std::uint64_t magnitude = static_cast<std::uint64_t>(-(r + 1)) + 1;
		const std::uint64_t rem = magnitude % m;
		x = rem == 0 ? 0 : m - rem;
	}
	return poly.derivative_mod(x, m);
}

std::vector<u128> eval_table(const PolyNoConst& poly, std::uint64_t n)
{
	std::vector<u128> values(n + 1, 0);
	for (std::uint64_t a = 1; a <= n; ++a) values[a] = eval(poly, a);
	return values;
}

} // namespace vislat
