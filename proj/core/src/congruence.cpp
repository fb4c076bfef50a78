#include "vislat/congruence.hpp"

#include <algorithm>

#include "vislat/error.hpp"
#include "vislat/primes.hpp"

namespace vislat {

namespace {

// Dense polynomials over F_p, lowest degree first, no trailing zeros.
using PolyFp = std::vector<std::uint64_t>;

void trim(PolyFp& f)
{
	while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m)
{
	__int128 old_r = a % m, r = m, old_s = 1, s = 0;
	while (r != 0)
	{
		const __int128 q = old_r / r;
		const __int128 next_r = old_r - q * r;
		old_r = r;
		r = next_r;
		const __int128 next_s = old_s - q * s;
		old_s = s;
		s = next_s;
	}
	// old_r is the gcd; callers only pass units
	__int128 inv = old_s % static_cast<__int128>(m);
	if (inv < 0) inv += m;
	return static_cast<std::uint64_t>(inv);
}

void make_monic(PolyFp& f, std::uint64_t p)
{
	const std::uint64_t inv = inverse_mod(f.back(), p);
	for (auto& c : f) c = mulmod(c, inv, p);
}

// a mod f, f monic
void reduce(PolyFp& a, const PolyFp& f, std::uint64_t p)
{
	const std::size_t df = f.size() - 1;
	while (a.size() > df && !a.empty())
	{
		const std::uint64_t lead = a.back();
		const std::size_t shift = a.size() - 1 - df;
		if (lead != 0)
			for (std::size_t i = 0; i < df; ++i)
				a[shift + i] = (a[shift + i] + p - mulmod(lead, f[i], p)) % p;
		a.pop_back();
	}
	trim(a);
}

PolyFp mul_reduce(const PolyFp& a, const PolyFp& b, const PolyFp& f, std::uint64_t p)
{
	if (a.empty() || b.empty()) return {};
	PolyFp out(a.size() + b.size() - 1, 0);
	for (std::size_t i = 0; i < a.size(); ++i)
		for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
	reduce(out, f, p);
	return out;
}

PolyFp gcd_fp(PolyFp a, PolyFp b, std::uint64_t p)
{
	while (!b.empty())
	{
		make_monic(b, p);
		reduce(a, b, p);
		std::swap(a, b);
	}
	return a;
}

std::uint64_t count_roots_scan(const PolyNoConst& poly, std::uint64_t m)
{
	std::uint64_t count = 0;
	for (std::uint64_t d = 1; d <= m; ++d)
		if (poly.eval_mod(d, m) == 0) ++count;
	return count;
}

void require_prime(std::uint64_t p)
{
	if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
}

} // namespace

RootCount roots_mod_brute(const PolyNoConst& poly, std::uint64_t modulus)
{
	if (modulus == 0) throw Error(Errc::InvalidArgument, "modulus must be positive");
	if (modulus > kBruteModulusLimit)
		throw Error(Errc::ModulusTooLarge, "exhaustive scan is limited to moduli <= 10^7");

	std::vector<std::uint64_t> roots;
	for (std::uint64_t d = 1; d <= modulus; ++d)
		if (poly.eval_mod(d, modulus) == 0) roots.push_back(d);
	RootCount result{modulus, roots.size(), std::move(roots)};
	return result;
}

Factorization factorize(std::uint64_t n)
{
	if (n == 0) throw Error(Errc::InvalidArgument, "cannot factor 0");
	Factorization out;
	auto strip = [&](std::uint64_t p) {
		unsigned e = 0;
		while (n % p == 0)
		{
			n /= p;
			++e;
		}
		if (e != 0) out.push_back({p, e});
	};
	for (const std::uint32_t p : small_primes())
	{
		if (std::uint64_t(p) * p > n) break;
		strip(p);
	}
	for (std::uint64_t d = (1u << 16) + 1; n > 1 && d <= n / d; d += 2) strip(d);
	if (n > 1) out.push_back({n, 1});
	return out;
}

std::uint64_t count_roots_mod_prime(const PolyNoConst& poly, std::uint64_t p)
{
	require_prime(p);
	const auto coeffs = poly.coeffs();
	if (p <= coeffs.size() + 1) return count_roots_scan(poly, p);

	// coefficient of x^i sits at coeffs[n - i]
	const std::size_t n = coeffs.size();
	PolyFp f(n + 1, 0);
	for (std::size_t i = 1; i <= n; ++i) f[i] = coeffs[n - i] % p;
	trim(f);
	// gcd of the coefficients is 1, so f has degree >= 1 and f(0) = 0
	make_monic(f, p);

	// x^p mod f by square-and-multiply
	PolyFp x{0, 1};
	reduce(x, f, p);
	PolyFp power{1};
	PolyFp base = x;
	for (std::uint64_t e = p; e != 0; e >>= 1)
	{
		if (e & 1) power = mul_reduce(power, base, f, p);
		if (e > 1) base = mul_reduce(base, base, f, p);
	}

	// x^p - x mod f
	PolyFp h = power;
	if (h.size() < 2) h.resize(2, 0);
	h[1] = (h[1] + p - 1) % p;
	trim(h);

	const PolyFp g = gcd_fp(f, h, p);
	return g.size() - 1;
}

RootCount f_prime_power(const PolyNoConst& poly, std::uint64_t p, unsigned k, bool with_roots)
{
	if (k == 0) throw Error(Errc::InvalidArgument, "exponent must be positive");
	require_prime(p);
	if (k == 1 && !with_roots) return {p, count_roots_mod_prime(poly, p), std::nullopt};
	if (p > kBruteModulusLimit) throw Error(Errc::ModulusTooLarge, "lifting needs the roots mod p; p > 10^7");

	std::uint64_t modulus = 1;
	for (unsigned i = 0; i < k; ++i)
	{
		if (modulus > (std::uint64_t(1) << 62) / p) throw Error(Errc::ModulusTooLarge, "p^k exceeds 62 bits");
		modulus *= p;
	}

	// residues in [0, p^j)
	std::vector<std::uint64_t> roots;
	for (std::uint64_t r = 0; r < p; ++r)
		if (poly.eval_mod(r, p) == 0) roots.push_back(r);

	std::uint64_t m = p;
	for (unsigned j = 1; j < k; ++j)
	{
		const std::uint64_t next_m = m * p;
		std::vector<std::uint64_t> lifted;
		lifted.reserve(roots.size());
		for (const std::uint64_t r : roots)
		{
			const std::uint64_t slope = poly.derivative_mod(r, p);
			if (slope != 0)
			{
				// P(r + t m) = P(r) + t m P'(r) (mod m p); solve for the unique t
				const std::uint64_t carry = poly.eval_mod(r, next_m) / m;
				const std::uint64_t t = mulmod((p - carry % p) % p, inverse_mod(slope, p), p);
				lifted.push_back(r + t * m);
			}
			else
			{
				for (std::uint64_t t = 0; t < p; ++t)
				{
					const std::uint64_t candidate = r + t * m;
					if (poly.eval_mod(candidate, next_m) == 0) lifted.push_back(candidate);
				}
			}
		}
		roots = std::move(lifted);
		m = next_m;
	}

	RootCount result{modulus, roots.size(), std::nullopt};
	if (with_roots)
	{
		for (auto& r : roots)
			if (r == 0) r = modulus;
		std::sort(roots.begin(), roots.end());
		result.roots = std::move(roots);
	}
	return result;
}

RootCount f_count(const PolyNoConst& poly, std::uint64_t modulus, bool with_roots)
{
	if (modulus == 0) throw Error(Errc::InvalidArgument, "modulus must be positive");

	RootCount result{modulus, 1, std::nullopt};
	std::vector<std::uint64_t> combined{0};
	std::uint64_t combined_mod = 1;

	for (const PrimePower& pp : factorize(modulus))
	{
		const RootCount local = f_prime_power(poly, pp.prime, pp.exponent, with_roots);
		result.count *= local.count;
		if (!with_roots) continue;

		if (result.count > kBruteModulusLimit)
			throw Error(Errc::ModulusTooLarge, "root list would exceed 10^7 entries");
		const std::uint64_t q = local.modulus;
		const std::uint64_t inv = inverse_mod(combined_mod % q, q);
		std::vector<std::uint64_t> next;
		next.reserve(combined.size() * local.roots->size());
		for (const std::uint64_t r1 : combined)
			for (std::uint64_t r2 : *local.roots)
			{
				r2 %= q;
				// x = r1 + M ((r2 - r1) M^-1 mod q)
				const std::uint64_t diff = (r2 + q - r1 % q) % q;
				const std::uint64_t t = mulmod(diff, inv, q);
				next.push_back(static_cast<std::uint64_t>(r1 + u128(combined_mod) * t));
			}
		combined = std::move(next);
		combined_mod *= q;
	}

	if (with_roots)
	{
		for (auto& r : combined)
			if (r == 0) r = modulus;
		std::sort(combined.begin(), combined.end());
		result.roots = std::move(combined);
	}
	return result;
}

} // namespace vislat
