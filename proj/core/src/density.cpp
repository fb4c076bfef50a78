#include "vislat/density.hpp"

#include <cmath>
#include <vector>

#include "vislat/congruence.hpp"
#include "vislat/error.hpp"
#include "vislat/parallel.hpp"
#include "vislat/primes.hpp"

namespace vislat {

namespace {

// Fixed chunking keeps the summation order, and so the bits, independent of
// the worker count.
constexpr std::size_t kChunk = 4096;

template <typename LogFactor>
double sum_log_factors(const std::vector<std::uint32_t>& primes, unsigned threads, LogFactor&& log_factor)
{
	const std::size_t chunks = (primes.size() + kChunk - 1) / kChunk;
	std::vector<double> partial(chunks, 0.0);
	parallel_for(chunks, threads, [&](std::size_t c, unsigned) {
		const std::size_t end = std::min(primes.size(), (c + 1) * kChunk);
		double s = 0.0;
		for (std::size_t i = c * kChunk; i < end; ++i) s += log_factor(primes[i]);
		partial[c] = s;
	});
	double total = 0.0;
	for (const double s : partial) total += s;
	return total;
}

DensityBracket make_bracket(double log_value, double tail_log, std::uint64_t bound)
{
	DensityBracket b;
	b.value = std::exp(log_value);
	b.upper = b.value;
	b.lower = std::exp(log_value - tail_log);
	b.prime_bound = bound;
	return b;
}

void require_bound(std::uint64_t bound)
{
	if (bound < 2) throw Error(Errc::PrimeBoundTooSmall, "prime bound must be at least 2");
}

} // namespace

DensityBracket euler_product_density(const PolyNoConst& poly, std::uint64_t prime_bound, unsigned threads)
{
	require_bound(prime_bound);
	const auto primes = primes_upto(prime_bound);
	const double log_value = sum_log_factors(primes, threads, [&](std::uint32_t p) {
		const double f = static_cast<double>(count_roots_mod_prime(poly, p));
		return std::log1p(-f / (double(p) * p));
	});
	const double tail = 2.0 * poly.degree() / static_cast<double>(prime_bound);
	return make_bracket(log_value, tail, prime_bound);
}

DensityBracket corollary_s1k(std::uint64_t k, std::uint64_t prime_bound)
{
	if (k == 0) throw Error(Errc::InvalidArgument, "k must be positive");
	require_bound(prime_bound);
	const auto primes = primes_upto(prime_bound);
	double log_value = sum_log_factors(primes, 1, [](std::uint32_t p) { return std::log1p(-2.0 / (double(p) * p)); });
	for (const PrimePower& pp : factorize(k))
	{
		const double p = static_cast<double>(pp.prime);
		log_value += std::log1p(1.0 / (p * p - 2.0));
	}
	return make_bracket(log_value, 2.0 * 2 / static_cast<double>(prime_bound), prime_bound);
}

DensityBracket zeta_reciprocal(unsigned s, std::uint64_t prime_bound)
{
	if (s < 2) throw Error(Errc::InvalidArgument, "s must be at least 2");
	require_bound(prime_bound);
	const auto primes = primes_upto(prime_bound);
	const double exponent = static_cast<double>(s);
	const double log_value = sum_log_factors(
		primes, 1, [&](std::uint32_t p) { return std::log1p(-std::pow(double(p), -exponent)); });
	const double b = static_cast<double>(prime_bound);
	const double tail = std::pow(b, 1.0 - exponent) / ((exponent - 1.0) * (1.0 - std::pow(b + 1.0, -exponent)));
	return make_bracket(log_value, tail, prime_bound);
}

} // namespace vislat
