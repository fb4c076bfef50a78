#include "vislat/primes.hpp"

#include <cmath>

namespace vislat {

std::vector<std::uint32_t> primes_upto(std::uint64_t bound)
{
	std::vector<std::uint32_t> primes;
	if (bound < 2) return primes;
	primes.push_back(2);

	// composite[i] stands for the odd number 2i + 1
	const std::uint64_t half = (bound - 1) / 2 + 1;
	std::vector<bool> composite(half, false);
	for (std::uint64_t i = 1; i < half; ++i)
	{
		if (composite[i]) continue;
		const std::uint64_t p = 2 * i + 1;
		primes.push_back(static_cast<std::uint32_t>(p));
		for (std::uint64_t j = (p * p) / 2; j < half; j += p) composite[j] = true;
	}
	return primes;
}

std::span<const std::uint32_t> small_primes()
{
	static const std::vector<std::uint32_t> table = primes_upto(1u << 16);
	return table;
}

bool is_prime(std::uint64_t n)
{
	if (n < 2) return false;
	for (const std::uint32_t p : small_primes())
	{
		if (std::uint64_t(p) * p > n) return true;
		if (n % p == 0) return n == p;
	}
	for (std::uint64_t d = (1u << 16) + 1; d <= n / d; d += 2)
		if (n % d == 0) return false;
	return true;
}

} // namespace vislat
