#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "vislat/poly.hpp"

namespace vislat::testing {

/// Admissible polynomial with degree in [1, max_degree] and coefficients in [0, max_coeff].
inline PolyNoConst random_poly(std::mt19937_64& rng, int max_degree, std::int64_t max_coeff)
{
	std::uniform_int_distribution<int> degree_dist(1, max_degree);
	std::uniform_int_distribution<std::int64_t> coeff_dist(0, max_coeff);
	std::uniform_int_distribution<std::int64_t> lead_dist(1, max_coeff);
	while (true)
	{
		std::vector<std::int64_t> c(static_cast<std::size_t>(degree_dist(rng)));
		c[0] = lead_dist(rng);
		for (std::size_t i = 1; i < c.size(); ++i) c[i] = coeff_dist(rng);
		std::int64_t g = 0;
		for (const auto x : c) g = std::gcd(g, x);
		if (g == 1) return make_poly(c);
	}
}

inline std::vector<PolyNoConst> random_corpus(std::uint64_t seed, std::size_t count, int max_degree, std::int64_t max_coeff)
{
	std::mt19937_64 rng(seed);
	std::vector<PolyNoConst> out;
	out.reserve(count);
	for (std::size_t i = 0; i < count; ++i) out.push_back(random_poly(rng, max_degree, max_coeff));
	return out;
}

/// Fixed corpus used by the grid-method tests.
inline std::vector<PolyNoConst> reference_polys()
{
	return {make_poly({1, 1}), make_poly({1, 2}), make_poly({2, 0, 15}), make_poly({1, 0}),
			make_poly({6, 0, 4, 13}), make_poly({7, 12, 4, 1, 11}), make_poly({1}), make_poly({1, 0, 0})};
}

} // namespace vislat::testing
