#include <doctest.h>

#include <cmath>
#include <numbers>

#include "random_poly.hpp"
#include "vislat/density.hpp"
#include "vislat/error.hpp"

using namespace vislat;

// Reference values from tests/oracles/compute_oracles.py (plain log1p sums over a
// Python sieve up to 10^6).
constexpr double kProdOneMinusTwo = 0.32263414267274587;
constexpr double kProdOneMinusOne = 0.6079271430567096;
constexpr double kProdCube = 0.8319073725808508;

TEST_CASE("euler_product_density")
{
	const auto b = euler_product_density(make_poly({1, 1}), 1'000'000);
	CHECK(b.value == doctest::Approx(kProdOneMinusTwo).epsilon(1e-12));
	CHECK(b.width() < 1e-5);
	CHECK(b.lower > 0.3226);
	CHECK(b.upper < 0.3227);

	const auto sq = euler_product_density(make_poly({1, 0}), 1'000'000);
	CHECK(sq.value == doctest::Approx(kProdOneMinusOne).epsilon(1e-12));
	CHECK(sq.contains(6.0 / (std::numbers::pi * std::numbers::pi)));
	const auto z = zeta_reciprocal(2, 1'000'000);
	CHECK(sq.value == doctest::Approx(z.value).epsilon(1e-12));

	for (const auto& p : testing::reference_polys())
	{
		const auto two = euler_product_density(p, 2);
		const double f2 = p.eval_mod(1, 2) == 0 && p.eval_mod(2, 2) == 0 ? 2.0 : 1.0;
		CHECK(two.value == doctest::Approx(1.0 - f2 / 4.0).epsilon(1e-15));
	}
	CHECK_THROWS_AS(euler_product_density(make_poly({1, 1}), 1), Error);
}

TEST_CASE("corollary_s1k")
{
	const auto base = corollary_s1k(1, 1'000'000);
	CHECK(base.value == doctest::Approx(kProdOneMinusTwo).epsilon(1e-12));
	CHECK(corollary_s1k(2, 1'000'000).value == doctest::Approx(kProdOneMinusTwo * 1.5).epsilon(1e-12));
	const auto six = corollary_s1k(6, 1'000'000);
	CHECK(six.value == doctest::Approx(kProdOneMinusTwo * 1.5 * (1.0 + 1.0 / 7.0)).epsilon(1e-12));
	const auto direct = euler_product_density(make_poly({1, 6}), 1'000'000);
	CHECK(std::abs(six.value - direct.value) <= six.width());

	for (std::int64_t k = 1; k <= 100; ++k)
	{
		const auto closed = corollary_s1k(static_cast<std::uint64_t>(k), 100'000);
		const auto product = euler_product_density(make_poly({1, k}), 100'000);
		CHECK(std::abs(closed.value - product.value) <= 1e-12 * product.value);
	}
}

TEST_CASE("zeta_reciprocal")
{
	const auto z2 = zeta_reciprocal(2, 1'000'000);
	CHECK(z2.contains(6.0 / (std::numbers::pi * std::numbers::pi)));
	CHECK(zeta_reciprocal(3, 1'000'000).value == doctest::Approx(kProdCube).epsilon(1e-12));
	CHECK(zeta_reciprocal(2, 2).value == doctest::Approx(0.75).epsilon(1e-15));
	CHECK_THROWS_AS(zeta_reciprocal(1, 100), Error);
}

TEST_CASE("brackets tighten monotonically and stay in (0, 1]")
{
	const auto corpus = testing::random_corpus(606, 10, 5, 30);
	for (const auto& p : corpus)
	{
		double last_value = 2.0, last_lower = 0.0;
		for (const std::uint64_t bound : {2ull, 10ull, 100ull, 1000ull, 10'000ull, 100'000ull})
		{
			const auto b = euler_product_density(p, bound);
			CHECK(b.lower > 0.0);
			CHECK(b.upper <= 1.0);
			CHECK(b.lower <= b.upper);
			CHECK(b.upper - b.lower <= b.value * (1.0 - std::exp(-2.0 * p.degree() / double(bound))) * (1 + 1e-9));
			CHECK(b.value <= last_value);
			CHECK(b.lower >= last_lower);
			last_value = b.value;
			last_lower = b.lower;
		}
	}
}

TEST_CASE("thread count does not change the bits")
{
	const auto p = make_poly({7, 12, 4, 1, 11});
	const auto one = euler_product_density(p, 300'000, 1);
	const auto many = euler_product_density(p, 300'000, 5);
	CHECK(one.value == many.value);
	CHECK(one.lower == many.lower);
}
