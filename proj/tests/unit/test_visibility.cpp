#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "random_poly.hpp"
#include "vislat/density.hpp"
#include "vislat/error.hpp"
#include "vislat/visibility.hpp"

using namespace vislat;

namespace {

std::uint64_t count_s_brute(const PolyNoConst& p, std::uint64_t n)
{
	std::uint64_t count = 0;
	for (std::uint64_t a = 1; a <= n; ++a)
		for (std::uint64_t b = 1; b <= n; ++b) count += is_s_member(p, a, b);
	return count;
}

std::uint64_t count_v_brute(const PolyNoConst& p, std::uint64_t n)
{
	const auto values = eval_table(p, n);
	std::uint64_t count = 0;
	for (std::uint64_t a = 1; a <= n; ++a)
		for (std::uint64_t b = 1; b <= n; ++b) count += is_visible_brute(values, a, b);
	return count;
}

} // namespace

TEST_CASE("is_s_member")
{
	CHECK(is_s_member(make_poly({1, 1}), 1, 3));
	CHECK_FALSE(is_s_member(make_poly({1, 1}), 2, 3));
	CHECK(is_s_member(make_poly({1, 2}), 2, 5));
}

TEST_CASE("count_s")
{
	const auto p = make_poly({1, 1});
	CHECK(count_s(p, 1).count == 1);
	CHECK(count_s(p, 4).count == 6);
	CHECK(count_s(make_poly({1, 0}), 200).count == 24463);
	CHECK(count_s(make_poly({1}), 1000).count == 608383);

	for (const auto& q : testing::random_corpus(707, 25, 5, 30))
		for (const std::uint64_t n : {1ull, 2ull, 7ull, 31ull, 64ull})
			CHECK(count_s(q, n).count == count_s_brute(q, n));

	const auto sq = count_s(make_poly({1, 0}), 1000);
	CHECK(std::abs(sq.ratio() - zeta_reciprocal(2).value) < 0.01);
}

TEST_CASE("gcd_k")
{
	CHECK(gcd_k(12, 18, 1) == 6);
	CHECK(gcd_k(8, 4, 2) == 2);
	CHECK(gcd_k(2, 2, 2) == 1);
	for (std::uint64_t a = 1; a <= 60; ++a)
		for (std::uint64_t b = 1; b <= 60; ++b) REQUIRE(gcd_k(a, b, 1) == std::gcd(a, b));
}

TEST_CASE("is_visible_brute")
{
	const auto p = make_poly({1, 1});
	CHECK_FALSE(is_visible_brute(p, 2, 3));
	for (std::uint64_t b = 1; b <= 50; ++b) CHECK(is_visible_brute(p, 1, b));
	CHECK_FALSE(is_visible_brute(p, 7, 14)); // (3, 3) is on y = x(x+1)/4
	CHECK(is_visible_brute(p, 7, 13));
}

TEST_CASE("power family: visibility is gcd_n(a, b) = 1")
{
	for (const unsigned n : {2u, 3u})
	{
		std::vector<std::int64_t> coeffs(n, 0);
		coeffs[0] = 1;
		const auto p = make_poly(coeffs);
		const auto values = eval_table(p, 300);
		for (std::uint64_t a = 1; a <= 300; ++a)
			for (std::uint64_t b = 1; b <= 300; ++b)
				REQUIRE(is_visible_brute(values, a, b) == (gcd_k(a, b, n) == 1));
	}
}

TEST_CASE("count_v_dedup")
{
	const auto p = make_poly({1, 1});
	CHECK(count_v_dedup(p, 1).count == 1);
	CHECK(count_v_dedup(p, 3).count == 7);
	CHECK(count_v_dedup(p, 50).count == 2103);
	CHECK(count_v_dedup(p, 50).count == count_v_brute(p, 50));
	CHECK(count_v_dedup(p, 200).count == 36425);
	try
	{
		count_v_dedup(p, kDedupGridLimit + 1);
		FAIL("expected GridTooLargeForDedup");
	}
	catch (const Error& e)
	{
		CHECK(e.code() == Errc::GridTooLargeForDedup);
	}
}

TEST_CASE("Fraction oracle values for the reference corpus")
{
	// |Q_50| from Python Fraction dedup
	CHECK(count_v_dedup(make_poly({1, 2}), 50).count == 2113);
	CHECK(count_v_dedup(make_poly({2, 0, 15}), 50).count == 2499);
	CHECK(count_v_dedup(make_poly({1, 0}), 50).count == 2101);
	CHECK(count_v_dedup(make_poly({7, 12, 4, 1, 11}), 50).count == 2500);
	CHECK(count_v_dedup(make_poly({6, 0, 4, 13}), 50).count == 2492);
}

TEST_CASE("count_v methods agree")
{
	for (const auto& p : testing::reference_polys())
	{
		for (std::uint64_t n = 1; n <= 50; ++n)
		{
			const auto dedup = count_v_dedup(p, n).count;
			REQUIRE(count_v_sieve(p, n).count == dedup);
			if (n % 10 == 0) REQUIRE(count_v_brute(p, n) == dedup);
		}
		for (const std::uint64_t n : {100ull, 250ull, 500ull}) CHECK(count_v_sieve(p, n).count == count_v_dedup(p, n).count);
	}
}

TEST_CASE("V contains S and the first column")
{
	for (const auto& p : testing::random_corpus(808, 20, 4, 20))
	{
		const std::uint64_t n = 80;
		CHECK(count_v_sieve(p, n).count >= count_s(p, n).count);
		const auto values = eval_table(p, n);
		VisibilitySieve sieve(values, n);
		const auto marks = sieve.mark(1);
		for (std::uint64_t b = 1; b <= n; ++b) CHECK(marks[b] == 0);
	}
}

TEST_CASE("reduced fractions are canonical keys")
{
	std::mt19937_64 rng(909);
	std::uniform_int_distribution<std::uint64_t> small(1, 5000);
	for (int i = 0; i < 5000; ++i)
	{
		const std::uint64_t b1 = small(rng), b2 = small(rng), d1 = small(rng) * 17, d2 = small(rng) * 17;
		const bool equal_rationals = u128(b1) * d2 == u128(b2) * d1;
		CHECK((reduce_fraction(b1, d1) == reduce_fraction(b2, d2)) == equal_rationals);
		const auto r = reduce_fraction(b1, d1);
		CHECK(std::gcd(r.num, static_cast<std::uint64_t>(r.den)) == 1);
	}
	CHECK(reduce_fraction(2, 12) == reduce_fraction(1, 6));
}

TEST_CASE("verify_subset")
{
	CHECK(verify_subset(make_poly({1, 1}), 200).violations.empty());
	CHECK(verify_subset(make_poly({7, 12, 4, 1, 11}), 100).violations.empty());
	CHECK(verify_subset(make_poly({1, 0}), 100).violations.empty());
	const auto r = verify_subset(make_poly({1, 1}), 4);
	CHECK(r.s_members == 6);
	CHECK_THROWS_AS(verify_subset(make_poly({1, 1}), 1001), Error);
}

TEST_CASE("counts do not depend on the thread count")
{
	const auto p = make_poly({2, 0, 15});
	CHECK(count_v_sieve(p, 400, 1).count == count_v_sieve(p, 400, 4).count);
	CHECK(count_v_dedup(p, 400, 1).count == count_v_dedup(p, 400, 3).count);
	CHECK(count_s(p, 400, 1).count == count_s(p, 400, 7).count);
}
