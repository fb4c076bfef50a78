#include <doctest.h>

#include <map>

#include "random_poly.hpp"
#include "vislat/error.hpp"
#include "vislat/f11_analysis.hpp"
#include "vislat/primes.hpp"

using namespace vislat;

namespace {

std::vector<std::uint64_t> as_u64(const MissingBSet& set)
{
	std::vector<std::uint64_t> out;
	for (const u128 b : set.bs) out.push_back(static_cast<std::uint64_t>(b));
	return out;
}

std::uint64_t invisible_brute(const PolyNoConst& p, std::uint64_t a, std::uint64_t n)
{
	std::uint64_t count = 0;
	for (std::uint64_t b = 1; b <= n; ++b) count += !is_visible_brute(p, a, b);
	return count;
}

} // namespace

TEST_CASE("missing_b_set for x^2 + x, a = 1..20")
{
	// Exhaustive scan (compute_oracles.py). Row 7 is {4, 14}: (7, 14) shares
	// the curve y = x(x+1)/4 with (3, 3).
	const std::map<std::uint64_t, std::vector<std::uint64_t>> expected = {
		{1, {}},		{2, {3}},		  {3, {2}},		{4, {5}},		  {5, {3, 5}},
		{6, {7}},		{7, {4, 14}},	  {8, {6, 9}},	{9, {3, 5}},	  {10, {11}},
		{11, {6, 11}},	{12, {13}},		  {13, {7, 13}}, {14, {5, 7}},	  {15, {8, 10, 12}},
		{16, {17}},		{17, {9, 17}},	  {18, {19}},	{19, {10, 19}},	  {20, {2, 7, 15}},
	};
	const auto p = make_poly({1, 1});
	for (const auto& [a, bs] : expected) CHECK(as_u64(missing_b_set(p, a)) == bs);
}

TEST_CASE("missing sets are minimal and explain every invisible point")
{
	for (const auto& p : testing::reference_polys())
		for (std::uint64_t a = 1; a <= 60; ++a)
		{
			const auto set = missing_b_set(p, a);
			for (std::size_t i = 0; i < set.bs.size(); ++i)
				for (std::size_t j = 0; j < set.bs.size(); ++j)
					if (i != j) REQUIRE(set.bs[j] % set.bs[i] != 0);
			CHECK(n_missing_sieve(set, 60) == invisible_brute(p, a, 60));
		}
}

TEST_CASE("n_missing examples")
{
	const auto p = make_poly({1, 1});
	CHECK(n_missing_inclusion_exclusion(p, 2, 10) == 3);
	CHECK(n_missing_sieve(p, 2, 10) == 3);
	CHECK(n_missing_inclusion_exclusion(p, 1, 1000) == 0);
	CHECK(n_missing_inclusion_exclusion(p, 5, 30) == 14);
	CHECK(n_missing_inclusion_exclusion(p, 20, 100) == 60);
	CHECK(n_missing_sieve(p, 20, 100) == 60);
	CHECK(n_missing_sieve(p, 5, 1) == 0);
}

TEST_CASE("inclusion-exclusion equals the sieve")
{
	const auto p = make_poly({1, 1});
	for (std::uint64_t a = 1; a <= 500; ++a)
	{
		const auto set = missing_b_set(p, a);
		for (const std::uint64_t n : {1ull, 13ull, 100ull, 377ull, 1000ull})
			REQUIRE(n_missing_inclusion_exclusion(set, n) == n_missing_sieve(set, n));
	}
	for (const auto& q : testing::random_corpus(1111, 10, 4, 20))
		for (std::uint64_t a = 1; a <= 120; ++a)
		{
			const auto set = missing_b_set(q, a);
			REQUIRE(n_missing_inclusion_exclusion(set, 500) == n_missing_sieve(set, 500));
		}
}

TEST_CASE("too many inclusion-exclusion terms")
{
	MissingBSet set{1, {}};
	for (const std::uint32_t prime : primes_upto(200))
		if (set.bs.size() < 31) set.bs.push_back(prime);
	CHECK_THROWS_AS(n_missing_inclusion_exclusion(set, 1000), Error);
	// terms above N do not count towards the limit
	CHECK(n_missing_inclusion_exclusion(set, 2) == 1);
}

TEST_CASE("complement count matches the grid")
{
	const auto p = make_poly({1, 1});
	for (std::uint64_t n = 1; n <= 30; ++n) CHECK(count_v_complement(p, n).count == count_v_dedup(p, n).count);
	CHECK(count_v_complement(p, 100).count == count_v_dedup(p, 100).count);
	CHECK(count_v_complement(p, 300).count == count_v_dedup(p, 300).count);
}

TEST_CASE("conjecture_scan")
{
	const auto p = make_poly({1, 1});
	const auto d = conjecture_scan(p, 500, 500);
	REQUIRE(d.rows.size() == 500);
	CHECK(d.rows[1].c1 == doctest::Approx(1.0 / 3.0));
	CHECK(d.rows[4].c1 == doctest::Approx(8.0 / 15.0));
	CHECK(d.rows[0].k_a == 0);
	for (const auto& row : d.rows)
	{
		CHECK(row.c >= 0.0);
		CHECK(row.c <= 1.0);
		CHECK(row.c <= row.c1 + 1e-12);
	}
	CHECK(d.averages[499].avg_c1 < d.averages[49].avg_c1);
	CHECK(d.averages[0].avg_c1 == 0.0);
	CHECK(d.averages[1].avg_c1 == doctest::Approx(1.0 / 6.0));

	const auto threaded = conjecture_scan(p, 200, 300, 4);
	const auto serial = conjecture_scan(p, 200, 300, 1);
	for (std::size_t i = 0; i < 200; ++i) CHECK(threaded.rows[i].n_missing == serial.rows[i].n_missing);
}
