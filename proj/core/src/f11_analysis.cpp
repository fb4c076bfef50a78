#include "vislat/f11_analysis.hpp"

#include <algorithm>
#include <numeric>

#include "vislat/error.hpp"
#include "vislat/parallel.hpp"

namespace vislat {

namespace {

std::int64_t inclusion_exclusion(std::span<const std::uint64_t> bs, std::size_t i, std::uint64_t lcm, int sign,
								 std::uint64_t n)
{
	std::int64_t total = 0;
	for (std::size_t j = i; j < bs.size(); ++j)
	{
		const std::uint64_t g = gcd(lcm, bs[j]);
		const u128 next = u128(lcm / g) * bs[j];
		if (next > n) continue; // the term and every superset vanish
		const auto l = static_cast<std::uint64_t>(next);
		total += sign * static_cast<std::int64_t>(n / l);
		total += inclusion_exclusion(bs, j + 1, l, -sign, n);
	}
	return total;
}

std::vector<std::uint64_t> terms_upto(const MissingBSet& set, std::uint64_t n)
{
	std::vector<std::uint64_t> out;
	for (const u128 b : set.bs)
		if (b <= n) out.push_back(static_cast<std::uint64_t>(b));
	return out;
}

} // namespace

double MissingBSet::c1() const noexcept
{
	double sum = 0.0;
	for (const u128 b : bs) sum += 1.0 / static_cast<double>(b);
	return sum;
}

MissingBSet missing_b_set(const PolyNoConst& poly, std::uint64_t a)
{
	if (a == 0) throw Error(Errc::InvalidArgument, "abscissa must be positive");
	const u128 target = eval(poly, a);

	std::vector<u128> qs;
	qs.reserve(a);
	for (std::uint64_t prev = 1; prev < a; ++prev) qs.push_back(target / gcd(target, eval(poly, prev)));
	std::sort(qs.begin(), qs.end());
	qs.erase(std::unique(qs.begin(), qs.end()), qs.end());

	MissingBSet set{a, {}};
	for (const u128 q : qs)
		if (std::none_of(set.bs.begin(), set.bs.end(), [q](u128 b) { return q % b == 0; })) set.bs.push_back(q);
	return set;
}

std::uint64_t n_missing_inclusion_exclusion(const MissingBSet& set, std::uint64_t n)
{
	const auto bs = terms_upto(set, n);
	if (bs.size() > kMaxInclusionExclusionTerms)
		throw Error(Errc::TooManyTerms, "more than 30 inclusion-exclusion terms at a = " + std::to_string(set.a));
	return static_cast<std::uint64_t>(inclusion_exclusion(bs, 0, 1, 1, n));
}

std::uint64_t n_missing_inclusion_exclusion(const PolyNoConst& poly, std::uint64_t a, std::uint64_t n)
{
	return n_missing_inclusion_exclusion(missing_b_set(poly, a), n);
}

std::uint64_t n_missing_sieve(const MissingBSet& set, std::uint64_t n)
{
	std::vector<bool> hidden(n + 1, false);
	for (const std::uint64_t b : terms_upto(set, n))
		for (std::uint64_t m = b; m <= n; m += b) hidden[m] = true;
	return static_cast<std::uint64_t>(std::count(hidden.begin(), hidden.end(), true));
}

std::uint64_t n_missing_sieve(const PolyNoConst& poly, std::uint64_t a, std::uint64_t n)
{
	return n_missing_sieve(missing_b_set(poly, a), n);
}

GridCount count_v_complement(const PolyNoConst& poly, std::uint64_t n, unsigned threads)
{
	if (n == 0) throw Error(Errc::InvalidArgument, "grid side must be positive");
	std::vector<std::uint64_t> missing(n, 0);
	parallel_for(n, threads, [&](std::size_t i, unsigned) {
		missing[i] = n_missing_inclusion_exclusion(missing_b_set(poly, i + 1), n);
	});
	const std::uint64_t total = std::accumulate(missing.begin(), missing.end(), std::uint64_t{0});
	return {n, n * n - total, CountMethod::complement};
}

ConjectureDiagnostics conjecture_scan(const PolyNoConst& poly, std::uint64_t max_a, std::uint64_t n,
									  unsigned threads)
{
	if (max_a == 0 || n == 0) throw Error(Errc::InvalidArgument, "max_a and N must be positive");

	ConjectureDiagnostics out;
	out.n = n;
	out.rows.resize(max_a);
	parallel_for(max_a, threads, [&](std::size_t i, unsigned) {
		const MissingBSet set = missing_b_set(poly, i + 1);
		ConjectureRow& row = out.rows[i];
		row.a = i + 1;
		row.k_a = set.size();
		row.c1 = set.c1();
		row.n_missing = n_missing_inclusion_exclusion(set, n);
		row.c = static_cast<double>(row.n_missing) / static_cast<double>(n);
	});

	out.averages.reserve(max_a);
	double running = 0.0;
	for (const ConjectureRow& row : out.rows)
	{
		running += row.c1;
		out.averages.push_back({row.a, running / static_cast<double>(row.a)});
	}
	return out;
}

} // namespace vislat
