#include "vislat/visibility.hpp"

#include <algorithm>
#include <numeric>

#include "vislat/error.hpp"
#include "vislat/parallel.hpp"
#include "vislat/primes.hpp"

namespace vislat {

namespace {

std::vector<u128> value_table(const PolyNoConst& poly, std::uint64_t n)
{
	if (!eval_fits(poly, n))
		throw Error(Errc::ValueOverflow, "P(" + std::to_string(n) + ") exceeds 127 bits");
	return eval_table(poly, n);
}

// sum over squarefree d | prod(primes[i..]), d * prefix <= n, of mu(d) floor(n / d)
std::int64_t moebius_sum(std::span<const std::uint32_t> primes, std::size_t i, std::uint64_t d, int sign, std::uint64_t n)
{
	std::int64_t total = sign * static_cast<std::int64_t>(n / d);
	for (std::size_t j = i; j < primes.size(); ++j)
	{
		if (d * primes[j] > n) break; // primes ascending
		total += moebius_sum(primes, j + 1, d * primes[j], -sign, n);
	}
	return total;
}

std::uint64_t sum_in_order(const std::vector<std::uint64_t>& parts)
{
	return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

} // namespace

const char* method_name(CountMethod method) noexcept
{
	switch (method)
	{
		case CountMethod::dedup: return "dedup";
		case CountMethod::sieve: return "sieve";
		case CountMethod::complement: return "complement";
	}
	return "unknown";
}

ReducedFraction reduce_fraction(std::uint64_t num, u128 den)
{
	if (num == 0 || den == 0) throw Error(Errc::InvalidArgument, "fraction terms must be positive");
	const std::uint64_t g = gcd(num, mod_u64(den, num));
	return {num / g, g == 1 ? den : den / g};
}

bool is_s_member(const PolyNoConst& poly, std::uint64_t a, std::uint64_t b)
{
	if (a == 0 || b == 0) throw Error(Errc::InvalidArgument, "grid coordinates start at 1");
	return gcd(poly.eval_mod(a, b), b) == 1;
}

GridCount count_s(const PolyNoConst& poly, std::uint64_t n, unsigned threads)
{
	if (n == 0) throw Error(Errc::InvalidArgument, "grid side must be positive");
	const auto primes = primes_upto(n);
	std::vector<std::uint64_t> per_a(n, 0);
	parallel_for(n, threads, [&](std::size_t i, unsigned) {
		const std::uint64_t a = i + 1;
		std::vector<std::uint32_t> divisors;
		for (const std::uint32_t p : primes)
			if (poly.eval_mod(a, p) == 0) divisors.push_back(p);
		per_a[i] = static_cast<std::uint64_t>(moebius_sum(divisors, 0, 1, 1, n));
	});
	return {n, sum_in_order(per_a), CountMethod::sieve};
}

std::uint64_t gcd_k(std::uint64_t a, std::uint64_t b, unsigned k)
{
	if (a == 0 || b == 0 || k == 0) throw Error(Errc::InvalidArgument, "gcd_k arguments must be positive");
	for (std::uint64_t l = a; l >= 1; --l)
	{
		if (a % l != 0) continue;
		u128 power = 1;
		bool fits = true;
		for (unsigned i = 0; i < k && fits; ++i) fits = checked_mul(power, l, power) && power <= b;
		if (fits && b % static_cast<std::uint64_t>(power) == 0) return l;
	}
	return 1;
}

bool is_visible_brute(std::span<const u128> values, std::uint64_t a, std::uint64_t b)
{
	const u128 target = values[a];
	for (std::uint64_t prev = 1; prev < a; ++prev)
		if (mulmod(values[prev], b, target) == 0) return false;
	return true;
}

bool is_visible_brute(const PolyNoConst& poly, std::uint64_t a, std::uint64_t b)
{
	if (a == 0 || b == 0) throw Error(Errc::InvalidArgument, "grid coordinates start at 1");
	const auto values = value_table(poly, a);
	return is_visible_brute(values, a, b);
}

GridCount count_v_dedup(const PolyNoConst& poly, std::uint64_t n, unsigned threads)
{
	if (n == 0) throw Error(Errc::InvalidArgument, "grid side must be positive");
	if (n > kDedupGridLimit)
		throw Error(Errc::GridTooLargeForDedup, "dedup stores every fraction; N is limited to 2000");
	const auto values = value_table(poly, n);

	// Equal fractions share their numerator, so partitioning on it keeps every
	// duplicate inside one partition and no two workers touch the same keys.
	constexpr std::size_t kPartitions = 8;
	std::vector<std::uint64_t> distinct(kPartitions, 0);
	parallel_for(kPartitions, threads, [&](std::size_t part, unsigned) {
		std::vector<ReducedFraction> keys;
		keys.reserve(n * n / kPartitions + n);
		for (std::uint64_t a = 1; a <= n; ++a)
			for (std::uint64_t b = 1; b <= n; ++b)
			{
				const std::uint64_t g = gcd(b, mod_u64(values[a], b));
				const std::uint64_t num = b / g;
				if (num % kPartitions != part) continue;
				keys.push_back({num, g == 1 ? values[a] : values[a] / g});
			}
		std::sort(keys.begin(), keys.end());
		distinct[part] = static_cast<std::uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
	});
	return {n, sum_in_order(distinct), CountMethod::dedup};
}

VisibilitySieve::VisibilitySieve(std::span<const u128> values, std::uint64_t n)
	: _values(values), _n(n), _present(n + 1, 0), _marks(n + 1, 0)
{
	if (values.size() <= n) throw Error(Errc::InvalidArgument, "value table shorter than the grid");
}

std::span<const std::uint8_t> VisibilitySieve::mark(std::uint64_t a)
{
	std::fill(_marks.begin(), _marks.end(), 0);
	_hits.clear();

	const u128 target = _values[a];
	// q = P(a) / g <= N  <=>  g >= ceil(P(a) / N)
	const u128 threshold = (target + _n - 1) / _n;
	for (std::uint64_t prev = 1; prev < a; ++prev)
	{
		const u128 g = gcd(target, _values[prev]);
		if (g < threshold) continue;
		const auto q = static_cast<std::uint64_t>(target / g);
		if (!_present[q])
		{
			_present[q] = 1;
			_hits.push_back(q);
		}
	}

	// ascending q: an unmarked q is divisibility-minimal among the hits
	std::sort(_hits.begin(), _hits.end());
	std::uint64_t count = 0;
	for (const std::uint64_t q : _hits)
	{
		_present[q] = 0;
		if (_marks[q]) continue;
		for (std::uint64_t b = q; b <= _n; b += q)
			if (!_marks[b])
			{
				_marks[b] = 1;
				++count;
			}
	}
	_last_count = count;
	return _marks;
}

std::uint64_t VisibilitySieve::invisible_count(std::uint64_t a)
{
	mark(a);
	return _last_count;
}

GridCount count_v_sieve(const PolyNoConst& poly, std::uint64_t n, unsigned threads)
{
	if (n == 0) throw Error(Errc::InvalidArgument, "grid side must be positive");
	const auto values = value_table(poly, n);
	const unsigned workers = worker_count(n, threads);
	std::vector<VisibilitySieve> sieves;
	sieves.reserve(workers);
	for (unsigned w = 0; w < workers; ++w) sieves.emplace_back(values, n);

	std::vector<std::uint64_t> invisible(n, 0);
	// large a costs the most; hand those out first
	parallel_for(n, threads, [&](std::size_t i, unsigned w) { invisible[n - 1 - i] = sieves[w].invisible_count(n - i); });
	return {n, n * n - sum_in_order(invisible), CountMethod::sieve};
}

SubsetReport verify_subset(const PolyNoConst& poly, std::uint64_t n, unsigned threads)
{
	if (n == 0 || n > 1000) throw Error(Errc::InvalidArgument, "verify_subset runs brute visibility; N must be in [1, 1000]");
	const auto values = value_table(poly, n);

	std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> rows(n);
	std::vector<std::uint64_t> members(n, 0);
	parallel_for(n, threads, [&](std::size_t i, unsigned) {
		const std::uint64_t a = i + 1;
		for (std::uint64_t b = 1; b <= n; ++b)
		{
			if (gcd(mod_u64(values[a], b), b) != 1) continue;
			++members[i];
			if (!is_visible_brute(values, a, b) || gcd(a, b) != 1) rows[i].emplace_back(a, b);
		}
	});

	SubsetReport report;
	report.n = n;
	report.s_members = sum_in_order(members);
	for (auto& row : rows) report.violations.insert(report.violations.end(), row.begin(), row.end());
	return report;
}

} // namespace vislat
