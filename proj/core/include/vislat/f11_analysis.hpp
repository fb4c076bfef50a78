#pragma once

// Per-abscissa structure of the invisible points: the minimal ordinates whose
// multiples are hidden, their inclusion-exclusion count, and the c / c1 ratios.

#include <cstdint>
#include <vector>

#include "vislat/poly.hpp"
#include "vislat/visibility.hpp"

namespace vislat {

/// Inclusion-exclusion refuses more than this many effective terms.
inline constexpr std::size_t kMaxInclusionExclusionTerms = 30;

struct MissingBSet
{
	std::uint64_t a = 0;
	/// Divisibility-minimal, ascending.
	std::vector<u128> bs;

	std::size_t size() const noexcept { return bs.size(); }
	/// sum 1 / b_i
	double c1() const noexcept;
};

/// Minimal elements of { P(a) / gcd(P(a), P(a')) : 1 <= a' < a }.
MissingBSet missing_b_set(const PolyNoConst& poly, std::uint64_t a);

/// n(a, N): ordinates b <= N that are multiples of some b_i, by
/// inclusion-exclusion over lcms with subsets pruned once the lcm passes N.
/// Throws Error{TooManyTerms} when more than 30 of the b_i are <= N.
std::uint64_t n_missing_inclusion_exclusion(const MissingBSet& set, std::uint64_t n);
std::uint64_t n_missing_inclusion_exclusion(const PolyNoConst& poly, std::uint64_t a, std::uint64_t n);

/// n(a, N) by marking multiples on a boolean array.
std::uint64_t n_missing_sieve(const MissingBSet& set, std::uint64_t n);
std::uint64_t n_missing_sieve(const PolyNoConst& poly, std::uint64_t a, std::uint64_t n);

/// N^2 - sum_a n(a, N).
GridCount count_v_complement(const PolyNoConst& poly, std::uint64_t n, unsigned threads = 0);

struct ConjectureRow
{
	std::uint64_t a = 0;
	std::uint64_t k_a = 0;
	double c1 = 0.0;
	std::uint64_t n_missing = 0;
	/// n_missing / N
	double c = 0.0;
};

struct AverageRow
{
	std::uint64_t upto = 0;
	/// (1/A) sum_{a <= A} c1(a)
	double avg_c1 = 0.0;
};

struct ConjectureDiagnostics
{
	std::uint64_t n = 0;
	std::vector<ConjectureRow> rows;
	std::vector<AverageRow> averages;
};

ConjectureDiagnostics conjecture_scan(const PolyNoConst& poly, std::uint64_t max_a, std::uint64_t n,
									  unsigned threads = 0);

} // namespace vislat
