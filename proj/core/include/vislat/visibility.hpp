#pragma once

// Exact counts over the grid R_N = [1, N] x [1, N] for the curves y = q P(x).

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "vislat/poly.hpp"

namespace vislat {

/// count_v_dedup keeps every reduced fraction of the grid; it refuses larger N.
inline constexpr std::uint64_t kDedupGridLimit = 2000;

/// b / P(a) in lowest terms.
struct ReducedFraction
{
	std::uint64_t num = 1;
	u128 den = 1;

	friend auto operator<=>(const ReducedFraction&, const ReducedFraction&) = default;
};

ReducedFraction reduce_fraction(std::uint64_t num, u128 den);

enum class CountMethod
{
	dedup,
	sieve,
	complement,
};

const char* method_name(CountMethod method) noexcept;

struct GridCount
{
	std::uint64_t n = 0;
	std::uint64_t count = 0;
	CountMethod method = CountMethod::sieve;

	double ratio() const noexcept { return static_cast<double>(count) / (double(n) * double(n)); }
};

/// gcd(P(a), b) == 1.
bool is_s_member(const PolyNoConst& poly, std::uint64_t a, std::uint64_t b);

/// |S ∩ R_N| by Moebius inclusion-exclusion over the primes <= N dividing P(a).
GridCount count_s(const PolyNoConst& poly, std::uint64_t n, unsigned threads = 0);

/// max { l : l | a and l^k | b }.
std::uint64_t gcd_k(std::uint64_t a, std::uint64_t b, unsigned k);

/// Direct reading of visibility: no a' < a with b P(a') = 0 (mod P(a)).
bool is_visible_brute(const PolyNoConst& poly, std::uint64_t a, std::uint64_t b);

/// Same test against a precomputed table values[x] = P(x).
bool is_visible_brute(std::span<const u128> values, std::uint64_t a, std::uint64_t b);

/// |Q_N|, the number of distinct b / P(a). Throws Error{GridTooLargeForDedup}
/// for N > kDedupGridLimit.
GridCount count_v_dedup(const PolyNoConst& poly, std::uint64_t n, unsigned threads = 0);

/// N^2 minus the ordinates struck out per abscissa by the multiples of
/// P(a) / gcd(P(a), P(a')), a' < a.
GridCount count_v_sieve(const PolyNoConst& poly, std::uint64_t n, unsigned threads = 0);

/// Per-abscissa invisibility marks for one grid. Not thread-safe; use one
/// instance per worker over a shared value table.
class VisibilitySieve
{
public:
	VisibilitySieve(std::span<const u128> values, std::uint64_t n);

	/// Marks invisible ordinates at abscissa a; the result is indexed by b
	/// (entry 0 unused) and stays valid until the next call.
	std::span<const std::uint8_t> mark(std::uint64_t a);

	/// Number of b in [1, N] invisible at a.
	std::uint64_t invisible_count(std::uint64_t a);

private:
	std::span<const u128> _values;
	std::uint64_t _n;
	std::vector<std::uint8_t> _present;
	std::vector<std::uint8_t> _marks;
	std::vector<std::uint64_t> _hits;
	std::uint64_t _last_count = 0;
};

struct SubsetReport
{
	std::uint64_t n = 0;
	std::uint64_t s_members = 0;
	/// (a, b) in S that fails visibility or gcd(a, b) = 1.
	std::vector<std::pair<std::uint64_t, std::uint64_t>> violations;
};

/// Checks S ⊆ V ∩ S(1) exhaustively on R_N using brute visibility.
SubsetReport verify_subset(const PolyNoConst& poly, std::uint64_t n, unsigned threads = 0);

} // namespace vislat
