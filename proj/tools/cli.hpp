#pragma once

// Command dispatch for the vislat tool. Kept out of main() so tests can drive
// every command against string streams.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "vislat/poly.hpp"
#include "vislat/visibility.hpp"

namespace vislat::cli {

enum class Command
{
	froots,
	density,
	density_s1k,
	count_s,
	count_v,
	classify,
	table1,
	table2,
	conjecture_scan,
	verify_subset,
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefused = 1;
inline constexpr int kExitUsage = 2;

/// Largest grid classify will export point by point.
inline constexpr std::uint64_t kClassifyGridLimit = 200;

struct RunConfig
{
	Command command = Command::table1;
	std::optional<PolyNoConst> poly;
	std::uint64_t n = 5000;
	std::uint64_t modulus = 1;
	std::uint64_t k = 1;
	std::uint64_t max_a = 20;
	std::uint64_t prime_bound = 1'000'000;
	CountMethod method = CountMethod::sieve;
	bool list_roots = false;
	std::string out_path;
	std::string avg_out_path;
	unsigned threads = 0;
};

/// Parses argv into a config. On failure or --help returns the exit status
/// instead, after writing the message to out/err.
std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes one command. Exit 1 on a guarded-limit refusal, 0 otherwise.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// 12 significant digits, the CSV real format.
std::string format_real(double x);

} // namespace vislat::cli
