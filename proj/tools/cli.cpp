#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "vislat/vislat.hpp"

namespace vislat::cli {

namespace {

constexpr const char* kTable1Polys[] = {"1,1", "2,0,15", "6,0,4,13", "7,12,4,1,11"};

// Three decimals, truncated, as in the published table.
std::string truncate3(std::uint64_t count, std::uint64_t n)
{
	const u128 thousandths = u128(count) * 1000 / (u128(n) * n);
	char buf[32];
	std::snprintf(buf, sizeof buf, "%u.%03u", static_cast<unsigned>(thousandths / 1000), static_cast<unsigned>(thousandths % 1000));
	return buf;
}

std::string join_b(const MissingBSet& set)
{
	if (set.bs.empty()) return "none";
	std::string out;
	for (const u128 b : set.bs)
	{
		if (!out.empty()) out += ' ';
		out += to_string(b);
	}
	return out;
}

// Writes to the named file, or to `fallback` when the path is empty.
template <typename Emit>
int with_output(const std::string& path, std::ostream& fallback, std::ostream& err, Emit&& emit)
{
	if (path.empty())
	{
		emit(fallback);
		return kExitOk;
	}
	std::ofstream file(path, std::ios::binary);
	if (!file)
	{
		err << "error: cannot open '" << path << "' for writing\n";
		return kExitRefused;
	}
	emit(file);
	return file ? kExitOk : kExitRefused;
}

int run_froots(const RunConfig& c, std::ostream& out)
{
	const RootCount rc = f_count(*c.poly, c.modulus, c.list_roots);
	if (!c.list_roots)
	{
		out << "modulus,count\n" << rc.modulus << ',' << rc.count << '\n';
		return kExitOk;
	}
	out << "modulus,count,roots\n" << rc.modulus << ',' << rc.count << ',';
	for (std::size_t i = 0; i < rc.roots->size(); ++i) out << (i ? " " : "") << (*rc.roots)[i];
	out << '\n';
	return kExitOk;
}

void print_bracket(const DensityBracket& b, std::ostream& out)
{
	out << "value,lower,upper\n"
		<< format_real(b.value) << ',' << format_real(b.lower) << ',' << format_real(b.upper) << '\n';
}

int run_classify(const RunConfig& c, std::ostream& out, std::ostream& err)
{
	if (c.n > kClassifyGridLimit)
	{
		err << "error: classify exports one line per point and is limited to N <= " << kClassifyGridLimit << '\n';
		return kExitRefused;
	}
	const auto values = eval_table(*c.poly, c.n);
	VisibilitySieve sieve(values, c.n);
	return with_output(c.out_path, out, err, [&](std::ostream& os) {
		os << "a,b,visible\n";
		for (std::uint64_t a = 1; a <= c.n; ++a)
		{
			const auto marks = sieve.mark(a);
			for (std::uint64_t b = 1; b <= c.n; ++b) os << a << ',' << b << ',' << (marks[b] ? 0 : 1) << '\n';
		}
	});
}

int run_table1(const RunConfig& c, std::ostream& out)
{
	out << "poly,polynomial,count,ratio,ratio_exact\n";
	for (const char* text : kTable1Polys)
	{
		const PolyNoConst poly = PolyNoConst::parse(text);
		const GridCount g = count_v_sieve(poly, c.n, c.threads);
		out << '"' << text << "\"," << poly.pretty() << ',' << g.count << ',' << truncate3(g.count, g.n) << ','
			<< format_real(g.ratio()) << '\n';
	}
	return kExitOk;
}

int run_table2(const RunConfig& c, std::ostream& out)
{
	const PolyNoConst poly = c.poly.value_or(make_poly({1, 1}));
	out << "a,b\n";
	for (std::uint64_t a = 1; a <= c.max_a; ++a) out << a << ',' << join_b(missing_b_set(poly, a)) << '\n';
	return kExitOk;
}

int run_conjecture_scan(const RunConfig& c, std::ostream& out, std::ostream& err)
{
	const std::uint64_t n = c.n == 0 ? c.max_a : c.n;
	const ConjectureDiagnostics d = conjecture_scan(*c.poly, c.max_a, n, c.threads);
	int status = with_output(c.out_path, out, err, [&](std::ostream& os) {
		os << "a,k_a,c1,n,c\n";
		for (const ConjectureRow& r : d.rows)
			os << r.a << ',' << r.k_a << ',' << format_real(r.c1) << ',' << r.n_missing << ',' << format_real(r.c) << '\n';
	});
	if (status != kExitOk || c.avg_out_path.empty()) return status;
	return with_output(c.avg_out_path, out, err, [&](std::ostream& os) {
		os << "A,avg_c1\n";
		for (const AverageRow& r : d.averages) os << r.upto << ',' << format_real(r.avg_c1) << '\n';
	});
}

int run_verify_subset(const RunConfig& c, std::ostream& out)
{
	const SubsetReport report = verify_subset(*c.poly, c.n, c.threads);
	out << "n,s_members,violations\n" << report.n << ',' << report.s_members << ',' << report.violations.size() << '\n';
	for (const auto& [a, b] : report.violations) out << "violation," << a << ',' << b << '\n';
	return kExitOk;
}

} // namespace

std::string format_real(double x)
{
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.12g", x);
	return buf;
}

std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
	CLI::App app{"Densities of lattice points visible along polynomial curves y = q P(x)", "vislat"};
	app.require_subcommand(1, 1);
	app.fallthrough();

	RunConfig config;
	std::string poly_text;
	std::string method_text = "sieve";
	bool n_given = false;

	app.add_option("--threads", config.threads, "Worker threads (0 = one per hardware thread)")
		->check(CLI::NonNegativeNumber);

	auto add_poly = [&](CLI::App* sub) {
		return sub->add_option("--poly", poly_text, "Coefficients a_n,...,a_1, highest degree first")->required();
	};
	auto add_n = [&](CLI::App* sub, bool required) {
		auto* opt = sub->add_option("--n", config.n, "Grid side N")->check(CLI::PositiveNumber);
		if (required) opt->required();
		return opt;
	};
	auto add_bound = [&](CLI::App* sub) {
		sub->add_option("--prime-bound", config.prime_bound, "Largest prime in the truncated product")
			->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32))
			->capture_default_str();
	};

	auto* froots = app.add_subcommand("froots", "Count roots of P(d) = 0 (mod l), d in [1, l]");
	add_poly(froots);
	froots->add_option("--modulus", config.modulus, "Modulus l")->required()->check(CLI::PositiveNumber);
	froots->add_flag("--list-roots", config.list_roots, "Also print the sorted roots");

	auto* density = app.add_subcommand("density", "Euler-product density of S with truncation bracket");
	add_poly(density);
	add_bound(density);

	auto* s1k = app.add_subcommand("density-s1k", "Closed-form density of S for P = x^2 + kx");
	s1k->add_option("--k", config.k, "k in x^2 + kx")->required()->check(CLI::PositiveNumber);
	add_bound(s1k);

	auto* count_s_cmd = app.add_subcommand("count-s", "Exact |S ∩ R_N|");
	add_poly(count_s_cmd);
	add_n(count_s_cmd, true);

	auto* count_v = app.add_subcommand("count-v", "Exact |V ∩ R_N|");
	add_poly(count_v);
	add_n(count_v, true);
	count_v->add_option("--method", method_text, "sieve or dedup")
		->check(CLI::IsMember({"sieve", "dedup", "complement"}))
		->capture_default_str();

	auto* classify = app.add_subcommand("classify", "Per-point visibility CSV (a,b,visible), N <= 200");
	add_poly(classify);
	add_n(classify, true);
	classify->add_option("--out", config.out_path, "Output CSV (stdout when omitted)");

	auto* table1 = app.add_subcommand("table1", "Visible ratios |Q_N|/N^2 for the four reference polynomials");
	add_n(table1, false)->capture_default_str();

	auto* table2 = app.add_subcommand("table2", "Minimal missing ordinates per abscissa for x^2 + x");
	table2->add_option("--max-a", config.max_a, "Largest abscissa")->check(CLI::PositiveNumber)->capture_default_str();
	table2->add_option("--poly", poly_text, "Polynomial (default 1,1)");

	auto* scan = app.add_subcommand("conjecture-scan", "Per-a k_a, c1, n(a,N), c and the running average of c1");
	add_poly(scan);
	scan->add_option("--max-a", config.max_a, "Largest abscissa")->required()->check(CLI::PositiveNumber);
	auto* scan_n = add_n(scan, false);
	scan->add_option("--out", config.out_path, "Per-a CSV (stdout when omitted)");
	scan->add_option("--avg-out", config.avg_out_path, "Running-average CSV");

	auto* verify = app.add_subcommand("verify-subset", "Exhaustive check that S lies in V ∩ S(1), N <= 1000");
	add_poly(verify);
	add_n(verify, true)->check(CLI::Range(1, 1000));

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError& e)
	{
		const int status = app.exit(e, out, err);
		return status == 0 ? kExitOk : kExitUsage;
	}

	const CLI::App* chosen = app.get_subcommands().front();
	const std::string name = chosen->get_name();
	if (name == "froots") config.command = Command::froots;
	else if (name == "density") config.command = Command::density;
	else if (name == "density-s1k") config.command = Command::density_s1k;
	else if (name == "count-s") config.command = Command::count_s;
	else if (name == "count-v") config.command = Command::count_v;
	else if (name == "classify") config.command = Command::classify;
	else if (name == "table1") config.command = Command::table1;
	else if (name == "table2") config.command = Command::table2;
	else if (name == "conjecture-scan") config.command = Command::conjecture_scan;
	else config.command = Command::verify_subset;

	n_given = scan_n->count() > 0;
	if (config.command == Command::conjecture_scan && !n_given) config.n = config.max_a;

	if (method_text == "dedup") config.method = CountMethod::dedup;
	else if (method_text == "complement") config.method = CountMethod::complement;

	if (!poly_text.empty())
	{
		try
		{
			config.poly = PolyNoConst::parse(poly_text);
		}
		catch (const Error& e)
		{
			err << "error: --poly: " << e.what() << " (" << errc_name(e.code()) << ")\n";
			return kExitUsage;
		}
	}
	return config;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err)
{
	try
	{
		switch (c.command)
		{
			case Command::froots: return run_froots(c, out);
			case Command::density: print_bracket(euler_product_density(*c.poly, c.prime_bound, c.threads), out); return kExitOk;
			case Command::density_s1k: print_bracket(corollary_s1k(c.k, c.prime_bound), out); return kExitOk;
			case Command::count_s: out << count_s(*c.poly, c.n, c.threads).count << '\n'; return kExitOk;
			case Command::count_v:
			{
				GridCount g;
				if (c.method == CountMethod::dedup) g = count_v_dedup(*c.poly, c.n, c.threads);
				else if (c.method == CountMethod::complement) g = count_v_complement(*c.poly, c.n, c.threads);
				else g = count_v_sieve(*c.poly, c.n, c.threads);
				out << g.count << '\n';
				return kExitOk;
			}
			case Command::classify: return run_classify(c, out, err);
			case Command::table1: return run_table1(c, out);
			case Command::table2: return run_table2(c, out);
			case Command::conjecture_scan: return run_conjecture_scan(c, out, err);
			case Command::verify_subset: return run_verify_subset(c, out);
		}
	}
	catch (const Error& e)
	{
		err << "error: " << e.what() << " (" << errc_name(e.code()) << ")\n";
		return e.code() == Errc::InvalidArgument ? kExitUsage : kExitRefused;
	}
	return kExitUsage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
	auto parsed = parse_args(argc, argv, out, err);
	if (const int* status = std::get_if<int>(&parsed)) return *status;
	return run(std::get<RunConfig>(parsed), out, err);
}

} // namespace vislat::cli
