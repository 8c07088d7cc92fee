// Command-line front end for the squaring-the-square toolkit.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "quadratura/bounds.hpp"
#include "quadratura/errors.hpp"
#include "quadratura/geometry.hpp"
#include "quadratura/model.hpp"
#include "quadratura/network.hpp"
#include "quadratura/solver.hpp"

namespace {

using namespace quadratura;

std::string read_file(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) {
		throw InvalidParameter("cannot open file '" + path + "'");
	}
	std::ostringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
	std::ofstream out(path, std::ios::binary);
	if (!out) {
		throw InvalidParameter("cannot open file '" + path + "' for writing");
	}
	out << content;
}

struct Common {
	bool machine = false;
};

// "h=v" for --force
std::pair<int, int> parse_force(const std::string& arg) {
	const size_t eq = arg.find('=');
	if (eq == std::string::npos) {
		throw CLI::ValidationError("--force expects '<h>=<v>'");
	}
	try {
		return {std::stoi(arg.substr(0, eq)), std::stoi(arg.substr(eq + 1))};
	} catch (const std::exception&) {
		throw CLI::ValidationError("--force expects '<h>=<v>'");
	}
}

std::optional<std::chrono::milliseconds> default_time_limit() {
	const char* env = std::getenv("QUADRATURA_TIME_LIMIT_MS");
	if (env == nullptr || *env == '\0') {
		return std::nullopt;
	}
	return std::chrono::milliseconds(std::stoll(env));
}

void print_tiling_human(const Tiling& t) {
	if (t.n <= 40) {
		std::cout << render_ascii(t);
	}
}

int cmd_solve(const Common& common,
              int n,
              const std::string& force,
              bool gcd_one,
              int threads,
              long long node_limit,
              long long time_limit_ms,
              const std::string& out_path) {
	SolveOptions opts;
	opts.threads = threads;
	if (!force.empty() && gcd_one) {
		throw InvalidParameter("--force and --gcd-one are mutually exclusive");
	}
	if (!force.empty()) {
		auto [h, v] = parse_force(force);
		opts.variant = Variant::ForceCount;
		opts.force_size = h;
		opts.force_value = v;
	} else if (gcd_one) {
		opts.variant = Variant::GcdOne;
	}
	if (node_limit > 0) {
		opts.node_limit = node_limit;
	}
	if (time_limit_ms > 0) {
		opts.time_limit = std::chrono::milliseconds(time_limit_ms);
	} else {
		opts.time_limit = default_time_limit();
	}

	const OptResult result = solve_min_squares(n, opts);
	if (common.machine) {
		std::cout << "optimum=" << result.optimum << "\n"
		          << "nodes=" << result.nodes << "\n"
		          << "time_ms=" << result.elapsed.count() << "\n"
		          << "proven=" << (result.proven ? "true" : "false") << "\n"
		          << "multiset=" << format_multiset(multiset(result.witness)) << "\n";
	} else {
		std::cout << "s(" << n << ") = " << result.optimum
		          << (result.proven ? " (proven)" : " (best known, search truncated)")
		          << "\n"
		          << "nodes: " << result.nodes << ", time: " << result.elapsed.count()
		          << " ms\n"
		          << "multiset: " << format_multiset(multiset(result.witness)) << "\n";
		print_tiling_human(result.witness);
	}
	if (!out_path.empty()) {
		write_file(out_path, write_tiling(result.witness));
	}
	return 0;
}

int cmd_verify(const Common& common, const std::string& path) {
	const Tiling t = parse_tiling(read_file(path));
	const ValidationReport report = validate(t);
	if (report.ok) {
		std::cout << "valid=true count=" << t.placements.size()
		          << " multiset=" << format_multiset(multiset(t)) << "\n";
		return 0;
	}
	std::cout << "valid=false violations=" << report.violations.size() << "\n";
	for (const Violation& v : report.violations) {
		std::cout << v.message << "\n";
	}
	(void)common;
	return 1;
}

int cmd_export(const Common& common,
               int n,
               const std::string& format,
               bool ylink,
               const std::string& force,
               bool gcd_one,
               std::string out_path) {
	IlpModel m = build_base_model(n);
	std::string variant_tag;
	if (ylink || !force.empty() || gcd_one) {
		m = add_y_link(std::move(m));
		variant_tag = "_ylink";
	}
	if (!force.empty()) {
		auto [h, v] = parse_force(force);
		m = force_count(std::move(m), h, v);
		variant_tag = "_force" + std::to_string(h) + "_" + std::to_string(v);
	}
	if (gcd_one) {
		m = add_gcd_one(std::move(m));
		variant_tag += "_gcdone";
	}
	const ExportFormat fmt = format == "mps" ? ExportFormat::MPS : ExportFormat::LP;
	if (out_path.empty()) {
		out_path = "square_" + std::to_string(n) + variant_tag + "." + format;
	}
	write_file(out_path, export_model(m, fmt));
	if (common.machine) {
		std::cout << "file=" << out_path << "\n"
		          << "variables=" << m.variables.size() << "\n"
		          << "constraints=" << m.constraints.size() << "\n";
	} else {
		std::cout << "wrote " << out_path << " (" << m.variables.size() << " variables, "
		          << m.constraints.size() << " constraints)\n";
	}
	return 0;
}

int cmd_network(const Common& common, const std::string& path, bool dump, bool recover) {
	const Tiling t = read_tiling(read_file(path));
	const Network net = extract_network(t);
	if (dump) {
		std::cout << dump_network(net);
		return 0;
	}
	if (recover) {
		const SizeSolution solution = solve_sizes(net);
		const bool ok = recover_and_check(t);
		if (common.machine) {
			std::cout << "vertices=" << net.vertices.size() << "\n"
			          << "edges=" << net.edges.size() << "\n"
			          << "scale_dimension=" << solution.scale_dimension << "\n"
			          << "recover=" << (ok ? "true" : "false") << "\n";
			std::cout << "sizes=";
			for (size_t i = 0; i < solution.sizes.size(); ++i) {
				std::cout << (i ? "," : "") << solution.sizes[i];
			}
			std::cout << "\n";
		} else {
			std::cout << "network: " << net.vertices.size() << " vertices, "
			          << net.edges.size() << " edges\n"
			          << "solution space dimension: " << solution.scale_dimension << "\n"
			          << "recovered sizes:";
			for (long long s : solution.sizes) {
				std::cout << " " << s;
			}
			std::cout << "\nround-trip check: " << (ok ? "ok" : "FAILED") << "\n";
		}
		return ok ? 0 : 1;
	}
	if (common.machine) {
		std::cout << "vertices=" << net.vertices.size() << "\n"
		          << "edges=" << net.edges.size() << "\n";
	} else {
		std::cout << "network: " << net.vertices.size() << " vertices, "
		          << net.edges.size() << " edges\n";
	}
	return 0;
}

int cmd_construct(const Common& common,
                  int mersenne_r,
                  const std::string& scale_file,
                  int scale_k,
                  const std::string& out_path) {
	Tiling t;
	if (mersenne_r > 0) {
		t = mersenne_construction(mersenne_r);
	} else if (!scale_file.empty()) {
		if (scale_k < 2) {
			throw InvalidParameter("--scale requires a factor >= 2");
		}
		t = scale(read_tiling(read_file(scale_file)), scale_k);
	} else {
		throw InvalidParameter("construct requires --mersenne or --scale");
	}
	const std::string text = write_tiling(t);
	if (out_path.empty()) {
		std::cout << text;
	} else {
		write_file(out_path, text);
	}
	if (common.machine) {
		std::cout << "n=" << t.n << "\ncount=" << t.placements.size() << "\n";
	} else if (!out_path.empty()) {
		std::cout << "wrote " << out_path << " (n=" << t.n << ", " << t.placements.size()
		          << " squares)\n";
	}
	return 0;
}

int cmd_bounds(const Common& common, int n) {
	const BoundReport report = bound_report(n);
	if (common.machine) {
		if (is_prime(n)) {
			std::cout << "conway=" << report.lower << "\n";
		}
		std::cout << "trustrum=" << report.upper_trustrum << "\n"
		          << "construction=" << report.upper_construction << "\n";
	} else {
		if (is_prime(n)) {
			std::cout << "Conway lower bound: log2(" << n << ") = " << report.lower
			          << " (ceil " << report.lower_int << ")\n";
		} else {
			std::cout << n << " is not prime; no Conway bound\n";
		}
		std::cout << "Trustrum upper bound: " << report.upper_trustrum << "\n"
		          << "best construction: " << report.upper_construction << " squares\n";
	}
	return 0;
}

int cmd_render(const Common&, const std::string& path) {
	std::cout << render_ascii(read_tiling(read_file(path)));
	return 0;
}

int cmd_oracle(const Common& common, int n) {
	const OracleResult result = brute_force_oracle(n);
	if (common.machine) {
		std::cout << "optimum=" << result.optimum << "\n"
		          << "optimal_count=" << result.optimal_canonical.size() << "\n";
	} else {
		std::cout << "optimum " << result.optimum << ", "
		          << result.optimal_canonical.size() << " optimal tiling(s) up to symmetry\n";
		for (const Tiling& t : result.optimal_canonical) {
			std::cout << "  " << format_multiset(multiset(t)) << "\n";
		}
	}
	return 0;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"Exact toolkit for squaring the square"};
	app.require_subcommand(1);

	Common common;
	app.add_flag("--machine", common.machine, "stable key=value output");

	int n = 0;
	std::string force, out_path, file_path, format = "lp";
	bool gcd_one = false, ylink = false, dump = false, recover = false;
	int threads = 1, mersenne_r = 0, scale_k = 0;
	long long node_limit = 0, time_limit_ms = 0;
	std::string scale_file;

	auto* solve = app.add_subcommand("solve", "minimize the number of squares");
	solve->add_option("--n", n, "outer side length")->required();
	solve->add_option("--force", force, "require exactly v squares of size h, as h=v");
	solve->add_flag("--gcd-one", gcd_one, "require the side lengths to have gcd 1");
	solve->add_option("--threads", threads, "worker threads");
	solve->add_option("--node-limit", node_limit, "abort after this many search nodes");
	solve->add_option("--time-limit", time_limit_ms, "abort after this many milliseconds");
	solve->add_option("--out", out_path, "write the witness tiling to this file");

	auto* verify = app.add_subcommand("verify", "validate a tiling file");
	verify->add_option("--file", file_path, "tiling file")->required();

	auto* exp = app.add_subcommand("export", "write the ILP model as LP or MPS");
	exp->add_option("--n", n, "outer side length")->required();
	exp->add_option("--format", format, "lp or mps")
	    ->check(CLI::IsMember({"lp", "mps"}));
	exp->add_flag("--ylink", ylink, "add counting variables y_h");
	exp->add_option("--force", force, "add y_h = v, as h=v (implies --ylink)");
	exp->add_flag("--gcd-one", gcd_one, "add the gcd-one inequalities (implies --ylink)");
	exp->add_option("--out", out_path, "output file (default square_<n>[_variant].<fmt>)");

	auto* network = app.add_subcommand("network", "dissector network of a tiling");
	network->add_option("--file", file_path, "tiling file")->required();
	network->add_flag("--dump", dump, "print the network dump format");
	network->add_flag("--recover", recover, "recover square sizes via Kirchhoff's laws");

	auto* construct = app.add_subcommand("construct", "explicit tiling constructions");
	construct->add_option("--mersenne", mersenne_r, "Mersenne tiling of the (2^r-1)-square");
	construct->add_option("--scale", scale_file, "tiling file to enlarge");
	construct->add_option("--factor", scale_k, "scale factor k >= 2");
	construct->add_option("--out", out_path, "output tiling file (default stdout)");

	auto* bounds = app.add_subcommand("bounds", "closed-form bounds and constructions");
	bounds->add_option("--n", n, "outer side length")->required();

	auto* render = app.add_subcommand("render", "ASCII grid of a tiling file");
	render->add_option("--file", file_path, "tiling file")->required();

	auto* oracle = app.add_subcommand("oracle", "exhaustive enumeration for tiny n");
	oracle->add_option("--n", n, "outer side length (2..5)")->required();

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		return app.exit(e) == 0 ? 0 : 2;
	}

	try {
		if (solve->parsed()) {
			return cmd_solve(common, n, force, gcd_one, threads, node_limit,
			                 time_limit_ms, out_path);
		}
		if (verify->parsed()) {
			return cmd_verify(common, file_path);
		}
		if (exp->parsed()) {
			return cmd_export(common, n, format, ylink, force, gcd_one, out_path);
		}
		if (network->parsed()) {
			return cmd_network(common, file_path, dump, recover);
		}
		if (construct->parsed()) {
			return cmd_construct(common, mersenne_r, scale_file, scale_k, out_path);
		}
		if (bounds->parsed()) {
			return cmd_bounds(common, n);
		}
		if (render->parsed()) {
			return cmd_render(common, file_path);
		}
		if (oracle->parsed()) {
			return cmd_oracle(common, n);
		}
	} catch (const Error& e) {
		std::cerr << e.what() << "\n";
		return 1;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 2;
}
