#include <divides/analysis.hpp>
#include <divides/census.hpp>
#include <divides/error.hpp>
#include <divides/homology.hpp>
#include <divides/inversion.hpp>
#include <divides/linalg.hpp>
#include <divides/polynomial.hpp>
#include <divides/render.hpp>
#include <divides/text_format.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace divides;

namespace {

constexpr int exit_input = 2;
constexpr int exit_precondition = 3;
constexpr int exit_internal = 4;

struct InputError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw InputError("cannot open '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

DivideAnalysis load(const std::string& path, bool flip)
{
	return analyze(parse_divide(read_file(path)), flip);
}

bool looks_like_matrix(const std::string& text)
{
	std::istringstream in(text);
	std::string line;
	while (std::getline(in, line)) {
		if (auto h = line.find('#'); h != std::string::npos)
			line.resize(h);
		std::istringstream words(line);
		std::string first;
		if (words >> first)
			return first == "matrix";
	}
	return false;
}

int cmd_validate(const std::string& file)
{
	auto d = parse_divide(read_file(file));
	auto fs = validate_planarity(d);
	std::cout << "valid " << d.name << ": V=" << fs.vertex_count() << " E=" << fs.edge_count()
	          << " F=" << fs.face_count() << " chi=" << fs.euler_characteristic()
	          << " regions=" << interior_regions(fs).size() << '\n';
	return 0;
}

int cmd_stats(const std::string& file, bool flip)
{
	auto a = load(file, flip);
	const auto& s = a.stats;
	const int trace = s.mu_minus - s.mu_zero + s.mu_plus;
	std::cout << "divide " << a.divide.name << '\n';
	std::cout << "mu=" << s.mu << " r=" << s.r << " trace=" << trace << '\n';
	std::cout << "mu_plus=" << s.mu_plus << " mu_zero=" << s.mu_zero << " mu_minus=" << s.mu_minus
	          << " delta_R=" << s.delta << '\n';
	if (s.connected) {
		try {
			auto f = fiber_invariants(s);
			std::cout << "b1=" << f.b1 << " chi=" << f.euler << " genus=" << f.genus
			          << " connected=true\n";
		} catch (const Error& e) {
			std::cout << "b1=" << s.mu << " genus=n/a (" << e.what() << ") connected=true\n";
		}
	} else {
		std::cout << "b1=" << s.mu << " genus=n/a connected=false\n";
	}
	return 0;
}

int cmd_matrices(const std::string& file, const std::string& which, bool flip)
{
	auto a = load(file, flip);
	const auto s = seifert_matrix(a.blocks);
	if (which == "S") {
		std::cout << write_matrix(s);
	} else if (which == "N") {
		std::cout << write_matrix(s - IntegerMatrix::identity(s.rows()));
	} else if (which == "T") {
		std::cout << write_matrix(monodromy_matrix(s));
	} else if (which == "C") {
		std::cout << write_matrix(conjugation_matrix(a.blocks));
	} else if (which == "TC") {
		std::cout << write_matrix(involution_product(monodromy_matrix(s),
		    conjugation_matrix(a.blocks), a.blocks));
	} else {
		throw InputError("--which must be one of S, T, C, TC, N");
	}
	return 0;
}

int cmd_verify(const std::string& file, bool flip)
{
	auto a = load(file, flip);
	auto report = verify_identities(a);
	std::cout << report.to_string();
	std::cout << (report.all_passed() ? "all identities hold\n" : "IDENTITY FAILURE\n");
	return report.all_passed() ? 0 : exit_internal;
}

int cmd_strong_invert(const std::string& file, bool flip, std::uint64_t seed)
{
	const std::string text = read_file(file);
	RationalMatrix m;
	if (looks_like_matrix(text)) {
		m = parse_matrix(text);
	} else {
		auto a = load(file, flip);
		m = to_rational(monodromy_matrix(seifert_matrix(a.blocks)));
	}
	if (m.is_square()) {
		std::cout << "charpoly " << charpoly(m).to_string() << '\n';
	}
	std::cout << write_certificate(strong_inversion(m, seed));
	return 0;
}

int cmd_census(int gmax, const std::string& symmetries, const std::string& emit_dir,
    std::uint64_t budget, unsigned workers)
{
	CensusOptions opt;
	opt.budget = budget;
	opt.workers = workers;
	opt.keep_divides = !emit_dir.empty();
	auto result = census(gmax, Symmetries::parse(symmetries), opt);
	for (const auto& g : result.genera)
		std::cout << "g=" << g.g << " d=" << g.classes << '\n';
	if (!emit_dir.empty()) {
		namespace fs = std::filesystem;
		fs::create_directories(emit_dir);
		for (const auto& g : result.genera)
			for (std::size_t i = 0; i < g.divides.size(); ++i) {
				const auto path = fs::path(emit_dir) / (g.divides[i].name + ".div");
				std::ofstream out(path);
				if (!out)
					throw InputError("cannot write '" + path.string() + "'");
				out << "# canonical code " << g.codes[i] << '\n';
				out << write_divide(g.divides[i]);
			}
	}
	return 0;
}

int cmd_render(const std::string& file, const std::string& output, bool flip)
{
	auto svg = render_svg(load(file, flip));
	if (output.empty() || output == "-") {
		std::cout << svg;
	} else {
		std::ofstream out(output);
		if (!out)
			throw InputError("cannot write '" + output + "'");
		out << svg;
	}
	return 0;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Homological invariants of divides: Seifert form, monodromy, conjugation "
	             "involutions, strong inversions and interval-divide census"};
	app.require_subcommand(1);
	app.fallthrough();

	bool flip = false;
	std::uint64_t seed = 0;
	std::uint64_t budget = CensusOptions{}.budget;
	app.add_flag("--flip-signs", flip, "Swap the checkerboard signs");
	app.add_option("--seed", seed, "Seed for the randomized cyclic-generator search");
	app.add_option("--budget", budget, "Candidate limit per genus for census");

	std::string file;
	auto* validate = app.add_subcommand("validate", "Check structure and planarity of a divide");
	validate->add_option("file", file, "DIV file")->required();

	auto* stats_cmd = app.add_subcommand("stats", "Region counts, trace and fiber invariants");
	stats_cmd->add_option("file", file, "DIV file")->required();

	std::string which = "S";
	auto* matrices = app.add_subcommand("matrices", "Print S, T, C, TC or N");
	matrices->add_option("file", file, "DIV file")->required();
	matrices->add_option("--which", which, "S|T|C|TC|N")->check(CLI::IsMember({"S", "T", "C", "TC", "N"}));

	auto* verify = app.add_subcommand("verify", "Check every matrix identity");
	verify->add_option("file", file, "DIV file")->required();

	auto* invert = app.add_subcommand("strong-invert", "Rational strong inversion of T or of a matrix");
	invert->add_option("file", file, "DIV file or matrix file")->required();

	int gmax = 0;
	std::string symmetries = "rev,refl";
	std::string emit_dir;
	unsigned workers = 1;
	auto* census_cmd = app.add_subcommand("census", "Count interval divides by double points");
	census_cmd->add_option("--gmax", gmax, "Largest number of double points")->required();
	census_cmd->add_option("--symmetries", symmetries, "Subset of rev,refl, or none");
	census_cmd->add_option("--emit-divides", emit_dir, "Write one DIV file per class here");
	census_cmd->add_option("--workers", workers, "Worker threads");
	census_cmd->add_option("--budget", budget, "Candidate limit per genus");

	std::string output;
	auto* render = app.add_subcommand("render", "Draw a divide as SVG");
	render->add_option("file", file, "DIV file")->required();
	render->add_option("-o,--output", output, "Output path (stdout by default)");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int rc = app.exit(e);
		return rc == 0 ? 0 : exit_input;
	}

	try {
		if (*validate)
			return cmd_validate(file);
		if (*stats_cmd)
			return cmd_stats(file, flip);
		if (*matrices)
			return cmd_matrices(file, which, flip);
		if (*verify)
			return cmd_verify(file, flip);
		if (*invert)
			return cmd_strong_invert(file, flip, seed);
		if (*census_cmd)
			return cmd_census(gmax, symmetries, emit_dir, budget, workers);
		if (*render)
			return cmd_render(file, output, flip);
	} catch (const Error& e) {
		std::cerr << (file.empty() ? "" : file + ":");
		if (e.line() > 0)
			std::cerr << e.line() << ":";
		std::cerr << " " << e.what() << '\n';
		switch (classify(e.kind())) {
		case ErrorClass::Input: return exit_input;
		case ErrorClass::Precondition: return exit_precondition;
		case ErrorClass::Internal: return exit_internal;
		}
	} catch (const InputError& e) {
		std::cerr << "error: " << e.what() << '\n';
		return exit_input;
	}
	return exit_input;
}
