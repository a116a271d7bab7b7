// pptcost: exact-preparation PPT entanglement cost bounds from the command line.
//
// Exit codes: 0 success, 1 a verification ran but did not pass, 2 input
// validation, 3 numerical failure, 4 I/O, 5 resource limit.

#include "pptcost/errors.hpp"
#include "pptcost/io.hpp"
#include "pptcost/parallel.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <regex>

namespace fs = std::filesystem;
using namespace pptcost;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kCheckFailed = 1, kInvalid = 2, kNumerical = 3, kIo = 4, kResource = 5 };

void print_json(const json& j) {
	std::cout << j.dump(2) << '\n';
}

int cmd_measures(const std::string& input, bool text) {
	const DensityMatrix rho = io::state_from_json(io::read_json(input));
	const MeasureReport r = eppt_bounds(rho);
	if (text) {
		std::cout << io::to_text(r);
	} else {
		print_json(io::to_json(r));
	}
	return kOk;
}

int cmd_werner_scan(int d, int points, const std::string& out) {
	const std::string csv = io::scan_csv(figure1_scan(d, uniform_grid(points), env_threads()));
	if (out.empty()) {
		std::cout << csv;
	} else {
		io::write_text(out, csv);
	}
	return kOk;
}

int cmd_verify_map(const std::string& input, int n, bool exact, int max_dim) {
	const DensityMatrix rho = io::state_from_json(io::read_json(input));
	const MapVerification v = theorem_map_verify(rho, n, exact, max_dim);
	print_json(io::to_json(v));
	return v.all_pass() ? kOk : kCheckFailed;
}

int cmd_gaussian(const std::string& input, bool binegativity_check) {
	const CovarianceMatrix g = io::covariance_from_json(io::read_json(input));
	const RVector x = symplectic_eigenvalues(g.matrix());
	const RVector x_pt = symplectic_eigenvalues(pt_covariance(g));
	json report = {{"schema_version", io::kSchemaVersion},
	               {"modes", {g.modes().a, g.modes().b}},
	               {"symplectic_eigenvalues", std::vector<double>(x.begin(), x.end())},
	               {"pt_symplectic_eigenvalues", std::vector<double>(x_pt.begin(), x_pt.end())},
	               {"log_negativity", gaussian_log_negativity(g)}};
	bool pass = true;
	if (binegativity_check) {
		const BinegativityCovariance bi = binegativity_covariance(g);
		pass = bi.uncertainty_margin >= -1e-8;
		report["lemma1"] = {{"pass", pass},
		                    {"uncertainty_margin", bi.uncertainty_margin},
		                    {"corrections", std::vector<double>(bi.corrections.begin(), bi.corrections.end())},
		                    {"binegativity_covariance", io::covariance_to_json(bi.covariance)["data"]}};
	}
	print_json(report);
	return pass ? kOk : kCheckFailed;
}

Dims parse_dims(const std::string& text) {
	static const std::regex re(R"(^(\d+)[x,](\d+)$)");
	std::smatch m;
	if (!std::regex_match(text, m, re)) throw InvalidArgument("--dims must look like 3x3");
	return {std::stoi(m[1].str()), std::stoi(m[2].str())};
}

int cmd_survey(const std::string& dims, const std::string& ensemble, int samples, std::uint64_t seed, double tol) {
	const Dims d = parse_dims(dims);
	SurveyConfig cfg{d.a, d.b, Ensemble::parse(ensemble), samples, seed, tol};
	const SurveyResult r = run_survey(cfg, env_threads());
	print_json(io::to_json(cfg, r));
	return kOk;
}

void write_state(const fs::path& dir, const std::string& name, const DensityMatrix& rho) {
	io::write_text(dir / (name + ".json"), io::state_to_json(rho).dump(1) + "\n");
}

void write_cov(const fs::path& dir, const std::string& name, const CovarianceMatrix& g) {
	io::write_text(dir / (name + ".json"), io::covariance_to_json(g).dump(1) + "\n");
}

std::string p_tag(double p) {
	char buf[16];
	std::snprintf(buf, sizeof buf, "%03d", static_cast<int>(std::lround(p * 100)));
	return buf;
}

int cmd_fixtures(const std::string& out_dir) {
	const fs::path dir(out_dir);
	std::error_code ec;
	fs::create_directories(dir, ec);
	if (ec) throw io::IoError("cannot create '" + out_dir + "': " + ec.message());

	write_state(dir, "singlet", antisymmetric_state(2));
	for (int k = 2; k <= 4; ++k) write_state(dir, "phi_" + std::to_string(k), max_entangled(k));
	for (int d = 2; d <= 6; ++d) write_state(dir, "sigma_a_d" + std::to_string(d), antisymmetric_state(d));
	for (int i = 0; i <= 10; ++i) {
		const double p = i / 10.0;
		write_state(dir, "werner_d3_p" + p_tag(p), werner_state({3, p}));
	}
	CMatrix product = CMatrix::Zero(4, 4);
	product(0, 0) = 1.0; // |00><00|
	write_state(dir, "separable", DensityMatrix(product, Dims{2, 2}));
	write_cov(dir, "tms_r1", two_mode_squeezed(1.0));
	write_cov(dir, "vacuum", vacuum(Modes{1, 1}));
	write_cov(dir, "random_2x2_seed7", random_covariance(Modes{2, 2}, 7, 0.6));
	return kOk;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"Bounds on the exact-preparation PPT entanglement cost"};
	app.require_subcommand(1);

	std::string input;
	bool text = false;
	auto* measures = app.add_subcommand("measures", "Negativity, binegativity and cost bounds of a state file");
	measures->add_option("input", input, "state JSON file")->required();
	auto* json_flag = measures->add_flag("--json", "JSON output (default)");
	measures->add_flag("--text", text, "human-readable output")->excludes(json_flag);

	int d = 3;
	int points = 101;
	std::string out;
	auto* scan = app.add_subcommand("werner-scan", "Exact and mixing-protocol costs along the Werner family");
	scan->add_option("--d", d, "local dimension")->check(CLI::Range(2, 16));
	scan->add_option("--points", points, "uniform grid points on [0,1]")->check(CLI::Range(2, 100001));
	scan->add_option("--out", out, "CSV output path (stdout if omitted)");

	int n = 1;
	bool exact = false;
	int max_dim = kDefaultMaxDim;
	auto* verify = app.add_subcommand("verify-map", "Check the PPT map that prepares rho^{⊗n}");
	verify->add_option("input", input, "state JSON file")->required();
	verify->add_option("--n", n, "number of copies")->check(CLI::PositiveNumber);
	verify->add_flag("--exact", exact, "use the exact PPT condition (K-1, K+1 multipliers)");
	verify->add_option("--max-dim", max_dim, "limit on the total dimension of rho^{⊗n}")->check(CLI::PositiveNumber);

	bool bineg_check = false;
	auto* gauss = app.add_subcommand("gaussian", "Symplectic analysis of a covariance matrix file");
	gauss->add_option("input", input, "covariance JSON file")->required();
	gauss->add_flag("--binegativity-check", bineg_check, "construct the binegativity covariance and test it");

	std::string dims = "3x3";
	std::string ensemble = "hilbert-schmidt";
	int samples = 1000;
	std::uint64_t seed = 0;
	double tol = 1e-10;
	auto* survey = app.add_subcommand("survey", "Binegativity positivity over random states");
	survey->add_option("--dims", dims, "d_A x d_B, e.g. 3x3");
	survey->add_option("--ensemble", ensemble, "hilbert-schmidt | haar-pure | rank-limited(k)");
	survey->add_option("--samples", samples)->check(CLI::PositiveNumber);
	survey->add_option("--seed", seed);
	survey->add_option("--tolerance", tol);

	std::string fixture_dir = "fixtures";
	auto* fixtures = app.add_subcommand("fixtures", "Write canonical test states");
	fixtures->add_option("--out-dir", fixture_dir, "output directory");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e);
		return code == 0 ? kOk : kInvalid;
	}

	try {
		if (*measures) return cmd_measures(input, text);
		if (*scan) return cmd_werner_scan(d, points, out);
		if (*verify) return cmd_verify_map(input, n, exact, max_dim);
		if (*gauss) return cmd_gaussian(input, bineg_check);
		if (*survey) return cmd_survey(dims, ensemble, samples, seed, tol);
		if (*fixtures) return cmd_fixtures(fixture_dir);
	} catch (const io::IoError& e) {
		std::cerr << "pptcost: " << e.what() << '\n';
		return kIo;
	} catch (const InvalidArgument& e) {
		std::cerr << "pptcost: invalid input: " << e.what() << '\n';
		return kInvalid;
	} catch (const ResourceLimit& e) {
		std::cerr << "pptcost: " << e.what() << '\n';
		return kResource;
	} catch (const NumericalFailure& e) {
		std::cerr << "pptcost: numerical failure: " << e.what() << '\n';
		return kNumerical;
	} catch (const nlohmann::json::exception& e) {
		std::cerr << "pptcost: invalid input: " << e.what() << '\n';
		return kInvalid;
	}
	return kInvalid;
}
