#include "pptcost/io.hpp"

#include "pptcost/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace pptcost::io {

using nlohmann::json;

namespace {

json matrix_rows(const RMatrix& m) {
	json rows = json::array();
	for (Eigen::Index i = 0; i < m.rows(); ++i) {
		json row = json::array();
		for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
		rows.push_back(std::move(row));
	}
	return rows;
}

RMatrix parse_rows(const json& rows, int n, const char* field) {
	if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
		throw InvalidArgument(std::string("'") + field + "' must be an array of " + std::to_string(n) + " rows");
	}
	RMatrix m(n, n);
	for (int i = 0; i < n; ++i) {
		const json& row = rows[i];
		if (!row.is_array() || static_cast<int>(row.size()) != n) {
			throw InvalidArgument(std::string("'") + field + "' row " + std::to_string(i) + " must have " +
			                      std::to_string(n) + " entries");
		}
		for (int j = 0; j < n; ++j) {
			if (!row[j].is_number()) throw InvalidArgument(std::string("'") + field + "' entries must be numbers");
			m(i, j) = row[j].get<double>();
		}
	}
	return m;
}

std::pair<int, int> parse_pair(const json& j, const char* field) {
	if (!j.contains(field) || !j[field].is_array() || j[field].size() != 2 || !j[field][0].is_number_integer() ||
	    !j[field][1].is_number_integer()) {
		throw InvalidArgument(std::string("'") + field + "' must be an array of two integers");
	}
	return {j[field][0].get<int>(), j[field][1].get<int>()};
}

void check_schema(const json& j) {
	if (!j.contains("schema_version")) return; // hand-written inputs may omit it
	if (!j["schema_version"].is_number_integer() || j["schema_version"].get<int>() != kSchemaVersion) {
		throw InvalidArgument("unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
	}
}

} // namespace

json state_to_json(const DensityMatrix& rho) {
	return {{"schema_version", kSchemaVersion},
	        {"dims", {rho.dims().a, rho.dims().b}},
	        {"re", matrix_rows(rho.matrix().real())},
	        {"im", matrix_rows(rho.matrix().imag())}};
}

DensityMatrix state_from_json(const json& j) {
	if (!j.is_object()) throw InvalidArgument("state file must be a JSON object");
	check_schema(j);
	const auto [da, db] = parse_pair(j, "dims");
	if (da < 1 || db < 1) throw InvalidArgument("'dims' entries must be positive");
	const int n = da * db;
	if (!j.contains("re") || !j.contains("im")) throw InvalidArgument("state file needs 're' and 'im'");
	CMatrix m(n, n);
	m.real() = parse_rows(j["re"], n, "re");
	m.imag() = parse_rows(j["im"], n, "im");
	return DensityMatrix(std::move(m), Dims{da, db});
}

json covariance_to_json(const CovarianceMatrix& g) {
	return {{"schema_version", kSchemaVersion},
	        {"modes", {g.modes().a, g.modes().b}},
	        {"data", matrix_rows(g.matrix())}};
}

CovarianceMatrix covariance_from_json(const json& j) {
	if (!j.is_object()) throw InvalidArgument("covariance file must be a JSON object");
	check_schema(j);
	const auto [na, nb] = parse_pair(j, "modes");
	if (na < 1 || nb < 1) throw InvalidArgument("'modes' entries must be positive");
	if (!j.contains("data")) throw InvalidArgument("covariance file needs 'data'");
	return CovarianceMatrix(parse_rows(j["data"], 2 * (na + nb), "data"), Modes{na, nb});
}

json to_json(const MeasureReport& r) {
	return {{"schema_version", kSchemaVersion},
	        {"trace_norm_pt", r.trace_norm_pt},
	        {"negativity", r.negativity},
	        {"log_negativity", r.log_negativity},
	        {"alpha", r.alpha},
	        {"z_value", r.z_value},
	        {"eppt_lower", r.eppt_lower},
	        {"eppt_upper", r.eppt_upper},
	        {"is_ppt", r.is_ppt},
	        {"bounds_coincide", r.bounds_coincide}};
}

json to_json(const MapVerification& v) {
	return {{"schema_version", kSchemaVersion},
	        {"n", v.n},
	        {"exact_condition", v.exact_condition},
	        {"z", v.z},
	        {"z_power", v.z_power},
	        {"k", v.k},
	        {"alpha", v.alpha},
	        {"tolerance", v.tolerance},
	        {"g_psd", v.g_psd},
	        {"g_ppt", v.g_ppt},
	        {"lower_holds", v.lower_holds},
	        {"upper_holds", v.upper_holds},
	        {"choi_cp", v.choi_cp},
	        {"choi_tp", v.choi_tp},
	        {"choi_ppt", v.choi_ppt},
	        {"all_pass", v.all_pass()},
	        {"margins",
	         {{"g_min_eigenvalue", v.g_min_eigenvalue},
	          {"g_pt_min_eigenvalue", v.g_pt_min_eigenvalue},
	          {"lower", v.lower_margin},
	          {"upper", v.upper_margin},
	          {"choi_cp", v.choi_cp_margin},
	          {"choi_tp_residual", v.choi_tp_residual},
	          {"choi_ppt", v.choi_ppt_margin}}}};
}

json to_json(const SurveyConfig& cfg, const SurveyResult& r) {
	json failures = json::array();
	for (const SurveyFailure& f : r.failures) failures.push_back({{"offset", f.offset}, {"min_eigenvalue", f.min_eigenvalue}});
	return {{"schema_version", kSchemaVersion},
	        {"dims", {cfg.d_a, cfg.d_b}},
	        {"ensemble", cfg.ensemble.name()},
	        {"samples", cfg.samples},
	        {"seed", cfg.seed},
	        {"tolerance", cfg.tolerance},
	        {"total", r.total},
	        {"positive_count", r.positive_count},
	        {"positive_fraction", r.positive_fraction()},
	        {"npt_count", r.npt_count},
	        {"min_binegativity_eigenvalue_overall", r.min_binegativity_eigenvalue_overall},
	        {"failures", std::move(failures)}};
}

std::string to_text(const MeasureReport& r) {
	std::ostringstream os;
	os << "trace_norm_pt:   " << format_12g(r.trace_norm_pt) << '\n'
	   << "negativity:      " << format_12g(r.negativity) << '\n'
	   << "log_negativity:  " << format_12g(r.log_negativity) << '\n'
	   << "alpha:           " << format_12g(r.alpha) << '\n'
	   << "z_value:         " << format_12g(r.z_value) << '\n'
	   << "eppt_lower:      " << format_12g(r.eppt_lower) << '\n'
	   << "eppt_upper:      " << format_12g(r.eppt_upper) << '\n'
	   << "is_ppt:          " << (r.is_ppt ? "true" : "false") << '\n'
	   << "bounds_coincide: " << (r.bounds_coincide ? "true" : "false") << '\n';
	return os.str();
}

std::string format_12g(double x) {
	if (x == 0.0) x = 0.0; // drop the sign of -0
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.12g", x);
	return buf;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
	std::string out = "p,exact_cost,mixing_cost,is_ppt\n";
	for (const ScanRow& r : rows) {
		out += format_12g(r.p) + ',' + format_12g(r.exact_cost) + ',' + format_12g(r.mixing_cost) + ',' +
		       (r.is_ppt ? "true" : "false") + '\n';
	}
	return out;
}

json read_json(const std::filesystem::path& path) {
	std::ifstream in(path);
	if (!in) throw IoError("cannot open '" + path.string() + "'");
	try {
		return json::parse(in);
	} catch (const json::parse_error& e) {
		throw InvalidArgument("'" + path.string() + "' is not valid JSON: " + e.what());
	}
}

void write_text(const std::filesystem::path& path, const std::string& text) {
	std::ofstream out(path, std::ios::binary);
	if (!out) throw IoError("cannot write '" + path.string() + "'");
	out << text;
	out.flush();
	if (!out) throw IoError("write to '" + path.string() + "' failed");
}

} // namespace pptcost::io
