#pragma once

#include "pptcost/gaussian.hpp"
#include "pptcost/linalg.hpp"
#include "pptcost/measures.hpp"
#include "pptcost/survey.hpp"
#include "pptcost/werner.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace pptcost::io {

inline constexpr int kSchemaVersion = 1;

/// Thrown for unreadable or unwritable files (CLI exit code 4).
class IoError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

// State files: {"schema_version", "dims": [dA, dB], "re": [[..]], "im": [[..]]}, row-major.
[[nodiscard]] nlohmann::json state_to_json(const DensityMatrix& rho);
[[nodiscard]] DensityMatrix state_from_json(const nlohmann::json& j);

// Covariance files: {"schema_version", "modes": [nA, nB], "data": [[..]]}, row-major.
[[nodiscard]] nlohmann::json covariance_to_json(const CovarianceMatrix& g);
[[nodiscard]] CovarianceMatrix covariance_from_json(const nlohmann::json& j);

[[nodiscard]] nlohmann::json to_json(const MeasureReport& r);
[[nodiscard]] nlohmann::json to_json(const MapVerification& v);
[[nodiscard]] nlohmann::json to_json(const SurveyConfig& cfg, const SurveyResult& r);

/// Text rendering of a measure report, one "key: value" per line.
[[nodiscard]] std::string to_text(const MeasureReport& r);

/// `p,exact_cost,mixing_cost,is_ppt` with 12 significant digits.
[[nodiscard]] std::string scan_csv(const std::vector<ScanRow>& rows);

/// printf("%.12g") of x, with negative zero printed as 0.
[[nodiscard]] std::string format_12g(double x);

[[nodiscard]] nlohmann::json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

} // namespace pptcost::io
