#pragma once

#include "pptcost/linalg.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace pptcost {

enum class EnsembleKind { HilbertSchmidt, HaarPure, RankLimited };

struct Ensemble {
	EnsembleKind kind = EnsembleKind::HilbertSchmidt;
	int rank = 0; // used by RankLimited only

	/// "hilbert-schmidt", "haar-pure" or "rank-limited(k)".
	[[nodiscard]] std::string name() const;
	/// Accepts the names above plus the short forms "hs", "pure", "rank:k".
	static Ensemble parse(const std::string& text);
};

struct SurveyConfig {
	int d_a = 2;
	int d_b = 2;
	Ensemble ensemble;
	int samples = 1;
	std::uint64_t seed = 0;
	double tolerance = 1e-10;

	void validate() const;
};

struct SurveyFailure {
	int offset = 0;
	double min_eigenvalue = 0.0;
};

struct SurveyResult {
	int total = 0;
	int positive_count = 0;
	int npt_count = 0;
	double min_binegativity_eigenvalue_overall = 0.0;
	std::vector<SurveyFailure> failures;

	[[nodiscard]] double positive_fraction() const { return total == 0 ? 0.0 : double(positive_count) / total; }
};

/// Hilbert-Schmidt: G G^† / tr with G square complex Ginibre. Haar pure:
/// normalized complex Gaussian vector. Rank-limited(k): G is (d_A d_B) x k.
[[nodiscard]] DensityMatrix random_density_matrix(Dims dims, const Ensemble& ensemble, std::mt19937_64& rng);

/// Generator for sample `offset`, derived only from (seed, offset).
[[nodiscard]] std::mt19937_64 sample_rng(std::uint64_t seed, int offset);

/// The state the survey draws at `offset`, reproducible standalone.
[[nodiscard]] DensityMatrix survey_sample(const SurveyConfig& cfg, int offset);

/// Binegativity check of one state: (min eigenvalue, trace norm of the binegativity).
struct BinegativityCheck {
	double min_eigenvalue = 0.0;
	double scale = 1.0;
	bool is_npt = false;
};
[[nodiscard]] BinegativityCheck check_binegativity(const DensityMatrix& rho);

[[nodiscard]] SurveyResult run_survey(const SurveyConfig& cfg, int threads = 1);

/// Same tally over an explicit list of states (offsets are list indices).
[[nodiscard]] SurveyResult survey_states(const std::vector<DensityMatrix>& states, double tolerance, int threads = 1);

} // namespace pptcost
