#include "pptcost/survey.hpp"

#include "pptcost/errors.hpp"
#include "pptcost/measures.hpp"
#include "pptcost/parallel.hpp"

#include <algorithm>
#include <limits>
#include <regex>

namespace pptcost {

std::string Ensemble::name() const {
	switch (kind) {
	case EnsembleKind::HilbertSchmidt: return "hilbert-schmidt";
	case EnsembleKind::HaarPure: return "haar-pure";
	case EnsembleKind::RankLimited: return "rank-limited(" + std::to_string(rank) + ")";
	}
	return "unknown";
}

Ensemble Ensemble::parse(const std::string& text) {
	if (text == "hilbert-schmidt" || text == "hs") return {EnsembleKind::HilbertSchmidt, 0};
	if (text == "haar-pure" || text == "pure") return {EnsembleKind::HaarPure, 1};
	static const std::regex rank_re(R"(^(?:rank-limited\((\d+)\)|rank:(\d+))$)");
	std::smatch m;
	if (std::regex_match(text, m, rank_re)) {
		const std::string digits = m[1].matched ? m[1].str() : m[2].str();
		const int k = std::stoi(digits);
		if (k < 1) throw InvalidArgument("ensemble: rank must be >= 1");
		return {EnsembleKind::RankLimited, k};
	}
	throw InvalidArgument("unknown ensemble '" + text + "'");
}

void SurveyConfig::validate() const {
	if (d_a < 2 || d_a > 8 || d_b < 2 || d_b > 8) throw InvalidArgument("SurveyConfig: dimensions must lie in [2, 8]");
	if (samples < 1) throw InvalidArgument("SurveyConfig: samples must be >= 1");
	if (ensemble.kind == EnsembleKind::RankLimited && (ensemble.rank < 1 || ensemble.rank > d_a * d_b)) {
		throw InvalidArgument("SurveyConfig: rank must lie in [1, d_A d_B]");
	}
	if (!(tolerance >= 0.0)) throw InvalidArgument("SurveyConfig: tolerance must be >= 0");
}

DensityMatrix random_density_matrix(Dims dims, const Ensemble& ensemble, std::mt19937_64& rng) {
	const int n = dims.total();
	int cols = n;
	if (ensemble.kind == EnsembleKind::HaarPure) cols = 1;
	if (ensemble.kind == EnsembleKind::RankLimited) cols = ensemble.rank;
	if (cols < 1 || cols > n) throw InvalidArgument("random_density_matrix: rank must lie in [1, d_A d_B]");

	std::normal_distribution<double> normal(0.0, 1.0);
	CMatrix g(n, cols);
	for (int j = 0; j < cols; ++j) {
		for (int i = 0; i < n; ++i) {
			const double re = normal(rng);
			const double im = normal(rng);
			g(i, j) = cplx(re, im);
		}
	}
	CMatrix rho = g * g.adjoint();
	rho /= rho.trace().real();
	return DensityMatrix(std::move(rho), dims);
}

std::mt19937_64 sample_rng(std::uint64_t seed, int offset) {
	std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
	                  static_cast<std::uint32_t>(offset)};
	return std::mt19937_64(seq);
}

DensityMatrix survey_sample(const SurveyConfig& cfg, int offset) {
	cfg.validate();
	std::mt19937_64 rng = sample_rng(cfg.seed, offset);
	return random_density_matrix(Dims{cfg.d_a, cfg.d_b}, cfg.ensemble, rng);
}

BinegativityCheck check_binegativity(const DensityMatrix& rho) {
	const CMatrix bineg = binegativity(rho);
	const RVector ev = hermitian_eigenvalues(bineg);
	const RVector pt_ev = hermitian_eigenvalues(partial_transpose(rho.matrix(), rho.dims()));
	return {ev(0), ev.cwiseAbs().sum(), pt_ev(0) < -1e-10};
}

namespace {

SurveyResult tally(const std::vector<BinegativityCheck>& checks, double tolerance) {
	SurveyResult r;
	r.total = static_cast<int>(checks.size());
	r.min_binegativity_eigenvalue_overall = std::numeric_limits<double>::infinity();
	for (int i = 0; i < r.total; ++i) {
		const BinegativityCheck& c = checks[i];
		r.min_binegativity_eigenvalue_overall = std::min(r.min_binegativity_eigenvalue_overall, c.min_eigenvalue);
		if (c.is_npt) ++r.npt_count;
		if (c.min_eigenvalue >= -tolerance * c.scale) {
			++r.positive_count;
		} else {
			r.failures.push_back({i, c.min_eigenvalue});
		}
	}
	return r;
}

} // namespace

SurveyResult run_survey(const SurveyConfig& cfg, int threads) {
	cfg.validate();
	const auto checks = parallel_map<BinegativityCheck>(cfg.samples, threads, [&](int offset) {
		return check_binegativity(survey_sample(cfg, offset));
	});
	return tally(checks, cfg.tolerance);
}

SurveyResult survey_states(const std::vector<DensityMatrix>& states, double tolerance, int threads) {
	const auto checks = parallel_map<BinegativityCheck>(static_cast<int>(states.size()), threads, [&](int i) {
		return check_binegativity(states[i]);
	});
	return tally(checks, tolerance);
}

} // namespace pptcost
