#include "pptcost/werner.hpp"

#include "pptcost/errors.hpp"
#include "pptcost/measures.hpp"
#include "pptcost/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pptcost {

void WernerParams::validate() const {
	if (d < 2) throw InvalidArgument("WernerParams: d must be >= 2, got " + std::to_string(d));
	if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("WernerParams: p must lie in [0, 1], got " + std::to_string(p));
}

DensityMatrix werner_state(const WernerParams& w) {
	w.validate();
	const double d = w.d;
	const CMatrix id = CMatrix::Identity(w.d * w.d, w.d * w.d);
	const CMatrix f = flip_operator(w.d);
	return DensityMatrix(w.p * (id - f) / (d * (d - 1)) + (1 - w.p) * (id + f) / (d * (d + 1)), Dims{w.d, w.d});
}

DensityMatrix werner_from_mixture(int d, double p) {
	WernerParams{d, p}.validate();
	const auto [sym, antisym] = sym_antisym_projectors(d);
	const double dim_a = d * (d - 1) / 2.0;
	const double dim_s = d * (d + 1) / 2.0;
	return DensityMatrix(p * antisym / dim_a + (1 - p) * sym / dim_s, Dims{d, d});
}

DensityMatrix antisymmetric_state(int d) {
	return werner_state({d, 1.0});
}

DensityMatrix symmetric_state(int d) {
	return werner_state({d, 0.0});
}

WernerClosedForms closed_forms(const WernerParams& w) {
	w.validate();
	const double d = w.d;
	const double p = w.p;
	WernerClosedForms c;
	c.q = p / (d * (d - 1)) + (1 - p) / (d * (d + 1));
	c.r = (1 - p) / (d + 1) - p / (d - 1);
	// (d - 1 + 2p + |1 - 2p|) / d, split so the PPT branch is exactly 1.
	c.trace_norm_pt = p <= 0.5 ? 1.0 : (d - 2 + 4 * p) / d;
	c.log_negativity = std::log2(c.trace_norm_pt);
	return c;
}

CMatrix binegativity_closed(const WernerParams& w) {
	const WernerClosedForms c = closed_forms(w);
	const double d = w.d;
	const CMatrix id = CMatrix::Identity(w.d * w.d, w.d * w.d);
	const CMatrix f = flip_operator(w.d);
	return c.q * (id - f / d) + std::abs(c.q + c.r) / d * f;
}

RVector pt_spectrum_closed(const WernerParams& w) {
	const WernerClosedForms c = closed_forms(w);
	RVector spec = RVector::Constant(w.d * w.d, c.q);
	spec(0) = c.q + c.r;
	std::sort(spec.begin(), spec.end());
	return spec;
}

double mixing_protocol_cost(const WernerParams& w) {
	w.validate();
	if (w.p <= 0.5) return 0.0;
	return (2 * w.p - 1) * std::log2((w.d + 2.0) / w.d);
}

std::vector<double> uniform_grid(int points) {
	if (points < 2) throw InvalidArgument("uniform_grid: need at least 2 points");
	std::vector<double> grid(points);
	for (int i = 0; i < points; ++i) grid[i] = static_cast<double>(i) / (points - 1);
	return grid;
}

std::vector<ScanRow> figure1_scan(int d, const std::vector<double>& grid, int threads) {
	for (double p : grid) WernerParams{d, p}.validate();
	return parallel_map<ScanRow>(static_cast<int>(grid.size()), threads, [&](int i) {
		const WernerParams w{d, grid[i]};
		const WernerClosedForms c = closed_forms(w);
		const MeasureReport numeric = eppt_bounds(werner_state(w));
		if (!numeric.bounds_coincide || std::abs(numeric.eppt_upper - c.log_negativity) > kBoundTol) {
			throw NumericalFailure("figure1_scan: numeric cost bounds disagree with closed form at p = " +
			                       std::to_string(w.p));
		}
		return ScanRow{w.p, c.log_negativity, mixing_protocol_cost(w), numeric.is_ppt};
	});
}

} // namespace pptcost
