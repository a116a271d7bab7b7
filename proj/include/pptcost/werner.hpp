#pragma once

#include "pptcost/linalg.hpp"

#include <vector>

namespace pptcost {

/**
 * Werner state on C^d ⊗ C^d,
 *
 *   rho = p (I - F) / (d(d-1)) + (1 - p) (I + F) / (d(d+1)),
 *
 * i.e. p sigma_a + (1 - p) sigma_s with sigma_a, sigma_s the normalized
 * antisymmetric and symmetric projectors. p = 1 is the antisymmetric state.
 */
struct WernerParams {
	int d = 2;
	double p = 0.0;

	/// Throws InvalidArgument unless d >= 2 and 0 <= p <= 1.
	void validate() const;
};

/// rho = q I + r F/d, so rho^Γ has eigenvalue q (d^2 - 1 times) and q + r (once).
struct WernerClosedForms {
	double q = 0.0;
	double r = 0.0;
	double trace_norm_pt = 1.0; // (d - 1 + 2p + |1 - 2p|) / d
	double log_negativity = 0.0;
};

[[nodiscard]] DensityMatrix werner_state(const WernerParams& w);

/// p sigma_a + (1 - p) sigma_s, built from the projectors. Same family as werner_state.
[[nodiscard]] DensityMatrix werner_from_mixture(int d, double p);

[[nodiscard]] DensityMatrix antisymmetric_state(int d);
[[nodiscard]] DensityMatrix symmetric_state(int d);

[[nodiscard]] WernerClosedForms closed_forms(const WernerParams& w);

/// q (I - F/d) + |q + r| F/d.
[[nodiscard]] CMatrix binegativity_closed(const WernerParams& w);

/// Sorted closed-form spectrum of rho^Γ.
[[nodiscard]] RVector pt_spectrum_closed(const WernerParams& w);

/// Cost of the mixing protocol: sigma_a with probability 2p - 1, the
/// PPT state (sigma_a + sigma_s)/2 otherwise. Zero for p <= 1/2.
[[nodiscard]] double mixing_protocol_cost(const WernerParams& w);

struct ScanRow {
	double p = 0.0;
	double exact_cost = 0.0;
	double mixing_cost = 0.0;
	bool is_ppt = true;
};

/// Uniform grid of `points` values on [0, 1], endpoints included.
[[nodiscard]] std::vector<double> uniform_grid(int points = 101);

/// Exact-preparation cost and mixing-protocol cost along a grid of p values.
/// Every exact cost is the closed-form log negativity and is cross-checked
/// against the numeric cost bounds; a mismatch throws NumericalFailure.
[[nodiscard]] std::vector<ScanRow> figure1_scan(int d, const std::vector<double>& grid, int threads = 1);

} // namespace pptcost
