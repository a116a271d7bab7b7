#pragma once

#include "pptcost/linalg.hpp"

#include <cstddef>
#include <string>

namespace pptcost {

/// Absolute tolerance on log2 values for declaring the cost bounds equal.
inline constexpr double kBoundTol = 1e-9;

/// Default cap on the total dimension of rho^{⊗n} for dense map verification.
inline constexpr int kDefaultMaxDim = 64;

/// Scalar entanglement measures of one state, together with the lower and
/// upper bounds on the exact-preparation PPT cost.
///
/// The lower bound is the logarithmic negativity and the upper bound is
/// log2 Z, where Z = tr|rho^Γ| + dim(rho) * alpha and alpha is the magnitude
/// of the most negative eigenvalue of the binegativity |rho^Γ|^Γ.
struct MeasureReport {
	double trace_norm_pt = 1.0;
	double negativity = 1.0; // same quantity as trace_norm_pt
	double log_negativity = 0.0;
	double alpha = 0.0;
	double z_value = 1.0;
	double eppt_lower = 0.0;
	double eppt_upper = 0.0;
	bool is_ppt = true;
	bool bounds_coincide = true;
};

/// Maximally entangled state on C^k ⊗ C^k.
[[nodiscard]] DensityMatrix max_entangled(int k);

/// Swap operator on C^d ⊗ C^d: F|ij> = |ji>.
[[nodiscard]] CMatrix flip_operator(int d);

struct SymAntisymProjectors {
	CMatrix sym;
	CMatrix antisym;
};

/// Projectors (I + F)/2 and (I - F)/2 onto the symmetric and antisymmetric subspaces.
[[nodiscard]] SymAntisymProjectors sym_antisym_projectors(int d);

[[nodiscard]] double log_negativity(const DensityMatrix& rho);

/// |rho^Γ|^Γ, partial transposes taken on subsystem B.
[[nodiscard]] CMatrix binegativity(const DensityMatrix& rho);

[[nodiscard]] double alpha(const DensityMatrix& rho);
[[nodiscard]] double z_value(const DensityMatrix& rho);
[[nodiscard]] MeasureReport eppt_bounds(const DensityMatrix& rho);

/// rho^{⊗n} with factors regrouped as (A_1..A_n)(B_1..B_n), so the result is
/// again bipartite with dims (d_A^n, d_B^n).
[[nodiscard]] DensityMatrix tensor_power(const DensityMatrix& rho, int n, int max_dim = kDefaultMaxDim);

/// The PPT target state of the upper-bound map,
/// G = (|rho^Γ|^Γ + alpha I)^{⊗n} / Z^n, in the same grouping as tensor_power.
[[nodiscard]] DensityMatrix construct_g(const DensityMatrix& rho, int n, int max_dim = kDefaultMaxDim);

/**
 * Choi matrix of a map from operators on C^k ⊗ C^k to operators on the
 * output bipartite space, J = sum_ij |i><j| ⊗ Psi(|i><j|).
 *
 * Tensor factors are ordered (in_A, in_B, out_A, out_B) with in_A = in_B = k.
 */
struct ChoiMatrix {
	CMatrix data;
	int input_dim = 1;  // k^2
	int output_dim = 1; // d_A * d_B
	Dims input_bipartition{1, 1};
	Dims output_bipartition{1, 1};
};

/// Choi matrix of Psi(X) = tr(X Phi(k)) f + tr(X (I - Phi(k))) g.
[[nodiscard]] ChoiMatrix choi_matrix(const DensityMatrix& f, const DensityMatrix& g, int k);

/// Psi(x) recovered from the Choi matrix by contraction: tr_in[(x^T ⊗ I) J].
[[nodiscard]] CMatrix apply_choi(const ChoiMatrix& c, const CMatrix& x);

/// min eigenvalue of J (complete positivity margin).
[[nodiscard]] double choi_cp_margin(const ChoiMatrix& c);
/// max |tr_out J - I| (trace preservation residual).
[[nodiscard]] double choi_tp_residual(const ChoiMatrix& c);
/// min eigenvalue of the Choi matrix of Γ∘Psi∘Γ.
[[nodiscard]] double choi_ppt_margin(const ChoiMatrix& c);
[[nodiscard]] bool choi_ppt_check(const ChoiMatrix& c);

struct MapVerification {
	int n = 1;
	bool exact_condition = true;
	double z = 1.0;
	double z_power = 1.0; // Z^n
	int k = 1;            // integer Schmidt rank of the resource state
	double alpha = 0.0;

	// Minimum eigenvalues: G, G^Γ, F^Γ + c_lo G^Γ, c_hi G^Γ - F^Γ.
	double g_min_eigenvalue = 0.0;
	double g_pt_min_eigenvalue = 0.0;
	double lower_margin = 0.0;
	double upper_margin = 0.0;
	double tolerance = 0.0;

	bool g_psd = false;
	bool g_ppt = false;
	bool lower_holds = false;
	bool upper_holds = false;

	double choi_cp_margin = 0.0;
	double choi_tp_residual = 0.0;
	double choi_ppt_margin = 0.0;
	bool choi_cp = false;
	bool choi_tp = false;
	bool choi_ppt = false;

	[[nodiscard]] bool inequalities_hold() const { return g_psd && g_ppt && lower_holds && upper_holds; }
	[[nodiscard]] bool all_pass() const { return inequalities_hold() && choi_cp && choi_tp && choi_ppt; }
};

/// Smallest integer resource dimension for which the constructed G satisfies
/// the PPT condition: 1 for PPT states, otherwise ceil(Z^n) + 1 for the exact
/// condition -(K-1)G^Γ <= F^Γ <= (K+1)G^Γ and ceil(Z^n) for -K G^Γ <= F^Γ <= K G^Γ.
[[nodiscard]] int resource_dimension(double z_power, bool is_ppt, bool exact_condition);

/// Builds F = rho^{⊗n} and G, checks the PPT condition at the integer
/// dimension from resource_dimension, and checks the Choi matrix of the map
/// for complete positivity, trace preservation and PPT preservation.
/// A positive `k_override` replaces the automatic resource dimension.
[[nodiscard]] MapVerification theorem_map_verify(const DensityMatrix& rho, int n, bool use_exact_condition,
                                                 int max_dim = kDefaultMaxDim, int k_override = 0);

/// Numeric record for the antisymmetric Werner state: the cost bounds
/// coincide with log2((d+2)/d), which pins every cost in between.
struct ChainRecord {
	int d = 2;
	double log_negativity = 0.0;
	double eppt_lower = 0.0;
	double eppt_upper = 0.0;
	double expected = 0.0;
	double alpha = 0.0;
	bool bounds_coincide = false;
	bool matches_expected = false;
	std::string chain; // textual account of which quantities are pinned
};

[[nodiscard]] ChainRecord lemma3_chain_check(int d);

} // namespace pptcost
