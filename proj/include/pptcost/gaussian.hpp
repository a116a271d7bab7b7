#pragma once

#include "pptcost/linalg.hpp"

#include <cstdint>

namespace pptcost {

/// Mode counts of a bipartite continuous-variable system.
struct Modes {
	int a = 1;
	int b = 1;

	[[nodiscard]] int total() const { return a + b; }
	friend bool operator==(const Modes&, const Modes&) = default;
};

/**
 * Covariance matrix of a Gaussian state.
 *
 * Quadratures are mode-ordered (x1, p1, x2, p2, ...), modes of A first, the
 * symplectic form is the direct sum of [[0, 1], [-1, 0]] and the vacuum is
 * the identity. A matrix is a valid covariance matrix iff it is symmetric
 * and Γ + iΣ >= 0.
 */
class CovarianceMatrix {
public:
	static constexpr double kSymmetryTol = 1e-12;
	static constexpr double kUncertaintyTol = 1e-9;

	/// Throws InvalidArgument naming the violated invariant.
	CovarianceMatrix(RMatrix data, Modes modes, double uncertainty_tol = kUncertaintyTol);

	[[nodiscard]] const RMatrix& matrix() const { return data_; }
	[[nodiscard]] Modes modes() const { return modes_; }

private:
	RMatrix data_;
	Modes modes_;
};

/// Γ = S^{-1} diag(x1, x1, ..., xn, xn) S^{-T}, with S symplectic.
struct WilliamsonDecomposition {
	RMatrix s;
	RVector values; // ascending
};

struct BinegativityCovariance {
	CovarianceMatrix covariance;
	RVector corrections;         // p_i per normal mode of PΓP
	RVector pt_symplectic_values; // x_i of PΓP, ascending
	double uncertainty_margin;   // min eigenvalue of Γ_bi + iΣ
};

[[nodiscard]] RMatrix symplectic_form(int n);

/// diag(1, ..., 1, 1, -1, ..., 1, -1): flips the momentum quadratures of B.
[[nodiscard]] RMatrix mirror_reflection(Modes modes);

/// PΓP, the covariance-level partial transpose on B.
[[nodiscard]] RMatrix pt_covariance(const RMatrix& g, Modes modes);
[[nodiscard]] RMatrix pt_covariance(const CovarianceMatrix& g);

/// min eigenvalue of the Hermitian matrix m + iΣ.
[[nodiscard]] double uncertainty_margin(const RMatrix& m);

[[nodiscard]] RVector symplectic_eigenvalues(const RMatrix& m);
[[nodiscard]] WilliamsonDecomposition williamson(const RMatrix& m);

/// Covariance matrix of the normalized binegativity |rho^Γ|^Γ / ||rho^Γ||_1.
/// Throws NumericalFailure if the result violates the uncertainty relation
/// by more than 1e-8.
[[nodiscard]] BinegativityCovariance binegativity_covariance(const CovarianceMatrix& g);

/// Sum over normal modes of max(0, -log2 x) for the symplectic values of PΓP.
[[nodiscard]] double gaussian_log_negativity(const CovarianceMatrix& g);

[[nodiscard]] CovarianceMatrix two_mode_squeezed(double r);
[[nodiscard]] CovarianceMatrix vacuum(Modes modes);

/// Γ = S^T D S with S = exp(ΣH), H symmetric with N(0, strength^2) entries,
/// and D = diag(x_i, x_i) with x_i = 1 + strength * |N(0, 1)|.
[[nodiscard]] CovarianceMatrix random_covariance(Modes modes, std::uint64_t seed, double strength);

/// Random symplectic matrix exp(ΣH) as used by random_covariance.
[[nodiscard]] RMatrix random_symplectic(int n, std::uint64_t seed, double strength);

/// Independent pair: modes regrouped as (A of x, A of y | B of x, B of y).
[[nodiscard]] CovarianceMatrix direct_sum(const CovarianceMatrix& x, const CovarianceMatrix& y);

} // namespace pptcost
