#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace pptcost {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Local dimensions of a bipartite system A⊗B.
struct Dims {
	int a = 1;
	int b = 1;

	[[nodiscard]] int total() const { return a * b; }
	friend bool operator==(const Dims&, const Dims&) = default;
};

enum class Subsystem { A, B };

/**
 * A bipartite density operator: Hermitian, positive semidefinite, unit trace.
 *
 * Construction validates all invariants and stores the Hermitian part of the
 * input, so downstream eigensolvers always see an exactly Hermitian matrix.
 */
class DensityMatrix {
public:
	static constexpr double kHermitianTol = 1e-12; // relative to max |entry|
	static constexpr double kTraceTol = 1e-12;
	static constexpr double kPsdTol = 1e-10;

	/// Throws InvalidArgument naming the violated invariant.
	DensityMatrix(CMatrix data, Dims dims);

	[[nodiscard]] const CMatrix& matrix() const { return data_; }
	[[nodiscard]] Dims dims() const { return dims_; }
	[[nodiscard]] int dim() const { return dims_.total(); }

private:
	CMatrix data_;
	Dims dims_;
};

/// Eigenvalues ascending; eigenvector columns phase-fixed so that the first
/// component of non-negligible magnitude is real and positive.
struct HermitianSpectrum {
	RVector eigenvalues;
	CMatrix eigenvectors;
};

[[nodiscard]] double max_abs(const CMatrix& m);

/// Transposes the chosen tensor factor. Entry permutation only, so applying
/// it twice reproduces the input bit for bit.
[[nodiscard]] CMatrix partial_transpose(const CMatrix& m, Dims dims, Subsystem sys = Subsystem::B);

/// Multipartite form: transposes every factor k with transpose[k] set.
[[nodiscard]] CMatrix partial_transpose(const CMatrix& m, std::span<const int> factor_dims,
                                        std::span<const bool> transpose);

/// Reorders tensor factors: output factor k is input factor order[k].
[[nodiscard]] CMatrix permute_factors(const CMatrix& m, std::span<const int> factor_dims,
                                      std::span<const int> order);

/// Traces out the factors with trace_out[k] set; remaining factors keep their order.
[[nodiscard]] CMatrix partial_trace(const CMatrix& m, std::span<const int> factor_dims,
                                    std::span<const bool> trace_out);

[[nodiscard]] HermitianSpectrum hermitian_eig(const CMatrix& m);
[[nodiscard]] RVector hermitian_eigenvalues(const CMatrix& m);

[[nodiscard]] double trace_norm(const CMatrix& m);
[[nodiscard]] CMatrix operator_abs(const CMatrix& m);
[[nodiscard]] double min_eigenvalue(const CMatrix& m);

/// Default tolerance is 1e-10 * max |entry|.
[[nodiscard]] bool is_psd(const CMatrix& m, std::optional<double> tol = std::nullopt);

/// x <= y in the Loewner order: min eigenvalue of y - x >= -tol.
[[nodiscard]] bool operator_leq(const CMatrix& x, const CMatrix& y, std::optional<double> tol = std::nullopt);

[[nodiscard]] CMatrix kron(const CMatrix& a, const CMatrix& b);

} // namespace pptcost
