#include "pptcost/gaussian.hpp"

#include "pptcost/errors.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace pptcost {

namespace {

constexpr double kMaxCondition = 1e12;
constexpr double kLemmaTol = 1e-8;

void require_even_square(const RMatrix& m, const char* what) {
	if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
		throw InvalidArgument(std::string(what) + ": expected a non-empty 2n x 2n matrix");
	}
	if (!m.allFinite()) throw InvalidArgument(std::string(what) + ": non-finite entry");
}

struct SymmetricRoots {
	RMatrix sqrt;
	RMatrix inv_sqrt;
};

// M^{1/2} and M^{-1/2} for a symmetric positive-definite M.
SymmetricRoots symmetric_roots(const RMatrix& m, const char* what) {
	require_even_square(m, what);
	const double scale = m.cwiseAbs().maxCoeff();
	if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10 * std::max(scale, 1e-300)) {
		throw InvalidArgument(std::string(what) + ": matrix is not symmetric");
	}
	Eigen::SelfAdjointEigenSolver<RMatrix> es((m + m.transpose()) / 2.0);
	if (es.info() != Eigen::Success) throw NumericalFailure(std::string(what) + ": eigensolver failed");
	const RVector ev = es.eigenvalues();
	if (ev(0) <= 0.0) throw InvalidArgument(std::string(what) + ": matrix is not positive definite");
	if (ev(ev.size() - 1) / ev(0) > kMaxCondition) {
		throw NumericalFailure(std::string(what) + ": condition number exceeds 1e12");
	}
	const RMatrix& v = es.eigenvectors();
	return {v * ev.cwiseSqrt().asDiagonal() * v.transpose(), v * ev.cwiseSqrt().cwiseInverse().asDiagonal() * v.transpose()};
}

} // namespace

CovarianceMatrix::CovarianceMatrix(RMatrix data, Modes modes, double uncertainty_tol) : modes_(modes) {
	if (modes.a < 1 || modes.b < 1) throw InvalidArgument("CovarianceMatrix: each party needs at least one mode");
	if (data.rows() != data.cols() || data.rows() != 2 * modes.total()) {
		throw InvalidArgument("CovarianceMatrix: matrix must be 2n x 2n with n = " + std::to_string(modes.total()));
	}
	if (!data.allFinite()) throw InvalidArgument("CovarianceMatrix: non-finite entry");
	if ((data - data.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol * std::max(1.0, data.cwiseAbs().maxCoeff())) {
		throw InvalidArgument("CovarianceMatrix: not symmetric");
	}
	data_ = (data + data.transpose()) / 2.0;
	const double margin = uncertainty_margin(data_);
	if (margin < -uncertainty_tol) {
		throw InvalidArgument("CovarianceMatrix: violates the uncertainty relation (min eigenvalue of Γ + iΣ is " +
		                      std::to_string(margin) + ")");
	}
}

RMatrix symplectic_form(int n) {
	if (n < 1) throw InvalidArgument("symplectic_form: n must be >= 1");
	RMatrix s = RMatrix::Zero(2 * n, 2 * n);
	for (int i = 0; i < n; ++i) {
		s(2 * i, 2 * i + 1) = 1.0;
		s(2 * i + 1, 2 * i) = -1.0;
	}
	return s;
}

RMatrix mirror_reflection(Modes modes) {
	if (modes.a < 1 || modes.b < 1) throw InvalidArgument("mirror_reflection: each party needs at least one mode");
	RVector diag = RVector::Ones(2 * modes.total());
	for (int j = 0; j < modes.b; ++j) diag(2 * (modes.a + j) + 1) = -1.0;
	return diag.asDiagonal();
}

RMatrix pt_covariance(const RMatrix& g, Modes modes) {
	if (g.rows() != 2 * modes.total() || g.cols() != g.rows()) throw InvalidArgument("pt_covariance: size mismatch");
	const RMatrix p = mirror_reflection(modes);
	return p * g * p;
}

RMatrix pt_covariance(const CovarianceMatrix& g) {
	return pt_covariance(g.matrix(), g.modes());
}

double uncertainty_margin(const RMatrix& m) {
	require_even_square(m, "uncertainty_margin");
	const CMatrix h = m.cast<cplx>() + cplx(0.0, 1.0) * symplectic_form(static_cast<int>(m.rows() / 2)).cast<cplx>();
	return min_eigenvalue(h);
}

RVector symplectic_eigenvalues(const RMatrix& m) {
	const SymmetricRoots roots = symmetric_roots(m, "symplectic_eigenvalues");
	const int n = static_cast<int>(m.rows() / 2);
	// i M^{1/2} Σ M^{1/2} is Hermitian with spectrum ±x_i.
	const RMatrix b = roots.sqrt * symplectic_form(n) * roots.sqrt;
	const RVector ev = hermitian_eigenvalues(cplx(0.0, 1.0) * b.cast<cplx>());
	RVector x = ev.tail(n);
	std::sort(x.begin(), x.end());
	return x;
}

WilliamsonDecomposition williamson(const RMatrix& m) {
	const SymmetricRoots roots = symmetric_roots(m, "williamson");
	const int n = static_cast<int>(m.rows() / 2);

	// B = M^{-1/2} Σ M^{-1/2} is antisymmetric; iB has eigenvalues ±1/x_i.
	// For iB v = b v with v = a + ic, b > 0: B a = b c and B c = -b a, so the
	// real pair (c, a) carries the block [[0, b], [-b, 0]].
	const RMatrix b = roots.inv_sqrt * symplectic_form(n) * roots.inv_sqrt;
	const HermitianSpectrum spec = hermitian_eig(cplx(0.0, 1.0) * b.cast<cplx>());

	RMatrix o(2 * n, 2 * n);
	RVector x(n);
	for (int i = 0; i < n; ++i) {
		// Largest b first, i.e. x ascending.
		const Eigen::Index col = 2 * n - 1 - i;
		const double bi = spec.eigenvalues(col);
		if (bi <= 0.0) throw NumericalFailure("williamson: degenerate antisymmetric form");
		x(i) = 1.0 / bi;
		o.col(2 * i) = std::sqrt(2.0) * spec.eigenvectors.col(col).imag();
		o.col(2 * i + 1) = std::sqrt(2.0) * spec.eigenvectors.col(col).real();
	}
	RVector d_sqrt(2 * n);
	for (int i = 0; i < n; ++i) d_sqrt(2 * i) = d_sqrt(2 * i + 1) = std::sqrt(x(i));

	WilliamsonDecomposition w{d_sqrt.asDiagonal() * o.transpose() * roots.inv_sqrt, x};

	const RMatrix sigma = symplectic_form(n);
	const double symp_err = (w.s * sigma * w.s.transpose() - sigma).cwiseAbs().maxCoeff();
	if (symp_err > 1e-9 * std::max(1.0, w.s.cwiseAbs().maxCoeff() * w.s.cwiseAbs().maxCoeff())) {
		throw NumericalFailure("williamson: constructed transformation is not symplectic");
	}
	return w;
}

BinegativityCovariance binegativity_covariance(const CovarianceMatrix& g) {
	const RMatrix p = mirror_reflection(g.modes());
	const WilliamsonDecomposition w = williamson(p * g.matrix() * p);
	const int n = g.modes().total();

	RVector corrections(n);
	RVector diag(2 * n);
	for (int i = 0; i < n; ++i) {
		const double x = w.values(i);
		// Values within 1e-9 of 1 count as x >= 1 (continuity of 1/x - x at 1).
		corrections(i) = x >= 1.0 - 1e-9 ? 0.0 : 1.0 / x - x;
		diag(2 * i) = diag(2 * i + 1) = x + corrections(i);
	}
	const RMatrix s_inv = w.s.partialPivLu().inverse();
	RMatrix bi = p * s_inv * diag.asDiagonal() * s_inv.transpose() * p;
	bi = (bi + bi.transpose()) / 2.0;

	const double margin = uncertainty_margin(bi);
	if (margin < -kLemmaTol) {
		throw NumericalFailure("binegativity_covariance: result violates the uncertainty relation by " +
		                       std::to_string(-margin));
	}
	return {CovarianceMatrix(std::move(bi), g.modes(), kLemmaTol), corrections, w.values, margin};
}

double gaussian_log_negativity(const CovarianceMatrix& g) {
	const RVector x = symplectic_eigenvalues(pt_covariance(g));
	double ln = 0.0;
	// Same cutoff as the binegativity corrections: rounding noise around 1 is not entanglement.
	for (double xi : x)
		if (xi < 1.0 - 1e-9) ln -= std::log2(xi);
	return ln;
}

CovarianceMatrix two_mode_squeezed(double r) {
	if (!(r >= 0.0) || !std::isfinite(r)) throw InvalidArgument("two_mode_squeezed: r must be finite and >= 0");
	const double c = std::cosh(2 * r);
	const double s = std::sinh(2 * r);
	RMatrix g = RMatrix::Zero(4, 4);
	g.diagonal().setConstant(c);
	g(0, 2) = g(2, 0) = s;
	g(1, 3) = g(3, 1) = -s;
	return CovarianceMatrix(std::move(g), Modes{1, 1});
}

CovarianceMatrix vacuum(Modes modes) {
	return CovarianceMatrix(RMatrix::Identity(2 * modes.total(), 2 * modes.total()), modes);
}

RMatrix random_symplectic(int n, std::uint64_t seed, double strength) {
	if (n < 1) throw InvalidArgument("random_symplectic: n must be >= 1");
	if (!(strength >= 0.0)) throw InvalidArgument("random_symplectic: strength must be >= 0");
	std::mt19937_64 rng(seed);
	std::normal_distribution<double> normal(0.0, 1.0);
	RMatrix h(2 * n, 2 * n);
	for (int i = 0; i < 2 * n; ++i) {
		for (int j = 0; j <= i; ++j) h(i, j) = h(j, i) = strength * normal(rng);
	}
	return (symplectic_form(n) * h).exp();
}

CovarianceMatrix random_covariance(Modes modes, std::uint64_t seed, double strength) {
	if (modes.a < 1 || modes.b < 1) throw InvalidArgument("random_covariance: each party needs at least one mode");
	const int n = modes.total();
	const RMatrix s = random_symplectic(n, seed, strength);
	// Thermal values come from a stream independent of the symplectic one.
	std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
	std::normal_distribution<double> normal(0.0, 1.0);
	RVector d(2 * n);
	for (int i = 0; i < n; ++i) d(2 * i) = d(2 * i + 1) = 1.0 + strength * std::abs(normal(rng));
	RMatrix g = s.transpose() * d.asDiagonal() * s;
	return CovarianceMatrix((g + g.transpose()) / 2.0, modes);
}

CovarianceMatrix direct_sum(const CovarianceMatrix& x, const CovarianceMatrix& y) {
	const Modes mx = x.modes();
	const Modes my = y.modes();
	const int nx = mx.total();
	const int n = nx + my.total();
	RMatrix block = RMatrix::Zero(2 * n, 2 * n);
	block.topLeftCorner(2 * nx, 2 * nx) = x.matrix();
	block.bottomRightCorner(2 * my.total(), 2 * my.total()) = y.matrix();

	// Mode order in `block`: A_x, B_x, A_y, B_y. Target: A_x, A_y, B_x, B_y.
	std::vector<int> order;
	for (int i = 0; i < mx.a; ++i) order.push_back(i);
	for (int i = 0; i < my.a; ++i) order.push_back(nx + i);
	for (int i = 0; i < mx.b; ++i) order.push_back(mx.a + i);
	for (int i = 0; i < my.b; ++i) order.push_back(nx + my.a + i);
	RMatrix out(2 * n, 2 * n);
	for (int i = 0; i < n; ++i) {
		for (int j = 0; j < n; ++j) out.block<2, 2>(2 * i, 2 * j) = block.block<2, 2>(2 * order[i], 2 * order[j]);
	}
	return CovarianceMatrix(std::move(out), Modes{mx.a + my.a, mx.b + my.b});
}

} // namespace pptcost
