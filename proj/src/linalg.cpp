#include "pptcost/linalg.hpp"

#include "pptcost/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace pptcost {

namespace {

constexpr double kAsymmetryTol = 1e-8;

void require_square(const CMatrix& m, const char* what) {
	if (m.rows() != m.cols()) {
		throw InvalidArgument(std::string(what) + ": matrix is not square");
	}
}

int product(std::span<const int> dims) {
	return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

void check_factors(const CMatrix& m, std::span<const int> factor_dims, std::size_t flags, const char* what) {
	require_square(m, what);
	if (flags != factor_dims.size()) {
		throw InvalidArgument(std::string(what) + ": one flag per tensor factor required");
	}
	for (int d : factor_dims) {
		if (d < 1) throw InvalidArgument(std::string(what) + ": factor dimensions must be positive");
	}
	if (product(factor_dims) != m.rows()) {
		throw InvalidArgument(std::string(what) + ": factor dimensions do not match matrix size");
	}
}

// Mixed-radix digits of idx, most significant factor first (kron ordering).
void split_index(int idx, std::span<const int> dims, std::vector<int>& digits) {
	for (std::size_t k = dims.size(); k-- > 0;) {
		digits[k] = idx % dims[k];
		idx /= dims[k];
	}
}

int join_index(const std::vector<int>& digits, std::span<const int> dims) {
	int idx = 0;
	for (std::size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + digits[k];
	return idx;
}

CMatrix hermitian_part(const CMatrix& m) {
	require_square(m, "hermitian_eig");
	if (!m.allFinite()) throw NumericalFailure("hermitian_eig: non-finite matrix entry");
	const double scale = max_abs(m);
	const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
	if (m.size() > 0 && asym > kAsymmetryTol * std::max(scale, 1e-300)) {
		throw InvalidArgument("hermitian_eig: matrix is not Hermitian (asymmetry " + std::to_string(asym) + ")");
	}
	return (m + m.adjoint()) / 2.0;
}

} // namespace

DensityMatrix::DensityMatrix(CMatrix data, Dims dims) : dims_(dims) {
	if (dims.a < 1 || dims.b < 1) throw InvalidArgument("DensityMatrix: dimensions must be positive");
	if (data.rows() != data.cols()) throw InvalidArgument("DensityMatrix: matrix is not square");
	if (data.rows() != dims.total()) {
		throw InvalidArgument("DensityMatrix: matrix dimension " + std::to_string(data.rows()) +
		                      " does not equal d_A*d_B = " + std::to_string(dims.total()));
	}
	if (!data.allFinite()) throw InvalidArgument("DensityMatrix: non-finite entry");
	const double scale = max_abs(data);
	if ((data - data.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol * scale) {
		throw InvalidArgument("DensityMatrix: not Hermitian");
	}
	data_ = (data + data.adjoint()) / 2.0;
	const double tr = data_.trace().real();
	if (std::abs(tr - 1.0) > kTraceTol) {
		throw InvalidArgument("DensityMatrix: trace is " + std::to_string(tr) + ", not 1");
	}
	if (min_eigenvalue(data_) < -kPsdTol) throw InvalidArgument("DensityMatrix: not positive semidefinite");
}

double max_abs(const CMatrix& m) {
	return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

CMatrix partial_transpose(const CMatrix& m, Dims dims, Subsystem sys) {
	const int factor_dims[] = {dims.a, dims.b};
	const bool flags[] = {sys == Subsystem::A, sys == Subsystem::B};
	return partial_transpose(m, factor_dims, flags);
}

CMatrix partial_transpose(const CMatrix& m, std::span<const int> factor_dims, std::span<const bool> transpose) {
	check_factors(m, factor_dims, transpose.size(), "partial_transpose");
	const int n = static_cast<int>(m.rows());
	CMatrix out(n, n);
	std::vector<int> row(factor_dims.size()), col(factor_dims.size());
	for (int c = 0; c < n; ++c) {
		for (int r = 0; r < n; ++r) {
			split_index(r, factor_dims, row);
			split_index(c, factor_dims, col);
			for (std::size_t k = 0; k < factor_dims.size(); ++k) {
				if (transpose[k]) std::swap(row[k], col[k]);
			}
			out(join_index(row, factor_dims), join_index(col, factor_dims)) = m(r, c);
		}
	}
	return out;
}

CMatrix permute_factors(const CMatrix& m, std::span<const int> factor_dims, std::span<const int> order) {
	check_factors(m, factor_dims, order.size(), "permute_factors");
	std::vector<int> sorted(order.begin(), order.end());
	std::sort(sorted.begin(), sorted.end());
	for (std::size_t k = 0; k < sorted.size(); ++k) {
		if (sorted[k] != static_cast<int>(k)) throw InvalidArgument("permute_factors: order is not a permutation");
	}
	std::vector<int> out_dims(order.size());
	for (std::size_t k = 0; k < order.size(); ++k) out_dims[k] = factor_dims[order[k]];

	const int n = static_cast<int>(m.rows());
	CMatrix out(n, n);
	std::vector<int> row(order.size()), col(order.size()), prow(order.size()), pcol(order.size());
	for (int c = 0; c < n; ++c) {
		split_index(c, factor_dims, col);
		for (std::size_t k = 0; k < order.size(); ++k) pcol[k] = col[order[k]];
		const int oc = join_index(pcol, out_dims);
		for (int r = 0; r < n; ++r) {
			split_index(r, factor_dims, row);
			for (std::size_t k = 0; k < order.size(); ++k) prow[k] = row[order[k]];
			out(join_index(prow, out_dims), oc) = m(r, c);
		}
	}
	return out;
}

CMatrix partial_trace(const CMatrix& m, std::span<const int> factor_dims, std::span<const bool> trace_out) {
	check_factors(m, factor_dims, trace_out.size(), "partial_trace");
	std::vector<int> kept_dims;
	for (std::size_t k = 0; k < factor_dims.size(); ++k) {
		if (!trace_out[k]) kept_dims.push_back(factor_dims[k]);
	}
	const int kept = product(kept_dims);
	CMatrix out = CMatrix::Zero(kept, kept);
	const int n = static_cast<int>(m.rows());
	std::vector<int> row(factor_dims.size()), col(factor_dims.size()), krow, kcol;
	for (int c = 0; c < n; ++c) {
		split_index(c, factor_dims, col);
		for (int r = 0; r < n; ++r) {
			split_index(r, factor_dims, row);
			bool diagonal = true;
			krow.clear();
			kcol.clear();
			for (std::size_t k = 0; k < factor_dims.size(); ++k) {
				if (trace_out[k]) {
					if (row[k] != col[k]) {
						diagonal = false;
						break;
					}
				} else {
					krow.push_back(row[k]);
					kcol.push_back(col[k]);
				}
			}
			if (diagonal) out(join_index(krow, kept_dims), join_index(kcol, kept_dims)) += m(r, c);
		}
	}
	return out;
}

HermitianSpectrum hermitian_eig(const CMatrix& m) {
	const CMatrix h = hermitian_part(m);
	Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
	if (solver.info() != Eigen::Success) throw NumericalFailure("hermitian_eig: eigensolver did not converge");

	HermitianSpectrum spec{solver.eigenvalues(), solver.eigenvectors()};
	// Deterministic gauge: first component above 1e-8 in magnitude made real positive.
	for (Eigen::Index j = 0; j < spec.eigenvectors.cols(); ++j) {
		auto v = spec.eigenvectors.col(j);
		for (Eigen::Index i = 0; i < v.size(); ++i) {
			if (std::abs(v(i)) > 1e-8) {
				v *= std::conj(v(i)) / std::abs(v(i));
				v(i) = std::abs(v(i));
				break;
			}
		}
	}
	return spec;
}

RVector hermitian_eigenvalues(const CMatrix& m) {
	Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(m), Eigen::EigenvaluesOnly);
	if (solver.info() != Eigen::Success) throw NumericalFailure("hermitian_eig: eigensolver did not converge");
	return solver.eigenvalues();
}

double trace_norm(const CMatrix& m) {
	return hermitian_eigenvalues(m).cwiseAbs().sum();
}

CMatrix operator_abs(const CMatrix& m) {
	const HermitianSpectrum s = hermitian_eig(m);
	CMatrix out = s.eigenvectors * s.eigenvalues.cwiseAbs().asDiagonal() * s.eigenvectors.adjoint();
	return (out + out.adjoint()) / 2.0;
}

double min_eigenvalue(const CMatrix& m) {
	if (m.rows() == 0) throw InvalidArgument("min_eigenvalue: empty matrix");
	return hermitian_eigenvalues(m)(0);
}

bool is_psd(const CMatrix& m, std::optional<double> tol) {
	const double t = tol.value_or(1e-10 * max_abs(m));
	return min_eigenvalue(m) >= -t;
}

bool operator_leq(const CMatrix& x, const CMatrix& y, std::optional<double> tol) {
	if (x.rows() != y.rows() || x.cols() != y.cols()) throw InvalidArgument("operator_leq: dimension mismatch");
	const double t = tol.value_or(1e-10 * std::max(max_abs(x), max_abs(y)));
	return min_eigenvalue(y - x) >= -t;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
	CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
	for (Eigen::Index i = 0; i < a.rows(); ++i) {
		for (Eigen::Index j = 0; j < a.cols(); ++j) {
			out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
		}
	}
	return out;
}

} // namespace pptcost
