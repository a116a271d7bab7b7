#pragma once

#include "oracle.hpp"
#include "pptcost/linalg.hpp"

#include <random>

namespace testing {

inline pptcost::CMatrix to_eigen(const oracle::Matrix& m) {
	pptcost::CMatrix out(m.n, m.n);
	for (int i = 0; i < m.n; ++i)
		for (int j = 0; j < m.n; ++j) out(i, j) = pptcost::cplx(double(m(i, j).real()), double(m(i, j).imag()));
	return out;
}

inline oracle::Matrix from_eigen(const pptcost::CMatrix& m) {
	oracle::Matrix out(static_cast<int>(m.rows()));
	for (int i = 0; i < out.n; ++i)
		for (int j = 0; j < out.n; ++j) out(i, j) = oracle::cplx(m(i, j).real(), m(i, j).imag());
	return out;
}

inline pptcost::CMatrix random_hermitian(int n, std::mt19937_64& rng) {
	std::normal_distribution<double> normal;
	pptcost::CMatrix g(n, n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) g(i, j) = pptcost::cplx(normal(rng), normal(rng));
	return (g + g.adjoint()) / 2.0;
}

inline pptcost::CMatrix random_unitary(int n, std::mt19937_64& rng) {
	std::normal_distribution<double> normal;
	pptcost::CMatrix g(n, n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j) g(i, j) = pptcost::cplx(normal(rng), normal(rng));
	Eigen::HouseholderQR<pptcost::CMatrix> qr(g);
	return qr.householderQ() * pptcost::CMatrix::Identity(n, n);
}

} // namespace testing
