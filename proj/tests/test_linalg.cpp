#include "helpers.hpp"
#include "oracle.hpp"
#include "pptcost/errors.hpp"
#include "pptcost/linalg.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace pptcost;

namespace {

CMatrix bell_projector(int k) {
	return testing::to_eigen(oracle::bell(k));
}

} // namespace

TEST_CASE("oracle Jacobi solver diagonalizes known matrices") {
	oracle::Matrix m(2);
	m(0, 0) = 2;
	m(1, 1) = 2;
	m(0, 1) = m(1, 0) = 1;
	auto ev = oracle::eigenvalues(m);
	CHECK(double(ev[0]) == doctest::Approx(1.0).epsilon(1e-15));
	CHECK(double(ev[1]) == doctest::Approx(3.0).epsilon(1e-15));

	oracle::Matrix h(2); // Pauli Y
	h(0, 1) = oracle::cplx(0, -1);
	h(1, 0) = oracle::cplx(0, 1);
	ev = oracle::eigenvalues(h);
	CHECK(double(ev[0]) == doctest::Approx(-1.0));
	CHECK(double(ev[1]) == doctest::Approx(1.0));
}

TEST_CASE("partial transpose of the two-qubit Bell state has the swap spectrum") {
	const RVector ev = hermitian_eigenvalues(partial_transpose(bell_projector(2), Dims{2, 2}));
	CHECK(ev(0) == doctest::Approx(-0.5).epsilon(1e-14));
	for (int i = 1; i < 4; ++i) CHECK(ev(i) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("partial transpose of a product state is the product with a transposed factor") {
	std::mt19937_64 rng(11);
	const CMatrix a = testing::random_hermitian(2, rng);
	const CMatrix b = testing::random_hermitian(3, rng);
	const CMatrix pt = partial_transpose(kron(a, b), Dims{2, 3});
	CHECK(max_abs(pt - kron(a, b.transpose())) == 0.0);
	const CMatrix pta = partial_transpose(kron(a, b), Dims{2, 3}, Subsystem::A);
	CHECK(max_abs(pta - kron(a.transpose(), b)) == 0.0);
}

TEST_CASE("partial transpose of the antisymmetric state matches the oracle spectrum") {
	// Oracle: (I - F)/6 built by hand, transposed by hand, diagonalized in long double.
	const auto oracle_ev = oracle::eigenvalues(oracle::pt_b(oracle::antisymmetric(3), 3, 3));
	REQUIRE(oracle_ev.size() == 9);
	CHECK(std::abs(double(oracle_ev[0]) + 1.0 / 3.0) < 1e-15);
	for (int i = 1; i < 9; ++i) CHECK(std::abs(double(oracle_ev[i]) - 1.0 / 6.0) < 1e-15);

	const CMatrix sigma = testing::to_eigen(oracle::antisymmetric(3));
	const RVector ev = hermitian_eigenvalues(partial_transpose(sigma, Dims{3, 3}));
	for (int i = 0; i < 9; ++i) CHECK(std::abs(ev(i) - double(oracle_ev[i])) < 1e-13);
	CHECK(min_eigenvalue(partial_transpose(sigma, Dims{3, 3})) == doctest::Approx(-1.0 / 3.0).epsilon(1e-13));
	CHECK(trace_norm(partial_transpose(sigma, Dims{3, 3})) == doctest::Approx(5.0 / 3.0).epsilon(1e-13));
	CHECK_FALSE(is_psd(partial_transpose(sigma, Dims{3, 3})));
}

TEST_CASE("partial transpose properties on random matrices") {
	std::mt19937_64 rng(2024);
	for (int trial = 0; trial < 20; ++trial) {
		const Dims dims{2 + trial % 3, 2 + (trial / 3) % 3};
		const CMatrix x = testing::random_hermitian(dims.total(), rng);
		const CMatrix y = testing::random_hermitian(dims.total(), rng);

		// Involution is exact: entries are only permuted.
		CHECK(max_abs(partial_transpose(partial_transpose(x, dims), dims) - x) == 0.0);
		// Transposing A is the global transpose of transposing B.
		CHECK(max_abs(partial_transpose(x, dims, Subsystem::A) - partial_transpose(x, dims).transpose()) == 0.0);
		// Self-duality: tr(X^Γ Y) = tr(X Y^Γ).
		const cplx lhs = (partial_transpose(x, dims) * y).trace();
		const cplx rhs = (x * partial_transpose(y, dims)).trace();
		CHECK(std::abs(lhs - rhs) < 1e-10);
	}
}

TEST_CASE("partial transpose rejects mismatched dimensions") {
	CHECK_THROWS_AS((void)partial_transpose(CMatrix::Identity(5, 5), Dims{2, 2}), InvalidArgument);
	CHECK_THROWS_AS((void)partial_transpose(CMatrix::Zero(4, 3), Dims{2, 2}), InvalidArgument);
}

TEST_CASE("hermitian_eig basics") {
	HermitianSpectrum s = hermitian_eig(CMatrix::Identity(3, 3));
	CHECK(s.eigenvalues.isApprox(RVector::Ones(3)));

	CMatrix d = CMatrix::Zero(2, 2);
	d(0, 0) = 2.0;
	d(1, 1) = -1.0;
	s = hermitian_eig(d);
	CHECK(s.eigenvalues(0) == doctest::Approx(-1.0));
	CHECK(s.eigenvalues(1) == doctest::Approx(2.0));

	CHECK_THROWS_AS((void)hermitian_eig(CMatrix::Zero(2, 3)), InvalidArgument);
	CMatrix asym = CMatrix::Identity(2, 2);
	asym(0, 1) = 0.5;
	CHECK_THROWS_AS((void)hermitian_eig(asym), InvalidArgument);
	// Small asymmetry is symmetrized away.
	asym(0, 1) = 1e-12;
	CHECK_NOTHROW((void)hermitian_eig(asym));
}

TEST_CASE("hermitian_eig reconstruction, unitarity and deterministic gauge") {
	std::mt19937_64 rng(7);
	for (int n : {1, 3, 6, 16}) {
		const CMatrix m = testing::random_hermitian(n, rng);
		const HermitianSpectrum s = hermitian_eig(m);
		const double scale = max_abs(m);
		CHECK(max_abs(m - s.eigenvectors * s.eigenvalues.asDiagonal() * s.eigenvectors.adjoint()) <= 1e-10 * scale);
		CHECK(max_abs(s.eigenvectors.adjoint() * s.eigenvectors - CMatrix::Identity(n, n)) <= 1e-10);
		for (Eigen::Index i = 1; i < s.eigenvalues.size(); ++i) CHECK(s.eigenvalues(i - 1) <= s.eigenvalues(i));
		for (Eigen::Index j = 0; j < n; ++j) {
			for (Eigen::Index i = 0; i < n; ++i) {
				if (std::abs(s.eigenvectors(i, j)) > 1e-8) {
					CHECK(s.eigenvectors(i, j).imag() == 0.0);
					CHECK(s.eigenvectors(i, j).real() > 0.0);
					break;
				}
			}
		}
		const HermitianSpectrum again = hermitian_eig(m);
		CHECK(max_abs(again.eigenvectors - s.eigenvectors) == 0.0);
	}
}

TEST_CASE("trace norm and operator absolute value") {
	// Bell^Γ = F/2 has |F/2| = I/2.
	const CMatrix pt = partial_transpose(bell_projector(2), Dims{2, 2});
	CHECK(max_abs(operator_abs(pt) - CMatrix::Identity(4, 4) / 2.0) < 1e-12);
	CHECK(trace_norm(pt) == doctest::Approx(2.0).epsilon(1e-14));

	CMatrix d = CMatrix::Zero(2, 2);
	d(0, 0) = -3.0;
	d(1, 1) = 4.0;
	CMatrix expected = CMatrix::Zero(2, 2);
	expected(0, 0) = 3.0;
	expected(1, 1) = 4.0;
	CHECK(max_abs(operator_abs(d) - expected) < 1e-12);

	for (int k = 2; k <= 4; ++k) {
		CHECK(trace_norm(partial_transpose(bell_projector(k), Dims{k, k})) == doctest::Approx(k).epsilon(1e-13));
	}

	std::mt19937_64 rng(5);
	for (int trial = 0; trial < 10; ++trial) {
		const CMatrix m = testing::random_hermitian(6, rng);
		const CMatrix a = operator_abs(m);
		CHECK(is_psd(a));
		CHECK(is_psd(a - m, 1e-10 * max_abs(m)));
		CHECK(is_psd(a + m, 1e-10 * max_abs(m)));
		CHECK(a.trace().real() == doctest::Approx(trace_norm(m)).epsilon(1e-12));
		// PSD input is its own absolute value.
		const CMatrix psd = m * m;
		CHECK(max_abs(operator_abs(psd) - psd) <= 1e-10 * max_abs(psd));
		CHECK(trace_norm(psd) == doctest::Approx(psd.trace().real()).epsilon(1e-12));
	}
}

TEST_CASE("min eigenvalue, PSD test and Loewner order") {
	CHECK(min_eigenvalue(CMatrix::Identity(3, 3)) == doctest::Approx(1.0));
	CHECK(is_psd(CMatrix::Identity(3, 3)));
	CHECK(min_eigenvalue(CMatrix::Zero(3, 3)) == 0.0);
	CHECK(is_psd(CMatrix::Zero(3, 3)));
	CHECK(operator_leq(CMatrix::Zero(3, 3), CMatrix::Identity(3, 3)));
	CHECK_FALSE(operator_leq(CMatrix::Identity(3, 3), CMatrix::Zero(3, 3)));
	CHECK_THROWS_AS((void)operator_leq(CMatrix::Zero(2, 2), CMatrix::Zero(3, 3)), InvalidArgument);
}

TEST_CASE("kron and multiplicativity of the trace norm") {
	CHECK(max_abs(kron(CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)) - CMatrix::Identity(6, 6)) == 0.0);
	const CMatrix k = kron(CMatrix::Zero(2, 3), CMatrix::Zero(4, 5));
	CHECK(k.rows() == 8);
	CHECK(k.cols() == 15);

	// Singlet: tr|(ρ^Γ)^{⊗2}| = 4, checked against the oracle on the explicit 16x16 matrix.
	const oracle::Matrix singlet_pt = oracle::pt_b(oracle::werner(2, 1), 2, 2);
	const double oracle_tn = double(oracle::trace_norm(oracle::kron(singlet_pt, singlet_pt)));
	CHECK(oracle_tn == doctest::Approx(4.0).epsilon(1e-15));
	const CMatrix pt = testing::to_eigen(singlet_pt);
	CHECK(trace_norm(kron(pt, pt)) == doctest::Approx(oracle_tn).epsilon(1e-12));

	std::mt19937_64 rng(99);
	for (int trial = 0; trial < 5; ++trial) {
		CMatrix g = testing::random_hermitian(4, rng);
		CMatrix rho = g * g;
		rho /= rho.trace().real();
		const CMatrix rpt = partial_transpose(rho, Dims{2, 2});
		const double t1 = trace_norm(rpt);
		CHECK(t1 >= 1.0 - 1e-12);
		CHECK(trace_norm(kron(rpt, rpt)) == doctest::Approx(t1 * t1).epsilon(1e-8));
		CHECK(trace_norm(kron(kron(rpt, rpt), rpt)) == doctest::Approx(t1 * t1 * t1).epsilon(1e-8));
	}
}

TEST_CASE("factor permutation and partial trace") {
	std::mt19937_64 rng(3);
	const CMatrix a = testing::random_hermitian(2, rng);
	const CMatrix b = testing::random_hermitian(3, rng);
	const int dims[] = {2, 3};
	const int swap[] = {1, 0};
	CHECK(max_abs(permute_factors(kron(a, b), dims, swap) - kron(b, a)) < 1e-15);

	const bool trace_b[] = {false, true};
	CHECK(max_abs(partial_trace(kron(a, b), dims, trace_b) - a * b.trace()) < 1e-12);
	const bool trace_a[] = {true, false};
	CHECK(max_abs(partial_trace(kron(a, b), dims, trace_a) - b * a.trace()) < 1e-12);

	const int bad[] = {0, 0};
	CHECK_THROWS_AS((void)permute_factors(kron(a, b), dims, bad), InvalidArgument);
}

TEST_CASE("DensityMatrix validation") {
	CHECK_NOTHROW(DensityMatrix(CMatrix::Identity(4, 4) / 4.0, Dims{2, 2}));
	CHECK_THROWS_AS(DensityMatrix(CMatrix::Identity(4, 4) / 4.0, Dims{2, 3}), InvalidArgument);
	CHECK_THROWS_AS(DensityMatrix(CMatrix::Identity(4, 4), Dims{2, 2}), InvalidArgument); // trace 4
	CMatrix neg = CMatrix::Zero(4, 4);
	neg(0, 0) = 1.5;
	neg(1, 1) = -0.5;
	CHECK_THROWS_AS(DensityMatrix(neg, Dims{2, 2}), InvalidArgument);
	CMatrix nonherm = CMatrix::Identity(4, 4) / 4.0;
	nonherm(0, 1) = 0.1;
	CHECK_THROWS_AS(DensityMatrix(nonherm, Dims{2, 2}), InvalidArgument);
	CHECK_THROWS_AS(DensityMatrix(CMatrix::Identity(1, 1), Dims{0, 1}), InvalidArgument);
}
