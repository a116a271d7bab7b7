#include "pptcost/measures.hpp"

#include "pptcost/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace pptcost {

namespace {

constexpr double kPptTol = 1e-10;

// Total dimension d^n, or throws if it exceeds max_dim.
int checked_power_dim(int d, int n, int max_dim, const char* what) {
	if (n < 1) throw InvalidArgument(std::string(what) + ": n must be >= 1");
	long long total = 1;
	for (int i = 0; i < n; ++i) {
		total *= d;
		if (total > max_dim) {
			throw ResourceLimit(std::string(what) + ": total dimension " + std::to_string(d) + "^" +
			                    std::to_string(n) + " exceeds limit " + std::to_string(max_dim));
		}
	}
	return static_cast<int>(total);
}

// m^{⊗n} for a bipartite m, regrouped from (A1 B1 A2 B2 ...) to (A1 A2 ... B1 B2 ...).
CMatrix grouped_power(const CMatrix& m, Dims dims, int n) {
	CMatrix out = m;
	for (int i = 1; i < n; ++i) out = kron(out, m);
	if (n == 1) return out;
	std::vector<int> factor_dims, order;
	for (int i = 0; i < n; ++i) {
		factor_dims.push_back(dims.a);
		factor_dims.push_back(dims.b);
	}
	for (int i = 0; i < n; ++i) order.push_back(2 * i);
	for (int i = 0; i < n; ++i) order.push_back(2 * i + 1);
	return permute_factors(out, factor_dims, order);
}

Dims power_dims(Dims dims, int n) {
	Dims out{1, 1};
	for (int i = 0; i < n; ++i) {
		out.a *= dims.a;
		out.b *= dims.b;
	}
	return out;
}

DensityMatrix normalized_state(CMatrix m, Dims dims) {
	m /= m.trace().real();
	return DensityMatrix(std::move(m), dims);
}

} // namespace

DensityMatrix max_entangled(int k) {
	if (k < 1) throw InvalidArgument("max_entangled: k must be >= 1");
	Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(k) * k);
	for (int i = 0; i < k; ++i) psi(i * k + i) = 1.0 / std::sqrt(static_cast<double>(k));
	return DensityMatrix(psi * psi.adjoint(), Dims{k, k});
}

CMatrix flip_operator(int d) {
	if (d < 1) throw InvalidArgument("flip_operator: d must be >= 1");
	CMatrix f = CMatrix::Zero(d * d, d * d);
	for (int i = 0; i < d; ++i) {
		for (int j = 0; j < d; ++j) f(j * d + i, i * d + j) = 1.0;
	}
	return f;
}

SymAntisymProjectors sym_antisym_projectors(int d) {
	if (d < 1) throw InvalidArgument("sym_antisym_projectors: d must be >= 1");
	const CMatrix id = CMatrix::Identity(d * d, d * d);
	const CMatrix f = flip_operator(d);
	return {(id + f) / 2.0, (id - f) / 2.0};
}

double log_negativity(const DensityMatrix& rho) {
	return std::log2(trace_norm(partial_transpose(rho.matrix(), rho.dims())));
}

CMatrix binegativity(const DensityMatrix& rho) {
	return partial_transpose(operator_abs(partial_transpose(rho.matrix(), rho.dims())), rho.dims());
}

double alpha(const DensityMatrix& rho) {
	return std::max(0.0, -min_eigenvalue(binegativity(rho)));
}

double z_value(const DensityMatrix& rho) {
	return trace_norm(partial_transpose(rho.matrix(), rho.dims())) + rho.dim() * alpha(rho);
}

MeasureReport eppt_bounds(const DensityMatrix& rho) {
	const CMatrix pt = partial_transpose(rho.matrix(), rho.dims());
	const RVector pt_spec = hermitian_eigenvalues(pt);
	const CMatrix bineg = binegativity(rho);

	MeasureReport r;
	r.trace_norm_pt = pt_spec.cwiseAbs().sum();
	r.negativity = r.trace_norm_pt;
	r.is_ppt = pt_spec(0) >= -kPptTol;
	r.alpha = std::max(0.0, -min_eigenvalue(bineg));
	r.z_value = r.trace_norm_pt + rho.dim() * r.alpha;
	r.log_negativity = std::log2(r.trace_norm_pt);
	r.eppt_lower = r.log_negativity;
	r.eppt_upper = std::log2(r.z_value);
	if (r.is_ppt) {
		// PPT states are free: the bounds are pinned to zero.
		r.eppt_lower = 0.0;
		r.eppt_upper = 0.0;
	}
	r.bounds_coincide = r.eppt_upper - r.eppt_lower <= kBoundTol;
	return r;
}

DensityMatrix tensor_power(const DensityMatrix& rho, int n, int max_dim) {
	checked_power_dim(rho.dim(), n, max_dim, "tensor_power");
	return DensityMatrix(grouped_power(rho.matrix(), rho.dims(), n), power_dims(rho.dims(), n));
}

DensityMatrix construct_g(const DensityMatrix& rho, int n, int max_dim) {
	checked_power_dim(rho.dim(), n, max_dim, "construct_g");
	const CMatrix bineg = binegativity(rho);
	const double a = std::max(0.0, -min_eigenvalue(bineg));
	const CMatrix single = bineg + a * CMatrix::Identity(rho.dim(), rho.dim());
	// tr(single) = Z, so normalizing by the trace divides by Z^n.
	return normalized_state(grouped_power(single, rho.dims(), n), power_dims(rho.dims(), n));
}

ChoiMatrix choi_matrix(const DensityMatrix& f, const DensityMatrix& g, int k) {
	if (k < 1) throw InvalidArgument("choi_matrix: k must be >= 1");
	if (f.dims() != g.dims()) throw InvalidArgument("choi_matrix: F and G have different dimensions");
	const CMatrix phi = max_entangled(k).matrix();
	const CMatrix id = CMatrix::Identity(phi.rows(), phi.cols());
	ChoiMatrix c;
	c.data = kron(phi.transpose(), f.matrix()) + kron((id - phi).transpose(), g.matrix());
	c.input_dim = k * k;
	c.output_dim = f.dim();
	c.input_bipartition = Dims{k, k};
	c.output_bipartition = f.dims();
	return c;
}

namespace {

std::vector<int> choi_factors(const ChoiMatrix& c) {
	if (c.input_bipartition.total() != c.input_dim || c.output_bipartition.total() != c.output_dim ||
	    c.data.rows() != static_cast<Eigen::Index>(c.input_dim) * c.output_dim) {
		throw InvalidArgument("ChoiMatrix: bipartitions do not match the matrix size");
	}
	return {c.input_bipartition.a, c.input_bipartition.b, c.output_bipartition.a, c.output_bipartition.b};
}

} // namespace

CMatrix apply_choi(const ChoiMatrix& c, const CMatrix& x) {
	const std::vector<int> factors = choi_factors(c);
	if (x.rows() != c.input_dim || x.cols() != c.input_dim) throw InvalidArgument("apply_choi: input dimension mismatch");
	const CMatrix lifted = kron(x.transpose(), CMatrix::Identity(c.output_dim, c.output_dim)) * c.data;
	const bool trace_in[] = {true, true, false, false};
	return partial_trace(lifted, factors, trace_in);
}

double choi_cp_margin(const ChoiMatrix& c) {
	choi_factors(c);
	return min_eigenvalue(c.data);
}

double choi_tp_residual(const ChoiMatrix& c) {
	const std::vector<int> factors = choi_factors(c);
	const bool trace_out[] = {false, false, true, true};
	const CMatrix reduced = partial_trace(c.data, factors, trace_out);
	return max_abs(reduced - CMatrix::Identity(c.input_dim, c.input_dim));
}

double choi_ppt_margin(const ChoiMatrix& c) {
	const std::vector<int> factors = choi_factors(c);
	const bool transpose[] = {false, true, false, true};
	return min_eigenvalue(partial_transpose(c.data, factors, transpose));
}

bool choi_ppt_check(const ChoiMatrix& c) {
	return choi_ppt_margin(c) >= -1e-10 * std::max(1.0, max_abs(c.data));
}

int resource_dimension(double z_power, bool is_ppt, bool exact_condition) {
	if (is_ppt) return 1;
	// Absorb rounding noise so that an integral Z^n is not bumped up by one.
	const double k = std::ceil(z_power - 1e-9);
	if (k + 1 > std::numeric_limits<int>::max()) throw ResourceLimit("resource_dimension: Z^n too large");
	return static_cast<int>(k) + (exact_condition ? 1 : 0);
}

MapVerification theorem_map_verify(const DensityMatrix& rho, int n, bool use_exact_condition, int max_dim,
                                   int k_override) {
	MapVerification v;
	v.n = n;
	v.exact_condition = use_exact_condition;

	const MeasureReport report = eppt_bounds(rho);
	v.z = report.z_value;
	v.z_power = std::pow(report.z_value, n);
	v.alpha = report.alpha;
	v.k = k_override > 0 ? k_override : resource_dimension(v.z_power, report.is_ppt, use_exact_condition);

	const DensityMatrix f = tensor_power(rho, n, max_dim);
	const DensityMatrix g = construct_g(rho, n, max_dim);
	const CMatrix f_pt = partial_transpose(f.matrix(), f.dims());
	const CMatrix g_pt = partial_transpose(g.matrix(), g.dims());

	const double lo = use_exact_condition ? v.k - 1.0 : v.k;
	const double hi = use_exact_condition ? v.k + 1.0 : v.k;
	v.tolerance = 1e-10 * std::max({1.0, max_abs(f_pt), hi * max_abs(g_pt)});

	v.g_min_eigenvalue = min_eigenvalue(g.matrix());
	v.g_pt_min_eigenvalue = min_eigenvalue(g_pt);
	v.lower_margin = min_eigenvalue(f_pt + lo * g_pt);
	v.upper_margin = min_eigenvalue(hi * g_pt - f_pt);
	v.g_psd = v.g_min_eigenvalue >= -v.tolerance;
	v.g_ppt = v.g_pt_min_eigenvalue >= -v.tolerance;
	v.lower_holds = v.lower_margin >= -v.tolerance;
	v.upper_holds = v.upper_margin >= -v.tolerance;

	const ChoiMatrix c = choi_matrix(f, g, v.k);
	v.choi_cp_margin = choi_cp_margin(c);
	v.choi_tp_residual = choi_tp_residual(c);
	v.choi_ppt_margin = choi_ppt_margin(c);
	const double choi_tol = 1e-9;
	v.choi_cp = v.choi_cp_margin >= -choi_tol;
	v.choi_tp = v.choi_tp_residual <= choi_tol;
	v.choi_ppt = v.choi_ppt_margin >= -choi_tol;
	return v;
}

ChainRecord lemma3_chain_check(int d) {
	if (d < 2) throw InvalidArgument("lemma3_chain_check: d must be >= 2");
	const CMatrix id = CMatrix::Identity(d * d, d * d);
	const DensityMatrix sigma_a((id - flip_operator(d)) / (d * (d - 1.0)), Dims{d, d});
	const MeasureReport report = eppt_bounds(sigma_a);

	ChainRecord r;
	r.d = d;
	r.log_negativity = report.log_negativity;
	r.eppt_lower = report.eppt_lower;
	r.eppt_upper = report.eppt_upper;
	r.alpha = report.alpha;
	r.expected = std::log2((d + 2.0) / d);
	r.bounds_coincide = report.bounds_coincide;
	r.matches_expected = std::abs(r.eppt_lower - r.expected) <= kBoundTol &&
	                     std::abs(r.eppt_upper - r.expected) <= kBoundTol;
	r.chain = r.bounds_coincide && r.matches_expected
	              ? "LN = E_ppt >= C_ppt >= D_ppt = LN: pinned by coinciding outer bounds"
	              : "bounds do not coincide: chain not closed";
	return r;
}

} // namespace pptcost
