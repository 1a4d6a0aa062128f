#include "ljlab/linalg.hpp"

#include <cmath>
#include <string>

namespace ljlab
{

std::string_view to_string(ErrorKind kind)
{
	switch(kind) {
	case ErrorKind::NotHermitian: return "NotHermitian";
	case ErrorKind::DimensionMismatch: return "DimensionMismatch";
	case ErrorKind::NotInSpan: return "NotInSpan";
	case ErrorKind::EmptyInput: return "EmptyInput";
	case ErrorKind::MaxRoundsExceeded: return "MaxRoundsExceeded";
	case ErrorKind::NotClosed: return "NotClosed";
	case ErrorKind::NotAssociative: return "NotAssociative";
	case ErrorKind::InvalidDim: return "InvalidDim";
	case ErrorKind::InvalidState: return "InvalidState";
	case ErrorKind::CriteriaDisagree: return "CriteriaDisagree";
	case ErrorKind::Parse: return "Parse";
	}
	return "Unknown";
}

void require_square(const ComplexMatrix& m)
{
	if(m.rows() != m.cols() || m.rows() == 0) {
		throw Error(ErrorKind::DimensionMismatch,
		            "expected a nonempty square matrix, got " + std::to_string(m.rows()) + "x" +
		                std::to_string(m.cols()));
	}
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b)
{
	if(a.rows() != b.rows() || a.cols() != b.cols()) {
		throw Error(ErrorKind::DimensionMismatch,
		            "operand sizes " + std::to_string(a.rows()) + " and " + std::to_string(b.rows()) + " differ");
	}
}

bool all_finite(const ComplexMatrix& m)
{
	return m.allFinite();
}

double spectral_norm(const ComplexMatrix& m)
{
	if(m.size() == 0) {
		return 0.0;
	}
	Eigen::JacobiSVD<ComplexMatrix> svd(m);
	return svd.singularValues()(0);
}

bool is_hermitian(const ComplexMatrix& m, const Tolerance& tol)
{
	if(m.rows() != m.cols()) {
		return false;
	}
	const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
	return defect <= tol.threshold(tol.relative ? spectral_norm(m) : 0.0);
}

namespace
{

void require_hermitian(const ComplexMatrix& m)
{
	require_square(m);
	if(!is_hermitian(m)) {
		throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian within tolerance");
	}
}

} // namespace

HermitianEigen eig_hermitian(const ComplexMatrix& m)
{
	require_hermitian(m);
	Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
	// Eigen already returns ascending eigenvalues.
	return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::VectorXd eigenvalues_hermitian(const ComplexMatrix& m)
{
	require_hermitian(m);
	Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
	return es.eigenvalues();
}

double min_eigenvalue(const ComplexMatrix& m)
{
	return eigenvalues_hermitian(m)(0);
}

double operator_norm(const ComplexMatrix& m)
{
	const Eigen::VectorXd ev = eigenvalues_hermitian(m);
	return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

bool is_psd(const ComplexMatrix& m, const Tolerance& tol)
{
	const Eigen::VectorXd ev = eigenvalues_hermitian(m);
	const double norm = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
	return ev(0) >= -tol.threshold(tol.relative ? norm : 0.0);
}

double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b)
{
	require_same_dim(a, b);
	// Tr(ab) = sum_ij a_ij b_ji
	return (a.cwiseProduct(b.transpose())).sum().real();
}

Eigen::VectorXd hvec(const ComplexMatrix& m)
{
	const Eigen::Index n = m.rows();
	Eigen::VectorXd v(n * n);
	Eigen::Index k = 0;
	for(Eigen::Index i = 0; i < n; ++i) {
		v(k++) = m(i, i).real();
	}
	for(Eigen::Index i = 0; i < n; ++i) {
		for(Eigen::Index j = i + 1; j < n; ++j) {
			v(k++) = M_SQRT2 * m(i, j).real();
			v(k++) = M_SQRT2 * m(i, j).imag();
		}
	}
	return v;
}

ComplexMatrix hmat(const Eigen::VectorXd& v, Eigen::Index n)
{
	if(v.size() != n * n) {
		throw Error(ErrorKind::DimensionMismatch, "coordinate vector does not match n^2");
	}
	ComplexMatrix m = ComplexMatrix::Zero(n, n);
	Eigen::Index k = 0;
	for(Eigen::Index i = 0; i < n; ++i) {
		m(i, i) = v(k++);
	}
	for(Eigen::Index i = 0; i < n; ++i) {
		for(Eigen::Index j = i + 1; j < n; ++j) {
			const Complex z(v(k) / M_SQRT2, v(k + 1) / M_SQRT2);
			k += 2;
			m(i, j) = z;
			m(j, i) = std::conj(z);
		}
	}
	return m;
}

ComplexMatrix Rng::gaussian(Eigen::Index n)
{
	ComplexMatrix g(n, n);
	// Fill in a fixed order so replays are byte-identical.
	for(Eigen::Index i = 0; i < n; ++i) {
		for(Eigen::Index j = 0; j < n; ++j) {
			const double re = normal() * M_SQRT1_2;
			const double im = normal() * M_SQRT1_2;
			g(i, j) = Complex(re, im);
		}
	}
	return g;
}

ComplexMatrix Rng::hermitian(Eigen::Index n)
{
	const ComplexMatrix g = gaussian(n);
	return (g + g.adjoint()) * 0.5;
}

ComplexMatrix Rng::density(Eigen::Index n)
{
	const ComplexMatrix g = gaussian(n);
	ComplexMatrix w = g * g.adjoint();
	w = (w + w.adjoint()) * 0.5;
	return w / w.trace().real();
}

ComplexMatrix Rng::unitary(Eigen::Index n)
{
	const ComplexMatrix g = gaussian(n);
	Eigen::HouseholderQR<ComplexMatrix> qr(g);
	ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
	const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
	// Fix the phases of R's diagonal to make the law Haar.
	for(Eigen::Index j = 0; j < n; ++j) {
		const double mag = std::abs(r(j, j));
		if(mag > 0.0) {
			q.col(j) *= r(j, j) / mag;
		}
	}
	return q;
}

ComplexMatrix random_hermitian(Eigen::Index n, Seed seed)
{
	Rng rng(seed);
	return rng.hermitian(n);
}

ComplexMatrix random_density(Eigen::Index n, Seed seed)
{
	Rng rng(seed);
	return rng.density(n);
}

} // namespace ljlab
