#pragma once

// Reference computations that avoid the library's code paths.

#include "ljlab/linalg.hpp"

#include <array>
#include <cmath>

namespace oracle
{

using ljlab::Complex;
using ljlab::ComplexMatrix;

/// Eigenvalues of a 2x2 Hermitian matrix from its characteristic polynomial, ascending.
inline std::array<double, 2> eig2(const ComplexMatrix& m)
{
	const double tr = (m(0, 0) + m(1, 1)).real();
	const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
	const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
	return {(tr - disc) / 2.0, (tr + disc) / 2.0};
}

inline ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d)
{
	ComplexMatrix m(2, 2);
	m << a, b, c, d;
	return m;
}

inline ComplexMatrix sx() { return mat2(0, 1, 1, 0); }
inline ComplexMatrix sy() { return mat2(0, Complex(0, -1), Complex(0, 1), 0); }
inline ComplexMatrix sz() { return mat2(1, 0, 0, -1); }
inline ComplexMatrix id2() { return ComplexMatrix::Identity(2, 2); }

/// Dimension of {x : x s = s x for all s} over C, via Kronecker vectorization.
inline Eigen::Index commutant_dim(const std::vector<ComplexMatrix>& gens)
{
	const Eigen::Index n = gens.front().rows();
	ComplexMatrix big(n * n * static_cast<Eigen::Index>(gens.size()), n * n);
	const ComplexMatrix id = ComplexMatrix::Identity(n, n);
	for(std::size_t g = 0; g < gens.size(); ++g) {
		// vec(xs - sx) = (s^T kron I - I kron s) vec(x), column-major vec
		ComplexMatrix k(n * n, n * n);
		for(Eigen::Index i = 0; i < n; ++i) {
			for(Eigen::Index j = 0; j < n; ++j) {
				k.block(i * n, j * n, n, n) = gens[g](j, i) * id - (i == j ? gens[g] : ComplexMatrix::Zero(n, n));
			}
		}
		big.block(static_cast<Eigen::Index>(g) * n * n, 0, n * n, n * n) = k;
	}
	Eigen::JacobiSVD<ComplexMatrix> svd(big);
	Eigen::Index rank = 0;
	for(Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
		rank += svd.singularValues()(k) > 1e-9 ? 1 : 0;
	}
	return n * n - rank;
}

} // namespace oracle
