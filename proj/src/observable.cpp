#include "ljlab/observable.hpp"

namespace ljlab
{

Observable::Observable(const ComplexMatrix& m, const Tolerance& tol)
{
	require_square(m);
	if(!all_finite(m)) {
		throw Error(ErrorKind::NotHermitian, "matrix has non-finite entries");
	}
	if(!is_hermitian(m, tol)) {
		throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian within tolerance");
	}
	m_ = (m + m.adjoint()) * 0.5;
}

Observable Observable::hermitian_part(const ComplexMatrix& m)
{
	require_square(m);
	return Observable(Trusted{}, (m + m.adjoint()) * 0.5);
}

Observable Observable::identity(Eigen::Index n)
{
	return Observable(Trusted{}, ComplexMatrix::Identity(n, n));
}

Observable Observable::zero(Eigen::Index n)
{
	return Observable(Trusted{}, ComplexMatrix::Zero(n, n));
}

Observable Observable::diagonal(const std::vector<double>& entries)
{
	const auto n = static_cast<Eigen::Index>(entries.size());
	ComplexMatrix m = ComplexMatrix::Zero(n, n);
	for(Eigen::Index i = 0; i < n; ++i) {
		m(i, i) = entries[static_cast<std::size_t>(i)];
	}
	return Observable(m);
}

Observable& Observable::operator+=(const Observable& o)
{
	require_same_dim(m_, o.m_);
	m_ += o.m_;
	return *this;
}

Observable& Observable::operator-=(const Observable& o)
{
	require_same_dim(m_, o.m_);
	m_ -= o.m_;
	return *this;
}

Observable& Observable::operator*=(double s)
{
	m_ *= s;
	return *this;
}

Observable random_observable(Eigen::Index n, Seed seed)
{
	return Observable::hermitian_part(random_hermitian(n, seed));
}

namespace pauli
{

Observable x()
{
	ComplexMatrix m(2, 2);
	m << 0, 1, 1, 0;
	return Observable(m);
}

Observable y()
{
	const Complex i(0, 1);
	ComplexMatrix m(2, 2);
	m << 0, -i, i, 0;
	return Observable(m);
}

Observable z()
{
	return Observable::diagonal({1, -1});
}

Observable ket0()
{
	return Observable::diagonal({1, 0});
}

} // namespace pauli

} // namespace ljlab
