#include "ljlab/subspace.hpp"

#include <algorithm>
#include <cmath>

namespace ljlab
{

RealSubspace::RealSubspace(Eigen::Index ambient_dim) : n_(ambient_dim), frame_(ambient_dim * ambient_dim, 0)
{
	if(ambient_dim < 1) {
		throw Error(ErrorKind::InvalidDim, "ambient dimension must be positive");
	}
}

bool RealSubspace::adjoin(const Observable& x, double rank_tol, double floor_scale)
{
	if(x.dim() != n_) {
		throw Error(ErrorKind::DimensionMismatch, "element size differs from the ambient dimension");
	}
	const Eigen::VectorXd v = hvec(x.matrix());
	const double input_norm = v.norm();
	if(input_norm == 0.0) {
		return false;
	}
	Eigen::VectorXd r = v;
	// Two passes of classical Gram-Schmidt keep the frame orthonormal to machine precision.
	for(int pass = 0; pass < 2 && frame_.cols() > 0; ++pass) {
		r -= frame_ * (frame_.transpose() * r);
	}
	const double residual = r.norm();
	if(residual <= rank_tol * std::max(input_norm, floor_scale) || frame_.cols() == n_ * n_) {
		return false;
	}
	r /= residual;
	frame_.conservativeResize(Eigen::NoChange, frame_.cols() + 1);
	frame_.col(frame_.cols() - 1) = r;
	basis_.push_back(Observable::hermitian_part(hmat(r, n_)));
	return true;
}

RealSubspace RealSubspace::span(const std::vector<Observable>& matrices, double rank_tol)
{
	if(matrices.empty()) {
		throw Error(ErrorKind::EmptyInput, "span of an empty list");
	}
	RealSubspace s(matrices.front().dim());
	for(const Observable& m : matrices) {
		s.adjoin(m, rank_tol);
	}
	return s;
}

namespace
{

ComplexMatrix unit(Eigen::Index n, Eigen::Index i, Eigen::Index j, Complex value)
{
	ComplexMatrix m = ComplexMatrix::Zero(n, n);
	m(i, j) = value;
	if(i != j) {
		m(j, i) = std::conj(value);
	}
	return m;
}

// Standard orthonormal Hermitian basis of the block [lo, hi).
void push_block(std::vector<Observable>& out, Eigen::Index n, Eigen::Index lo, Eigen::Index hi)
{
	for(Eigen::Index i = lo; i < hi; ++i) {
		out.push_back(Observable(unit(n, i, i, 1.0)));
	}
	for(Eigen::Index i = lo; i < hi; ++i) {
		for(Eigen::Index j = i + 1; j < hi; ++j) {
			out.push_back(Observable(unit(n, i, j, M_SQRT1_2)));
			out.push_back(Observable(unit(n, i, j, Complex(0.0, -M_SQRT1_2))));
		}
	}
}

} // namespace

RealSubspace RealSubspace::full(Eigen::Index n)
{
	std::vector<Observable> b;
	push_block(b, n, 0, n);
	return span(b);
}

RealSubspace RealSubspace::traceless(Eigen::Index n)
{
	const RealSubspace all = full(n);
	const Observable unit_trace = Observable::identity(n) * (1.0 / std::sqrt(static_cast<double>(n)));
	RealSubspace s(n);
	s.adjoin(unit_trace);
	for(const Observable& e : all.basis()) {
		s.adjoin(e);
	}
	// Drop the identity direction that was placed first.
	RealSubspace out(n);
	for(std::size_t k = 1; k < s.basis_.size(); ++k) {
		out.adjoin(s.basis_[k]);
	}
	return out;
}

RealSubspace RealSubspace::diagonal(Eigen::Index n)
{
	std::vector<Observable> b;
	for(Eigen::Index i = 0; i < n; ++i) {
		b.push_back(Observable(unit(n, i, i, 1.0)));
	}
	return span(b);
}

RealSubspace RealSubspace::block_diagonal(const std::vector<Eigen::Index>& blocks)
{
	Eigen::Index n = 0;
	for(Eigen::Index size : blocks) {
		if(size < 1) {
			throw Error(ErrorKind::InvalidDim, "block sizes must be positive");
		}
		n += size;
	}
	if(n == 0) {
		throw Error(ErrorKind::EmptyInput, "no blocks given");
	}
	std::vector<Observable> b;
	Eigen::Index lo = 0;
	for(Eigen::Index size : blocks) {
		push_block(b, n, lo, lo + size);
		lo += size;
	}
	return span(b);
}

Eigen::VectorXd RealSubspace::coordinates(const Observable& x) const
{
	if(x.dim() != n_) {
		throw Error(ErrorKind::DimensionMismatch, "element size differs from the ambient dimension");
	}
	return frame_.transpose() * hvec(x.matrix());
}

Observable RealSubspace::element(const Eigen::VectorXd& coords) const
{
	if(coords.size() != dim()) {
		throw Error(ErrorKind::DimensionMismatch, "coordinate count differs from the subspace dimension");
	}
	const Eigen::VectorXd v = frame_ * coords;
	return Observable::hermitian_part(hmat(v, n_));
}

Observable RealSubspace::project(const Observable& x) const
{
	return element(coordinates(x));
}

double RealSubspace::distance(const Observable& x) const
{
	const Eigen::VectorXd v = hvec(x.matrix());
	if(x.dim() != n_) {
		throw Error(ErrorKind::DimensionMismatch, "element size differs from the ambient dimension");
	}
	return (v - frame_ * (frame_.transpose() * v)).norm();
}

bool RealSubspace::contains(const Observable& x, double tol) const
{
	const double scale = std::max(1.0, hvec(x.matrix()).norm());
	return distance(x) <= tol * scale;
}

bool RealSubspace::contains(const RealSubspace& other, double tol) const
{
	if(other.n_ != n_) {
		throw Error(ErrorKind::DimensionMismatch, "subspaces live in different ambient sizes");
	}
	for(const Observable& e : other.basis_) {
		if(!contains(e, tol)) {
			return false;
		}
	}
	return true;
}

Eigen::MatrixXd RealSubspace::projector() const
{
	return frame_ * frame_.transpose();
}

bool RealSubspace::same_span(const RealSubspace& other, double tol) const
{
	return dim() == other.dim() && contains(other, tol) && other.contains(*this, tol);
}

} // namespace ljlab
