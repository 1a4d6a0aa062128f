#pragma once

#include "ljlab/linalg.hpp"

namespace ljlab
{

/// An element of the algebra of observables: a Hermitian matrix.
class Observable
{
public:
	/// Validates squareness, finiteness and hermiticity; stores the exact Hermitian part.
	explicit Observable(const ComplexMatrix& m, const Tolerance& tol = {});

	/// (m + m^dagger)/2 with no validation beyond squareness.
	[[nodiscard]] static Observable hermitian_part(const ComplexMatrix& m);
	[[nodiscard]] static Observable identity(Eigen::Index n);
	[[nodiscard]] static Observable zero(Eigen::Index n);
	[[nodiscard]] static Observable diagonal(const std::vector<double>& entries);

	[[nodiscard]] const ComplexMatrix& matrix() const noexcept { return m_; }
	[[nodiscard]] Eigen::Index dim() const noexcept { return m_.rows(); }
	[[nodiscard]] double norm() const { return operator_norm(m_); }
	[[nodiscard]] double trace() const { return m_.trace().real(); }

	Observable& operator+=(const Observable& o);
	Observable& operator-=(const Observable& o);
	Observable& operator*=(double s);

	friend Observable operator+(Observable a, const Observable& b) { return a += b; }
	friend Observable operator-(Observable a, const Observable& b) { return a -= b; }
	friend Observable operator*(Observable a, double s) { return a *= s; }
	friend Observable operator*(double s, Observable a) { return a *= s; }
	friend Observable operator-(Observable a) { return a *= -1.0; }

private:
	struct Trusted
	{
	};
	Observable(Trusted, ComplexMatrix m) : m_(std::move(m)) {}

	ComplexMatrix m_;
};

[[nodiscard]] Observable random_observable(Eigen::Index n, Seed seed);

namespace pauli
{
Observable x();
Observable y();
Observable z();
/// |0><0|
Observable ket0();
} // namespace pauli

} // namespace ljlab
