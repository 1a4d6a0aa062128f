#pragma once

#include "ljlab/observable.hpp"

#include <vector>

namespace ljlab
{

/// Real-linear subspace of n x n Hermitian matrices with an orthonormal
/// Hilbert-Schmidt basis. The zero subspace (empty basis) is representable.
class RealSubspace
{
public:
	/// Default residual threshold for rank decisions, relative to the input norm.
	static constexpr double kRankTol = 1e-8;

	explicit RealSubspace(Eigen::Index ambient_dim);

	/// Gram-Schmidt over the inputs in order; inputs whose residual is <= rank_tol * ||input||_HS are dropped.
	/// Throws EmptyInput for an empty list and DimensionMismatch for mixed sizes.
	[[nodiscard]] static RealSubspace span(const std::vector<Observable>& matrices, double rank_tol = kRankTol);

	[[nodiscard]] static RealSubspace full(Eigen::Index n);
	[[nodiscard]] static RealSubspace traceless(Eigen::Index n);
	[[nodiscard]] static RealSubspace diagonal(Eigen::Index n);
	/// Hermitian block-diagonal algebra with the given block sizes, e.g. {2, 1} inside 3 x 3.
	[[nodiscard]] static RealSubspace block_diagonal(const std::vector<Eigen::Index>& blocks);

	[[nodiscard]] Eigen::Index ambient_dim() const noexcept { return n_; }
	[[nodiscard]] Eigen::Index dim() const noexcept { return static_cast<Eigen::Index>(basis_.size()); }
	[[nodiscard]] bool empty() const noexcept { return basis_.empty(); }
	[[nodiscard]] const std::vector<Observable>& basis() const noexcept { return basis_; }
	[[nodiscard]] const Observable& operator[](std::size_t i) const { return basis_[i]; }

	/// Columns are hvec of the basis elements (n^2 x dim, orthonormal).
	[[nodiscard]] const Eigen::MatrixXd& frame() const noexcept { return frame_; }

	/// Adds x if its residual exceeds rank_tol * max(||x||_HS, floor_scale). Returns whether the dimension grew.
	/// A positive floor_scale makes the test absolute for inputs much smaller than that scale.
	bool adjoin(const Observable& x, double rank_tol = kRankTol, double floor_scale = 0.0);

	[[nodiscard]] Eigen::VectorXd coordinates(const Observable& x) const;
	[[nodiscard]] Observable project(const Observable& x) const;
	/// Hilbert-Schmidt norm of x minus its projection.
	[[nodiscard]] double distance(const Observable& x) const;
	[[nodiscard]] bool contains(const Observable& x, double tol = kRankTol) const;
	/// Every basis element of `other` lies in this span.
	[[nodiscard]] bool contains(const RealSubspace& other, double tol = kRankTol) const;
	/// Orthogonal projector on R^{n^2}.
	[[nodiscard]] Eigen::MatrixXd projector() const;
	[[nodiscard]] bool same_span(const RealSubspace& other, double tol = kRankTol) const;

	[[nodiscard]] Observable element(const Eigen::VectorXd& coords) const;

private:
	Eigen::Index n_;
	std::vector<Observable> basis_;
	Eigen::MatrixXd frame_;
};

} // namespace ljlab
