#pragma once

#include "ljlab/errors.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>

namespace ljlab
{

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Absolute zero threshold, optionally scaled by max(1, operand norm).
struct Tolerance
{
	double zero_tol = 1e-9;
	bool relative = true;

	[[nodiscard]] double threshold(double scale) const
	{
		return relative ? zero_tol * std::max(1.0, scale) : zero_tol;
	}
};

struct Seed
{
	std::uint64_t value = 0;
};

/// Per-trial seed used by every sweep: seed xor trial index.
[[nodiscard]] inline Seed trial_seed(Seed seed, std::uint64_t trial)
{
	return Seed{seed.value ^ trial};
}

void require_square(const ComplexMatrix& m);
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b);
[[nodiscard]] bool all_finite(const ComplexMatrix& m);

/// Largest singular value; for Hermitian input this is max |lambda_i|.
[[nodiscard]] double spectral_norm(const ComplexMatrix& m);

[[nodiscard]] bool is_hermitian(const ComplexMatrix& m, const Tolerance& tol = {});

struct HermitianEigen
{
	Eigen::VectorXd values;  // ascending
	ComplexMatrix vectors;   // columns, unitary
};

/// Throws NotHermitian unless is_hermitian(m).
[[nodiscard]] HermitianEigen eig_hermitian(const ComplexMatrix& m);
[[nodiscard]] Eigen::VectorXd eigenvalues_hermitian(const ComplexMatrix& m);

[[nodiscard]] double min_eigenvalue(const ComplexMatrix& m);
[[nodiscard]] double operator_norm(const ComplexMatrix& m);
[[nodiscard]] bool is_psd(const ComplexMatrix& m, const Tolerance& tol = {});

/// Hilbert-Schmidt inner product Tr(ab), real for Hermitian a, b.
[[nodiscard]] double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Isometry from n x n Hermitian matrices (HS inner product) to R^{n^2}.
/// Layout: the n diagonal entries, then sqrt2*Re, sqrt2*Im of each strict upper entry (row-major).
[[nodiscard]] Eigen::VectorXd hvec(const ComplexMatrix& m);
[[nodiscard]] ComplexMatrix hmat(const Eigen::VectorXd& v, Eigen::Index n);

/// Deterministic source for the Gaussian ensembles.
class Rng
{
public:
	explicit Rng(Seed seed) : engine_(seed.value) {}

	double normal() { return normal_(engine_); }
	double uniform() { return uniform_(engine_); }
	std::uint64_t next() { return engine_(); }

	/// Entries with independent standard complex Gaussian law, E|z|^2 = 1.
	ComplexMatrix gaussian(Eigen::Index n);
	/// GUE sample (G + G^dagger)/2.
	ComplexMatrix hermitian(Eigen::Index n);
	/// Normalized Wishart sample G G^dagger / Tr(G G^dagger).
	ComplexMatrix density(Eigen::Index n);
	/// Haar-distributed unitary via QR of a Gaussian matrix.
	ComplexMatrix unitary(Eigen::Index n);

private:
	std::mt19937_64 engine_;
	std::normal_distribution<double> normal_{0.0, 1.0};
	std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

[[nodiscard]] ComplexMatrix random_hermitian(Eigen::Index n, Seed seed);
[[nodiscard]] ComplexMatrix random_density(Eigen::Index n, Seed seed);

} // namespace ljlab
