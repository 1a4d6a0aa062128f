#pragma once

#include "ljlab/algebra.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace ljlab
{

/// Density matrix: Hermitian, positive semidefinite, unit trace (checked to 1e-10).
class State
{
public:
	static constexpr double kValidityTol = 1e-10;

	/// Throws InvalidState.
	explicit State(const ComplexMatrix& rho);

	[[nodiscard]] static State maximally_mixed(Eigen::Index n);
	/// |k><k|
	[[nodiscard]] static State basis_state(Eigen::Index n, Eigen::Index k);
	[[nodiscard]] static State random(Eigen::Index n, Seed seed);

	[[nodiscard]] const Observable& rho() const noexcept { return rho_; }
	[[nodiscard]] Eigen::Index dim() const noexcept { return rho_.dim(); }

private:
	Observable rho_;
};

/// Convex combination sum_k w_k s_k; weights must be nonnegative and sum to 1.
[[nodiscard]] State mixture(const std::vector<State>& states, const std::vector<double>& weights);

/// rho(a) = Tr(rho a)
[[nodiscard]] double expect(const State& s, const Observable& a);

enum class Criterion
{
	Associator,
	Commutator,
	Center
};

std::string_view to_string(Criterion c);

struct ClassicalityVerdict
{
	bool classical = true;
	Criterion criterion = Criterion::Associator;
	double max_violation = 0.0;
	/// Observables of the witnessing tuple, present when !classical.
	std::vector<Observable> certificate;
	/// Expectation (associator, commutator) or bracket norm (center) of the certificate.
	double certificate_value = 0.0;
};

/// Precomputed associators, commutators and derived algebra of L, reusable across states.
class ClassicalityTester
{
public:
	/// Throws NotClosed unless L is closed under both products.
	explicit ClassicalityTester(RealSubspace L);

	[[nodiscard]] const RealSubspace& algebra() const noexcept { return L_; }
	[[nodiscard]] const RealSubspace& derived() const noexcept { return derived_; }

	[[nodiscard]] ClassicalityVerdict associator(const State& s) const;
	[[nodiscard]] ClassicalityVerdict commutator(const State& s) const;
	/// Throws NotInSpan unless rho lies in L.
	[[nodiscard]] ClassicalityVerdict center(const State& s) const;
	[[nodiscard]] bool density_in_algebra(const State& s) const;

private:
	void require_dim(const State& s) const;
	ClassicalityVerdict linear_criterion(const State& s, Criterion c, const Eigen::MatrixXd& rows,
	                                     const Eigen::VectorXd& scale,
	                                     const std::vector<std::vector<std::size_t>>& tuples) const;

	RealSubspace L_;
	RealSubspace derived_;
	// |Tr(rho w)| <= threshold_ * max(1, ||w||) counts as zero.
	double threshold_ = 1e-8;
	// One row per tuple holding hvec of the associator / bracket.
	Eigen::MatrixXd associator_rows_;
	Eigen::VectorXd associator_norms_;
	std::vector<std::vector<std::size_t>> triples_;
	Eigen::MatrixXd commutator_rows_;
	Eigen::VectorXd commutator_norms_;
	std::vector<std::vector<std::size_t>> pairs_;
};

[[nodiscard]] ClassicalityVerdict is_classical_associator(const State& s, const RealSubspace& L);
[[nodiscard]] ClassicalityVerdict is_classical_commutator(const State& s, const RealSubspace& L);
[[nodiscard]] ClassicalityVerdict is_classical_center(const State& s, const RealSubspace& L);

struct Classification
{
	bool classical = true;
	std::vector<ClassicalityVerdict> verdicts;  // associator, commutator, then center when applicable
};

/// Runs every applicable criterion; throws CriteriaDisagree if they do not all agree.
[[nodiscard]] Classification classify(const State& s, const ClassicalityTester& tester);
[[nodiscard]] Classification classify(const State& s, const RealSubspace& L);

} // namespace ljlab
