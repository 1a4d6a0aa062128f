#pragma once

#include "ljlab/products.hpp"
#include "ljlab/subspace.hpp"

#include <optional>
#include <vector>

namespace ljlab
{

enum class Product
{
	Jordan,
	Lie
};

[[nodiscard]] Observable apply(Product p, const Observable& a, const Observable& b);

/// Largest residual of a product of two basis elements outside the span.
[[nodiscard]] double closure_defect(const RealSubspace& s, Product p);
[[nodiscard]] bool is_closed(const RealSubspace& s, Product p, double tol = RealSubspace::kRankTol);

struct ClosureTrace
{
	RealSubspace result;
	int rounds = 0;
	std::vector<Eigen::Index> trajectory;  // dimension after each round, starting with the input dimension
};

/// Breadth-first closure: every round adjoins the products of all current basis pairs,
/// stopping after the first round that adds nothing. Throws MaxRoundsExceeded otherwise.
[[nodiscard]] ClosureTrace close_under_traced(const RealSubspace& s, Product p, int max_rounds);
[[nodiscard]] RealSubspace close_under(const RealSubspace& s, Product p, int max_rounds);
[[nodiscard]] RealSubspace close_under(const RealSubspace& s, Product p);

/// Lie closure of the span of all brackets of basis pairs. Throws NotClosed if L is not Lie-closed.
[[nodiscard]] RealSubspace derived_algebra(const RealSubspace& L);

/// Elements x of L with [x, s] = 0 for every basis element s of S.
/// Computed as the null space of x -> ([x,s_1], ..., [x,s_k]) on L's coordinates; singular values
/// at or below rank_tol * max(1, sigma_max) count as zero.
[[nodiscard]] RealSubspace centralizer(const RealSubspace& L, const RealSubspace& S,
                                       double rank_tol = RealSubspace::kRankTol);
[[nodiscard]] RealSubspace center(const RealSubspace& L, double rank_tol = RealSubspace::kRankTol);

/// Outcome of a structural test over basis tuples, with the worst tuple as certificate.
struct StructureCheck
{
	bool holds = true;
	double max_defect = 0.0;
	std::vector<std::size_t> certificate;  // basis indices of the worst tuple when !holds
};

/// lie(e_i, e_j) = 0 on all basis pairs. Throws NotClosed unless L is closed under both products.
[[nodiscard]] StructureCheck commutativity(const RealSubspace& L, const Tolerance& tol = {});
/// associator(e_i, e_j, e_k) = 0 on all basis triples. Same precondition.
[[nodiscard]] StructureCheck jordan_associativity(const RealSubspace& L, const Tolerance& tol = {});

[[nodiscard]] bool is_commutative(const RealSubspace& L, const Tolerance& tol = {});
[[nodiscard]] bool is_jordan_associative(const RealSubspace& L, const Tolerance& tol = {});

/// Killing matrix K_ij = Tr(ad_i ad_j) in the orthonormal basis.
[[nodiscard]] Eigen::MatrixXd killing_form(const RealSubspace& L);
/// Nondegenerate Killing form: sigma_min(K) > rel_tol * sigma_max(K). The zero algebra reports false.
[[nodiscard]] bool is_semisimple_lie(const RealSubspace& L, double rel_tol = 1e-8);

struct GenerationReport
{
	std::vector<Observable> generators;
	Eigen::Index closure_dim = 0;
	Eigen::Index target_dim = 0;
	bool generated = false;
	int rounds = 0;
	std::vector<Eigen::Index> trajectory;
};

/// Lie closure of {a, b}. Target is n^2 - 1 when both are traceless, n^2 otherwise.
[[nodiscard]] GenerationReport lie_generate(const Observable& a, const Observable& b, int max_rounds = -1);
/// Jordan closure of span{a, b, [a,b], 1}; target n^2.
[[nodiscard]] GenerationReport jordan_generate_three(const Observable& a, const Observable& b,
                                                     int max_rounds = -1);

/// Finite joint-spectrum realization of an associative algebra as functions on points.
struct FunctionRepresentation
{
	RealSubspace algebra;
	std::vector<ComplexMatrix> projectors;  // joint eigenprojector per point
	std::vector<Eigen::Index> multiplicity;
	Eigen::MatrixXd values;  // points x basis: value of basis element j at point k

	[[nodiscard]] Eigen::Index points() const { return static_cast<Eigen::Index>(projectors.size()); }
	/// Values of an arbitrary element of the algebra at each point.
	[[nodiscard]] Eigen::VectorXd evaluate(const Observable& x) const;
	/// sum_k f(k) P_k
	[[nodiscard]] ComplexMatrix reconstruct(const Eigen::VectorXd& function) const;
};

/// Throws NotAssociative unless L is Jordan-associative.
[[nodiscard]] FunctionRepresentation function_representation(const RealSubspace& L, const Tolerance& tol = {});

struct PositivityViolation
{
	Observable a;
	Observable b;
	double min_eigenvalue;
};

struct PositivityReport
{
	int samples = 0;
	int item3_violations = 0;  // a - b >= 0 but a^2 - b^2 not >= 0
	int item4_violations = 0;  // a, b >= 0 but a o b not >= 0
	double worst_item3 = 0.0;  // smallest lambda_min(a^2 - b^2) seen
	double worst_item4 = 0.0;  // smallest lambda_min(a o b) seen
	std::optional<PositivityViolation> item3_example;
	std::optional<PositivityViolation> item4_example;
};

/// lambda_min(a^2 - b^2), for a pair with b >= 0 and a - b >= 0.
[[nodiscard]] double square_monotonicity_gap(const Observable& a, const Observable& b);
/// lambda_min(a o b), for a pair of positive elements.
[[nodiscard]] double jordan_positivity_gap(const Observable& a, const Observable& b);

/// Samples positive pairs inside a Jordan-closed L (squares of random elements) and counts
/// failures of square monotonicity and of Jordan-product positivity. Throws NotClosed.
[[nodiscard]] PositivityReport check_positivity_closure(const RealSubspace& L, int samples, Seed seed,
                                                        const Tolerance& tol = {});

} // namespace ljlab
