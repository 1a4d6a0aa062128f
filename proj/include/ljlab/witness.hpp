#pragma once

#include "ljlab/products.hpp"

#include <string_view>
#include <vector>

namespace ljlab
{

enum class WitnessKind
{
	AssociatorQ,
	QSquared,
	AvrPair
};

std::string_view to_string(WitnessKind k);

struct WitnessReport
{
	Observable witness;
	WitnessKind kind;
	std::vector<Observable> inputs;
	/// lambda_min(a o b) for AvrPair, operator norm of q otherwise.
	double violation = 0.0;
	/// True when no witness can exist (1 x 1 matrices).
	bool no_violation = false;
	int trials = 0;
	int refinement_steps = 0;
};

[[nodiscard]] WitnessReport associator_witness(const Observable& a, const Observable& b, const Observable& c);
[[nodiscard]] WitnessReport squared_witness(const Observable& q);
/// Evaluates a given positive pair as an AVR witness a o b.
[[nodiscard]] WitnessReport avr_witness(const Observable& a, const Observable& b);

struct SearchOptions
{
	/// Operator norm every candidate is rescaled to.
	double scale = 1.0;
	double initial_step = 0.1;
	double final_step = 1e-6;
	int rejections_before_halving = 20;
	int max_refinement_steps = 20000;
};

/// Multi-start over Wishart pairs a = GG^dagger, b = HH^dagger followed by greedy
/// coordinate refinement of the factors; minimizes lambda_min(a o b).
[[nodiscard]] WitnessReport avr_witness_search(Eigen::Index n, Seed seed, int budget,
                                               const SearchOptions& opts = {});
/// Multi-start over Hermitian triples with greedy refinement; maximizes ||(a o b) o c - a o (b o c)||.
[[nodiscard]] WitnessReport associator_witness_search(Eigen::Index n, Seed seed, int budget,
                                                      const SearchOptions& opts = {});

} // namespace ljlab
