#include "ljlab/witness.hpp"

#include <functional>
#include <optional>

namespace ljlab
{

std::string_view to_string(WitnessKind k)
{
	switch(k) {
	case WitnessKind::AssociatorQ: return "associator-q";
	case WitnessKind::QSquared: return "q-squared";
	case WitnessKind::AvrPair: return "avr-pair";
	}
	return "unknown";
}

WitnessReport associator_witness(const Observable& a, const Observable& b, const Observable& c)
{
	Observable q = associator(a, b, c);
	const double v = q.norm();
	return WitnessReport{std::move(q), WitnessKind::AssociatorQ, {a, b, c}, v};
}

WitnessReport squared_witness(const Observable& q)
{
	Observable q2 = jordan(q, q);
	const double v = q2.norm();
	return WitnessReport{std::move(q2), WitnessKind::QSquared, {q}, v};
}

WitnessReport avr_witness(const Observable& a, const Observable& b)
{
	Observable w = jordan(a, b);
	const double v = min_eigenvalue(w.matrix());
	return WitnessReport{std::move(w), WitnessKind::AvrPair, {a, b}, v};
}

namespace
{

void check_search_args(Eigen::Index n, int budget)
{
	if(n < 1) {
		throw Error(ErrorKind::InvalidDim, "witness search needs n >= 1");
	}
	if(budget < 1) {
		throw Error(ErrorKind::InvalidDim, "witness search needs a budget >= 1");
	}
}

WitnessReport no_violation(WitnessKind kind, Eigen::Index n)
{
	WitnessReport r{Observable::zero(n), kind, {}, 0.0};
	r.no_violation = true;
	return r;
}

// Real parametrization shared by both searches: a flat coordinate vector that
// `decode` maps to the candidate observables.
using Decoder = std::function<std::vector<Observable>(const Eigen::VectorXd&)>;
using Objective = std::function<double(const std::vector<Observable>&)>;

struct Candidate
{
	Eigen::VectorXd coords;
	double value;
};

// Greedy coordinate descent on `objective` (lower is better); deterministic in `seed`.
int refine(Candidate& best, const Decoder& decode, const Objective& objective, Seed seed,
           const SearchOptions& opts)
{
	Rng rng(Seed{seed.value ^ 0x9e3779b97f4a7c15ULL});
	const auto dim = static_cast<std::uint64_t>(best.coords.size());
	double step = opts.initial_step;
	int rejections = 0;
	int steps = 0;
	while(step >= opts.final_step && steps < opts.max_refinement_steps) {
		++steps;
		const auto coord = static_cast<Eigen::Index>(rng.next() % dim);
		const double sign = (rng.next() & 1U) ? 1.0 : -1.0;
		Eigen::VectorXd trial = best.coords;
		trial(coord) += sign * step;
		const double value = objective(decode(trial));
		if(value < best.value) {
			best = Candidate{std::move(trial), value};
			rejections = 0;
		} else if(++rejections >= opts.rejections_before_halving) {
			step *= 0.5;
			rejections = 0;
		}
	}
	return steps;
}

Observable rescaled(const Observable& x, double scale)
{
	const double norm = x.norm();
	return norm > 0.0 ? x * (scale / norm) : x;
}

Eigen::VectorXd complex_coords(const ComplexMatrix& m)
{
	Eigen::VectorXd v(2 * m.size());
	for(Eigen::Index k = 0; k < m.size(); ++k) {
		v(2 * k) = m.data()[k].real();
		v(2 * k + 1) = m.data()[k].imag();
	}
	return v;
}

ComplexMatrix complex_from_coords(const Eigen::VectorXd& v, Eigen::Index offset, Eigen::Index n)
{
	ComplexMatrix m(n, n);
	for(Eigen::Index k = 0; k < n * n; ++k) {
		m.data()[k] = Complex(v(offset + 2 * k), v(offset + 2 * k + 1));
	}
	return m;
}

} // namespace

WitnessReport avr_witness_search(Eigen::Index n, Seed seed, int budget, const SearchOptions& opts)
{
	check_search_args(n, budget);
	if(n == 1) {
		return no_violation(WitnessKind::AvrPair, n);
	}
	const Eigen::Index block = 2 * n * n;
	// Coordinates are the Gram factors G, H; a = GG^dagger and b = HH^dagger at operator norm `scale`.
	const Decoder decode = [&](const Eigen::VectorXd& v) {
		const ComplexMatrix g = complex_from_coords(v, 0, n);
		const ComplexMatrix h = complex_from_coords(v, block, n);
		return std::vector<Observable>{rescaled(Observable::hermitian_part(g * g.adjoint()), opts.scale),
		                               rescaled(Observable::hermitian_part(h * h.adjoint()), opts.scale)};
	};
	const Objective objective = [](const std::vector<Observable>& ab) {
		return min_eigenvalue(jordan(ab[0], ab[1]).matrix());
	};

	std::optional<Candidate> best;
	for(int t = 0; t < budget; ++t) {
		Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
		Eigen::VectorXd coords(2 * block);
		coords << complex_coords(rng.gaussian(n)), complex_coords(rng.gaussian(n));
		const double value = objective(decode(coords));
		if(!best || value < best->value) {
			best = Candidate{std::move(coords), value};
		}
	}
	const int steps = refine(*best, decode, objective, seed, opts);

	const std::vector<Observable> ab = decode(best->coords);
	WitnessReport r = avr_witness(ab[0], ab[1]);
	r.trials = budget;
	r.refinement_steps = steps;
	return r;
}

WitnessReport associator_witness_search(Eigen::Index n, Seed seed, int budget, const SearchOptions& opts)
{
	check_search_args(n, budget);
	if(n == 1) {
		return no_violation(WitnessKind::AssociatorQ, n);
	}
	const Eigen::Index block = n * n;
	const Decoder decode = [&](const Eigen::VectorXd& v) {
		std::vector<Observable> abc;
		for(Eigen::Index k = 0; k < 3; ++k) {
			abc.push_back(rescaled(Observable::hermitian_part(hmat(v.segment(k * block, block), n)), opts.scale));
		}
		return abc;
	};
	// Maximize the norm by minimizing its negative.
	const Objective objective = [](const std::vector<Observable>& abc) {
		return -associator(abc[0], abc[1], abc[2]).norm();
	};

	std::optional<Candidate> best;
	for(int t = 0; t < budget; ++t) {
		Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
		Eigen::VectorXd coords(3 * block);
		for(Eigen::Index k = 0; k < 3; ++k) {
			coords.segment(k * block, block) = hvec(rng.hermitian(n));
		}
		const double value = objective(decode(coords));
		if(!best || value < best->value) {
			best = Candidate{std::move(coords), value};
		}
	}
	const int steps = refine(*best, decode, objective, seed, opts);

	const std::vector<Observable> abc = decode(best->coords);
	WitnessReport r = associator_witness(abc[0], abc[1], abc[2]);
	r.trials = budget;
	r.refinement_steps = steps;
	return r;
}

} // namespace ljlab
