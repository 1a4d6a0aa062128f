#include "ljlab/states.hpp"

#include <cmath>

namespace ljlab
{

namespace
{

Observable validate_density(const ComplexMatrix& rho)
{
	if(rho.rows() != rho.cols() || rho.rows() == 0) {
		throw Error(ErrorKind::InvalidState, "density matrix must be square and nonempty");
	}
	if(!all_finite(rho)) {
		throw Error(ErrorKind::InvalidState, "density matrix has non-finite entries");
	}
	if(!is_hermitian(rho, Tolerance{State::kValidityTol, true})) {
		throw Error(ErrorKind::InvalidState, "density matrix is not Hermitian");
	}
	const Observable r = Observable::hermitian_part(rho);
	const double tr = r.trace();
	if(std::abs(tr - 1.0) > State::kValidityTol) {
		throw Error(ErrorKind::InvalidState, "density matrix trace is " + std::to_string(tr) + ", expected 1");
	}
	const double lmin = min_eigenvalue(r.matrix());
	if(lmin < -State::kValidityTol) {
		throw Error(ErrorKind::InvalidState,
		            "density matrix is not positive semidefinite (lambda_min = " + std::to_string(lmin) + ")");
	}
	return r;
}

} // namespace

State::State(const ComplexMatrix& rho) : rho_(validate_density(rho)) {}

State State::maximally_mixed(Eigen::Index n)
{
	return State(ComplexMatrix::Identity(n, n) / static_cast<double>(n));
}

State State::basis_state(Eigen::Index n, Eigen::Index k)
{
	ComplexMatrix m = ComplexMatrix::Zero(n, n);
	m(k, k) = 1.0;
	return State(m);
}

State State::random(Eigen::Index n, Seed seed)
{
	return State(random_density(n, seed));
}

State mixture(const std::vector<State>& states, const std::vector<double>& weights)
{
	if(states.empty() || states.size() != weights.size()) {
		throw Error(ErrorKind::EmptyInput, "mixture needs one weight per state");
	}
	ComplexMatrix m = ComplexMatrix::Zero(states.front().dim(), states.front().dim());
	for(std::size_t k = 0; k < states.size(); ++k) {
		require_same_dim(m, states[k].rho().matrix());
		if(weights[k] < 0.0) {
			throw Error(ErrorKind::InvalidState, "mixture weights must be nonnegative");
		}
		m += weights[k] * states[k].rho().matrix();
	}
	return State(m);
}

double expect(const State& s, const Observable& a)
{
	require_same_dim(s.rho().matrix(), a.matrix());
	return hs_inner(s.rho().matrix(), a.matrix());
}

std::string_view to_string(Criterion c)
{
	switch(c) {
	case Criterion::Associator: return "associator";
	case Criterion::Commutator: return "commutator";
	case Criterion::Center: return "center";
	}
	return "unknown";
}

ClassicalityTester::ClassicalityTester(RealSubspace L) : L_(std::move(L)), derived_(L_.ambient_dim())
{
	if(!is_closed(L_, Product::Lie) || !is_closed(L_, Product::Jordan)) {
		throw Error(ErrorKind::NotClosed, "classicality tests need an algebra closed under both products");
	}
	derived_ = derived_algebra(L_);

	const auto& e = L_.basis();
	const std::size_t d = e.size();
	const Eigen::Index n2 = L_.ambient_dim() * L_.ambient_dim();

	associator_rows_.resize(static_cast<Eigen::Index>(d * d * d), n2);
	associator_norms_.resize(static_cast<Eigen::Index>(d * d * d));
	Eigen::Index row = 0;
	for(std::size_t i = 0; i < d; ++i) {
		for(std::size_t j = 0; j < d; ++j) {
			const Observable ij = jordan(e[i], e[j]);
			for(std::size_t k = 0; k < d; ++k, ++row) {
				const Observable q = jordan(ij, e[k]) - jordan(e[i], jordan(e[j], e[k]));
				associator_rows_.row(row) = hvec(q.matrix()).transpose();
				associator_norms_(row) = q.norm();
				triples_.push_back({i, j, k});
			}
		}
	}

	const std::size_t pairs = d * (d - (d > 0 ? 1 : 0)) / 2;
	commutator_rows_.resize(static_cast<Eigen::Index>(pairs), n2);
	commutator_norms_.resize(static_cast<Eigen::Index>(pairs));
	row = 0;
	for(std::size_t i = 0; i < d; ++i) {
		for(std::size_t j = i + 1; j < d; ++j, ++row) {
			const Observable c = lie(e[i], e[j]);
			commutator_rows_.row(row) = hvec(c.matrix()).transpose();
			commutator_norms_(row) = c.norm();
			pairs_.push_back({i, j});
		}
	}
}

void ClassicalityTester::require_dim(const State& s) const
{
	if(s.dim() != L_.ambient_dim()) {
		throw Error(ErrorKind::DimensionMismatch, "state size differs from the algebra's ambient size");
	}
}

ClassicalityVerdict ClassicalityTester::linear_criterion(const State& s, Criterion c, const Eigen::MatrixXd& rows,
                                                         const Eigen::VectorXd& scale,
                                                         const std::vector<std::vector<std::size_t>>& tuples) const
{
	require_dim(s);
	ClassicalityVerdict v;
	v.criterion = c;
	if(rows.rows() == 0) {
		return v;
	}
	// Tr(rho w) = <hvec(rho), hvec(w)>
	const Eigen::VectorXd values = rows * hvec(s.rho().matrix());
	Eigen::Index worst = 0;
	double worst_excess = -1.0;
	for(Eigen::Index r = 0; r < values.size(); ++r) {
		const double mag = std::abs(values(r));
		v.max_violation = std::max(v.max_violation, mag);
		const double excess = mag - threshold_ * std::max(1.0, scale(r));
		if(excess > worst_excess) {
			worst_excess = excess;
			worst = r;
		}
	}
	v.classical = worst_excess <= 0.0;
	if(!v.classical) {
		for(std::size_t idx : tuples[static_cast<std::size_t>(worst)]) {
			v.certificate.push_back(L_[idx]);
		}
		v.certificate_value = values(worst);
	}
	return v;
}

ClassicalityVerdict ClassicalityTester::associator(const State& s) const
{
	return linear_criterion(s, Criterion::Associator, associator_rows_, associator_norms_, triples_);
}

ClassicalityVerdict ClassicalityTester::commutator(const State& s) const
{
	return linear_criterion(s, Criterion::Commutator, commutator_rows_, commutator_norms_, pairs_);
}

bool ClassicalityTester::density_in_algebra(const State& s) const
{
	require_dim(s);
	return L_.contains(s.rho());
}

ClassicalityVerdict ClassicalityTester::center(const State& s) const
{
	if(!density_in_algebra(s)) {
		throw Error(ErrorKind::NotInSpan, "the density matrix does not belong to the algebra");
	}
	ClassicalityVerdict v;
	v.criterion = Criterion::Center;
	const double rho_norm = s.rho().norm();
	double worst_excess = -1.0;
	for(const Observable& d : derived_.basis()) {
		const double mag = lie(s.rho(), d).norm();
		v.max_violation = std::max(v.max_violation, mag);
		const double excess = mag - threshold_ * std::max(1.0, rho_norm * d.norm());
		if(excess > worst_excess) {
			worst_excess = excess;
			if(excess > 0.0) {
				v.certificate = {s.rho(), d};
				v.certificate_value = mag;
			}
		}
	}
	v.classical = worst_excess <= 0.0;
	return v;
}

ClassicalityVerdict is_classical_associator(const State& s, const RealSubspace& L)
{
	return ClassicalityTester(L).associator(s);
}

ClassicalityVerdict is_classical_commutator(const State& s, const RealSubspace& L)
{
	return ClassicalityTester(L).commutator(s);
}

ClassicalityVerdict is_classical_center(const State& s, const RealSubspace& L)
{
	return ClassicalityTester(L).center(s);
}

Classification classify(const State& s, const ClassicalityTester& tester)
{
	Classification c;
	c.verdicts.push_back(tester.associator(s));
	c.verdicts.push_back(tester.commutator(s));
	if(tester.density_in_algebra(s)) {
		c.verdicts.push_back(tester.center(s));
	}
	c.classical = c.verdicts.front().classical;
	for(const auto& v : c.verdicts) {
		if(v.classical != c.classical) {
			throw Error(ErrorKind::CriteriaDisagree, "classicality criteria disagree (" +
			                                             std::string(to_string(v.criterion)) + " says " +
			                                             (v.classical ? "classical" : "quantum") + ")");
		}
	}
	return c;
}

Classification classify(const State& s, const RealSubspace& L)
{
	return classify(s, ClassicalityTester(L));
}

} // namespace ljlab
