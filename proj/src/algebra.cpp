#include "ljlab/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace ljlab
{

Observable apply(Product p, const Observable& a, const Observable& b)
{
	return p == Product::Jordan ? jordan(a, b) : lie(a, b);
}

double closure_defect(const RealSubspace& s, Product p)
{
	const auto& e = s.basis();
	double worst = 0.0;
	for(std::size_t i = 0; i < e.size(); ++i) {
		for(std::size_t j = (p == Product::Jordan ? i : i + 1); j < e.size(); ++j) {
			worst = std::max(worst, s.distance(apply(p, e[i], e[j])));
		}
	}
	return worst;
}

bool is_closed(const RealSubspace& s, Product p, double tol)
{
	// Basis elements have unit HS norm, so their products are O(1) and an absolute test suffices.
	return closure_defect(s, p) <= tol;
}

namespace
{

int default_rounds(Eigen::Index n)
{
	return static_cast<int>(n * n);
}

ClosureTrace closure_impl(const RealSubspace& s, Product p, int max_rounds, bool& converged)
{
	ClosureTrace t{s, 0, {s.dim()}};
	converged = false;
	while(t.rounds < max_rounds) {
		++t.rounds;
		const std::vector<Observable> current = t.result.basis();
		bool grew = false;
		for(std::size_t i = 0; i < current.size(); ++i) {
			for(std::size_t j = (p == Product::Jordan ? i : i + 1); j < current.size(); ++j) {
				grew |= t.result.adjoin(apply(p, current[i], current[j]), RealSubspace::kRankTol, 1.0);
			}
		}
		t.trajectory.push_back(t.result.dim());
		if(!grew) {
			converged = true;
			break;
		}
	}
	return t;
}

void require_lie_closed(const RealSubspace& L, const char* who)
{
	if(!is_closed(L, Product::Lie)) {
		throw Error(ErrorKind::NotClosed, std::string(who) + ": subspace is not closed under the Lie product");
	}
}

void require_closed_both(const RealSubspace& L, const char* who)
{
	if(!is_closed(L, Product::Lie) || !is_closed(L, Product::Jordan)) {
		throw Error(ErrorKind::NotClosed, std::string(who) + ": subspace is not closed under both products");
	}
}

} // namespace

ClosureTrace close_under_traced(const RealSubspace& s, Product p, int max_rounds)
{
	bool converged = false;
	ClosureTrace t = closure_impl(s, p, max_rounds, converged);
	if(!converged) {
		throw Error(ErrorKind::MaxRoundsExceeded,
		            "closure did not stabilize within " + std::to_string(max_rounds) + " rounds");
	}
	return t;
}

RealSubspace close_under(const RealSubspace& s, Product p, int max_rounds)
{
	return close_under_traced(s, p, max_rounds).result;
}

RealSubspace close_under(const RealSubspace& s, Product p)
{
	return close_under(s, p, default_rounds(s.ambient_dim()));
}

RealSubspace derived_algebra(const RealSubspace& L)
{
	require_lie_closed(L, "derived_algebra");
	RealSubspace d(L.ambient_dim());
	const auto& e = L.basis();
	for(std::size_t i = 0; i < e.size(); ++i) {
		for(std::size_t j = i + 1; j < e.size(); ++j) {
			d.adjoin(lie(e[i], e[j]), RealSubspace::kRankTol, 1.0);
		}
	}
	return close_under(d, Product::Lie);
}

RealSubspace centralizer(const RealSubspace& L, const RealSubspace& S, double rank_tol)
{
	if(L.ambient_dim() != S.ambient_dim()) {
		throw Error(ErrorKind::DimensionMismatch, "centralizer operands live in different ambient sizes");
	}
	if(S.empty() || L.empty()) {
		return L;
	}
	const Eigen::Index n2 = L.ambient_dim() * L.ambient_dim();
	Eigen::MatrixXd map(S.dim() * n2, L.dim());
	for(Eigen::Index i = 0; i < L.dim(); ++i) {
		for(Eigen::Index j = 0; j < S.dim(); ++j) {
			map.block(j * n2, i, n2, 1) =
			    hvec(lie(L[static_cast<std::size_t>(i)], S[static_cast<std::size_t>(j)]).matrix());
		}
	}
	Eigen::JacobiSVD<Eigen::MatrixXd> svd(map, Eigen::ComputeFullV);
	const Eigen::VectorXd& sv = svd.singularValues();
	const double cutoff = rank_tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
	RealSubspace out(L.ambient_dim());
	for(Eigen::Index k = 0; k < L.dim(); ++k) {
		if(k >= sv.size() || sv(k) <= cutoff) {
			out.adjoin(L.element(svd.matrixV().col(k)));
		}
	}
	return out;
}

RealSubspace center(const RealSubspace& L, double rank_tol)
{
	return centralizer(L, L, rank_tol);
}

StructureCheck commutativity(const RealSubspace& L, const Tolerance& tol)
{
	require_closed_both(L, "commutativity");
	StructureCheck r;
	const auto& e = L.basis();
	for(std::size_t i = 0; i < e.size(); ++i) {
		for(std::size_t j = i + 1; j < e.size(); ++j) {
			const double d = lie(e[i], e[j]).norm();
			if(d > r.max_defect) {
				r.max_defect = d;
				r.certificate = {i, j};
			}
			if(d > tol.threshold(e[i].norm() * e[j].norm())) {
				r.holds = false;
			}
		}
	}
	if(r.holds) {
		r.certificate.clear();
	}
	return r;
}

StructureCheck jordan_associativity(const RealSubspace& L, const Tolerance& tol)
{
	require_closed_both(L, "jordan_associativity");
	StructureCheck r;
	const auto& e = L.basis();
	std::vector<double> norms;
	for(const auto& x : e) {
		norms.push_back(x.norm());
	}
	for(std::size_t i = 0; i < e.size(); ++i) {
		for(std::size_t j = 0; j < e.size(); ++j) {
			const Observable ij = jordan(e[i], e[j]);
			for(std::size_t k = 0; k < e.size(); ++k) {
				const Observable defect = jordan(ij, e[k]) - jordan(e[i], jordan(e[j], e[k]));
				const double d = defect.norm();
				if(d > r.max_defect) {
					r.max_defect = d;
					r.certificate = {i, j, k};
				}
				if(d > tol.threshold(norms[i] * norms[j] * norms[k])) {
					r.holds = false;
				}
			}
		}
	}
	if(r.holds) {
		r.certificate.clear();
	}
	return r;
}

bool is_commutative(const RealSubspace& L, const Tolerance& tol)
{
	return commutativity(L, tol).holds;
}

bool is_jordan_associative(const RealSubspace& L, const Tolerance& tol)
{
	return jordan_associativity(L, tol).holds;
}

Eigen::MatrixXd killing_form(const RealSubspace& L)
{
	const Eigen::Index d = L.dim();
	std::vector<Eigen::MatrixXd> ad(static_cast<std::size_t>(d), Eigen::MatrixXd(d, d));
	for(Eigen::Index i = 0; i < d; ++i) {
		for(Eigen::Index j = 0; j < d; ++j) {
			ad[static_cast<std::size_t>(i)].col(j) =
			    L.coordinates(lie(L[static_cast<std::size_t>(i)], L[static_cast<std::size_t>(j)]));
		}
	}
	Eigen::MatrixXd k(d, d);
	for(Eigen::Index i = 0; i < d; ++i) {
		for(Eigen::Index j = 0; j < d; ++j) {
			k(i, j) = (ad[static_cast<std::size_t>(i)] * ad[static_cast<std::size_t>(j)]).trace();
		}
	}
	return k;
}

bool is_semisimple_lie(const RealSubspace& L, double rel_tol)
{
	require_lie_closed(L, "is_semisimple_lie");
	if(L.empty()) {
		return false;
	}
	const Eigen::MatrixXd k = killing_form(L);
	const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(k).singularValues();
	const double largest = sv(0);
	const double smallest = sv(sv.size() - 1);
	return largest > 0.0 && smallest > rel_tol * largest;
}

namespace
{

bool is_traceless(const Observable& a)
{
	const double scale = std::max(1.0, hvec(a.matrix()).norm() * std::sqrt(static_cast<double>(a.dim())));
	return std::abs(a.trace()) <= 1e-9 * scale;
}

GenerationReport generate(std::vector<Observable> generators, const RealSubspace& seed_span, Product p,
                          Eigen::Index target, int max_rounds)
{
	const Eigen::Index n = seed_span.ambient_dim();
	bool converged = false;
	const ClosureTrace t = closure_impl(seed_span, p, max_rounds < 0 ? default_rounds(n) : max_rounds, converged);
	GenerationReport r;
	r.generators = std::move(generators);
	r.closure_dim = t.result.dim();
	r.target_dim = target;
	r.generated = r.closure_dim == r.target_dim;
	r.rounds = t.rounds;
	r.trajectory = t.trajectory;
	return r;
}

} // namespace

GenerationReport lie_generate(const Observable& a, const Observable& b, int max_rounds)
{
	require_same_dim(a.matrix(), b.matrix());
	const Eigen::Index n = a.dim();
	const Eigen::Index target = (is_traceless(a) && is_traceless(b)) ? n * n - 1 : n * n;
	return generate({a, b}, RealSubspace::span({a, b}), Product::Lie, target, max_rounds);
}

GenerationReport jordan_generate_three(const Observable& a, const Observable& b, int max_rounds)
{
	require_same_dim(a.matrix(), b.matrix());
	const Eigen::Index n = a.dim();
	const Observable c = lie(a, b);
	RealSubspace start(n);
	start.adjoin(a);
	start.adjoin(b);
	// c vanishes for commuting generators; judge it against the generators' scale, not its own.
	start.adjoin(c, RealSubspace::kRankTol, std::max(1.0, a.norm() * b.norm()));
	start.adjoin(Observable::identity(n));
	return generate({a, b, c}, start, Product::Jordan, n * n, max_rounds);
}

Eigen::VectorXd FunctionRepresentation::evaluate(const Observable& x) const
{
	Eigen::VectorXd f(points());
	for(Eigen::Index k = 0; k < points(); ++k) {
		const auto idx = static_cast<std::size_t>(k);
		f(k) = (projectors[idx] * x.matrix()).trace().real() / static_cast<double>(multiplicity[idx]);
	}
	return f;
}

ComplexMatrix FunctionRepresentation::reconstruct(const Eigen::VectorXd& function) const
{
	if(function.size() != points()) {
		throw Error(ErrorKind::DimensionMismatch, "function has the wrong number of points");
	}
	const Eigen::Index n = algebra.ambient_dim();
	ComplexMatrix m = ComplexMatrix::Zero(n, n);
	for(Eigen::Index k = 0; k < points(); ++k) {
		m += function(k) * projectors[static_cast<std::size_t>(k)];
	}
	return m;
}

FunctionRepresentation function_representation(const RealSubspace& L, const Tolerance& tol)
{
	constexpr double kPointTol = 1e-6;
	if(!is_jordan_associative(L, tol)) {
		throw Error(ErrorKind::NotAssociative, "function representation needs a Jordan-associative algebra");
	}
	const Eigen::Index n = L.ambient_dim();

	// Refine the trivial decomposition by the spectrum of each basis element in turn.
	std::vector<ComplexMatrix> blocks{ComplexMatrix::Identity(n, n)};
	for(const Observable& e : L.basis()) {
		const double cluster = kPointTol * std::max(1.0, e.norm());
		std::vector<ComplexMatrix> refined;
		for(const ComplexMatrix& v : blocks) {
			const ComplexMatrix compressed = v.adjoint() * e.matrix() * v;
			Eigen::SelfAdjointEigenSolver<ComplexMatrix> es((compressed + compressed.adjoint()) * 0.5);
			const Eigen::VectorXd& ev = es.eigenvalues();
			Eigen::Index start = 0;
			for(Eigen::Index k = 1; k <= ev.size(); ++k) {
				if(k == ev.size() || ev(k) - ev(k - 1) > cluster) {
					refined.push_back(v * es.eigenvectors().middleCols(start, k - start));
					start = k;
				}
			}
		}
		blocks = std::move(refined);
	}

	// Joint eigenvalue tuples; merge points that coincide and drop the zero character.
	std::vector<ComplexMatrix> merged;
	std::vector<Eigen::VectorXd> tuples;
	for(const ComplexMatrix& v : blocks) {
		Eigen::VectorXd t(L.dim());
		for(Eigen::Index j = 0; j < L.dim(); ++j) {
			t(j) = (v.adjoint() * L[static_cast<std::size_t>(j)].matrix() * v).trace().real() /
			       static_cast<double>(v.cols());
		}
		if(t.size() == 0 || t.cwiseAbs().maxCoeff() <= kPointTol) {
			continue;
		}
		auto same = std::find_if(tuples.begin(), tuples.end(), [&](const Eigen::VectorXd& u) {
			return (u - t).cwiseAbs().maxCoeff() <= kPointTol;
		});
		if(same == tuples.end()) {
			tuples.push_back(t);
			merged.push_back(v);
		} else {
			auto& target = merged[static_cast<std::size_t>(same - tuples.begin())];
			ComplexMatrix joined(n, target.cols() + v.cols());
			joined << target, v;
			target = joined;
		}
	}

	FunctionRepresentation r{L, {}, {}, Eigen::MatrixXd(static_cast<Eigen::Index>(merged.size()), L.dim())};
	for(std::size_t k = 0; k < merged.size(); ++k) {
		r.projectors.push_back(merged[k] * merged[k].adjoint());
		r.multiplicity.push_back(merged[k].cols());
	}
	for(Eigen::Index j = 0; j < L.dim(); ++j) {
		r.values.col(j) = r.evaluate(L[static_cast<std::size_t>(j)]);
	}
	return r;
}

double square_monotonicity_gap(const Observable& a, const Observable& b)
{
	return min_eigenvalue((jordan(a, a) - jordan(b, b)).matrix());
}

double jordan_positivity_gap(const Observable& a, const Observable& b)
{
	return min_eigenvalue(jordan(a, b).matrix());
}

PositivityReport check_positivity_closure(const RealSubspace& L, int samples, Seed seed, const Tolerance& tol)
{
	if(!is_closed(L, Product::Jordan)) {
		throw Error(ErrorKind::NotClosed, "check_positivity_closure: subspace is not Jordan-closed");
	}
	PositivityReport r;
	r.samples = samples;
	if(L.empty()) {
		return r;
	}
	auto random_element = [&](Rng& rng) {
		Eigen::VectorXd c(L.dim());
		for(Eigen::Index k = 0; k < c.size(); ++k) {
			c(k) = rng.normal();
		}
		return L.element(c);
	};
	for(int t = 0; t < samples; ++t) {
		Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
		const Observable x = random_element(rng);
		const Observable y = random_element(rng);
		const Observable z = random_element(rng);
		const Observable x2 = jordan(x, x);
		const Observable y2 = jordan(y, y);
		const Observable z2 = jordan(z, z);

		const double g4 = jordan_positivity_gap(x2, y2);
		if(g4 < r.worst_item4) {
			r.worst_item4 = g4;
		}
		if(g4 < -tol.threshold(x2.norm() * y2.norm())) {
			++r.item4_violations;
			if(!r.item4_example || g4 < r.item4_example->min_eigenvalue) {
				r.item4_example = PositivityViolation{x2, y2, g4};
			}
		}

		// b = y^2 and a = y^2 + z^2, so both b and a - b are positive.
		const Observable a = y2 + z2;
		const double g3 = square_monotonicity_gap(a, y2);
		if(g3 < r.worst_item3) {
			r.worst_item3 = g3;
		}
		if(g3 < -tol.threshold(a.norm() * a.norm())) {
			++r.item3_violations;
			if(!r.item3_example || g3 < r.item3_example->min_eigenvalue) {
				r.item3_example = PositivityViolation{a, y2, g3};
			}
		}
	}
	return r;
}

} // namespace ljlab
