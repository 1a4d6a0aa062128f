#include "ljlab/products.hpp"

#include "ljlab/subspace.hpp"

#include <algorithm>

namespace ljlab
{

Observable jordan(const Observable& a, const Observable& b)
{
	require_same_dim(a.matrix(), b.matrix());
	const ComplexMatrix ab = a.matrix() * b.matrix();
	return Observable::hermitian_part(ab);
}

Observable lie(const Observable& a, const Observable& b)
{
	require_same_dim(a.matrix(), b.matrix());
	const ComplexMatrix ab = a.matrix() * b.matrix();
	// (i/2)(ab - ba) = (i/2)(ab - (ab)^dagger), the Hermitian part of i*ab.
	return Observable::hermitian_part(Complex(0.0, 1.0) * ab);
}

Observable associator(const Observable& a, const Observable& b, const Observable& c)
{
	return jordan(jordan(a, b), c) - jordan(a, jordan(b, c));
}

ComplexMatrix recover_associative(const Observable& a, const Observable& b)
{
	return jordan(a, b).matrix() - Complex(0.0, 1.0) * lie(a, b).matrix();
}

namespace
{

IdentityReport make_report(std::string name, const Observable& defect, double scale, const Tolerance& tol)
{
	IdentityReport r;
	r.name = std::move(name);
	r.residual = defect.norm();
	r.threshold = tol.threshold(scale);
	r.passed = r.residual <= r.threshold;
	return r;
}

} // namespace

IdentityReport check_jacobi(const Observable& a, const Observable& b, const Observable& c, const Tolerance& tol)
{
	const Observable defect = lie(lie(a, b), c) + lie(lie(c, a), b) + lie(lie(b, c), a);
	return make_report("jacobi", defect, a.norm() * b.norm() * c.norm(), tol);
}

IdentityReport check_leibniz(const Observable& a, const Observable& b, const Observable& c, const Tolerance& tol)
{
	const Observable defect = lie(a, jordan(b, c)) - jordan(lie(a, b), c) - jordan(b, lie(a, c));
	return make_report("leibniz", defect, a.norm() * b.norm() * c.norm(), tol);
}

IdentityReport check_associator_identity(const Observable& a, const Observable& b, const Observable& c,
                                         const Tolerance& tol)
{
	const Observable defect = associator(a, b, c) - lie(b, lie(c, a));
	return make_report("associator_identity", defect, a.norm() * b.norm() * c.norm(), tol);
}

IdentityReport check_weak_associativity(const Observable& a, const Observable& b, const Tolerance& tol)
{
	const Observable a2 = jordan(a, a);
	const Observable defect = jordan(jordan(a2, b), a) - jordan(a2, jordan(b, a));
	const double na = a.norm();
	return make_report("weak_associativity", defect, na * na * na * b.norm(), tol);
}

IdentityReport check_norm_axioms(const Observable& a, const Observable& b, const Tolerance& tol)
{
	require_same_dim(a.matrix(), b.matrix());
	const double na = a.norm();
	const double nb = b.norm();
	const Observable a2 = jordan(a, a);
	const Observable b2 = jordan(b, b);
	const double na2 = a2.norm();
	const double nb2 = b2.norm();
	const double sum = (a2 + b2).norm();

	// Positive entries are violations.
	const double submultiplicative = jordan(a, b).norm() - na * nb;
	const double cstar_a = std::abs(na2 - na * na);
	const double cstar_b = std::abs(nb2 - nb * nb);
	const double monotone_a = na2 - sum;
	const double monotone_b = nb2 - sum;

	IdentityReport r;
	r.name = "norm_axioms";
	r.residual = std::max({0.0, submultiplicative, cstar_a, cstar_b, monotone_a, monotone_b});
	r.threshold = tol.threshold(std::max(na, nb) * std::max(na, nb));
	r.passed = r.residual <= r.threshold;
	return r;
}

double commutation_threshold(const Observable& a, const Observable& b, const Tolerance& tol)
{
	return tol.threshold(a.norm() * b.norm());
}

bool jordan_commute(const Observable& a, const Observable& b, const RealSubspace& ambient, const Tolerance& tol)
{
	require_same_dim(a.matrix(), b.matrix());
	if(ambient.ambient_dim() != a.dim()) {
		throw Error(ErrorKind::DimensionMismatch, "ambient subspace size differs from the operands");
	}
	if(!ambient.contains(a) || !ambient.contains(b)) {
		throw Error(ErrorKind::NotInSpan, "jordan_commute operands must lie in the ambient span");
	}
	const double threshold = commutation_threshold(a, b, tol);
	for(const Observable& e : ambient.basis()) {
		const Observable defect = jordan(a, jordan(b, e)) - jordan(b, jordan(a, e));
		if(defect.norm() > threshold) {
			return false;
		}
	}
	return true;
}

} // namespace ljlab
