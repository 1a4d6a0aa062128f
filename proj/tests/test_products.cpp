#include "doctest.h"
#include "oracles.hpp"

#include "ljlab/products.hpp"
#include "ljlab/subspace.hpp"

using namespace ljlab;

namespace
{

double dist(const Observable& a, const ComplexMatrix& b)
{
	return spectral_norm(a.matrix() - b);
}

Observable obs(const ComplexMatrix& m)
{
	return Observable(m);
}

} // namespace

TEST_CASE("Observable construction validates hermiticity")
{
	CHECK_THROWS_AS(Observable(oracle::mat2(0, 1, 0, 0)), Error);
	CHECK_THROWS_AS(Observable(ComplexMatrix::Zero(2, 3)), Error);
	ComplexMatrix bad = oracle::sx();
	bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
	CHECK_THROWS_AS(Observable{bad}, Error);
	CHECK(Observable(oracle::sy()).dim() == 2);
}

TEST_CASE("jordan product")
{
	const Observable a = random_observable(3, Seed{1});
	CHECK(dist(jordan(a, Observable::identity(3)), a.matrix()) < 1e-14);
	CHECK(jordan(pauli::x(), pauli::y()).norm() < 1e-15);

	const Observable plus = obs((oracle::id2() + oracle::sx()) * 0.5);
	const Observable q = jordan(pauli::ket0(), plus);
	CHECK(dist(q, oracle::mat2(2, 1, 1, 0) * 0.25) < 1e-15);
	CHECK(min_eigenvalue(q.matrix()) < 0.0);

	CHECK_THROWS_AS((void)jordan(pauli::x(), Observable::identity(3)), Error);
}

TEST_CASE("lie product uses the (i/2) convention")
{
	const Observable a = random_observable(3, Seed{2});
	CHECK(lie(a, a).norm() < 1e-14);
	CHECK(dist(lie(pauli::x(), pauli::y()), -oracle::sz()) < 1e-15);
	CHECK(lie(Observable::diagonal({1, 2}), Observable::diagonal({3, 4})).norm() == 0.0);
}

TEST_CASE("associator fixtures")
{
	const Observable a = random_observable(3, Seed{3});
	const Observable b = random_observable(3, Seed{4});
	CHECK(associator(a, b, Observable::identity(3)).norm() < 1e-13);
	CHECK(dist(associator(pauli::x(), pauli::x(), pauli::y()), oracle::sy()) < 1e-15);
	const Observable d1 = Observable::diagonal({1, -2, 3});
	const Observable d2 = Observable::diagonal({0.5, 4, -1});
	const Observable d3 = Observable::diagonal({2, 2, 7});
	CHECK(associator(d1, d2, d3).norm() == 0.0);
}

TEST_CASE("recover_associative agrees with direct multiplication")
{
	CHECK(spectral_norm(recover_associative(Observable::identity(2), pauli::z()) - oracle::sz()) < 1e-15);
	const ComplexMatrix i_sz = ljlab::Complex(0, 1) * oracle::sz();
	CHECK(spectral_norm(recover_associative(pauli::x(), pauli::y()) - oracle::sx() * oracle::sy()) < 1e-15);
	CHECK(spectral_norm(recover_associative(pauli::x(), pauli::y()) - i_sz) < 1e-15);
	for(std::uint64_t s = 0; s < 100; ++s) {
		Rng rng(Seed{s});
		const Observable a = Observable::hermitian_part(rng.hermitian(4));
		const Observable b = Observable::hermitian_part(rng.hermitian(4));
		const ComplexMatrix direct = a.matrix() * b.matrix();
		CHECK(spectral_norm(recover_associative(a, b) - direct) <= 1e-12 * a.norm() * b.norm());
	}
}

TEST_CASE("identity checkers on fixtures")
{
	const Observable x = pauli::x();
	const Observable y = pauli::y();
	const Observable z = pauli::z();
	const Observable one = Observable::identity(2);

	auto jac = check_jacobi(x, y, z);
	CHECK(jac.passed);
	CHECK(jac.residual < 1e-12);
	CHECK(jac.name == "jacobi");
	CHECK(check_jacobi(x, x, z).residual < 1e-15);

	CHECK(check_leibniz(z, one, x).residual < 1e-15);
	// [z, x o x] = [z, 1] = 0 and [z,x] o x + x o [z,x] = 2 x o [z,x] with [z,x] = -y anticommuting with x
	CHECK(check_leibniz(z, x, x).residual < 1e-15);

	// Left side (x o x) o y - x o (x o y) = y; right side [x,[y,x]] = [x, z] = y.
	CHECK(dist(lie(x, lie(y, x)), oracle::sy()) < 1e-15);
	CHECK(check_associator_identity(x, x, y).residual < 1e-15);
	CHECK(check_associator_identity(x, one, z).residual < 1e-15);

	CHECK(check_weak_associativity(x, y).residual < 1e-15);
	const Observable a = random_observable(4, Seed{8});
	CHECK(check_weak_associativity(a, a).passed);

	CHECK(check_norm_axioms(one, one).passed);
	auto n = check_norm_axioms(z, x);
	CHECK(n.passed);
	CHECK(n.residual < 1e-14);
	// ||z^2 + x^2|| = 2
	CHECK((jordan(z, z) + jordan(x, x)).norm() == doctest::Approx(2.0));
}

TEST_CASE("associator identity is sign-sensitive")
{
	// With the opposite sign on the double bracket the defect doubles instead of vanishing.
	const Observable a = random_observable(3, Seed{21});
	const Observable b = random_observable(3, Seed{22});
	const Observable c = random_observable(3, Seed{23});
	const Observable q = associator(a, b, c);
	REQUIRE(q.norm() > 0.1);
	CHECK((q + lie(b, lie(c, a))).norm() == doctest::Approx(2.0 * q.norm()));
	CHECK(check_associator_identity(a, b, c).residual < 1e-12 * q.norm());
}

TEST_CASE("identity property sweep over random tuples")
{
	int checked = 0;
	for(std::uint64_t s = 0; s < 1000; ++s) {
		const Eigen::Index n = 2 + static_cast<Eigen::Index>(s % 5);
		Rng rng(Seed{s});
		const Observable a = Observable::hermitian_part(rng.hermitian(n));
		const Observable b = Observable::hermitian_part(rng.hermitian(n));
		const Observable c = Observable::hermitian_part(rng.hermitian(n));
		REQUIRE(check_jacobi(a, b, c).passed);
		REQUIRE(check_leibniz(a, b, c).passed);
		REQUIRE(check_associator_identity(a, b, c).passed);
		REQUIRE(check_weak_associativity(a, b).passed);
		REQUIRE(check_norm_axioms(a, b).passed);

		// bilinearity, symmetry, hermiticity
		const double alpha = rng.normal();
		CHECK(spectral_norm((jordan(a, b) - jordan(b, a)).matrix()) == 0.0);
		CHECK(spectral_norm((lie(a, b) + lie(b, a)).matrix()) < 1e-13);
		CHECK(spectral_norm((jordan(a * alpha + c, b) - (jordan(a, b) * alpha + jordan(c, b))).matrix()) <
		      1e-12 * (1 + std::abs(alpha)) * n * n);
		CHECK(spectral_norm((lie(a * alpha + c, b) - (lie(a, b) * alpha + lie(c, b))).matrix()) <
		      1e-12 * (1 + std::abs(alpha)) * n * n);
		CHECK(is_hermitian(jordan(a, b).matrix(), Tolerance{0.0, false}));
		CHECK(is_hermitian(lie(a, b).matrix(), Tolerance{0.0, false}));
		++checked;
	}
	CHECK(checked == 1000);
}

TEST_CASE("jordan_commute decides commutation")
{
	const RealSubspace full2 = RealSubspace::full(2);
	CHECK(jordan_commute(Observable::diagonal({1, 2}), Observable::diagonal({3, 4}), full2));
	CHECK_FALSE(jordan_commute(pauli::x(), pauli::y(), full2));
	// [[x,y],x] = [-z, x] != 0
	CHECK(lie(lie(pauli::x(), pauli::y()), pauli::x()).norm() > 0.5);

	const Observable a = random_observable(3, Seed{5});
	CHECK(jordan_commute(a, jordan(a, a), RealSubspace::full(3)));

	CHECK_THROWS_AS((void)jordan_commute(pauli::x(), pauli::y(), RealSubspace::diagonal(2)), Error);
	try {
		(void)jordan_commute(pauli::x(), pauli::y(), RealSubspace::diagonal(2));
	} catch(const Error& e) {
		CHECK(e.kind() == ErrorKind::NotInSpan);
	}
	CHECK_THROWS_AS((void)jordan_commute(pauli::x(), pauli::y(), RealSubspace::full(3)), Error);

	for(std::uint64_t s = 0; s < 200; ++s) {
		const Eigen::Index n = 2 + static_cast<Eigen::Index>(s % 2);
		Rng rng(Seed{s});
		const Observable p = Observable::hermitian_part(rng.hermitian(n));
		const Observable q = Observable::hermitian_part(rng.hermitian(n));
		const bool commute = lie(p, q).norm() <= commutation_threshold(p, q);
		CHECK(jordan_commute(p, q, RealSubspace::full(n)) == commute);
	}
}
