#include "doctest.h"
#include "oracles.hpp"

#include "ljlab/linalg.hpp"

using namespace ljlab;
using oracle::Complex;

TEST_CASE("is_hermitian on small fixtures")
{
	CHECK(is_hermitian(ComplexMatrix::Identity(2, 2)));
	CHECK_FALSE(is_hermitian(oracle::mat2(0, Complex(0, 1), Complex(0, 1), 0)));
	CHECK(is_hermitian(oracle::sy()));
	CHECK_FALSE(is_hermitian(ComplexMatrix::Zero(2, 3)));

	ComplexMatrix nearly = oracle::sx();
	nearly(0, 1) += 1e-12;
	CHECK(is_hermitian(nearly));
	CHECK_FALSE(is_hermitian(nearly, Tolerance{1e-14, false}));
}

TEST_CASE("eig_hermitian matches the 2x2 characteristic polynomial")
{
	const auto d = eig_hermitian(Eigen::Vector2cd(3, 1).asDiagonal().toDenseMatrix());
	CHECK(d.values(0) == doctest::Approx(1.0));
	CHECK(d.values(1) == doctest::Approx(3.0));
	CHECK(std::abs(std::abs(d.vectors(1, 0)) - 1.0) < 1e-12);

	const auto x = eig_hermitian(oracle::sx());
	CHECK(x.values(0) == doctest::Approx(-1.0));
	CHECK(x.values(1) == doctest::Approx(1.0));

	const ComplexMatrix avr = oracle::mat2(2, 1, 1, 0) * 0.25;
	const auto expected = oracle::eig2(avr);
	const auto got = eig_hermitian(avr);
	CHECK(got.values(0) == doctest::Approx(expected[0]).epsilon(1e-12));
	CHECK(got.values(1) == doctest::Approx(expected[1]).epsilon(1e-12));
	CHECK(expected[0] == doctest::Approx((1.0 - std::sqrt(2.0)) / 4.0));
	CHECK(expected[0] == doctest::Approx(-0.103553).epsilon(1e-6));

	CHECK_THROWS_AS((void)eig_hermitian(oracle::mat2(0, 1, 0, 0)), Error);
}

TEST_CASE("eigendecomposition reconstructs random Hermitian matrices")
{
	for(std::uint64_t s = 0; s < 200; ++s) {
		const Eigen::Index n = 1 + static_cast<Eigen::Index>(s % 7);
		const ComplexMatrix a = random_hermitian(n, Seed{s});
		const auto d = eig_hermitian(a);
		const ComplexMatrix back = d.vectors * d.values.asDiagonal() * d.vectors.adjoint();
		CHECK(spectral_norm(back - a) <= 1e-9 * std::max(1.0, operator_norm(a)));
		CHECK(spectral_norm(d.vectors.adjoint() * d.vectors - ComplexMatrix::Identity(n, n)) <= 1e-9);
		for(Eigen::Index k = 1; k < n; ++k) {
			CHECK(d.values(k - 1) <= d.values(k));
		}
	}
}

TEST_CASE("spectral queries")
{
	const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
	CHECK(min_eigenvalue(id) == doctest::Approx(1.0));
	CHECK(operator_norm(id) == doctest::Approx(1.0));
	CHECK(is_psd(id));

	CHECK(min_eigenvalue(oracle::sz()) == doctest::Approx(-1.0));
	CHECK(operator_norm(oracle::sz()) == doctest::Approx(1.0));
	CHECK_FALSE(is_psd(oracle::sz()));

	const ComplexMatrix avr = oracle::mat2(2, 1, 1, 0) * 0.25;
	CHECK(min_eigenvalue(avr) == doctest::Approx(-0.103553).epsilon(1e-5));
	CHECK_FALSE(is_psd(avr));

	CHECK(is_psd(oracle::mat2(1e-12, 0, 0, 1) - oracle::mat2(2e-12, 0, 0, 0)));
}

TEST_CASE("hs_inner")
{
	CHECK(hs_inner(oracle::sx(), oracle::sx()) == doctest::Approx(2.0));
	CHECK(hs_inner(oracle::sx(), oracle::sz()) == doctest::Approx(0.0));
	CHECK(hs_inner(ComplexMatrix::Identity(5, 5), ComplexMatrix::Identity(5, 5)) == doctest::Approx(5.0));
	CHECK_THROWS_AS((void)hs_inner(oracle::sx(), ComplexMatrix::Identity(3, 3)), Error);

	Rng rng(Seed{3});
	for(int t = 0; t < 50; ++t) {
		const ComplexMatrix a = rng.hermitian(4);
		const ComplexMatrix b = rng.hermitian(4);
		const ComplexMatrix c = rng.hermitian(4);
		const double alpha = rng.normal();
		CHECK(hs_inner(a, b) == doctest::Approx(hs_inner(b, a)));
		CHECK(hs_inner(a, alpha * b + c) == doctest::Approx(alpha * hs_inner(a, b) + hs_inner(a, c)));
		CHECK(hs_inner(a, a) >= 0.0);
		// hvec is an isometry for the HS product
		CHECK(hvec(a).dot(hvec(b)) == doctest::Approx(hs_inner(a, b)));
		CHECK(spectral_norm(hmat(hvec(a), 4) - a) < 1e-14);
	}
}

TEST_CASE("random ensembles are pure functions of (n, seed)")
{
	const ComplexMatrix a = random_hermitian(2, Seed{42});
	const ComplexMatrix b = random_hermitian(2, Seed{42});
	CHECK(a == b);
	CHECK(is_hermitian(a, Tolerance{0.0, false}));
	CHECK(random_hermitian(2, Seed{43}) != a);

	const ComplexMatrix r1 = random_density(3, Seed{9});
	CHECK(r1 == random_density(3, Seed{9}));

	for(std::uint64_t s = 0; s < 100; ++s) {
		const Eigen::Index n = 1 + static_cast<Eigen::Index>(s % 5);
		const ComplexMatrix rho = random_density(n, Seed{s});
		CHECK(std::abs(rho.trace().real() - 1.0) <= 1e-12);
		CHECK(min_eigenvalue(rho) >= -1e-12);
	}
	const ComplexMatrix one = random_density(1, Seed{5});
	CHECK(one(0, 0).real() == 1.0);
	CHECK(one(0, 0).imag() == 0.0);
}

TEST_CASE("GUE diagonal entries have zero mean")
{
	// Monte Carlo over 10^4 samples; the diagonal is N(0, 1/2), so the standard error is ~0.007.
	double sum = 0.0;
	const int samples = 10000;
	for(int s = 0; s < samples; ++s) {
		const ComplexMatrix h = random_hermitian(2, Seed{static_cast<std::uint64_t>(s) + 1000});
		sum += h(0, 0).real();
	}
	CHECK(std::abs(sum / samples) < 0.05);
}

TEST_CASE("Haar unitary sampler returns unitaries")
{
	Rng rng(Seed{11});
	for(Eigen::Index n = 1; n <= 5; ++n) {
		const ComplexMatrix u = rng.unitary(n);
		CHECK(spectral_norm(u.adjoint() * u - ComplexMatrix::Identity(n, n)) < 1e-12);
	}
}
