#include "doctest.h"
#include "oracles.hpp"

#include "ljlab/witness.hpp"

using namespace ljlab;

TEST_CASE("associator witness fixtures")
{
	const WitnessReport q = associator_witness(pauli::x(), pauli::x(), pauli::y());
	CHECK(q.kind == WitnessKind::AssociatorQ);
	CHECK(spectral_norm(q.witness.matrix() - oracle::sy()) < 1e-15);
	CHECK(q.violation == doctest::Approx(1.0));
	CHECK(q.inputs.size() == 3);

	const WitnessReport diag = associator_witness(Observable::diagonal({1, 2, 3}), Observable::diagonal({0, 1, 5}),
	                                              Observable::diagonal({2, -1, 1}));
	CHECK(diag.violation == 0.0);

	const Observable a = random_observable(3, Seed{1});
	const Observable c = random_observable(3, Seed{2});
	CHECK(associator_witness(a, Observable::identity(3), c).violation < 1e-13);
}

TEST_CASE("squared witness is positive")
{
	CHECK(spectral_norm(squared_witness(pauli::y()).witness.matrix() - oracle::id2()) < 1e-15);
	CHECK(squared_witness(Observable::zero(2)).witness.norm() == 0.0);
	const WitnessReport d = squared_witness(Observable::diagonal({1, -2}));
	CHECK(spectral_norm(d.witness.matrix() - Observable::diagonal({1, 4}).matrix()) == 0.0);
	CHECK(d.kind == WitnessKind::QSquared);
	for(std::uint64_t s = 0; s < 20; ++s) {
		CHECK(is_psd(squared_witness(random_observable(4, Seed{s})).witness.matrix()));
	}
}

TEST_CASE("AVR pair fixture")
{
	const Observable plus = (Observable::identity(2) + pauli::x()) * 0.5;
	const WitnessReport r = avr_witness(pauli::ket0(), plus);
	CHECK(r.kind == WitnessKind::AvrPair);
	CHECK(std::abs(r.violation - (1.0 - std::sqrt(2.0)) / 4.0) <= 1e-9);
	CHECK(std::abs(r.violation - oracle::eig2(oracle::mat2(2, 1, 1, 0) * 0.25)[0]) <= 1e-12);
}

TEST_CASE("AVR witness search")
{
	const WitnessReport r = avr_witness_search(2, Seed{2024}, 1000);
	CHECK(r.violation <= -0.05);
	// Frozen from the first run with this seed.
	CHECK(r.violation == doctest::Approx(-0.12499999999999888).epsilon(1e-9));
	REQUIRE(r.inputs.size() == 2);
	CHECK(is_psd(r.inputs[0].matrix()));
	CHECK(is_psd(r.inputs[1].matrix()));
	CHECK(r.inputs[0].norm() == doctest::Approx(1.0));
	CHECK(std::abs(min_eigenvalue(jordan(r.inputs[0], r.inputs[1]).matrix()) - r.violation) <= 1e-9);
	// Unit-norm positive pairs cannot go below -1/8.
	CHECK(r.violation >= -0.125 - 1e-9);

	const WitnessReport again = avr_witness_search(2, Seed{2024}, 1000);
	CHECK(again.violation == r.violation);
	CHECK(again.witness.matrix() == r.witness.matrix());

	for(std::uint64_t s = 0; s < 5; ++s) {
		const Eigen::Index n = 2 + static_cast<Eigen::Index>(s % 3);
		CHECK(avr_witness_search(n, Seed{s}, 100).violation < 0.0);
	}

	const WitnessReport one = avr_witness_search(1, Seed{1}, 10);
	CHECK(one.no_violation);
	CHECK(one.violation == 0.0);
	CHECK_THROWS_AS((void)avr_witness_search(2, Seed{1}, 0), Error);
	CHECK_THROWS_AS((void)avr_witness_search(0, Seed{1}, 10), Error);
}

TEST_CASE("associator witness search")
{
	const WitnessReport r = associator_witness_search(2, Seed{7}, 200);
	CHECK(r.violation > 0.0);
	CHECK(r.violation >= associator_witness(pauli::x(), pauli::x(), pauli::y()).violation - 1e-3);
	REQUIRE(r.inputs.size() == 3);
	CHECK(std::abs(associator(r.inputs[0], r.inputs[1], r.inputs[2]).norm() - r.violation) <= 1e-12);

	CHECK(associator_witness_search(1, Seed{7}, 10).no_violation);

	// Degree-3 homogeneity: doubling every candidate multiplies the optimum by 8.
	SearchOptions doubled;
	doubled.scale = 2.0;
	const WitnessReport r2 = associator_witness_search(2, Seed{7}, 200, doubled);
	CHECK(r2.violation == doctest::Approx(8.0 * r.violation).epsilon(1e-12));
	CHECK(r2.refinement_steps == r.refinement_steps);
}
